#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cube.hpp"
#include "errors.hpp"

namespace ac {

// Explicit truth table of an n-input boolean function, one bit per input
// tuple, indexed by the tuple's key (so index order = lexicographic order of
// input bitstrings, x_1 most significant).  Capped at n = 20: the table is
// materialized in full.
class TruthTable {
public:
    static constexpr int max_inputs = 20;

    explicit TruthTable(int inputs) : inputs_(inputs) {
        if (inputs < 0 || inputs > max_inputs)
            throw capacity_error("truth table limited to " +
                                 std::to_string(max_inputs) + " inputs");
        bits_.assign((size() + 63) / 64, 0);
    }

    int inputs() const { return inputs_; }
    std::uint32_t size() const { return std::uint32_t{1} << inputs_; }

    bool get(std::uint32_t idx) const {
        return (bits_[idx >> 6] >> (idx & 63)) & 1;
    }

    void set(std::uint32_t idx, bool v) {
        std::uint64_t b = std::uint64_t{1} << (idx & 63);
        if (v)
            bits_[idx >> 6] |= b;
        else
            bits_[idx >> 6] &= ~b;
    }

    std::string to_string() const {
        std::string s(size(), '0');
        for (std::uint32_t i = 0; i < size(); ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    // Parses a 2^n-character bitstring; n is inferred from the length.
    static TruthTable from_string(const std::string& s) {
        int n = 0;
        while ((std::size_t{1} << n) < s.size() && n <= max_inputs) ++n;
        if ((std::size_t{1} << n) != s.size())
            throw parse_error("table length is not a power of two");
        TruthTable t(n);
        for (std::uint32_t i = 0; i < t.size(); ++i) {
            char c = s[i];
            if (c != '0' && c != '1') throw parse_error("bad character in table");
            t.set(i, c == '1');
        }
        return t;
    }

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.inputs_ == b.inputs_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const TruthTable& a, const TruthTable& b) {
        return !(a == b);
    }

    // p_n: 1 iff the input has an odd number of ones.
    static TruthTable parity(int n) {
        TruthTable t(n);
        for (std::uint32_t v = 0; v < t.size(); ++v)
            t.set(v, std::popcount(v) & 1);
        return t;
    }

    // m_n: 1 iff the input has at least ceil(n/2) ones.
    static TruthTable majority(int n) {
        if (n < 1) throw dimension_error("majority needs at least one input");
        TruthTable t(n);
        int threshold = (n + 1) / 2;
        for (std::uint32_t v = 0; v < t.size(); ++v)
            t.set(v, std::popcount(v) >= threshold);
        return t;
    }

    // Indicator of inputs whose weight lies in the given layer set.
    static TruthTable layers(int n, const std::set<int>& layer_set) {
        TruthTable t(n);
        for (std::uint32_t v = 0; v < t.size(); ++v)
            t.set(v, layer_set.count(std::popcount(v)) != 0);
        return t;
    }

private:
    int inputs_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace ac
