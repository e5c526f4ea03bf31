#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ac {

// A point of the boolean cube {0,1}^width with the coordinate-wise partial
// order.  Coordinate i (0-based, i.e. x_{i+1} in 1-based speak) is stored in
// bit (width-1-i) of `key`, so the leftmost character of the textual form is
// x_1 and integer order of keys equals lexicographic order of bitstrings.
// The key is also the row index of the tuple in a truth table.
//
// Width 0 (the empty tuple) is allowed: it is the single vertex of the
// 0-cube and is needed by the antichain enumerator and by zero-wire constant
// gates.  Width is capped at 32 by the mask storage.
class BitTuple {
public:
    static constexpr int max_width = 32;

    BitTuple() : width_(0), key_(0) {}

    BitTuple(int width, std::uint32_t key) : width_(width), key_(key) {
        if (width < 0 || width > max_width)
            throw capacity_error("tuple width " + std::to_string(width) +
                                 " outside 0.." + std::to_string(max_width));
        if (width < max_width && (key >> width) != 0)
            throw dimension_error("tuple key has bits beyond its width");
    }

    static BitTuple zeros(int width) { return BitTuple(width, 0); }

    static BitTuple ones(int width) { return BitTuple(width, mask_of(width)); }

    static BitTuple from_string(const std::string& s) {
        if (s.size() > static_cast<std::size_t>(max_width))
            throw capacity_error("bitstring longer than " + std::to_string(max_width));
        std::uint32_t key = 0;
        for (char c : s) {
            if (c != '0' && c != '1')
                throw parse_error(std::string("bad character '") + c + "' in bitstring");
            key = (key << 1) | static_cast<std::uint32_t>(c - '0');
        }
        return BitTuple(static_cast<int>(s.size()), key);
    }

    int width() const { return width_; }
    std::uint32_t key() const { return key_; }
    int weight() const { return std::popcount(key_); }

    // Value of coordinate i (0-based).
    int bit(int i) const {
        check_coord(i);
        return static_cast<int>((key_ >> (width_ - 1 - i)) & 1u);
    }

    BitTuple with_bit(int i, int value) const {
        check_coord(i);
        std::uint32_t b = std::uint32_t{1} << (width_ - 1 - i);
        return BitTuple(width_, value ? (key_ | b) : (key_ & ~b));
    }

    BitTuple flipped(int i) const {
        check_coord(i);
        return BitTuple(width_, key_ ^ (std::uint32_t{1} << (width_ - 1 - i)));
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(width_), '0');
        for (int i = 0; i < width_; ++i)
            if ((key_ >> (width_ - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

    friend bool operator==(const BitTuple& a, const BitTuple& b) {
        return a.width_ == b.width_ && a.key_ == b.key_;
    }
    friend bool operator!=(const BitTuple& a, const BitTuple& b) { return !(a == b); }

    // Lexicographic order of the textual form; only meaningful per width.
    friend bool operator<(const BitTuple& a, const BitTuple& b) {
        if (a.width_ != b.width_) return a.width_ < b.width_;
        return a.key_ < b.key_;
    }

    static std::uint32_t mask_of(int width) {
        return width >= max_width ? ~std::uint32_t{0}
                                  : ((std::uint32_t{1} << width) - 1);
    }

private:
    void check_coord(int i) const {
        if (i < 0 || i >= width_)
            throw dimension_error("coordinate " + std::to_string(i) +
                                  " outside width " + std::to_string(width_));
    }

    int width_;
    std::uint32_t key_;
};

inline void require_same_width(const BitTuple& a, const BitTuple& b) {
    if (a.width() != b.width())
        throw dimension_error("width mismatch: " + std::to_string(a.width()) +
                              " vs " + std::to_string(b.width()));
}

// a <= b coordinate-wise.
inline bool leq(const BitTuple& a, const BitTuple& b) {
    require_same_width(a, b);
    return (a.key() & ~b.key()) == 0;
}

inline bool comparable(const BitTuple& a, const BitTuple& b) {
    require_same_width(a, b);
    return (a.key() & ~b.key()) == 0 || (b.key() & ~a.key()) == 0;
}

// A multiset of tuples is a chain iff it is totally ordered.  Sorting by
// weight reduces the check to adjacent pairs: leq is transitive and two
// distinct tuples of equal weight are never comparable.
inline bool is_chain(std::vector<BitTuple> ts) {
    for (std::size_t i = 1; i < ts.size(); ++i) require_same_width(ts[0], ts[i]);
    std::sort(ts.begin(), ts.end(), [](const BitTuple& a, const BitTuple& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.key() < b.key();
    });
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (!leq(ts[i - 1], ts[i])) return false;
    return true;
}

// The subcube {x : x_i = 0 for i in fixed_zero, x_j = 1 for j in fixed_one},
// with the coordinate sets stored as key-style masks.  Its extremes are the
// tuples written x^T (bottom: free coordinates 0) and x^{[n]\F} (top: free
// coordinates 1).
class Subcube {
public:
    Subcube(int width, std::uint32_t fixed_zero, std::uint32_t fixed_one)
        : width_(width), zero_(fixed_zero), one_(fixed_one) {
        if (width < 0 || width > BitTuple::max_width)
            throw capacity_error("subcube width out of range");
        std::uint32_t full = BitTuple::mask_of(width);
        if ((fixed_zero & ~full) != 0 || (fixed_one & ~full) != 0)
            throw dimension_error("fixed coordinate outside subcube width");
        if ((fixed_zero & fixed_one) != 0)
            throw invariant_violation("a coordinate is fixed to both 0 and 1");
    }

    int width() const { return width_; }
    std::uint32_t fixed_zero() const { return zero_; }
    std::uint32_t fixed_one() const { return one_; }
    int dimension() const { return width_ - std::popcount(zero_ | one_); }

    BitTuple bottom() const { return BitTuple(width_, one_); }
    BitTuple top() const { return BitTuple(width_, BitTuple::mask_of(width_) & ~zero_); }

    bool contains(const BitTuple& t) const {
        if (t.width() != width_)
            throw dimension_error("tuple width does not match subcube");
        return (t.key() & zero_) == 0 && (one_ & ~t.key()) == 0;
    }

private:
    int width_;
    std::uint32_t zero_;
    std::uint32_t one_;
};

// Key-style mask bit for coordinate i (0-based) at the given width.
inline std::uint32_t coord_bit(int width, int i) {
    if (i < 0 || i >= width) throw dimension_error("coordinate out of range");
    return std::uint32_t{1} << (width - 1 - i);
}

// Smallest coordinate index present in a key-style mask (the mask's most
// significant set bit).  Mask must be nonzero.
inline int lowest_coord(int width, std::uint32_t mask) {
    if (mask == 0) throw invariant_violation("lowest_coord of empty mask");
    return std::countl_zero(mask) - (BitTuple::max_width - width);
}

}  // namespace ac
