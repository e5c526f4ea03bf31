#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "cube.hpp"
#include "errors.hpp"
#include "truth_table.hpp"

namespace ac {

// A wire feeding a gate: either a circuit input x_{index+1} or the output of
// gate e_{index+1}.  Indices are 0-based in code; textual forms are 1-based.
struct Wire {
    enum class Kind { input, gate };
    Kind kind;
    int index;

    friend bool operator==(const Wire& a, const Wire& b) {
        return a.kind == b.kind && a.index == b.index;
    }
};

inline Wire input_wire(int i) { return Wire{Wire::Kind::input, i}; }
inline Wire gate_wire(int j) { return Wire{Wire::Kind::gate, j}; }

// Raw gate function storage: arity plus sorted support keys.  Unlike
// AntichainFunction this carries no invariant, so parsed-but-broken circuits
// stay representable and the validator can report on them.
struct GateTable {
    int arity = 0;
    std::vector<std::uint32_t> support;  // ascending keys

    static GateTable from_function(const AntichainFunction& f) {
        return GateTable{f.arity(), f.support_keys()};
    }

    bool contains(std::uint32_t key) const {
        return std::binary_search(support.begin(), support.end(), key);
    }

    friend bool operator==(const GateTable& a, const GateTable& b) {
        return a.arity == b.arity && a.support == b.support;
    }
};

struct Gate {
    std::vector<Wire> wires;  // order is significant: support coordinate i = wire i
    GateTable table;

    friend bool operator==(const Gate& a, const Gate& b) {
        return a.wires == b.wires && a.table == b.table;
    }
};

struct EvalResult {
    std::vector<std::uint8_t> values;  // h_1..h_s
    int output;
};

// A straight-line circuit: gates in regular numeration (each reads only
// circuit inputs and lower-indexed gates), output taken at the last gate.
class Circuit {
public:
    Circuit(int inputs, std::vector<Gate> gates)
        : inputs_(inputs), gates_(std::move(gates)) {
        if (inputs < 1 || inputs > BitTuple::max_width)
            throw capacity_error("circuit inputs outside 1.." +
                                 std::to_string(BitTuple::max_width));
    }

    int inputs() const { return inputs_; }
    int gate_count() const { return static_cast<int>(gates_.size()); }
    const Gate& gate(int i) const { return gates_[static_cast<std::size_t>(i)]; }
    const std::vector<Gate>& gates() const { return gates_; }

    // Every violated structural invariant, one message each; empty = valid.
    std::vector<std::string> validate() const {
        std::vector<std::string> out;
        if (gates_.empty()) out.push_back("circuit has no gates");
        for (std::size_t g = 0; g < gates_.size(); ++g) {
            const Gate& gate = gates_[g];
            std::string where = "gate " + std::to_string(g + 1);
            for (std::size_t w = 0; w < gate.wires.size(); ++w) {
                const Wire& wire = gate.wires[w];
                if (wire.kind == Wire::Kind::input) {
                    if (wire.index < 0 || wire.index >= inputs_)
                        out.push_back(where + ": input index x" +
                                      std::to_string(wire.index + 1) + " out of range");
                } else {
                    if (wire.index < 0 || wire.index >= gate_count())
                        out.push_back(where + ": gate index g" +
                                      std::to_string(wire.index + 1) + " out of range");
                    else if (wire.index >= static_cast<int>(g))
                        out.push_back(where + ": forward or self reference g" +
                                      std::to_string(wire.index + 1));
                }
            }
            for (std::size_t w = 0; w < gate.wires.size(); ++w) {
                bool repeated = false;
                for (std::size_t w2 = 0; w2 < w; ++w2)
                    if (gate.wires[w2] == gate.wires[w]) repeated = true;
                if (repeated) {
                    out.push_back(where + ": duplicate wire");
                    break;
                }
            }
            if (gate.table.arity != static_cast<int>(gate.wires.size()))
                out.push_back(where + ": arity " + std::to_string(gate.table.arity) +
                              " does not match wire count " +
                              std::to_string(gate.wires.size()));
            if (gate.table.arity < BitTuple::max_width)
                for (std::uint32_t k : gate.table.support)
                    if ((k >> gate.table.arity) != 0) {
                        out.push_back(where + ": support tuple wider than arity");
                        break;
                    }
            std::vector<std::uint32_t> keys = gate.table.support;
            std::sort(keys.begin(), keys.end());
            if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
                out.push_back(where + ": duplicate support tuple");
            else if (!detail::keys_form_antichain(keys))
                out.push_back(where + ": support is not an antichain");
        }
        return out;
    }

    bool is_valid() const { return validate().empty(); }

    EvalResult evaluate(const BitTuple& a) const {
        if (a.width() != inputs_)
            throw dimension_error("input width " + std::to_string(a.width()) +
                                  " differs from circuit inputs " +
                                  std::to_string(inputs_));
        if (gates_.empty()) throw precondition_error("circuit has no gates");
        EvalResult r;
        r.values.resize(gates_.size());
        for (std::size_t g = 0; g < gates_.size(); ++g) {
            std::uint32_t key = gate_key(static_cast<int>(g), a, r.values);
            r.values[g] = gates_[g].table.contains(key) ? 1 : 0;
        }
        r.output = r.values.back();
        return r;
    }

    // Input key seen by gate g given the circuit input and the values of the
    // lower gates (wire i becomes coordinate i of the key).
    std::uint32_t gate_key(int g, const BitTuple& a,
                           const std::vector<std::uint8_t>& values) const {
        const Gate& gate = gates_[static_cast<std::size_t>(g)];
        if (gate.table.arity != static_cast<int>(gate.wires.size()))
            throw precondition_error("gate " + std::to_string(g + 1) +
                                     " arity does not match its wires");
        std::uint32_t key = 0;
        for (const Wire& w : gate.wires) {
            int v;
            if (w.kind == Wire::Kind::input) {
                if (w.index < 0 || w.index >= inputs_)
                    throw precondition_error("wire references a missing input");
                v = a.bit(w.index);
            } else {
                if (w.index < 0 || w.index >= g)
                    throw precondition_error("wire references a non-lower gate");
                v = values[static_cast<std::size_t>(w.index)];
            }
            key = (key << 1) | static_cast<std::uint32_t>(v);
        }
        return key;
    }

    TruthTable truth_table() const {
        if (inputs_ > TruthTable::max_inputs)
            throw capacity_error("truth table limited to " +
                                 std::to_string(TruthTable::max_inputs) + " inputs");
        if (gates_.empty()) throw precondition_error("circuit has no gates");
        TruthTable t(inputs_);
        std::vector<std::uint8_t> values(gates_.size());
        for (std::uint32_t v = 0; v < t.size(); ++v) {
            BitTuple a(inputs_, v);
            for (std::size_t g = 0; g < gates_.size(); ++g)
                values[g] = gates_[g].table.contains(gate_key(static_cast<int>(g), a, values)) ? 1 : 0;
            t.set(v, values.back());
        }
        return t;
    }

    // Collapses duplicate wires by restricting each gate function to the
    // diagonal where the duplicated coordinates agree.  The restriction of an
    // antichain support stays an antichain, and the truth table is unchanged
    // because only diagonal tuples are ever seen by such a gate.
    Circuit reduced() const {
        std::vector<Gate> out;
        out.reserve(gates_.size());
        for (const Gate& gate : gates_) {
            std::vector<Wire> wires;
            std::vector<int> pos_of;  // wire position -> position of its first occurrence
            for (const Wire& w : gate.wires) {
                auto it = std::find(wires.begin(), wires.end(), w);
                if (it == wires.end()) {
                    wires.push_back(w);
                    pos_of.push_back(static_cast<int>(wires.size()) - 1);
                } else {
                    pos_of.push_back(static_cast<int>(it - wires.begin()));
                }
            }
            if (wires.size() == gate.wires.size()) {
                out.push_back(gate);
                continue;
            }
            int old_arity = gate.table.arity;
            int new_arity = static_cast<int>(wires.size());
            std::vector<std::uint32_t> support;
            for (std::uint32_t k : gate.table.support) {
                std::uint32_t projected = 0;
                bool diagonal = true;
                std::vector<int> seen(static_cast<std::size_t>(new_arity), -1);
                for (int c = 0; c < old_arity && diagonal; ++c) {
                    int bit = static_cast<int>((k >> (old_arity - 1 - c)) & 1u);
                    int np = pos_of[static_cast<std::size_t>(c)];
                    if (seen[static_cast<std::size_t>(np)] == -1) {
                        seen[static_cast<std::size_t>(np)] = bit;
                        projected |= static_cast<std::uint32_t>(bit)
                                     << (new_arity - 1 - np);
                    } else if (seen[static_cast<std::size_t>(np)] != bit) {
                        diagonal = false;
                    }
                }
                if (diagonal) support.push_back(projected);
            }
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            out.push_back(Gate{std::move(wires), GateTable{new_arity, std::move(support)}});
        }
        return Circuit(inputs_, std::move(out));
    }

    friend bool operator==(const Circuit& a, const Circuit& b) {
        return a.inputs_ == b.inputs_ && a.gates_ == b.gates_;
    }

private:
    int inputs_;
    std::vector<Gate> gates_;
};

}  // namespace ac
