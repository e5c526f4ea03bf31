#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "antichain.hpp"
#include "circuit.hpp"
#include "cube.hpp"
#include "errors.hpp"

namespace ac {

namespace detail {

// Sorts and checks a layer plan: a nonempty strictly ascending list of
// weights in [0, n].
inline void check_layer_plan(int n, std::vector<int>& layers) {
    if (n < 1 || n > BitTuple::max_width)
        throw dimension_error("input count out of range");
    if (layers.empty())
        throw precondition_error("layer plan must be nonempty");
    std::sort(layers.begin(), layers.end());
    if (layers.front() < 0 || layers.back() > n)
        throw precondition_error("layer out of range 0.." + std::to_string(n));
    if (std::adjacent_find(layers.begin(), layers.end()) != layers.end())
        throw precondition_error("duplicate layer");
}

}  // namespace detail

// The combining function for a layer plan l_1 < ... < l_r over n inputs.
// It reads r-1 indicator coordinates y_1..y_{r-1} (one per non-top layer,
// ascending) followed by the n inputs, and its support is
//
//   { (e_j, x) : 1 <= j <= r-1, wt(x) = l_j }  u  { (0..0, x) : wt(x) = l_r }
//
// where e_j is the one-hot tuple selecting y_j.  This is always an
// antichain: tuples sharing a y-block have equal-weight x-parts, distinct
// one-hot y-blocks are incomparable, and an all-zero y-block pairs the
// heaviest x-layer against strictly lighter ones.
inline AntichainFunction build_g_function(int n, std::vector<int> layers) {
    detail::check_layer_plan(n, layers);
    const int r = static_cast<int>(layers.size());
    const int arity = (r - 1) + n;
    if (arity > BitTuple::max_width)
        throw capacity_error("combined gate arity exceeds " +
                             std::to_string(BitTuple::max_width));
    std::vector<BitTuple> support;
    for (int j = 1; j <= r; ++j) {
        const std::uint32_t y_key =
            j == r ? 0u : (1u << (r - 1 - j));
        for (std::uint32_t x_key : detail::weight_masks(n, layers[j - 1]))
            support.emplace_back(arity, (y_key << n) | x_key);
    }
    return AntichainFunction(arity, std::move(support));
}

// One gate per non-top layer computing the exact-weight indicator, plus a
// final gate combining them with the inputs.  A single-layer plan is just
// the one indicator gate.  Output gate count equals the plan size.
inline Circuit build_symmetric_circuit(int n, std::vector<int> layers) {
    detail::check_layer_plan(n, layers);
    const int r = static_cast<int>(layers.size());
    std::vector<Gate> gates;
    std::vector<Wire> all_inputs;
    for (int i = 0; i < n; ++i) all_inputs.push_back(input_wire(i));
    if (r == 1) {
        gates.push_back(Gate{all_inputs, GateTable::from_function(
                                             layer_function(n, layers[0]))});
        return Circuit(n, std::move(gates));
    }
    for (int j = 1; j <= r - 1; ++j)
        gates.push_back(Gate{all_inputs, GateTable::from_function(
                                             layer_function(n, layers[j - 1]))});
    std::vector<Wire> g_wires;
    for (int j = 0; j < r - 1; ++j) g_wires.push_back(gate_wire(j));
    for (int i = 0; i < n; ++i) g_wires.push_back(input_wire(i));
    gates.push_back(
        Gate{std::move(g_wires),
             GateTable::from_function(build_g_function(n, std::move(layers)))});
    return Circuit(n, std::move(gates));
}

// Majority over n inputs (1 iff weight >= ceil(n/2)) from the layer plan
// {ceil(n/2), ..., n}; uses floor(n/2)+1 gates.
inline Circuit build_majority_circuit(int n) {
    if (n < 1 || n > BitTuple::max_width)
        throw dimension_error("input count out of range");
    std::vector<int> layers;
    for (int t = (n + 1) / 2; t <= n; ++t) layers.push_back(t);
    return build_symmetric_circuit(n, std::move(layers));
}

// Parity over n inputs from the plan of all odd weights; uses
// floor((n+1)/2) gates.
inline Circuit build_parity_circuit(int n) {
    if (n < 1 || n > BitTuple::max_width)
        throw dimension_error("input count out of range");
    std::vector<int> layers;
    for (int t = 1; t <= n; t += 2) layers.push_back(t);
    return build_symmetric_circuit(n, std::move(layers));
}

// Alternative parity circuit: one indicator gate per odd weight, then an
// exactly-one-of gate over those indicators (on any input, exactly one odd
// layer gate fires iff the weight is odd).  Uses floor((n+1)/2)+1 gates —
// one more than build_parity_circuit, handy as a distinct test subject.
inline Circuit build_layered_parity_circuit(int n) {
    if (n < 2 || n > BitTuple::max_width)
        throw precondition_error("layered parity needs at least 2 inputs");
    std::vector<Gate> gates;
    std::vector<Wire> all_inputs;
    for (int i = 0; i < n; ++i) all_inputs.push_back(input_wire(i));
    int m = 0;
    for (int t = 1; t <= n; t += 2, ++m)
        gates.push_back(
            Gate{all_inputs, GateTable::from_function(layer_function(n, t))});
    std::vector<Wire> g_wires;
    for (int j = 0; j < m; ++j) g_wires.push_back(gate_wire(j));
    gates.push_back(Gate{std::move(g_wires),
                         GateTable::from_function(layer_function(m, 1))});
    return Circuit(n, std::move(gates));
}

}  // namespace ac
