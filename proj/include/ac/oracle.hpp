#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "antichain.hpp"
#include "circuit.hpp"
#include "cube.hpp"
#include "errors.hpp"
#include "truth_table.hpp"

namespace ac {

struct SearchBudget {
    int inputs = 0;
    int max_gates = 2;
    int jobs = 1;
    std::uint64_t seed = 0xac5eed;  // probe order only; never affects results
};

struct SearchReport {
    int min_gates = -1;              // -1: nothing within the budget computes it
    std::optional<Circuit> circuit;  // lexicographically first witness
    std::uint64_t space_single = 0;  // one-gate candidates
    std::uint64_t space_pairs = 0;   // two-gate candidate pairs
    std::uint64_t visited_single = 0;
    std::uint64_t visited_pairs = 0;
};

// True when the table's support is an antichain over the full n-cube, i.e.
// the function is computable by a single gate reading every input.
inline bool is_antichain_function(const TruthTable& t) {
    std::vector<BitTuple> sup;
    for (std::uint32_t k = 0; k < t.size(); ++k)
        if (t.get(k)) sup.emplace_back(t.inputs(), k);
    return is_antichain(sup);
}

namespace detail {

// A choice of wires for one gate: ascending indices into the wire universe
// (inputs 0..n-1, plus index n for the first gate when searching pairs).
// xpart[p] holds the gate-input key contributed by the input wires at cube
// point p, so evaluating a candidate at p is one table lookup.
struct OracleWireSet {
    std::vector<int> wires;
    std::vector<std::uint32_t> xpart;
    int g1pos = -1;  // bit position of the first-gate wire, -1 when unused
};

struct OracleCandidate {
    std::uint32_t wireset = 0;
    std::uint64_t table = 0;   // support membership per gate-input key
    std::uint32_t column = 0;  // value per cube point (input-only wiresets)
    std::vector<std::uint32_t> support;
};

// Subsets of {0..u-1} ordered by size, then lexicographically.
inline std::vector<std::vector<int>> subsets_by_size(int u) {
    std::vector<std::vector<int>> out;
    for (int j = 0; j <= u; ++j) {
        std::vector<int> pick(static_cast<std::size_t>(j));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            out.push_back(pick);
            int i = j - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == u - j + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int k = i + 1; k < j; ++k)
                pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
        }
    }
    return out;
}

inline std::vector<OracleWireSet> build_wiresets(int n, int universe) {
    std::vector<OracleWireSet> out;
    const int points = 1 << n;
    for (std::vector<int>& wires : subsets_by_size(universe)) {
        OracleWireSet ws;
        ws.wires = std::move(wires);
        ws.xpart.assign(static_cast<std::size_t>(points), 0);
        const int j = static_cast<int>(ws.wires.size());
        for (int q = 0; q < j; ++q) {
            const int bitpos = j - 1 - q;
            const int w = ws.wires[static_cast<std::size_t>(q)];
            if (w == n) {
                ws.g1pos = bitpos;
                continue;
            }
            for (int p = 0; p < points; ++p)
                if ((p >> (n - 1 - w)) & 1)
                    ws.xpart[static_cast<std::size_t>(p)] |= std::uint32_t{1} << bitpos;
        }
        out.push_back(std::move(ws));
    }
    return out;
}

// Every (wire set, antichain over its arity) pair, in wire-set order with
// the enumeration order of for_each_antichain inside each set.
inline std::vector<OracleCandidate> build_candidates(
    int n, const std::vector<OracleWireSet>& sets) {
    std::vector<OracleCandidate> out;
    const int points = 1 << n;
    for (std::uint32_t si = 0; si < sets.size(); ++si) {
        const OracleWireSet& ws = sets[si];
        for_each_antichain(
            static_cast<int>(ws.wires.size()),
            [&](const std::vector<BitTuple>& anti) {
                OracleCandidate cand;
                cand.wireset = si;
                for (const BitTuple& t : anti) {
                    cand.support.push_back(t.key());
                    cand.table |= std::uint64_t{1} << t.key();
                }
                if (ws.g1pos < 0)
                    for (int p = 0; p < points; ++p)
                        if ((cand.table >> ws.xpart[static_cast<std::size_t>(p)]) & 1)
                            cand.column |= std::uint32_t{1} << p;
                out.push_back(std::move(cand));
            });
    }
    return out;
}

inline Gate make_oracle_gate(int n, const OracleWireSet& ws,
                             const OracleCandidate& cand) {
    Gate g;
    for (int w : ws.wires)
        g.wires.push_back(w == n ? gate_wire(0) : input_wire(w));
    g.table.arity = static_cast<int>(ws.wires.size());
    g.table.support = cand.support;
    std::sort(g.table.support.begin(), g.table.support.end());
    return g;
}

}  // namespace detail

// Brute-force minimum gate count for a target function over at most 4
// inputs and at most 2 gates.  The whole candidate space is always swept
// (found witnesses only short-circuit the per-pair comparison work, with the
// remaining pairs bulk-counted), so the visited counts and the reported
// witness — the lexicographically first match in candidate order — are
// independent of the seed and the number of jobs.
inline SearchReport min_complexity(const TruthTable& target,
                                   const SearchBudget& budget) {
    if (budget.inputs < 1 || budget.inputs > 4)
        throw capacity_error("exhaustive search supports 1..4 inputs");
    if (budget.max_gates < 1 || budget.max_gates > 2)
        throw capacity_error("exhaustive search supports 1..2 gates");
    if (budget.jobs < 1) throw precondition_error("jobs must be positive");
    if (target.inputs() != budget.inputs)
        throw dimension_error("target table width differs from the search budget");

    const int n = budget.inputs;
    const int points = 1 << n;
    std::uint32_t goal = 0;
    for (int p = 0; p < points; ++p)
        if (target.get(static_cast<std::uint32_t>(p))) goal |= std::uint32_t{1} << p;

    const auto sets1 = detail::build_wiresets(n, n);
    const auto cands1 = detail::build_candidates(n, sets1);

    SearchReport rep;
    rep.space_single = cands1.size();
    std::optional<std::uint32_t> best1;
    for (std::uint32_t i = 0; i < cands1.size(); ++i) {
        ++rep.visited_single;
        if (!best1 && cands1[i].column == goal) best1 = i;
    }
    if (best1) {
        const detail::OracleCandidate& c = cands1[*best1];
        rep.min_gates = 1;
        rep.circuit = Circuit(n, {detail::make_oracle_gate(n, sets1[c.wireset], c)});
        return rep;
    }
    if (budget.max_gates < 2) return rep;

    const auto sets2 = detail::build_wiresets(n, n + 1);
    const auto cands2 = detail::build_candidates(n, sets2);
    rep.space_pairs = static_cast<std::uint64_t>(cands1.size()) * cands2.size();

    std::vector<int> probe(static_cast<std::size_t>(points));
    std::iota(probe.begin(), probe.end(), 0);
    std::mt19937_64 rng(budget.seed);
    std::shuffle(probe.begin(), probe.end(), rng);

    const std::uint64_t m2 = cands2.size();
    constexpr std::uint64_t none = ~std::uint64_t{0};
    const int jobs = static_cast<int>(
        std::min<std::uint64_t>(budget.jobs, cands1.size()));
    std::vector<std::uint64_t> best(static_cast<std::size_t>(jobs), none);
    std::vector<std::uint64_t> visited(static_cast<std::size_t>(jobs), 0);

    auto work = [&](int slot, std::uint32_t lo, std::uint32_t hi) {
        std::uint64_t found = none, count = 0;
        for (std::uint32_t i1 = lo; i1 < hi && found == none; ++i1) {
            const std::uint32_t col = cands1[i1].column;
            for (std::uint64_t i2 = 0; i2 < m2; ++i2) {
                ++count;
                const detail::OracleCandidate& c2 = cands2[i2];
                const detail::OracleWireSet& ws = sets2[c2.wireset];
                bool ok = true;
                for (int pi = 0; pi < points && ok; ++pi) {
                    const int p = probe[static_cast<std::size_t>(pi)];
                    std::uint32_t key = ws.xpart[static_cast<std::size_t>(p)];
                    if (ws.g1pos >= 0)
                        key |= ((col >> p) & 1u) << ws.g1pos;
                    ok = ((c2.table >> key) & 1) ==
                         ((static_cast<std::uint64_t>(goal) >> p) & 1);
                }
                if (ok) {
                    found = (static_cast<std::uint64_t>(i1) << 32) | i2;
                    // everything after the first hit in this ascending scan
                    // is lexicographically larger; count it in bulk
                    count += (m2 - 1 - i2) +
                             (static_cast<std::uint64_t>(hi - 1 - i1)) * m2;
                    break;
                }
            }
        }
        best[static_cast<std::size_t>(slot)] = found;
        visited[static_cast<std::size_t>(slot)] = count;
    };

    const std::uint32_t m1 = static_cast<std::uint32_t>(cands1.size());
    const std::uint32_t chunk = (m1 + static_cast<std::uint32_t>(jobs) - 1) /
                                static_cast<std::uint32_t>(jobs);
    if (jobs == 1) {
        work(0, 0, m1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) {
            const std::uint32_t lo = static_cast<std::uint32_t>(w) * chunk;
            const std::uint32_t hi = std::min(m1, lo + chunk);
            pool.emplace_back(work, w, lo, hi);
        }
        for (std::thread& t : pool) t.join();
    }

    std::uint64_t winner = none;
    for (int w = 0; w < jobs; ++w) {
        rep.visited_pairs += visited[static_cast<std::size_t>(w)];
        winner = std::min(winner, best[static_cast<std::size_t>(w)]);
    }
    if (winner != none) {
        const std::uint32_t i1 = static_cast<std::uint32_t>(winner >> 32);
        const std::uint64_t i2 = winner & 0xffffffffu;
        const detail::OracleCandidate& c1 = cands1[i1];
        const detail::OracleCandidate& c2 = cands2[static_cast<std::size_t>(i2)];
        rep.min_gates = 2;
        rep.circuit = Circuit(
            n, {detail::make_oracle_gate(n, sets1[c1.wireset], c1),
                detail::make_oracle_gate(n, sets2[c2.wireset], c2)});
    }
    return rep;
}

inline bool exists_circuit(const TruthTable& target, const SearchBudget& budget) {
    return min_complexity(target, budget).min_gates != -1;
}

}  // namespace ac
