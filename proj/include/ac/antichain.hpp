#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cube.hpp"
#include "errors.hpp"

namespace ac {

namespace detail {

// Sorted keys of all width-n tuples of weight t (Gosper's hack).
inline std::vector<std::uint32_t> weight_masks(int n, int t) {
    if (n < 0 || n > BitTuple::max_width || t < 0 || t > n)
        throw dimension_error("bad layer parameters");
    std::vector<std::uint32_t> out;
    if (t == 0) {
        out.push_back(0);
        return out;
    }
    std::uint64_t v = (std::uint64_t{1} << t) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (v < limit) {
        out.push_back(static_cast<std::uint32_t>(v));
        std::uint64_t c = v & (~v + 1);
        std::uint64_t r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
    return out;
}

// Exact antichain test over sorted-by-weight buckets of keys.  Two tuples of
// equal weight are never comparable, so only cross-weight pairs matter.  A
// bucket pair is dismissed in O(1) when some coordinate is 1 throughout the
// lighter bucket and 0 throughout the heavier one (no subset can cross);
// otherwise it falls back to pairwise subset scans.
inline bool keys_form_antichain(const std::vector<std::uint32_t>& sorted_keys) {
    if (sorted_keys.size() <= 1) return true;
    struct Bucket {
        int weight;
        std::vector<std::uint32_t> keys;
        std::uint32_t all_and = ~std::uint32_t{0};
        std::uint32_t all_or = 0;
    };
    std::vector<Bucket> buckets;
    for (std::uint32_t k : sorted_keys) {
        int w = std::popcount(k);
        auto it = std::find_if(buckets.begin(), buckets.end(),
                               [w](const Bucket& b) { return b.weight == w; });
        if (it == buckets.end()) {
            buckets.push_back(Bucket{w, {}, ~std::uint32_t{0}, 0});
            it = std::prev(buckets.end());
        }
        it->keys.push_back(k);
        it->all_and &= k;
        it->all_or |= k;
    }
    std::sort(buckets.begin(), buckets.end(),
              [](const Bucket& a, const Bucket& b) { return a.weight < b.weight; });
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        for (std::size_t j = i + 1; j < buckets.size(); ++j) {
            if ((buckets[i].all_and & ~buckets[j].all_or) != 0) continue;
            for (std::uint32_t u : buckets[i].keys)
                for (std::uint32_t v : buckets[j].keys)
                    if ((u & ~v) == 0) return false;
        }
    }
    return true;
}

}  // namespace detail

// True iff no two distinct tuples of the set are comparable.  Duplicates are
// collapsed (set semantics).
inline bool is_antichain(const std::vector<BitTuple>& ts) {
    if (ts.size() <= 1) return true;
    for (std::size_t i = 1; i < ts.size(); ++i) require_same_width(ts[0], ts[i]);
    std::vector<std::uint32_t> keys;
    keys.reserve(ts.size());
    for (const BitTuple& t : ts) keys.push_back(t.key());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return detail::keys_form_antichain(keys);
}

// A boolean function of `arity` variables given by an explicit support that
// must be an antichain.  The empty support (constant 0) is legal; constant 1
// is representable only at arity 0, where the singleton {()} is an antichain.
class AntichainFunction {
public:
    AntichainFunction(int arity, const std::vector<BitTuple>& support)
        : arity_(arity) {
        if (arity < 0 || arity > BitTuple::max_width)
            throw capacity_error("function arity out of range");
        keys_.reserve(support.size());
        for (const BitTuple& t : support) {
            if (t.width() != arity)
                throw dimension_error("support tuple width differs from arity");
            keys_.push_back(t.key());
        }
        std::sort(keys_.begin(), keys_.end());
        if (std::adjacent_find(keys_.begin(), keys_.end()) != keys_.end())
            throw invariant_violation("duplicate tuple in function support");
        if (!detail::keys_form_antichain(keys_))
            throw invariant_violation("function support contains a comparable pair");
    }

    int arity() const { return arity_; }
    const std::vector<std::uint32_t>& support_keys() const { return keys_; }

    std::vector<BitTuple> support() const {
        std::vector<BitTuple> out;
        out.reserve(keys_.size());
        for (std::uint32_t k : keys_) out.emplace_back(arity_, k);
        return out;
    }

    int evaluate(const BitTuple& a) const {
        if (a.width() != arity_)
            throw dimension_error("input width differs from function arity");
        return std::binary_search(keys_.begin(), keys_.end(), a.key()) ? 1 : 0;
    }

    // Coordinates whose flip changes the function somewhere.  f differs under
    // a flip of coordinate i iff the support is not invariant under that
    // flip.  (Any nonempty antichain support depends on every coordinate:
    // flipping a support tuple yields a comparable tuple, which cannot also
    // lie in the support.)
    std::vector<int> dependent_coordinates() const {
        std::vector<int> out;
        for (int i = 0; i < arity_; ++i) {
            std::uint32_t b = coord_bit(arity_, i);
            for (std::uint32_t k : keys_) {
                if (!std::binary_search(keys_.begin(), keys_.end(), k ^ b)) {
                    out.push_back(i);
                    break;
                }
            }
        }
        return out;
    }

    friend bool operator==(const AntichainFunction& a, const AntichainFunction& b) {
        return a.arity_ == b.arity_ && a.keys_ == b.keys_;
    }

private:
    int arity_;
    std::vector<std::uint32_t> keys_;  // ascending
};

// Indicator of the weight-t layer of the n-cube; a single layer is trivially
// an antichain.
inline AntichainFunction layer_function(int n, int t) {
    std::vector<BitTuple> sup;
    for (std::uint32_t k : detail::weight_masks(n, t)) sup.emplace_back(n, k);
    return AntichainFunction(n, sup);
}

inline constexpr int max_enumeration_width = 5;

// Visit every antichain of the k-cube exactly once (including the empty
// one).  Vertices are considered in (weight, lex) order; a vertex may join
// the current set only if it is incomparable to everything chosen, which
// prunes whole subtrees.  Streams are independent: each call owns its state.
template <typename Visitor>
void for_each_antichain(int k, Visitor&& visit) {
    if (k < 0 || k > max_enumeration_width)
        throw capacity_error("antichain enumeration supports width 0.." +
                             std::to_string(max_enumeration_width));
    const int nverts = 1 << k;
    std::vector<std::uint32_t> order(static_cast<std::size_t>(nverts));
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        int wa = std::popcount(a), wb = std::popcount(b);
        return wa != wb ? wa < wb : a < b;
    });
    // comp[p] = positions of vertices comparable to vertex at position p.
    std::vector<std::uint32_t> comp(static_cast<std::size_t>(nverts), 0);
    for (int p = 0; p < nverts; ++p)
        for (int q = 0; q < nverts; ++q) {
            std::uint32_t a = order[static_cast<std::size_t>(p)];
            std::uint32_t b = order[static_cast<std::size_t>(q)];
            if (p != q && ((a & ~b) == 0 || (b & ~a) == 0))
                comp[static_cast<std::size_t>(p)] |= std::uint32_t{1} << q;
        }

    std::vector<BitTuple> chosen;
    auto rec = [&](auto&& self, int pos, std::uint32_t blocked) -> void {
        if (pos == nverts) {
            visit(const_cast<const std::vector<BitTuple>&>(chosen));
            return;
        }
        self(self, pos + 1, blocked);
        if (((blocked >> pos) & 1u) == 0) {
            chosen.emplace_back(k, order[static_cast<std::size_t>(pos)]);
            self(self, pos + 1, blocked | comp[static_cast<std::size_t>(pos)]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<std::vector<BitTuple>> all_antichains(int k) {
    std::vector<std::vector<BitTuple>> out;
    for_each_antichain(k, [&](const std::vector<BitTuple>& s) { out.push_back(s); });
    return out;
}

inline std::uint64_t count_antichains(int k) {
    std::uint64_t n = 0;
    for_each_antichain(k, [&](const std::vector<BitTuple>&) { ++n; });
    return n;
}

}  // namespace ac
