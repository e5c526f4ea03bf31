#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ac/antichain.hpp"
#include "ac/cube.hpp"
#include "ac/errors.hpp"

using namespace ac;

namespace {
std::vector<BitTuple> tuples(int width, std::initializer_list<const char*> strs) {
    std::vector<BitTuple> out;
    for (const char* s : strs) out.push_back(BitTuple::from_string(s));
    for (const BitTuple& t : out) REQUIRE(t.width() == width);
    return out;
}

// Independent enumeration: filter every subset of the k-cube's vertices.
std::uint64_t count_antichains_by_filtering(int k) {
    const int verts = 1 << k;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << verts); ++mask) {
        std::vector<BitTuple> set;
        for (int v = 0; v < verts; ++v)
            if ((mask >> v) & 1) set.emplace_back(k, static_cast<std::uint32_t>(v));
        if (is_antichain(set)) ++count;
    }
    return count;
}
}  // namespace

TEST_CASE("weight masks enumerate exactly one layer") {
    for (int n = 0; n <= 10; ++n) {
        std::uint64_t total = 0;
        for (int t = 0; t <= n; ++t) {
            const auto masks = detail::weight_masks(n, t);
            total += masks.size();
            std::set<std::uint32_t> seen(masks.begin(), masks.end());
            REQUIRE(seen.size() == masks.size());
            for (std::uint32_t m : masks)
                REQUIRE(BitTuple(n, m).weight() == t);
        }
        REQUIRE(total == (std::uint64_t{1} << n));  // layers partition the cube
    }
    REQUIRE(detail::weight_masks(6, 2).size() == 15);
    REQUIRE(detail::weight_masks(6, 0) == std::vector<std::uint32_t>{0});
}

TEST_CASE("is_antichain examples") {
    REQUIRE(is_antichain({}));
    REQUIRE(is_antichain(tuples(2, {"01", "10"})));
    REQUIRE(is_antichain(tuples(3, {"011", "101", "110"})));
    REQUIRE(is_antichain(tuples(4, {"0101"})));
    REQUIRE_FALSE(is_antichain(tuples(3, {"001", "111"})));
    REQUIRE_FALSE(is_antichain(tuples(2, {"00", "01"})));
    REQUIRE_FALSE(is_antichain(tuples(5, {"10001", "11011", "00100"})));
    // set semantics: a repeated tuple is not a comparable *pair*
    REQUIRE(is_antichain(tuples(2, {"01", "01"})));
    REQUIRE_THROWS_AS(is_antichain({BitTuple::zeros(2), BitTuple::zeros(3)}),
                      dimension_error);
}

TEST_CASE("antichain functions enforce their invariant") {
    REQUIRE_NOTHROW(AntichainFunction(3, tuples(3, {"001", "010", "100"})));
    REQUIRE_NOTHROW(AntichainFunction(3, {}));  // constant 0
    REQUIRE_THROWS_AS(AntichainFunction(3, tuples(3, {"001", "011"})),
                      invariant_violation);
    REQUIRE_THROWS_AS(AntichainFunction(3, tuples(3, {"010", "010"})),
                      invariant_violation);
    REQUIRE_THROWS_AS(AntichainFunction(2, tuples(3, {"001"})), dimension_error);
    REQUIRE_THROWS_AS(AntichainFunction(33, {}), capacity_error);
    // constant 1 exists only at arity 0
    REQUIRE_NOTHROW(AntichainFunction(0, {BitTuple::zeros(0)}));
    REQUIRE_THROWS_AS(AntichainFunction(1, tuples(1, {"0", "1"})),
                      invariant_violation);
}

TEST_CASE("evaluation is support membership") {
    AntichainFunction f(3, tuples(3, {"011", "100"}));
    REQUIRE(f.arity() == 3);
    REQUIRE(f.evaluate(BitTuple::from_string("011")) == 1);
    REQUIRE(f.evaluate(BitTuple::from_string("100")) == 1);
    REQUIRE(f.evaluate(BitTuple::from_string("111")) == 0);
    REQUIRE(f.evaluate(BitTuple::from_string("000")) == 0);
    REQUIRE_THROWS_AS(f.evaluate(BitTuple::from_string("01")), dimension_error);

    AntichainFunction zero(2, {});
    for (std::uint32_t k = 0; k < 4; ++k)
        REQUIRE(zero.evaluate(BitTuple(2, k)) == 0);

    AntichainFunction one(0, {BitTuple::zeros(0)});
    REQUIRE(one.evaluate(BitTuple::zeros(0)) == 1);
    AntichainFunction zero0(0, {});
    REQUIRE(zero0.evaluate(BitTuple::zeros(0)) == 0);
}

TEST_CASE("layer functions are exact-weight indicators") {
    for (int n = 0; n <= 8; ++n)
        for (int t = 0; t <= n; ++t) {
            AntichainFunction f = layer_function(n, t);
            for (std::uint32_t k = 0; k < (std::uint32_t{1} << n); ++k) {
                BitTuple x(n, k);
                REQUIRE(f.evaluate(x) == (x.weight() == t ? 1 : 0));
            }
        }
}

TEST_CASE("support round trip keeps sorted order") {
    AntichainFunction f(4, tuples(4, {"1100", "0011", "0101"}));
    const auto& keys = f.support_keys();
    REQUIRE(std::is_sorted(keys.begin(), keys.end()));
    REQUIRE(keys.size() == 3);
    const auto sup = f.support();
    REQUIRE(sup.size() == 3);
    REQUIRE(AntichainFunction(4, sup) == f);
}

TEST_CASE("dependent coordinates match the flip definition") {
    for (int k = 0; k <= 4; ++k) {
        for (const auto& anti : all_antichains(k)) {
            AntichainFunction f(k, anti);
            // reference: scan every point for a flip that changes the value
            std::vector<int> expect;
            for (int i = 0; i < k; ++i) {
                bool dep = false;
                for (std::uint32_t x = 0; x < (std::uint32_t{1} << k) && !dep; ++x) {
                    BitTuple a(k, x);
                    dep = f.evaluate(a) != f.evaluate(a.flipped(i));
                }
                if (dep) expect.push_back(i);
            }
            REQUIRE(f.dependent_coordinates() == expect);
            // a nonempty support depends on every coordinate
            if (!anti.empty())
                REQUIRE(static_cast<int>(expect.size()) == k);
        }
    }
}

TEST_CASE("antichain counts agree across two enumeration strategies") {
    const std::uint64_t expected[] = {2, 3, 6, 20, 168, 7581};
    for (int k = 0; k <= 5; ++k)
        REQUIRE(count_antichains(k) == expected[k]);
    for (int k = 0; k <= 4; ++k)
        REQUIRE(count_antichains_by_filtering(k) == expected[k]);
}

TEST_CASE("enumerated antichains are distinct and valid") {
    for (int k = 0; k <= 4; ++k) {
        const auto all = all_antichains(k);
        REQUIRE(all.size() == count_antichains(k));
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& anti : all) {
            REQUIRE(is_antichain(anti));
            std::vector<std::uint32_t> canon;
            for (const BitTuple& t : anti) canon.push_back(t.key());
            std::sort(canon.begin(), canon.end());
            REQUIRE(seen.insert(canon).second);
        }
    }
}

TEST_CASE("enumeration width is capped") {
    REQUIRE_THROWS_AS(count_antichains(6), capacity_error);
    REQUIRE_THROWS_AS(count_antichains(-1), capacity_error);
}
