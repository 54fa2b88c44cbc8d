#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "semiaffine/search.hpp"
#include "semiaffine/subsets.hpp"

using namespace semiaffine;

namespace {

SubsetBits set_of(const char* group, const char* literal) {
    const GroupSpec g = GroupSpec::parse(group);
    return parse_subset(g, literal);
}

}  // namespace

TEST_CASE("set literal parsing and canonical formatting") {
    const SubsetBits x = set_of("Z6", "{1,2,4,5}");
    CHECK(x.count() == 4);
    CHECK(x.contains(uint64_t{1}));
    CHECK(!x.contains(uint64_t{0}));
    CHECK(format_subset(x) == "{1,2,4,5}");
    CHECK(format_subset(set_of("Z6", "{5, 2, 1, 4, 2}")) == "{1,2,4,5}");
    CHECK(format_subset(set_of("Z6", "{}")) == "{}");
    const SubsetBits pairs = set_of("Z4xZ2", "{(0,1),(1,0)}");
    CHECK(pairs.count() == 2);
    CHECK(format_subset(pairs) == "{(0,1),(1,0)}");
    CHECK_THROWS_AS(set_of("Z6", "1,2"), std::invalid_argument);
    CHECK_THROWS_AS(set_of("Z6", "{1,2"), std::invalid_argument);
}

TEST_CASE("hex bitset round trip") {
    const SubsetBits x = set_of("Z6", "{1,2,4,5}");
    const std::string hex = x.bits().to_hex();
    CHECK(subset_from_hex(x.group(), hex) == x);
    CHECK_THROWS_AS(subset_from_hex(GroupSpec::parse("Z4"), "ff"), std::invalid_argument);
}

TEST_CASE("shift and difference set") {
    const SubsetBits x = set_of("Z8", "{0,1,4,5}");
    CHECK(format_subset(shift_index(x, 2)) == "{2,3,6,7}");
    CHECK(format_subset(difference_set(x)) == "{0,1,3,4,5,7}");
    CHECK(difference_set(set_of("Z8", "{}")).empty());
    // X-X contains 0 when X is nonempty and is closed under negation.
    const SubsetBits d = difference_set(set_of("Z12", "{1,2,5,11}"));
    CHECK(d.contains(uint64_t{0}));
    for (uint64_t m : d.members()) CHECK(d.contains(d.group().neg_index(m)));
}

TEST_CASE("half sets") {
    const GroupSpec z2 = GroupSpec::parse("Z2");
    CHECK(format_subset(half_set_index(z2, 0)) == "{0,1}");
    const GroupSpec z4 = GroupSpec::parse("Z4");
    CHECK(format_subset(half_set_index(z4, 0)) == "{0,2}");
    CHECK(format_subset(half_set_index(z4, 1)) == "{}");
    CHECK(format_subset(half_set_index(z4, 2)) == "{1,3}");
    const GroupSpec z5 = GroupSpec::parse("Z5");
    for (uint64_t s = 0; s < 5; ++s) CHECK(half_set_index(z5, s).count() == 1);
}

TEST_CASE("affine violation reporting is lexicographically first") {
    const auto w = affine_violation(set_of("Z5", "{0,1}"));
    REQUIRE(w.has_value());
    CHECK(w->kind == Witness::Kind::Affine);
    CHECK(w->elements == std::vector<uint64_t>{0, 0, 1});
    CHECK(w->missing == std::vector<uint64_t>{4});
    CHECK(witness_replays(set_of("Z5", "{0,1}"), *w));
    CHECK(std::string(witness_kind_name(w->kind)) == "affine-violation");
}

TEST_CASE("semiaffine violation reporting is lexicographically first") {
    const SubsetBits x = set_of("Z7", "{0,1,2}");
    const auto w = semiaffine_violation(x);
    REQUIRE(w.has_value());
    CHECK(w->elements == std::vector<uint64_t>{1, 0, 2});
    CHECK(w->missing == std::vector<uint64_t>{6, 3});
    CHECK(witness_replays(x, *w));
    CHECK(std::string(witness_kind_name(w->kind)) == "semiaffine-violation");
}

TEST_CASE("midconvexity is ambient-relative") {
    const GroupSpec z4 = GroupSpec::parse("Z4");
    const SubsetBits x = parse_subset(z4, "{0,2}");
    const SubsetBits full = SubsetBits::full(z4);
    // In the full group the pair (0,0) forces both halves 0 and 2; the pair
    // (0,2) forces 1 and 3.
    const auto w = midconvex_violation(x, full);
    REQUIRE(w.has_value());
    CHECK(w->kind == Witness::Kind::Midconvex);
    CHECK(w->elements == std::vector<uint64_t>{0, 2});
    CHECK(w->missing == std::vector<uint64_t>{1});
    CHECK(witness_replays(x, *w, &full));
    // Inside the subgroup {0,2} the same bits are midconvex.
    CHECK(is_midconvex(x, x));
    CHECK_THROWS_AS(midconvex_violation(parse_subset(z4, "{1}"), x), std::invalid_argument);
}

TEST_CASE("empty and singleton sets satisfy all three predicates") {
    for (const char* name : {"Z1", "Z5", "Z4xZ2"}) {
        const GroupSpec g = GroupSpec::parse(name);
        const SubsetBits full = SubsetBits::full(g);
        const SubsetBits empty(g);
        CHECK(is_affine(empty));
        CHECK(is_semiaffine(empty));
        CHECK(is_midconvex(empty, full));
        SubsetBits singleton(g);
        singleton.insert(g.order() - 1);
        CHECK(is_affine(singleton));
        CHECK(is_semiaffine(singleton));
    }
}

TEST_CASE("predicates agree with the reference implementation") {
    for (const char* name : {"Z6", "Z8", "Z2xZ2", "Z4xZ2", "Z9"}) {
        const GroupSpec g = GroupSpec::parse(name);
        const oracle::Orders orders(g.orders().begin(), g.orders().end());
        const SubsetBits full = SubsetBits::full(g);
        const auto full_vec = oracle::to_vecset(full);
        SplitMix64 rng(42);
        for (int t = 0; t < 300; ++t) {
            const uint64_t mask = rng.next() & ((uint64_t{1} << g.order()) - 1);
            const SubsetBits x = subset_from_mask(g, mask);
            const auto xs = oracle::to_vecset(x);
            CHECK(is_affine(x) == oracle::is_affine(orders, xs));
            CHECK(is_semiaffine(x) == oracle::is_semiaffine(orders, xs));
            CHECK(is_midconvex(x, full) == oracle::is_midconvex(orders, xs, full_vec));
            const auto d = difference_set(x);
            CHECK(oracle::to_vecset(d) == oracle::difference_set(orders, xs));
        }
    }
}

TEST_CASE("witnesses always replay") {
    const GroupSpec g = GroupSpec::parse("Z10");
    const SubsetBits full = SubsetBits::full(g);
    SplitMix64 rng(5);
    for (int t = 0; t < 500; ++t) {
        const SubsetBits x = subset_from_mask(g, rng.next() & 1023);
        if (auto w = affine_violation(x)) CHECK(witness_replays(x, *w));
        if (auto w = semiaffine_violation(x)) CHECK(witness_replays(x, *w));
        if (auto w = midconvex_violation(x, full)) CHECK(witness_replays(x, *w, &full));
    }
}

TEST_CASE("doubling violator") {
    const SubsetBits x = set_of("Z8", "{0,1,4,5}");
    // X-X = {0,1,3,4,5,7}; the first member whose double escapes is 1.
    const auto v = doubling_violator(x);
    REQUIRE(v.has_value());
    CHECK(*v == 1);
    CHECK(!doubling_closed(x));
    CHECK(doubling_closed(set_of("Z8", "{0,2,4,6}")));
    CHECK(doubling_closed(set_of("Z8", "{}")));
    // Violator semantics: 2a is outside X-X while a is inside.
    const SubsetBits d = difference_set(x);
    CHECK(d.contains(*v));
    CHECK(!d.contains(d.group().double_index(*v)));
}

TEST_CASE("affine sets are semiaffine") {
    const GroupSpec g = GroupSpec::parse("Z12");
    SplitMix64 rng(11);
    for (int t = 0; t < 400; ++t) {
        const SubsetBits x = subset_from_mask(g, rng.next() & 4095);
        if (is_affine(x)) CHECK(is_semiaffine(x));
    }
}

TEST_CASE("semiaffinity is shift invariant") {
    const GroupSpec g = GroupSpec::parse("Z4xZ2");
    SplitMix64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const SubsetBits x = subset_from_mask(g, rng.next() & 255);
        const bool sa = is_semiaffine(x);
        for (uint64_t s = 0; s < g.order(); ++s) CHECK(is_semiaffine(shift_index(x, s)) == sa);
    }
}
