#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semiaffine/search.hpp"
#include "semiaffine/zline.hpp"

using namespace semiaffine;

namespace {

ZTrace make_trace(uint64_t modulus, std::initializer_list<uint64_t> residues) {
    ZTrace t{modulus, Bitset(modulus)};
    for (uint64_t r : residues) t.residues.set(r);
    return t;
}

}  // namespace

TEST_CASE("trace walks the cyclic orbit") {
    const GroupSpec z6 = GroupSpec::parse("Z6");
    const SubsetBits x = parse_subset(z6, "{2,5}");
    const ZTrace t = trace(x, Element{{2}}, Element{{1}});
    CHECK(t.modulus == 6);
    CHECK(t.residues.indices() == std::vector<uint64_t>{0, 3});

    const GroupSpec z9 = GroupSpec::parse("Z9");
    const ZTrace s = trace(parse_subset(z9, "{0,3,6}"), Element{{0}}, Element{{1}});
    CHECK(s.modulus == 9);
    CHECK(s.residues.indices() == std::vector<uint64_t>{0, 3, 6});

    const ZTrace short_orbit = trace(parse_subset(z9, "{0,3,6}"), Element{{3}}, Element{{3}});
    CHECK(short_orbit.modulus == 3);
    CHECK(short_orbit.residues.indices() == std::vector<uint64_t>{0, 1, 2});

    const ZTrace fixed = trace(x, Element{{5}}, Element{{0}});
    CHECK(fixed.modulus == 1);
    CHECK(fixed.residues.indices() == std::vector<uint64_t>{0});

    CHECK_THROWS_AS(trace(x, Element{{0}}, Element{{1}}), std::invalid_argument);
}

TEST_CASE("trace decomposition accepts exactly the odd-step subgroups") {
    auto d_of = [](const ZTrace& t) -> std::optional<uint64_t> {
        const auto dec = decompose_trace(t);
        if (!dec) return std::nullopt;
        return dec->d;
    };
    CHECK(d_of(make_trace(6, {0, 3})) == 3);
    CHECK(d_of(make_trace(9, {0, 3, 6})) == 3);
    CHECK(d_of(make_trace(9, {0, 1, 2, 3, 4, 5, 6, 7, 8})) == 1);
    CHECK(d_of(make_trace(1, {0})) == 1);
    CHECK(d_of(make_trace(5, {0})) == 5);
    CHECK(d_of(make_trace(15, {0, 5, 10})) == 5);

    CHECK(!d_of(make_trace(4, {0, 2})).has_value());   // even step
    CHECK(!d_of(make_trace(6, {0})).has_value());      // d = 6 even
    CHECK(!d_of(make_trace(6, {0, 2, 4})).has_value());
    CHECK(!d_of(make_trace(6, {3})).has_value());      // 0 missing
    CHECK(!d_of(make_trace(6, {})).has_value());
    CHECK(!d_of(make_trace(6, {0, 3, 4})).has_value());  // not a progression
    CHECK(!d_of(make_trace(9, {0, 3})).has_value());     // 6 missing
    CHECK(!d_of(make_trace(7, {0, 5})).has_value());     // 5 does not divide 7
}

TEST_CASE("trace criterion decides midconvexity in the full group") {
    const GroupSpec z6 = GroupSpec::parse("Z6");
    CHECK(midconvex_via_traces(parse_subset(z6, "{2,5}")));
    CHECK(midconvex_via_traces(parse_subset(z6, "{}")));
    CHECK(!midconvex_via_traces(parse_subset(GroupSpec::parse("Z4"), "{0,2}")));
    CHECK(midconvex_via_traces(parse_subset(GroupSpec::parse("Z5"), "{3}")));
}

TEST_CASE("trace criterion agrees with the direct predicate") {
    for (const char* name : {"Z6", "Z8", "Z5", "Z2xZ4", "Z3xZ3"}) {
        const GroupSpec g = GroupSpec::parse(name);
        const SubsetBits full = SubsetBits::full(g);
        for (uint64_t mask = 0; mask < (uint64_t{1} << g.order()); ++mask) {
            const SubsetBits x = subset_from_mask(g, mask);
            CHECK(midconvex_via_traces(x) == is_midconvex(x, full));
        }
    }
}

TEST_CASE("order-convex windows") {
    CHECK(is_order_convex_window({3, 4, 5}, 3, 5));
    CHECK(is_order_convex_window({5, 3, 4, 4}, 0, 10));
    CHECK(!is_order_convex_window({3, 5}, 3, 5));
    CHECK(is_order_convex_window({}, 0, 0));
    CHECK(is_order_convex_window({-2}, -5, 0));
    CHECK(!is_order_convex_window({-2, 0}, -5, 0));
    CHECK_THROWS_AS(is_order_convex_window({11}, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(is_order_convex_window({-1, 3}, 0, 10), std::invalid_argument);
}
