#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "semiaffine/search.hpp"
#include "semiaffine/sphere.hpp"

using namespace semiaffine;

namespace {

LinePointSet window_subset(uint64_t mask) {
    std::vector<Rational> pts;
    for (int i = 0; i < 64; ++i)
        if ((mask >> i) & 1) pts.emplace_back(i);
    return LinePointSet(std::move(pts));
}

}  // namespace

TEST_CASE("rational reduction and accessors") {
    CHECK(Rational().num() == 0);
    CHECK(Rational().den() == 1);
    CHECK(Rational(7).den() == 1);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4).num() == -1);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) < Rational(1, 3));
    CHECK(Rational(INT64_MAX, 2) * Rational(2) == Rational(INT64_MAX));
}

TEST_CASE("rational overflow is an error, not wraparound") {
    CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(INT64_MAX), std::overflow_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
    CHECK_THROWS_AS(Rational(1, INT64_MAX) * Rational(1, 3), std::overflow_error);
    CHECK_THROWS_AS(-Rational(INT64_MIN), std::overflow_error);
    CHECK_THROWS_AS(Rational(INT64_MIN).abs(), std::overflow_error);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational::parse("+2") == Rational(2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-9223372036854775808").num() == INT64_MIN);
    CHECK_THROWS_AS(Rational::parse("9223372036854775808"), std::overflow_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("-"), std::invalid_argument);

    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-5).str() == "-5");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational::parse(Rational(-7, 3).str()) == Rational(-7, 3));
}

TEST_CASE("line point sets sort, deduplicate and trim") {
    const LinePointSet p = LinePointSet::parse(" 2 , 1/2, 1, 2/4 ");
    CHECK(p.points() == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(2)});
    CHECK(p.contains(Rational(1, 2)));
    CHECK(!p.contains(Rational(3, 2)));
    CHECK(LinePointSet::parse("").empty());
    CHECK_THROWS_AS(LinePointSet::parse("1,x"), std::invalid_argument);
}

TEST_CASE("sphericity and semiaffinity witnesses on three collinear points") {
    const LinePointSet p = LinePointSet::parse("0,1,2");
    const auto sw = one_spherical_violation(p);
    REQUIRE(sw.has_value());
    CHECK(sw->triple == std::vector<Rational>{0, 2, 1});
    CHECK(sw->missing == std::vector<Rational>{-1, 3});

    const auto aw = line_semiaffine_violation(p);
    REQUIRE(aw.has_value());
    CHECK(aw->triple == std::vector<Rational>{1, 0, 2});
    CHECK(aw->missing == std::vector<Rational>{-1, 3});
}

TEST_CASE("small sets satisfy both predicates") {
    for (const char* text : {"", "5", "-1/3", "0,1", "0,1/2", "-7/2,7/2"}) {
        const LinePointSet p = LinePointSet::parse(text);
        CHECK(is_1_spherical(p));
        CHECK(line_semiaffine(p));
    }
}

TEST_CASE("predicates agree on every subset of an integer window") {
    for (uint64_t mask = 0; mask < (uint64_t{1} << 9); ++mask) {
        const LinePointSet p = window_subset(mask);
        CHECK(is_1_spherical(p) == line_semiaffine(p));
    }
}

TEST_CASE("predicates agree on sampled rational sets") {
    SplitMix64 rng(20240817);
    for (int iter = 0; iter < 2000; ++iter) {
        std::vector<Rational> pts;
        const uint64_t n = rng.next() % 7;
        for (uint64_t i = 0; i < n; ++i) {
            const int64_t num = int64_t(rng.next() % 49) - 24;
            const int64_t den = int64_t(rng.next() % 12) + 1;
            pts.emplace_back(num, den);
        }
        const LinePointSet p{std::move(pts)};
        CHECK(is_1_spherical(p) == line_semiaffine(p));
    }
}

TEST_CASE("spherical subsets of a window never exceed two points") {
    for (uint64_t mask = 0; mask < (uint64_t{1} << 11); ++mask) {
        const LinePointSet p = window_subset(mask);
        if (is_1_spherical(p)) CHECK(p.size() <= 2);
    }
}

TEST_CASE("integer lattice normalization") {
    const auto lat = to_integer_lattice(LinePointSet::parse("1/2,3/2"));
    CHECK(lat.points == std::vector<uint64_t>{0, 2});
    CHECK(lat.scale == Rational(2));
    CHECK(lat.offset == Rational(1, 2));

    const auto lat2 = to_integer_lattice(LinePointSet::parse("0,1/3,1"));
    CHECK(lat2.points == std::vector<uint64_t>{0, 1, 3});
    CHECK(lat2.scale == Rational(3));

    const auto lat3 = to_integer_lattice(LinePointSet::parse("-1,1"));
    CHECK(lat3.points == std::vector<uint64_t>{0, 2});
    CHECK(lat3.offset == Rational(-1));

    CHECK_THROWS_AS(to_integer_lattice(LinePointSet()), std::invalid_argument);
}

TEST_CASE("normalization preserves both predicates") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<Rational> pts;
        const uint64_t n = rng.next() % 6 + 1;
        for (uint64_t i = 0; i < n; ++i)
            pts.emplace_back(int64_t(rng.next() % 31) - 15, int64_t(rng.next() % 8) + 1);
        const LinePointSet p{std::move(pts)};
        const IntegerLattice lat = to_integer_lattice(p);
        std::vector<Rational> scaled;
        for (uint64_t v : lat.points) scaled.emplace_back(int64_t(v));
        const LinePointSet q{std::move(scaled)};
        CHECK(is_1_spherical(p) == is_1_spherical(q));
        CHECK(line_semiaffine(p) == line_semiaffine(q));
    }
}
