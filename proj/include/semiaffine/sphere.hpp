#pragma once

// Finite rational point sets on the real line: 1-sphericity and its
// equivalence with semiaffinity over the additive reals.
//
// A metric space is 1-spherical when for all points a,b,c some point x has
// d(c,x) = d(a,b). On the line that is equivalent to the semiaffine
// condition (x+y-z or x-y+z stays in the set); both predicates are decided
// here with exact arithmetic, since membership of x+y-z cannot tolerate
// rounding. Witnesses are the lexicographically first violating triple after
// sorting the points ascending.
//
// A consequence worth recording: a finite 1-spherical subset of the line has
// at most 2 points. In the two-coset shape the subgroup H of (R,+) generated
// by differences must be finite, hence trivial, so |X| <= 2; in the
// coset-minus-midconvex shape a finite nonempty X would make C cofinite in
// an infinite H, and a cofinite proper subset of a copy of Z is never
// midconvex (a missing m has members m-t and m+t for large t, forcing m
// itself). The tests confirm this exhaustively on integer windows rather
// than citing it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semiaffine {

// Reduced fraction with positive denominator. Arithmetic goes through
// 128-bit intermediates and throws std::overflow_error if a reduced result
// leaves the 64-bit range.
class Rational {
public:
    Rational() = default;
    Rational(int64_t n) : num_(n) {}
    Rational(int64_t num, int64_t den);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator-() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    bool operator==(const Rational&) const = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "3/4", "-5", "0". Throws std::invalid_argument naming the token.
    static Rational parse(std::string_view text);
    std::string str() const;  // denominator omitted when 1

private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

// Sorted, deduplicated rational points.
class LinePointSet {
public:
    LinePointSet() = default;
    explicit LinePointSet(std::vector<Rational> pts);

    // Comma-separated rationals: "0,1/2,3".
    static LinePointSet parse(std::string_view text);

    const std::vector<Rational>& points() const { return points_; }
    size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Rational& q) const;

    bool operator==(const LinePointSet&) const = default;

private:
    std::vector<Rational> points_;
};

struct LineWitness {
    std::vector<Rational> triple;   // (a,b,c) resp. (x,y,z)
    std::vector<Rational> missing;  // the absent candidate point(s), ascending
};

// nullopt iff for all a,b,c in P some x in P has |c-x| = |a-b|. On failure
// the missing entries are the two candidates c-d and c+d.
std::optional<LineWitness> one_spherical_violation(const LinePointSet& p);

// nullopt iff for all x,y,z in P at least one of x+y-z, x-y+z is in P.
std::optional<LineWitness> line_semiaffine_violation(const LinePointSet& p);

inline bool is_1_spherical(const LinePointSet& p) { return !one_spherical_violation(p); }
inline bool line_semiaffine(const LinePointSet& p) { return !line_semiaffine_violation(p); }

struct IntegerLattice {
    std::vector<uint64_t> points;  // sorted; front() == 0
    Rational scale;                // lcm of the input denominators
    Rational offset;               // min of the input; inverse map q = s/scale + offset
};

// Affine normalization (P - min P) * scale onto non-negative integers. Both
// predicates are invariant under such maps. Throws std::invalid_argument on
// an empty set.
IntegerLattice to_integer_lattice(const LinePointSet& p);

}  // namespace semiaffine
