#include "semiaffine/sphere.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semiaffine {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

int64_t narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error("rational arithmetic overflow");
    return int64_t(v);
}

struct NumDen {
    int64_t num;
    int64_t den;
};

// Inputs never reach the i128 extremes (they are sums of int64 products), so
// the negations below cannot overflow.
NumDen reduce(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    u128 a = u128(num < 0 ? -num : num);
    u128 b = u128(den);
    while (b) {
        const u128 t = a % b;
        a = b;
        b = t;
    }
    const i128 g = a ? i128(a) : 1;
    return {narrow(num / g), narrow(den / g)};
}

Rational make_reduced(i128 num, i128 den) {
    const NumDen r = reduce(num, den);
    return Rational(r.num, r.den);
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
    const NumDen r = reduce(num, den);
    num_ = r.num;
    den_ = r.den;
}

Rational Rational::operator-() const { return make_reduced(-i128(num_), i128(den_)); }

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const i128 lhs = i128(a.num_) * b.den_;
    const i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
    };
    const auto parse_int = [&](std::string_view part) -> int64_t {
        if (part.empty()) throw bad();
        size_t i = part[0] == '-' || part[0] == '+' ? 1 : 0;
        if (i == part.size()) throw bad();
        i128 v = 0;
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') throw bad();
            v = v * 10 + (part[i] - '0');
            if (v > i128(INT64_MAX) + 1) throw bad();
        }
        return narrow(part[0] == '-' ? -v : v);
    };
    const size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

LinePointSet::LinePointSet(std::vector<Rational> pts) : points_(std::move(pts)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LinePointSet LinePointSet::parse(std::string_view text) {
    std::vector<Rational> pts;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(start, comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) pts.push_back(Rational::parse(tok));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return LinePointSet(std::move(pts));
}

bool LinePointSet::contains(const Rational& q) const {
    return std::binary_search(points_.begin(), points_.end(), q);
}

std::optional<LineWitness> one_spherical_violation(const LinePointSet& p) {
    for (const Rational& a : p.points())
        for (const Rational& b : p.points()) {
            const Rational d = (a - b).abs();
            for (const Rational& c : p.points()) {
                const Rational lo = c - d, hi = c + d;
                if (!p.contains(lo) && !p.contains(hi))
                    return LineWitness{{a, b, c}, {lo, hi}};
            }
        }
    return std::nullopt;
}

std::optional<LineWitness> line_semiaffine_violation(const LinePointSet& p) {
    for (const Rational& x : p.points())
        for (const Rational& y : p.points())
            for (const Rational& z : p.points()) {
                const Rational t1 = x + y - z, t2 = x - y + z;
                if (p.contains(t1) || p.contains(t2)) continue;
                LineWitness w{{x, y, z}, {t1, t2}};
                if (w.missing[1] < w.missing[0]) std::swap(w.missing[0], w.missing[1]);
                if (w.missing[0] == w.missing[1]) w.missing.pop_back();
                return w;
            }
    return std::nullopt;
}

IntegerLattice to_integer_lattice(const LinePointSet& p) {
    if (p.empty()) throw std::invalid_argument("cannot normalize an empty point set");
    i128 l = 1;
    for (const Rational& q : p.points()) l = std::lcm(narrow(l), q.den());
    IntegerLattice out{{}, Rational(narrow(l)), p.points().front()};
    out.points.reserve(p.size());
    for (const Rational& q : p.points()) {
        const Rational scaled = (q - out.offset) * out.scale;
        if (scaled.den() != 1 || scaled.num() < 0)
            throw std::logic_error("lattice normalization produced a non-integer");
        out.points.push_back(uint64_t(scaled.num()));
    }
    return out;
}

}  // namespace semiaffine
