#include "semiaffine/zline.hpp"

#include <algorithm>
#include <stdexcept>

namespace semiaffine {

ZTrace trace(const SubsetBits& x, const Element& base, const Element& g) {
    const GroupSpec& grp = x.group();
    const uint64_t bi = grp.index_of(base);
    if (!x.contains(bi)) throw std::invalid_argument("trace base point is not in X");
    const uint64_t gi = grp.index_of(g);
    ZTrace t{grp.order_of_index(gi), Bitset(grp.order_of_index(gi))};
    uint64_t cur = bi;
    for (uint64_t n = 0; n < t.modulus; ++n) {
        if (x.contains(cur)) t.residues.set(n);
        cur = grp.add_index(cur, gi);
    }
    return t;
}

std::optional<TraceDecomposition> decompose_trace(const ZTrace& t) {
    const auto res = t.residues.indices();
    if (res.empty() || res[0] != 0) return std::nullopt;  // dZ always contains 0
    const uint64_t d = res.size() == 1 ? t.modulus : res[1];
    if (d % 2 == 0 || t.modulus % d != 0) return std::nullopt;
    // dZ is m-periodic exactly when d | m, and then its residues mod m are
    // the multiples of d.
    if (res.size() != t.modulus / d) return std::nullopt;
    for (size_t i = 0; i < res.size(); ++i)
        if (res[i] != i * d) return std::nullopt;
    return TraceDecomposition{d};
}

bool midconvex_via_traces(const SubsetBits& x) {
    const GroupSpec& g = x.group();
    for (uint64_t m : x.members()) {
        const Element base = g.element_at(m);
        for (uint64_t gi = 0; gi < g.order(); ++gi)
            if (!decompose_trace(trace(x, base, g.element_at(gi)))) return false;
    }
    return true;
}

bool is_order_convex_window(const std::vector<int64_t>& s, int64_t lo, int64_t hi) {
    if (s.empty()) return true;
    std::vector<int64_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.front() < lo || sorted.back() > hi)
        throw std::invalid_argument("set leaves the window");
    const uint64_t span = uint64_t(sorted.back() - sorted.front()) + 1;
    return span == sorted.size();
}

}  // namespace semiaffine
