#include "semiaffine/subsets.hpp"

#include <cctype>
#include <stdexcept>

namespace semiaffine {

SubsetBits::SubsetBits(GroupSpec group, Bitset bits)
    : group_(std::move(group)), bits_(std::move(bits)) {
    if (bits_.size() != group_.order())
        throw std::invalid_argument("bitset length " + std::to_string(bits_.size()) +
                                    " does not match group order " +
                                    std::to_string(group_.order()));
}

SubsetBits SubsetBits::full(const GroupSpec& group) {
    return SubsetBits(group, Bitset(group.order(), true));
}

SubsetBits SubsetBits::of_indices(const GroupSpec& group, const std::vector<uint64_t>& indices) {
    SubsetBits s(group);
    for (uint64_t i : indices) s.insert(i);
    return s;
}

bool SubsetBits::is_subset_of(const SubsetBits& o) const {
    if (!(group_ == o.group_)) throw std::invalid_argument("subset comparison across groups");
    return bits_.is_subset_of(o.bits_);
}

const char* witness_kind_name(Witness::Kind k) {
    switch (k) {
        case Witness::Kind::Affine: return "affine-violation";
        case Witness::Kind::Semiaffine: return "semiaffine-violation";
        case Witness::Kind::Midconvex: return "midconvex-violation";
    }
    return "?";
}

SubsetBits shift_index(const SubsetBits& x, uint64_t g) {
    const GroupSpec& G = x.group();
    SubsetBits r(G);
    x.bits().for_each([&](uint64_t i) { r.insert(G.add_index(i, g)); });
    return r;
}

SubsetBits shift(const SubsetBits& x, const Element& g) {
    return shift_index(x, x.group().index_of(g));
}

SubsetBits difference_set(const SubsetBits& x) {
    const GroupSpec& G = x.group();
    SubsetBits r(G);
    const auto mem = x.members();
    for (uint64_t a : mem)
        for (uint64_t b : mem) r.insert(G.sub_index(a, b));
    return r;
}

SubsetBits half_set_index(const GroupSpec& g, uint64_t s) {
    SubsetBits r(g);
    for (uint64_t z = 0; z < g.order(); ++z)
        if (g.double_index(z) == s) r.insert(z);
    return r;
}

SubsetBits half_set(const GroupSpec& g, const Element& s) {
    return half_set_index(g, g.index_of(s));
}

std::optional<Witness> affine_violation(const SubsetBits& x) {
    const GroupSpec& G = x.group();
    const auto mem = x.members();
    for (uint64_t a : mem)
        for (uint64_t b : mem) {
            const uint64_t ab = G.add_index(a, b);
            for (uint64_t c : mem) {
                const uint64_t t = G.sub_index(ab, c);
                if (!x.contains(t))
                    return Witness{Witness::Kind::Affine, {a, b, c}, {t}};
            }
        }
    return std::nullopt;
}

std::optional<Witness> semiaffine_violation(const SubsetBits& x) {
    const GroupSpec& G = x.group();
    const auto mem = x.members();
    for (uint64_t a : mem)
        for (uint64_t b : mem)
            for (uint64_t c : mem) {
                const uint64_t d = G.sub_index(b, c);
                const uint64_t t1 = G.add_index(a, d);
                if (x.contains(t1)) continue;
                const uint64_t t2 = G.sub_index(a, d);
                if (x.contains(t2)) continue;
                Witness w{Witness::Kind::Semiaffine, {a, b, c}, {t1}};
                if (t2 != t1) w.missing.push_back(t2);
                return w;
            }
    return std::nullopt;
}

std::optional<Witness> midconvex_violation(const SubsetBits& x, const SubsetBits& ambient) {
    if (!x.is_subset_of(ambient))
        throw std::invalid_argument("midconvexity requires X to lie inside the ambient set");
    const GroupSpec& G = x.group();
    const auto mem = x.members();
    const auto amb = ambient.members();
    for (uint64_t a : mem)
        for (uint64_t b : mem) {
            const uint64_t s = G.add_index(a, b);
            for (uint64_t z : amb)
                if (G.double_index(z) == s && !x.contains(z))
                    return Witness{Witness::Kind::Midconvex, {a, b}, {z}};
        }
    return std::nullopt;
}

std::optional<uint64_t> doubling_violator(const SubsetBits& x) {
    const GroupSpec& G = x.group();
    const SubsetBits d = difference_set(x);
    for (uint64_t a : d.members())
        if (!d.contains(G.double_index(a))) return a;
    return std::nullopt;
}

bool witness_replays(const SubsetBits& x, const Witness& w, const SubsetBits* ambient) {
    const GroupSpec& G = x.group();
    switch (w.kind) {
        case Witness::Kind::Affine: {
            if (w.elements.size() != 3 || w.missing.size() != 1) return false;
            for (uint64_t e : w.elements)
                if (!x.contains(e)) return false;
            const uint64_t t = G.sub_index(G.add_index(w.elements[0], w.elements[1]), w.elements[2]);
            return t == w.missing[0] && !x.contains(t);
        }
        case Witness::Kind::Semiaffine: {
            if (w.elements.size() != 3 || w.missing.empty()) return false;
            for (uint64_t e : w.elements)
                if (!x.contains(e)) return false;
            const uint64_t d = G.sub_index(w.elements[1], w.elements[2]);
            const uint64_t t1 = G.add_index(w.elements[0], d);
            const uint64_t t2 = G.sub_index(w.elements[0], d);
            if (x.contains(t1) || x.contains(t2)) return false;
            return w.missing[0] == t1 && (t1 == t2 ? w.missing.size() == 1 : w.missing.back() == t2);
        }
        case Witness::Kind::Midconvex: {
            if (w.elements.size() != 2 || w.missing.size() != 1 || !ambient) return false;
            for (uint64_t e : w.elements)
                if (!x.contains(e)) return false;
            const uint64_t z = w.missing[0];
            return ambient->contains(z) && !x.contains(z) &&
                   G.double_index(z) == G.add_index(w.elements[0], w.elements[1]);
        }
    }
    return false;
}

namespace {

std::string_view trim_view(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

SubsetBits parse_subset(const GroupSpec& g, std::string_view text) {
    text = trim_view(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw std::invalid_argument("bad set literal '" + std::string(text) +
                                    "' (expected {...})");
    std::string_view body = text.substr(1, text.size() - 2);
    SubsetBits s(g);
    if (trim_view(body).empty()) return s;
    size_t pos = 0;
    int depth = 0;
    size_t start = 0;
    auto flush = [&](size_t end) {
        s.insert(g.index_of(parse_element(g, body.substr(start, end - start))));
        start = end + 1;
    };
    for (pos = 0; pos < body.size(); ++pos) {
        const char c = body[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) flush(pos);
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in set literal");
    flush(body.size());
    return s;
}

SubsetBits subset_from_hex(const GroupSpec& g, std::string_view hex) {
    return SubsetBits(g, Bitset::from_hex(g.order(), hex));
}

std::string format_subset(const SubsetBits& x) {
    std::string out = "{";
    bool first = true;
    x.bits().for_each([&](uint64_t i) {
        if (!first) out += ',';
        first = false;
        out += format_element(x.group(), x.group().element_at(i));
    });
    return out + "}";
}

}  // namespace semiaffine
