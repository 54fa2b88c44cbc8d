#include "semiaffine/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semiaffine {

namespace {

// Fixpoint closure under add/neg over element indices, starting from 0 and
// the seeds.
SubsetBits closure_of(const GroupSpec& g, const std::vector<uint64_t>& seeds) {
    SubsetBits s(g);
    s.insert(0);
    for (uint64_t i : seeds) s.insert(i);
    bool changed = true;
    while (changed) {
        changed = false;
        const auto mem = s.members();
        for (uint64_t a : mem) {
            const uint64_t na = g.neg_index(a);
            if (!s.contains(na)) {
                s.insert(na);
                changed = true;
            }
            for (uint64_t b : mem) {
                const uint64_t t = g.add_index(a, b);
                if (!s.contains(t)) {
                    s.insert(t);
                    changed = true;
                }
            }
        }
    }
    return s;
}

}  // namespace

Subgroup::Subgroup(SubsetBits bits, std::vector<Element> gens)
    : bits_(std::move(bits)), generators_(std::move(gens)) {}

Subgroup Subgroup::from_bits(SubsetBits bits) {
    if (!is_subgroup(bits))
        throw std::invalid_argument("set is not a subgroup: " + format_subset(bits));
    return Subgroup(std::move(bits));
}

Subgroup Subgroup::trivial(const GroupSpec& g) {
    SubsetBits s(g);
    s.insert(0);
    return Subgroup(std::move(s));
}

Subgroup Subgroup::full(const GroupSpec& g) { return Subgroup(SubsetBits::full(g)); }

bool is_subgroup(const SubsetBits& x) {
    if (x.empty() || !x.contains(uint64_t{0})) return false;
    const GroupSpec& g = x.group();
    const auto mem = x.members();
    for (uint64_t a : mem) {
        if (!x.contains(g.neg_index(a))) return false;
        for (uint64_t b : mem)
            if (!x.contains(g.add_index(a, b))) return false;
    }
    return true;
}

Subgroup cyclic_subgroup(const GroupSpec& g, const Element& a) {
    const uint64_t ai = g.index_of(a);
    SubsetBits s(g);
    uint64_t cur = 0;
    const uint64_t ord = g.order_of_index(ai);
    for (uint64_t n = 0; n < ord; ++n) {
        s.insert(cur);
        cur = g.add_index(cur, ai);
    }
    return Subgroup(std::move(s), {a});
}

Subgroup subgroup_generated(const GroupSpec& g, const std::vector<Element>& generators) {
    std::vector<uint64_t> seeds;
    seeds.reserve(generators.size());
    for (const Element& e : generators) seeds.push_back(g.index_of(e));
    return Subgroup(closure_of(g, seeds), generators);
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g, uint64_t cap) {
    if (g.order() > cap)
        throw std::length_error("group order " + std::to_string(g.order()) +
                                " exceeds exhaustive cap " + std::to_string(cap));
    std::map<std::vector<uint64_t>, SubsetBits> found;  // member list -> bits
    std::vector<SubsetBits> frontier;
    {
        SubsetBits triv(g);
        triv.insert(0);
        found.emplace(triv.members(), triv);
        frontier.push_back(std::move(triv));
    }
    while (!frontier.empty()) {
        const SubsetBits h = std::move(frontier.back());
        frontier.pop_back();
        for (uint64_t e = 0; e < g.order(); ++e) {
            if (h.contains(e)) continue;
            auto grown = h.members();
            grown.push_back(e);
            SubsetBits bigger = closure_of(g, grown);
            auto key = bigger.members();
            if (found.emplace(std::move(key), bigger).second) frontier.push_back(std::move(bigger));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& [key, bits] : found) out.push_back(Subgroup::from_bits(std::move(bits)));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.bits().bits().indices() < b.bits().bits().indices();
    });
    return out;
}

bool quotient_has_even_order_element(const Subgroup& h, const Subgroup& p) {
    if (!p.bits().is_subset_of(h.bits()))
        throw std::invalid_argument("quotient check requires P to be a subgroup of H");
    const GroupSpec& g = h.group();
    for (uint64_t m : h.bits().members())
        if (!p.contains(m) && p.contains(g.double_index(m))) return true;
    return false;
}

SubsetBits coset(const Subgroup& h, uint64_t g) { return shift_index(h.bits(), g); }

std::optional<AffineDecomposition> affine_decompose(const SubsetBits& x) {
    const auto x0 = x.min_index();
    if (!x0) return std::nullopt;
    SubsetBits h = shift_index(x, x.group().neg_index(*x0));
    if (!is_subgroup(h)) return std::nullopt;
    return AffineDecomposition{Subgroup::from_bits(std::move(h)), x.group().element_at(*x0)};
}

TwoCosetExtraction two_coset_extract(const SubsetBits& x, const Element& a) {
    const GroupSpec& g = x.group();
    const uint64_t ai = g.index_of(a);
    const SubsetBits d = difference_set(x);
    if (!d.contains(ai) || d.contains(g.double_index(ai)) || !is_semiaffine(x))
        throw std::logic_error("two_coset_extract preconditions violated");

    // X n (X-a): members y of X with y+a also in X.
    const SubsetBits lower(g, x.bits() & shift_index(x, g.neg_index(ai)).bits());
    const uint64_t x0 = *lower.min_index();  // nonempty since a in X-X
    SubsetBits h_bits = shift_index(lower, g.neg_index(x0));
    if (!is_subgroup(h_bits))
        throw std::logic_error("two_coset_extract: X n (X-a) is not a coset");
    Subgroup h = Subgroup::from_bits(std::move(h_bits));

    if (!((coset(h, x0).bits() | coset(h, g.add_index(x0, ai)).bits()) == x.bits()))
        throw std::logic_error("two_coset_extract: reconstruction mismatch");

    LemmaOneTrace trace{a, {}, std::nullopt, std::nullopt, Subgroup::trivial(g),
                        g.element_at(x0)};
    const uint64_t ord = g.order_of_index(ai);
    uint64_t cur = 0;
    for (uint64_t n = 1; n <= ord; ++n) {
        cur = g.add_index(cur, ai);
        if (d.contains(cur)) trace.d_window.push_back(n);
    }
    for (uint64_t n : trace.d_window)
        if (n > 1) {
            trace.n_min = n;
            break;
        }
    if (trace.n_min) {
        trace.step = g.scalar_mul(int64_t(*trace.n_min) + 1, a);
        trace.h_a = cyclic_subgroup(g, *trace.step);
    }
    return TwoCosetExtraction{std::move(h), g.element_at(x0), std::move(trace)};
}

std::optional<std::string> lemma_one_trace_violation(const SubsetBits& x, const LemmaOneTrace& t) {
    const GroupSpec& g = x.group();
    if (t.d_window.empty() || t.d_window.front() != 1) return "1 missing from D window";
    for (uint64_t n : t.d_window)
        if (n == 2) return "2 present in D window";
    if (t.n_min) {
        if (*t.n_min < 3) return "n_min = " + std::to_string(*t.n_min) + " < 3";
        if (!t.step || !(g.scalar_mul(int64_t(*t.n_min) + 1, t.violator) == *t.step))
            return "step is not (n_min+1)*a";
        if (!(cyclic_subgroup(g, *t.step) == t.h_a)) return "H_a is not the cyclic group of step";
    }
    const uint64_t xi = g.index_of(t.base);
    const uint64_t ai = g.index_of(t.violator);
    if (!x.contains(xi) || !x.contains(g.add_index(xi, ai)))
        return "base point not in X n (X-a)";
    const Subgroup c_a = cyclic_subgroup(g, t.violator);
    const Bitset lhs = x.bits() & coset(c_a, xi).bits();
    const Bitset rhs = coset(t.h_a, xi).bits() | coset(t.h_a, g.add_index(xi, ai)).bits();
    if (!(lhs == rhs)) return "X n (C_a+x) differs from (H_a+x) u (H_a+x+a)";
    return std::nullopt;
}

MidconvexComplementExtraction midconvex_complement_extract(const SubsetBits& x) {
    const GroupSpec& g = x.group();
    if (x.empty() || !is_semiaffine(x) || !doubling_closed(x))
        throw std::logic_error("midconvex_complement_extract preconditions violated");
    SubsetBits d = difference_set(x);
    if (!is_subgroup(d)) throw std::logic_error("X-X is not a subgroup despite doubling closure");
    const uint64_t g0 = *x.min_index();
    SubsetBits c(g, d.bits().and_not(shift_index(x, g.neg_index(g0)).bits()));
    Subgroup h = Subgroup::from_bits(std::move(d));
    if (midconvex_violation(c, h.bits()))
        throw std::logic_error("extracted complement is not midconvex in X-X");
    return MidconvexComplementExtraction{std::move(h), std::move(c), g.element_at(g0)};
}

const char* Classification::variant_name() const {
    switch (form.index()) {
        case 0: return "not_semiaffine";
        case 1: return "two_cosets";
        default: return "coset_minus_midconvex";
    }
}

Classification classify(const SubsetBits& x) {
    const GroupSpec& g = x.group();
    if (x.empty()) {
        // Empty set: (H \ C) + 0 with H = C = G; affine by convention.
        return Classification{
            CosetMinusMidconvex{Subgroup::full(g), SubsetBits::full(g), g.zero()}, true, x};
    }
    if (auto w = semiaffine_violation(x))
        return Classification{NotSemiaffine{std::move(*w)}, false, x};
    const bool affine = is_affine(x);
    if (auto violator = doubling_violator(x)) {
        const Element a = g.element_at(*violator);
        TwoCosetExtraction e = two_coset_extract(x, a);
        Element b = g.add(e.base, a);
        return Classification{
            TwoCosets{std::move(e.subgroup), e.base, std::move(b), std::move(e.trace)}, affine, x};
    }
    MidconvexComplementExtraction m = midconvex_complement_extract(x);
    return Classification{
        CosetMinusMidconvex{std::move(m.subgroup), std::move(m.midconvex_part), m.shift}, affine,
        x};
}

SubsetBits reconstruct(const Classification& c) {
    const GroupSpec& g = c.original.group();
    if (const auto* tc = std::get_if<TwoCosets>(&c.form)) {
        return SubsetBits(g, coset(tc->subgroup, g.index_of(tc->a)).bits() |
                                 coset(tc->subgroup, g.index_of(tc->b)).bits());
    }
    if (const auto* cm = std::get_if<CosetMinusMidconvex>(&c.form)) {
        const SubsetBits carrier(g, cm->subgroup.bits().bits().and_not(cm->midconvex_part.bits()));
        return shift(carrier, cm->shift);
    }
    throw std::logic_error("reconstruct called on a not_semiaffine classification");
}

bool TheoremReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

void add_check(TheoremReport& r, std::string name, bool ok, std::string detail_on_fail) {
    r.checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail_on_fail)});
}

// Exhaustive converse search: does any decomposition of either theorem shape
// evaluate to X? Any (H,C,g) decomposition forces C = H \ (X-g) with
// X-g inside H, so scanning (H,g) pairs covers the whole (H,C,g) space.
bool decomposition_exists(const SubsetBits& x, uint64_t cap) {
    const GroupSpec& g = x.group();
    const auto subgroups = all_subgroups(g, cap);
    for (const Subgroup& h : subgroups) {
        for (uint64_t a = 0; a < g.order(); ++a) {
            const Bitset ca = coset(h, a).bits();
            for (uint64_t b = a; b < g.order(); ++b)
                if ((ca | coset(h, b).bits()) == x.bits()) return true;
        }
        for (uint64_t gi = 0; gi < g.order(); ++gi) {
            const SubsetBits shifted = shift_index(x, g.neg_index(gi));  // X-g
            if (!shifted.bits().is_subset_of(h.bits().bits())) continue;
            const SubsetBits c(g, h.bits().bits().and_not(shifted.bits()));
            if (is_midconvex(c, h.bits())) return true;
        }
    }
    return false;
}

}  // namespace

TheoremReport verify_theorem(const SubsetBits& x, uint64_t converse_search_limit) {
    TheoremReport r{classify(x), {}};
    const Classification& c = r.classification;
    const bool sa = is_semiaffine(x);

    add_check(r, "branch_agrees_semiaffine", c.semiaffine() == sa,
              std::string("classified ") + c.variant_name() + " but is_semiaffine=" +
                  (sa ? "true" : "false"));
    add_check(r, "affine_implies_semiaffine", !c.affine || sa, "affine set failed semiaffinity");

    if (const auto* ns = std::get_if<NotSemiaffine>(&c.form)) {
        add_check(r, "witness_replays", witness_replays(x, ns->witness),
                  "semiaffinity witness does not reproduce the violation");
        if (x.group().order() <= converse_search_limit)
            add_check(r, "no_decomposition_exists", !decomposition_exists(x, converse_search_limit),
                      "a decomposition evaluates to a non-semiaffine set");
        return r;
    }

    SubsetBits rebuilt = reconstruct(c);
    add_check(r, "reconstruction_equals_input", rebuilt == x,
              "reconstruct(classify(X)) != X: got " + format_subset(rebuilt));
    if (const auto* tc = std::get_if<TwoCosets>(&c.form)) {
        add_check(r, "h_is_subgroup", is_subgroup(tc->subgroup.bits()), "H fails subgroup check");
        add_check(r, "endpoints_in_x", x.contains(tc->a) && x.contains(tc->b),
                  "coset representatives a,b are not both in X");
    } else {
        const auto& cm = std::get<CosetMinusMidconvex>(c.form);
        add_check(r, "h_is_subgroup", is_subgroup(cm.subgroup.bits()), "H fails subgroup check");
        add_check(r, "c_midconvex_in_h", is_midconvex(cm.midconvex_part, cm.subgroup.bits()),
                  "C fails midconvexity in H");
    }
    add_check(r, "decomposition_retests_semiaffine", is_semiaffine(rebuilt),
              "reconstructed decomposition is not semiaffine");
    return r;
}

bool periodic_midconvex_check(const SubsetBits& x, const Subgroup& ambient) {
    if (!x.is_subset_of(ambient.bits()))
        throw std::invalid_argument("periodic midconvex check requires X inside the ambient");
    const auto x0 = x.min_index();
    if (!x0) return true;
    SubsetBits p = shift_index(x, x.group().neg_index(*x0));
    if (!is_subgroup(p)) return false;
    return !quotient_has_even_order_element(ambient, Subgroup::from_bits(std::move(p)));
}

PeriodicClassification periodic_semiaffine_classify(const SubsetBits& x) {
    Classification c = classify(x);
    PeriodicClassification out{NotSemiaffine{Witness{}}, c.affine, c.original};
    if (auto* ns = std::get_if<NotSemiaffine>(&c.form)) {
        out.form = std::move(*ns);
        return out;
    }
    if (auto* tc = std::get_if<TwoCosets>(&c.form)) {
        out.form = std::move(*tc);
        return out;
    }
    auto& cm = std::get<CosetMinusMidconvex>(c.form);
    const GroupSpec& g = x.group();
    if (cm.midconvex_part.empty()) {
        out.form = CosetMinusSubgroup{std::move(cm.subgroup), std::nullopt, cm.shift};
        return out;
    }
    // Nonempty midconvex C in finite H is a coset of a subgroup with
    // even-order-free quotient; absorb its offset into the shift.
    const uint64_t c0 = *cm.midconvex_part.min_index();
    SubsetBits p_bits = shift_index(cm.midconvex_part, g.neg_index(c0));
    if (!is_subgroup(p_bits))
        throw std::logic_error("midconvex part is not a coset of a subgroup");
    Subgroup p = Subgroup::from_bits(std::move(p_bits));
    if (quotient_has_even_order_element(cm.subgroup, p))
        throw std::logic_error("midconvex part has an even-order quotient");
    const Element new_shift = g.add(cm.shift, g.element_at(c0));
    out.form = CosetMinusSubgroup{std::move(cm.subgroup), std::move(p), new_shift};
    SubsetBits rebuilt = reconstruct(out);
    if (!(rebuilt == x)) throw std::logic_error("periodic normalization broke reconstruction");
    return out;
}

SubsetBits reconstruct(const PeriodicClassification& c) {
    const GroupSpec& g = c.original.group();
    if (const auto* tc = std::get_if<TwoCosets>(&c.form)) {
        return SubsetBits(g, coset(tc->subgroup, g.index_of(tc->a)).bits() |
                                 coset(tc->subgroup, g.index_of(tc->b)).bits());
    }
    if (const auto* cs = std::get_if<CosetMinusSubgroup>(&c.form)) {
        Bitset carrier = cs->p ? cs->h.bits().bits().and_not(cs->p->bits().bits())
                               : cs->h.bits().bits();
        return shift(SubsetBits(g, std::move(carrier)), cs->shift);
    }
    throw std::logic_error("reconstruct called on a not_semiaffine classification");
}

}  // namespace semiaffine
