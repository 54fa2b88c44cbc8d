#pragma once

// Subgroup machinery and the constructive classification of semiaffine sets.
//
// Every semiaffine subset X of a finite Abelian group G has exactly one of
// two shapes, and the classifier produces it constructively:
//
//   two-coset form              X = (H+a) u (H+b),  H subgroup, a,b in X
//   coset-minus-midconvex form  X = (H \ C) + g,    C midconvex in H
//
// The branch order is fixed: empty set, semiaffinity witness, two-coset
// branch (some a in X-X has 2a outside X-X), midconvex branch. The two
// shapes overlap (a single coset fits both), so the output is canonical by
// procedure, not unique by mathematics; no attempt is made to decide
// whether the cases can be separated. All existential choices (the doubling
// violator a, the base point x, the shift g) are resolved by minimal element
// index so classifications are reproducible.

#include <optional>
#include <string>
#include <variant>

#include "semiaffine/subsets.hpp"

namespace semiaffine {

class Subgroup {
public:
    // Verifies 0-membership and closure under add/neg; throws
    // std::invalid_argument otherwise.
    static Subgroup from_bits(SubsetBits bits);
    static Subgroup trivial(const GroupSpec& g);
    static Subgroup full(const GroupSpec& g);

    const SubsetBits& bits() const { return bits_; }
    const GroupSpec& group() const { return bits_.group(); }
    uint64_t order() const { return bits_.count(); }
    bool contains(uint64_t index) const { return bits_.contains(index); }

    // Informational; empty when the subgroup was not built from generators.
    const std::vector<Element>& generators() const { return generators_; }

    bool operator==(const Subgroup& o) const { return bits_ == o.bits_; }

private:
    SubsetBits bits_;
    std::vector<Element> generators_;
    friend Subgroup subgroup_generated(const GroupSpec&, const std::vector<Element>&);
    friend Subgroup cyclic_subgroup(const GroupSpec&, const Element&);
    explicit Subgroup(SubsetBits bits, std::vector<Element> gens = {});
};

bool is_subgroup(const SubsetBits& x);

// {n*a : 0 <= n < ord(a)}.
Subgroup cyclic_subgroup(const GroupSpec& g, const Element& a);

// Smallest subgroup containing the generators (work-list closure).
Subgroup subgroup_generated(const GroupSpec& g, const std::vector<Element>& generators);

// Every subgroup exactly once, sorted by (order, bitset hex). Grow-by-
// generator with dedup on the bitset.
std::vector<Subgroup> all_subgroups(const GroupSpec& g,
                                    uint64_t cap = GroupSpec::kDefaultExhaustiveCap);

// True iff some h in H \ P has 2h in P. For finite H this is equivalent to
// H/P containing an element of even order: order-2 elements of the quotient
// are exactly such cosets h+P, and any finite group with an element of even
// order has one of order 2 (an odd multiple of it). Finite-case-only.
bool quotient_has_even_order_element(const Subgroup& h, const Subgroup& p);

// H + g as a plain subset.
SubsetBits coset(const Subgroup& h, uint64_t g);

struct AffineDecomposition {
    Subgroup subgroup;
    Element shift;  // X = subgroup + shift; shift is the minimal-index member
};

// Present iff X is nonempty and affine (equivalently: X - min(X) is a
// subgroup).
std::optional<AffineDecomposition> affine_decompose(const SubsetBits& x);

// Diagnostic record of the two-coset extraction: the cyclic-subgroup window
// around the doubling violator a.
struct LemmaOneTrace {
    Element violator;                // a in X-X with 2a not in X-X
    std::vector<uint64_t> d_window;  // {n in [1, ord(a)] : n*a in X-X}
    std::optional<uint64_t> n_min;   // min(d_window \ {1}); >= 3 when present
    std::optional<Element> step;     // (n_min+1)*a
    Subgroup h_a;                    // cyclic subgroup generated by step
    Element base;                    // x: minimal-index member of X n (X-a)
};

// nullopt when all trace invariants hold: 1 in window, 2 not in window,
// n_min >= 3 when present, and X n (C_a + x) = (H_a+x) u (H_a+x+a) for
// C_a the cyclic subgroup generated by the violator.
std::optional<std::string> lemma_one_trace_violation(const SubsetBits& x, const LemmaOneTrace& t);

struct TwoCosetExtraction {
    Subgroup subgroup;  // H = (X n (X-a)) - x
    Element base;       // x
    LemmaOneTrace trace;
};

// Requires: X semiaffine, a in X-X, 2a not in X-X (throws std::logic_error
// otherwise; the caller picked a bad branch). Produces H and x with
// X = (H+x) u (H+x+a).
TwoCosetExtraction two_coset_extract(const SubsetBits& x, const Element& a);

struct MidconvexComplementExtraction {
    Subgroup subgroup;          // H = X-X
    SubsetBits midconvex_part;  // C = H \ (X-g), midconvex in H
    Element shift;              // g: minimal-index member of X
};

// Requires: X nonempty semiaffine with X-X closed under doubling.
MidconvexComplementExtraction midconvex_complement_extract(const SubsetBits& x);

struct NotSemiaffine {
    Witness witness;
};

struct TwoCosets {
    Subgroup subgroup;
    Element a;  // base point x
    Element b;  // x + violator
    LemmaOneTrace trace;
};

struct CosetMinusMidconvex {
    Subgroup subgroup;
    SubsetBits midconvex_part;
    Element shift;
};

struct Classification {
    std::variant<NotSemiaffine, TwoCosets, CosetMinusMidconvex> form;
    bool affine = false;
    SubsetBits original;

    bool semiaffine() const { return !std::holds_alternative<NotSemiaffine>(form); }
    const char* variant_name() const;  // "not_semiaffine" | "two_cosets" | "coset_minus_midconvex"
};

// The empty set classifies as coset-minus-midconvex with H = C = G, g = 0.
Classification classify(const SubsetBits& x);

// Evaluates the decomposition back to a subset. Throws std::logic_error on
// a NotSemiaffine classification.
SubsetBits reconstruct(const Classification& c);

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // empty on pass
};

struct TheoremReport {
    Classification classification;
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// Runs the full biconditional check list on one subset:
//  - the classifier branch agrees with the semiaffinity predicate;
//  - when semiaffine: reconstruction equals X, H re-verifies as a subgroup,
//    case-specific side conditions hold (a,b in X / C midconvex in H), and
//    the produced decomposition re-tests as semiaffine;
//  - when not semiaffine: the witness replays, and for groups of order at
//    most `converse_search_limit` an exhaustive search confirms no
//    decomposition of either shape evaluates to X.
// Failures are report entries, never exceptions.
TheoremReport verify_theorem(const SubsetBits& x, uint64_t converse_search_limit = 8);

// Midconvexity criterion for subsets of a finite ambient subgroup: X is
// empty, or X - min(X) is a subgroup of the ambient whose quotient has no
// even-order element. Agrees with is_midconvex on finite groups.
bool periodic_midconvex_check(const SubsetBits& x, const Subgroup& ambient);

struct CosetMinusSubgroup {
    Subgroup h;
    std::optional<Subgroup> p;  // absent when the midconvex part was empty (X = H+g)
    Element shift;
};

struct PeriodicClassification {
    std::variant<NotSemiaffine, TwoCosets, CosetMinusSubgroup> form;
    bool affine = false;
    SubsetBits original;

    bool semiaffine() const { return !std::holds_alternative<NotSemiaffine>(form); }
};

// classify(), with the midconvex part C further resolved (finite groups
// only): nonempty C is a coset P + c0 of a subgroup P with even-order-free
// quotient, and c0 is absorbed into the shift, giving X = (H \ P) + g.
PeriodicClassification periodic_semiaffine_classify(const SubsetBits& x);

SubsetBits reconstruct(const PeriodicClassification& c);

}  // namespace semiaffine
