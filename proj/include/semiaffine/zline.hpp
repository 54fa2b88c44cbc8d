#pragma once

// Midconvexity through traces on the integer line.
//
// For x in X and g in G, the trace {n in Z : x+ng in X} is purely periodic
// with period ord(g). In general, X is midconvex iff every such trace is the
// intersection of an order-convex subset C of Z with a subgroup H = dZ whose
// quotient Z/dZ has no elements of even order. For traces coming from a
// finite group the order-convex factor collapses: the trace contains 0 and is
// periodic, hence unbounded both ways, and the only order-convex superset of
// an unbounded set is Z itself. What remains is "trace = dZ with d odd"
// (d = 0 cannot occur for a periodic trace, and Z/dZ is even-order-free iff
// d is odd). That reduction is what decompose_trace checks; the equivalence
// with the direct midconvexity predicate is validated by sweep, not assumed.

#include <cstdint>
#include <optional>
#include <vector>

#include "semiaffine/subsets.hpp"

namespace semiaffine {

// Denotes {n in Z : (n mod m) in residues}; m-periodic by construction.
// modulus is always ord(g), never reduced to the minimal period.
struct ZTrace {
    uint64_t modulus = 1;
    Bitset residues{1};

    bool operator==(const ZTrace&) const = default;
};

// The denoted set is dZ; d odd and dividing the modulus.
struct TraceDecomposition {
    uint64_t d = 1;
};

// Trace of X along g based at x. Throws std::invalid_argument if x is not
// in X. Residue 0 is always set.
ZTrace trace(const SubsetBits& x, const Element& base, const Element& g);

// Present iff the denoted set equals dZ for some odd d dividing the modulus;
// d is then the minimal positive trace element.
std::optional<TraceDecomposition> decompose_trace(const ZTrace& t);

// True iff every trace of X (all x in X, all g in G) decomposes. Agrees with
// is_midconvex(X, G); the ambient is the full group.
bool midconvex_via_traces(const SubsetBits& x);

// True iff s is empty or a contiguous run of integers. Throws
// std::invalid_argument if s leaves [lo, hi]. Not used by the finite-group
// path; the sphere layer and tests use it for window reasoning on Z.
bool is_order_convex_window(const std::vector<int64_t>& s, int64_t lo, int64_t hi);

}  // namespace semiaffine
