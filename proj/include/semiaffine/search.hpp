#pragma once

// Sweep harness: run the classification checks over ranges of subsets,
// exhaustively or by seeded sampling, with deterministic parallel merge.
//
// A subset of a group of order N is encoded as an N-bit mask over element
// indices (bit i = element i present), so the full sweep space is [0, 2^N).
// Workers take contiguous mask blocks and their partial reports are merged
// in block order, which makes reports byte-identical across worker counts.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "semiaffine/structure.hpp"

namespace semiaffine {

// SplitMix64 (Steele/Lea/Flood 2014), the fixed sampling generator. The
// algorithm is pinned so that (seed, samples, group) always denotes the same
// subset sequence, in this codebase and in reimplementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    uint64_t state_;
};

// Which per-subset checks a sweep runs. The equivalence checks compare
// independent routes to the same predicate and are off by default.
struct CheckSet {
    bool theorem = true;       // full classification check list per subset
    bool lemma1 = true;        // trace invariants on two-coset classifications
    bool lemma2 = true;        // doubling closure of X-X <=> X-X subgroup
    bool t2_equivalence = false;  // midconvex vs periodic check, all ambients
    bool t1_equivalence = false;  // midconvex vs trace decomposition
};

struct SweepConfig {
    enum class Mode { Exhaustive, Random };

    GroupSpec group;
    Mode mode = Mode::Exhaustive;
    uint64_t lo = 0;  // mask range [lo, hi); ignored in random mode
    uint64_t hi = 0;
    uint64_t samples = 0;  // random mode
    uint64_t seed = 0;
    unsigned workers = 1;
    CheckSet checks;
    uint64_t cap = GroupSpec::kDefaultExhaustiveCap;
    uint64_t converse_search_limit = 8;
    // When set, only the minimal mask of each translation class is checked
    // and counted; `checked` then counts class representatives.
    bool dedup_shift_classes = false;

    static SweepConfig exhaustive(GroupSpec g);
    static SweepConfig random(GroupSpec g, uint64_t samples, uint64_t seed);
};

struct SweepFailure {
    uint64_t mask;
    std::string check;  // "theorem.<check>", "lemma1.trace", "lemma2.equivalence", ...
    std::string detail;

    bool operator==(const SweepFailure&) const = default;
};

struct ClassCounts {
    uint64_t total = 0;
    uint64_t affine = 0;
    uint64_t semiaffine = 0;
    uint64_t midconvex = 0;  // ambient = full group

    bool operator==(const ClassCounts&) const = default;
};

struct SweepReport {
    GroupSpec group;
    uint64_t checked = 0;
    std::vector<SweepFailure> failures;
    ClassCounts counts;
    double seconds = 0.0;
};

SubsetBits subset_from_mask(const GroupSpec& g, uint64_t mask);  // requires N <= 63
uint64_t mask_of_subset(const SubsetBits& x);

// Every mask in [lo, hi) through the enabled checks; class counts use the
// direct predicates, independent of the classifier. Throws on random mode,
// N above cap, or an invalid range. hi == 0 with lo == 0 means the full
// range.
SweepReport exhaustive_verify(const SweepConfig& cfg);

// `samples` masks drawn from SplitMix64(seed), low N bits each; the sample
// list is fixed up front, then processed like an exhaustive block. Throws on
// exhaustive mode or N > 63.
SweepReport random_verify(const SweepConfig& cfg);

// Direct-predicate class counts over all 2^N subsets; shares no code with
// the classifier on purpose.
ClassCounts count_classes(const GroupSpec& g, uint64_t cap = GroupSpec::kDefaultExhaustiveCap);

// All cyclic-factor presentations (non-increasing factor lists, each factor
// >= 2, plus the trivial group) with order <= max_order, sorted by order
// then factors.
std::vector<GroupSpec> presentations_up_to(uint64_t max_order);

struct ConstructionReport {
    uint64_t built = 0;
    std::vector<SweepFailure> failures;  // mask of the offending constructed set
};

// Builds (H+a) u (H+b) for every subgroup H and all a, b and requires each
// to test semiaffine.
ConstructionReport verify_two_coset_construction(const GroupSpec& g);

// Builds (H \ C) + g for every subgroup H, every midconvex C inside H
// (enumerated by brute force over subsets of H), and every shift; requires
// each to test semiaffine. Exponential in |H|; meant for small orders.
ConstructionReport verify_complement_construction(const GroupSpec& g);

enum class AtlasFormat { Csv, JsonLines };

// One row per group: full-range exhaustive sweep, default checks. Columns
// group,N,total,affine,semiaffine,midconvex,failures,seconds. Returns rows
// written; with include_timing false the seconds column is 0.000. When
// total_failures is non-null it receives the failure sum across rows.
uint64_t atlas_emit(const std::vector<GroupSpec>& groups, std::ostream& sink,
                    AtlasFormat format = AtlasFormat::Csv, unsigned workers = 1,
                    bool include_timing = true, uint64_t* total_failures = nullptr);

}  // namespace semiaffine
