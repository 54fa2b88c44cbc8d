#pragma once

// Subsets of a finite group as bitsets over element indices, with the three
// defining predicates:
//
//   affine      forall x,y,z in X:  x+y-z in X
//   semiaffine  forall x,y,z in X:  x+y-z in X  or  x-y+z in X
//   midconvex   forall x,y in X:    {z in ambient : 2z = x+y} subset of X
//
// Midconvexity is ambient-relative: the half-set {z : 2z = x+y} is computed
// inside the ambient set, so the same bits can be midconvex in a subgroup H
// and fail in the full group. Violation reporting is deterministic: the
// lexicographically first violating tuple in element-index order, with the
// missing target element(s).

#include <optional>
#include <string_view>

#include "semiaffine/bitset.hpp"
#include "semiaffine/group.hpp"

namespace semiaffine {

class SubsetBits {
public:
    explicit SubsetBits(GroupSpec group) : group_(std::move(group)), bits_(group_.order()) {}

    SubsetBits(GroupSpec group, Bitset bits);

    static SubsetBits full(const GroupSpec& group);
    static SubsetBits of_indices(const GroupSpec& group, const std::vector<uint64_t>& indices);

    const GroupSpec& group() const { return group_; }
    const Bitset& bits() const { return bits_; }
    uint64_t universe() const { return bits_.size(); }
    uint64_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(uint64_t index) const { return bits_.test(index); }
    bool contains(const Element& e) const { return bits_.test(group_.index_of(e)); }
    void insert(uint64_t index) { bits_.set(index); }
    void erase(uint64_t index) { bits_.reset(index); }

    std::vector<uint64_t> members() const { return bits_.indices(); }
    std::optional<uint64_t> min_index() const { return bits_.first(); }
    bool is_subset_of(const SubsetBits& o) const;

    bool operator==(const SubsetBits& o) const {
        return group_ == o.group_ && bits_ == o.bits_;
    }

private:
    GroupSpec group_;
    Bitset bits_;
};

struct Witness {
    enum class Kind { Affine, Semiaffine, Midconvex };
    Kind kind;
    std::vector<uint64_t> elements;  // (x,y,z) or (x,y), element indices
    std::vector<uint64_t> missing;   // absent target element(s)
};

const char* witness_kind_name(Witness::Kind k);  // "affine-violation", ...

// Membership x in result  <=>  x-g in X.
SubsetBits shift(const SubsetBits& x, const Element& g);
SubsetBits shift_index(const SubsetBits& x, uint64_t g);

// {a-b : a,b in X}. Contains 0 iff X nonempty; closed under negation.
SubsetBits difference_set(const SubsetBits& x);

// {z in G : 2z = s}.
SubsetBits half_set(const GroupSpec& g, const Element& s);
SubsetBits half_set_index(const GroupSpec& g, uint64_t s);

// nullopt means the predicate holds. The triple/pair loops run over members
// of X only, giving O(|X|^3) resp. O(|X|^2 * N) cost.
std::optional<Witness> affine_violation(const SubsetBits& x);
std::optional<Witness> semiaffine_violation(const SubsetBits& x);
std::optional<Witness> midconvex_violation(const SubsetBits& x, const SubsetBits& ambient);

// First a in X-X (index order) with 2a not in X-X, if any.
std::optional<uint64_t> doubling_violator(const SubsetBits& x);

inline bool is_affine(const SubsetBits& x) { return !affine_violation(x); }
inline bool is_semiaffine(const SubsetBits& x) { return !semiaffine_violation(x); }
inline bool is_midconvex(const SubsetBits& x, const SubsetBits& ambient) {
    return !midconvex_violation(x, ambient);
}
inline bool doubling_closed(const SubsetBits& x) { return !doubling_violator(x); }

// Re-evaluates the defining condition on the witness tuple; true iff the
// violation reproduces. `ambient` is required for midconvex witnesses.
bool witness_replays(const SubsetBits& x, const Witness& w, const SubsetBits* ambient = nullptr);

// Set literal: comma-separated element literals in braces, "{1,2,4,5}" or
// "{(0,1),(1,0)}"; "{}" is empty. Duplicates are unioned.
SubsetBits parse_subset(const GroupSpec& g, std::string_view text);
SubsetBits subset_from_hex(const GroupSpec& g, std::string_view hex);
std::string format_subset(const SubsetBits& x);  // canonical: members in index order

}  // namespace semiaffine
