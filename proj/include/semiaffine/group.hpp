#pragma once

// Finite Abelian group arithmetic. A group is a product of cyclic factors
// Z_{o1} x ... x Z_{ok}; elements are residue tuples. Every element also has
// a canonical mixed-radix index in [0, N) with the last coordinate varying
// fastest; the bitset layers are built on that indexing.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace semiaffine {

struct Element {
    std::vector<uint64_t> coords;

    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;
};

class GroupSpec {
public:
    // Exhaustive-search entry points refuse groups larger than this unless
    // the caller passes an explicit cap.
    static constexpr uint64_t kDefaultExhaustiveCap = 24;

    // Trivial group (empty product).
    GroupSpec();

    // Factors of order 1 are dropped; order 0 is rejected. Throws
    // std::invalid_argument on a zero order, std::overflow_error if the
    // total order does not fit in 64 bits.
    explicit GroupSpec(std::vector<uint64_t> orders);

    // Grammar: `Z<n>` joined by `x`, case-insensitive ("Z4xZ2"). "Z1" is the
    // trivial group. Throws std::invalid_argument naming the offending token.
    static GroupSpec parse(std::string_view text);

    const std::vector<uint64_t>& orders() const { return orders_; }
    size_t rank() const { return orders_.size(); }
    uint64_t order() const { return order_; }  // N
    std::string name() const;                  // "Z4xZ2"; "Z1" for the trivial group

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

    Element zero() const;
    bool valid(const Element& a) const;

    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element scalar_mul(int64_t m, const Element& a) const;

    // min{n >= 1 : n*a = 0} = lcm_i orders[i]/gcd(orders[i], coords[i]).
    uint64_t element_order(const Element& a) const;

    // Mixed-radix bijection [0,N) <-> elements, last coordinate fastest.
    uint64_t index_of(const Element& a) const;
    Element element_at(uint64_t index) const;

    // All N elements in index order. Throws std::length_error above the cap.
    std::vector<Element> enumerate_elements(uint64_t cap = kDefaultExhaustiveCap) const;

    // Index-level arithmetic; table-backed for small groups, otherwise
    // decode/encode. These are the hot path for the subset predicates.
    uint64_t add_index(uint64_t a, uint64_t b) const;
    uint64_t sub_index(uint64_t a, uint64_t b) const;
    uint64_t neg_index(uint64_t a) const;
    uint64_t double_index(uint64_t a) const;
    uint64_t order_of_index(uint64_t a) const;

private:
    std::vector<uint64_t> orders_;
    uint64_t order_ = 1;

    struct IndexTables {
        std::vector<uint32_t> add;  // N*N, row-major
        std::vector<uint32_t> neg;
        std::vector<uint32_t> dbl;
        std::vector<uint32_t> ord;
    };
    std::shared_ptr<const IndexTables> tables_;  // shared across copies

    void check(const Element& a) const;
    void check_index(uint64_t i) const;
    void build_tables();
};

// Element literal: parenthesized comma list "(3,1)", or a bare integer for
// rank-1 groups; "()" for the trivial group. Integers may be negative or
// exceed the factor order and are reduced modulo it.
Element parse_element(const GroupSpec& g, std::string_view text);
std::string format_element(const GroupSpec& g, const Element& a);

}  // namespace semiaffine
