#include "semiaffine/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace semiaffine {

namespace {

// Groups at or below this order get precomputed index tables.
constexpr uint64_t kDenseTableLimit = 1024;

uint64_t checked_product(const std::vector<uint64_t>& orders) {
    unsigned __int128 n = 1;
    for (uint64_t o : orders) {
        n *= o;
        if (n > ~uint64_t{0}) throw std::overflow_error("group order does not fit in 64 bits");
    }
    return uint64_t(n);
}

}  // namespace

GroupSpec::GroupSpec() : orders_{}, order_(1) { build_tables(); }

GroupSpec::GroupSpec(std::vector<uint64_t> orders) {
    for (uint64_t o : orders) {
        if (o == 0) throw std::invalid_argument("cyclic factor of order 0");
        if (o >= 2) orders_.push_back(o);  // order-1 factors are degenerate radices; drop
    }
    order_ = checked_product(orders_);
    build_tables();
}

GroupSpec GroupSpec::parse(std::string_view text) {
    std::vector<uint64_t> orders;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t sep = std::min(text.find_first_of("xX", pos), text.size());
        std::string_view token = text.substr(pos, sep - pos);
        auto bad = [&] {
            throw std::invalid_argument("bad group factor '" + std::string(token) +
                                        "' (expected Z<n>)");
        };
        if (token.size() < 2 || (token[0] != 'Z' && token[0] != 'z')) bad();
        uint64_t value = 0;
        for (char c : token.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) bad();
            if (value > (~uint64_t{0} - 9) / 10) throw std::overflow_error("group factor too large");
            value = value * 10 + uint64_t(c - '0');
        }
        if (value == 0) bad();
        orders.push_back(value);
        if (sep == text.size()) break;
        pos = sep + 1;
        if (pos == text.size())
            throw std::invalid_argument("bad group spec: trailing separator");
    }
    return GroupSpec(orders);
}

std::string GroupSpec::name() const {
    if (orders_.empty()) return "Z1";
    std::string out;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) out += 'x';
        out += 'Z';
        out += std::to_string(orders_[i]);
    }
    return out;
}

Element GroupSpec::zero() const { return Element{std::vector<uint64_t>(rank(), 0)}; }

bool GroupSpec::valid(const Element& a) const {
    if (a.coords.size() != rank()) return false;
    for (size_t i = 0; i < rank(); ++i)
        if (a.coords[i] >= orders_[i]) return false;
    return true;
}

void GroupSpec::check(const Element& a) const {
    if (!valid(a)) throw std::invalid_argument("element does not belong to group " + name());
}

void GroupSpec::check_index(uint64_t i) const {
    if (i >= order_)
        throw std::out_of_range("element index " + std::to_string(i) + " out of range for " +
                                name());
}

Element GroupSpec::add(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r = a;
    for (size_t i = 0; i < rank(); ++i) {
        r.coords[i] += b.coords[i];
        if (r.coords[i] >= orders_[i]) r.coords[i] -= orders_[i];
    }
    return r;
}

Element GroupSpec::neg(const Element& a) const {
    check(a);
    Element r = a;
    for (size_t i = 0; i < rank(); ++i)
        if (r.coords[i]) r.coords[i] = orders_[i] - r.coords[i];
    return r;
}

Element GroupSpec::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element GroupSpec::scalar_mul(int64_t m, const Element& a) const {
    check(a);
    Element r = zero();
    for (size_t i = 0; i < rank(); ++i) {
        const uint64_t o = orders_[i];
        uint64_t mm = m >= 0 ? uint64_t(m) % o : o - (uint64_t(-(m + 1)) + 1) % o;
        if (mm == o) mm = 0;
        r.coords[i] = uint64_t((unsigned __int128)(a.coords[i]) * mm % o);
    }
    return r;
}

uint64_t GroupSpec::element_order(const Element& a) const {
    check(a);
    uint64_t l = 1;
    for (size_t i = 0; i < rank(); ++i) {
        const uint64_t per = orders_[i] / std::gcd(orders_[i], a.coords[i]);
        l = l / std::gcd(l, per) * per;  // fits: divides the group order
    }
    return l;
}

uint64_t GroupSpec::index_of(const Element& a) const {
    check(a);
    uint64_t idx = 0;
    for (size_t i = 0; i < rank(); ++i) idx = idx * orders_[i] + a.coords[i];
    return idx;
}

Element GroupSpec::element_at(uint64_t index) const {
    check_index(index);
    Element r = zero();
    for (size_t i = rank(); i-- > 0;) {
        r.coords[i] = index % orders_[i];
        index /= orders_[i];
    }
    return r;
}

std::vector<Element> GroupSpec::enumerate_elements(uint64_t cap) const {
    if (order_ > cap)
        throw std::length_error("group order " + std::to_string(order_) +
                                " exceeds exhaustive cap " + std::to_string(cap));
    std::vector<Element> out;
    out.reserve(order_);
    for (uint64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
    return out;
}

void GroupSpec::build_tables() {
    if (order_ > kDenseTableLimit) return;
    const uint64_t n = order_;
    auto t = std::make_shared<IndexTables>();
    t->add.resize(n * n);
    t->neg.resize(n);
    t->dbl.resize(n);
    t->ord.resize(n);
    for (uint64_t i = 0; i < n; ++i) {
        const Element a = element_at(i);
        t->neg[i] = uint32_t(index_of(neg(a)));
        t->ord[i] = uint32_t(element_order(a));
        for (uint64_t j = 0; j <= i; ++j) {
            const uint32_t s = uint32_t(index_of(add(a, element_at(j))));
            t->add[i * n + j] = s;
            t->add[j * n + i] = s;
        }
        t->dbl[i] = t->add[i * n + i];
    }
    tables_ = std::move(t);
}

uint64_t GroupSpec::add_index(uint64_t a, uint64_t b) const {
    if (tables_) {
        check_index(a);
        check_index(b);
        return tables_->add[a * order_ + b];
    }
    return index_of(add(element_at(a), element_at(b)));
}

uint64_t GroupSpec::neg_index(uint64_t a) const {
    if (tables_) {
        check_index(a);
        return tables_->neg[a];
    }
    return index_of(neg(element_at(a)));
}

uint64_t GroupSpec::sub_index(uint64_t a, uint64_t b) const { return add_index(a, neg_index(b)); }

uint64_t GroupSpec::double_index(uint64_t a) const {
    if (tables_) {
        check_index(a);
        return tables_->dbl[a];
    }
    return add_index(a, a);
}

uint64_t GroupSpec::order_of_index(uint64_t a) const {
    if (tables_) {
        check_index(a);
        return tables_->ord[a];
    }
    return element_order(element_at(a));
}

namespace {

int64_t parse_int(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("bad element coordinate ''");
    size_t i = token[0] == '-' ? 1 : 0;
    if (i == token.size()) throw std::invalid_argument("bad element coordinate '-'");
    int64_t v = 0;
    for (; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw std::invalid_argument("bad element coordinate '" + std::string(token) + "'");
        v = v * 10 + (token[i] - '0');
        if (v < 0) throw std::overflow_error("element coordinate too large");
    }
    return token[0] == '-' ? -v : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Element parse_element(const GroupSpec& g, std::string_view text) {
    text = trim(text);
    std::vector<int64_t> values;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')')
            throw std::invalid_argument("bad element literal '" + std::string(text) + "'");
        std::string_view body = text.substr(1, text.size() - 2);
        if (!trim(body).empty()) {
            size_t pos = 0;
            while (true) {
                size_t comma = std::min(body.find(',', pos), body.size());
                values.push_back(parse_int(trim(body.substr(pos, comma - pos))));
                if (comma == body.size()) break;
                pos = comma + 1;
            }
        }
    } else {
        if (g.rank() != 1)
            throw std::invalid_argument("bare element literal '" + std::string(text) +
                                        "' requires a rank-1 group, got " + g.name());
        values.push_back(parse_int(text));
    }
    if (values.size() != g.rank())
        throw std::invalid_argument("element literal '" + std::string(text) + "' has " +
                                    std::to_string(values.size()) + " coordinates, " + g.name() +
                                    " needs " + std::to_string(g.rank()));
    Element e = g.zero();
    for (size_t i = 0; i < values.size(); ++i) {
        const int64_t o = int64_t(g.orders()[i]);
        e.coords[i] = uint64_t(((values[i] % o) + o) % o);
    }
    return e;
}

std::string format_element(const GroupSpec& g, const Element& a) {
    if (!g.valid(a)) throw std::invalid_argument("element does not belong to group " + g.name());
    if (g.rank() == 1) return std::to_string(a.coords[0]);
    std::string out = "(";
    for (size_t i = 0; i < a.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a.coords[i]);
    }
    return out + ")";
}

}  // namespace semiaffine
