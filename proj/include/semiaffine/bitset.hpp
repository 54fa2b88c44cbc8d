#pragma once

// Fixed-universe bitset backed by 64-bit words. Universe size is set at
// construction; all binary operations require equal sizes.

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semiaffine {

class Bitset {
public:
    Bitset() = default;

    explicit Bitset(uint64_t size, bool fill = false)
        : size_(size), words_((size + 63) / 64, fill ? ~uint64_t{0} : 0) {
        trim();
    }

    uint64_t size() const { return size_; }

    bool test(uint64_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(uint64_t i, bool value = true) {
        check_index(i);
        const uint64_t mask = uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void reset(uint64_t i) { set(i, false); }

    uint64_t count() const {
        uint64_t n = 0;
        for (uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    bool none() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool operator==(const Bitset&) const = default;

    Bitset operator&(const Bitset& o) const {
        Bitset r = sized_like(o);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }

    Bitset operator|(const Bitset& o) const {
        Bitset r = sized_like(o);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }

    // this ∖ other
    Bitset and_not(const Bitset& o) const {
        Bitset r = sized_like(o);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool is_subset_of(const Bitset& o) const {
        require_same_size(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // Visits set bits in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                f(uint64_t(wi) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<uint64_t> indices() const {
        std::vector<uint64_t> out;
        out.reserve(count());
        for_each([&](uint64_t i) { out.push_back(i); });
        return out;
    }

    std::optional<uint64_t> first() const {
        for (size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi]) return uint64_t(wi) * 64 + std::countr_zero(words_[wi]);
        return std::nullopt;
    }

    // Little-endian hex: first digit holds bits 0..3. Digit count = ceil(size/4),
    // at least one digit.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        const uint64_t ndigits = size_ == 0 ? 1 : (size_ + 3) / 4;
        std::string out;
        out.reserve(ndigits);
        for (uint64_t d = 0; d < ndigits; ++d) {
            const uint64_t word = d * 4 < size_ ? words_[(d * 4) >> 6] : 0;
            out.push_back(digits[(word >> ((d * 4) & 63)) & 0xf]);
        }
        return out;
    }

    static Bitset from_hex(uint64_t size, std::string_view hex) {
        Bitset b(size);
        uint64_t bit = 0;
        for (char c : hex) {
            int v;
            if (c >= '0' && c <= '9')
                v = c - '0';
            else if (c >= 'a' && c <= 'f')
                v = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                v = c - 'A' + 10;
            else
                throw std::invalid_argument("invalid hex digit '" + std::string(1, c) + "'");
            for (int k = 0; k < 4; ++k, ++bit) {
                if (!((v >> k) & 1)) continue;
                if (bit >= size)
                    throw std::invalid_argument("hex bitset sets bit " + std::to_string(bit) +
                                                " beyond universe size " + std::to_string(size));
                b.set(bit);
            }
        }
        return b;
    }

private:
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;

    void check_index(uint64_t i) const {
        if (i >= size_)
            throw std::out_of_range("bit index " + std::to_string(i) + " out of range for size " +
                                    std::to_string(size_));
    }

    void require_same_size(const Bitset& o) const {
        if (size_ != o.size_) throw std::invalid_argument("bitset size mismatch");
    }

    Bitset sized_like(const Bitset& o) const {
        require_same_size(o);
        Bitset r;
        r.size_ = size_;
        r.words_.resize(words_.size());
        return r;
    }

    // Clears bits beyond size_ so operator== and count() stay exact.
    void trim() {
        if (size_ % 64 && !words_.empty()) words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
    }
};

}  // namespace semiaffine
