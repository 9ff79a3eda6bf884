#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace domtree {

// Fixed-universe bitset over indices [0, size). Word-packed, value semantics.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() { for (auto& w : words_) w = 0; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator-=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { a |= b; return a; }
    friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
    friend Bitset operator-(Bitset a, const Bitset& b) { a -= b; return a; }
    friend Bitset operator^(Bitset a, const Bitset& b) { a ^= b; return a; }

    bool operator==(const Bitset& o) const { return size_ == o.size_ && words_ == o.words_; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::size_t and_count(const Bitset& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    // First set index at or after `from`, or size() if none.
    std::size_t next(std::size_t from = 0) const {
        if (from >= size_) return size_;
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    // Lexicographic order on the sorted index sequences (not on raw words).
    bool lex_less(const Bitset& o) const {
        std::size_t a = next(0), b = o.next(0);
        while (a < size_ && b < size_) {
            if (a != b) return a < b;
            a = next(a + 1);
            b = o.next(b + 1);
        }
        return a == size_ && b < size_;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (~std::uint64_t{0} >> (64 - (size_ & 63)));
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace domtree
