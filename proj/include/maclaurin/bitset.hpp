#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace maclaurin {

// Dense vertex set: one 64-bit word per 64 vertices.  All sets derived from
// the same graph share the same capacity, so binary operations assume equal
// word counts.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int capacity)
        : nbits_(capacity), words_(static_cast<size_t>((capacity + 63) / 64), 0) {
        if (capacity < 0) throw std::invalid_argument("Bitset: negative capacity");
    }

    static Bitset of(int capacity, std::initializer_list<int> vertices) {
        Bitset b(capacity);
        for (int v : vertices) b.set(v);
        return b;
    }

    static Bitset full(int capacity) {
        Bitset b(capacity);
        for (int i = 0; i < capacity; ++i) b.set(i);
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        check(i);
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        check(i);
        words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    // Smallest member, or -1 when empty.
    int lowest() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    // Lexicographic order of the ascending vertex lists.  The first point of
    // divergence of the two lists is the lowest bit of the symmetric
    // difference; whichever set owns it comes first.
    static bool lex_less(const Bitset& a, const Bitset& b) {
        for (size_t i = 0; i < a.words_.size(); ++i) {
            uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                fn(static_cast<int>(i * 64) + bit);
                w &= w - 1;
            }
        }
    }

    size_t hash() const {
        size_t h = 0xcbf29ce484222325ull;
        for (uint64_t w : words_) {
            h ^= static_cast<size_t>(w);
            h *= 0x100000001b3ull;
        }
        return h;
    }

private:
    void check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace maclaurin
