#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace homcx {

// Dynamic bitset with capacity fixed at construction. Tail bits of the last
// word are kept zero so whole-word comparisons are valid.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits)
        , words_((nbits + 63) / 64, 0)
    {
        assert(nbits >= 0);
    }

    static Bitset full(int nbits)
    {
        Bitset b(nbits);
        for (auto& w : b.words_)
            w = ~0ull;
        b.trim();
        return b;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const
    {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= 1ull << (i & 63);
    }
    void reset(int i)
    {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(1ull << (i & 63));
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    // set difference
    Bitset& setminus(const Bitset& o)
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const Bitset& o) const
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const
    {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    // First set bit, or -1.
    int first() const { return next(-1); }
    // First set bit strictly after i, or -1.
    int next(int i) const
    {
        int b = i + 1;
        if (b >= nbits_)
            return -1;
        std::size_t w = static_cast<std::size_t>(b) >> 6;
        std::uint64_t cur = words_[w] & (~0ull << (b & 63));
        while (true) {
            if (cur)
                return static_cast<int>((w << 6) + std::countr_zero(cur));
            if (++w == words_.size())
                return -1;
            cur = words_[w];
        }
    }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (int i = first(); i >= 0; i = next(i))
            out.push_back(i);
        return out;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;

    void trim()
    {
        if (nbits_ & 63)
            words_.back() &= ~0ull >> (64 - (nbits_ & 63));
    }
};

// Lexicographic order on the ascending element lists (so {0,1} < {0,2} < {2}
// and a proper prefix sorts first). Used to give cells a stable total order.
inline bool lex_less(const Bitset& a, const Bitset& b)
{
    int x = a.first();
    int y = b.first();
    while (x >= 0 && y >= 0) {
        if (x != y)
            return x < y;
        x = a.next(x);
        y = b.next(y);
    }
    return x < 0 && y >= 0;
}

} // namespace homcx
