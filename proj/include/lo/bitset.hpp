#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lo {

// Fixed-size packed bitset sized at construction. Word 0 holds bits 0..63.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    static Bitset with_all_set(std::size_t bits)
    {
        Bitset s(bits);
        for (auto& w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += std::size_t(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    // *this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    std::size_t intersection_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::size_t(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    // index of the first set bit, or npos
    static constexpr std::size_t npos = std::size_t(-1);
    std::size_t find_first() const { return find_next(0); }
    std::size_t find_next(std::size_t from) const
    {
        if (from >= bits_)
            return npos;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return (k << 6) + std::size_t(std::countr_zero(w));
            if (++k == words_.size())
                return npos;
            w = words_[k];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn((k << 6) + std::size_t(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bitset&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    void trim()
    {
        const std::size_t extra = words_.size() * 64 - bits_;
        if (extra > 0 && !words_.empty())
            words_.back() &= ~std::uint64_t{0} >> extra;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace lo
