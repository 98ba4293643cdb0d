#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgturan {

/// Dynamically sized bitset over [0, size). Only the operations the
/// incidence searches need; no proxy references.
class BitSet
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitSet() = default;
    explicit BitSet(std::size_t size) : size_(size), words_((size + bits_per_word - 1) / bits_per_word, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const Word* data() const noexcept { return words_.data(); }
    Word* data() noexcept { return words_.data(); }

    void set(std::size_t i) noexcept { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
    void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
    bool test(std::size_t i) const noexcept { return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

    void clear() noexcept
    {
        for (auto& w : words_)
            w = 0;
    }

    void set_all() noexcept
    {
        for (auto& w : words_)
            w = ~Word{0};
        trim();
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    std::size_t intersection_count(const BitSet& other) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool intersects(const BitSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const BitSet& other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    BitSet& operator|=(const BitSet& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    BitSet& operator&=(const BitSet& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    /// this := this \ other
    BitSet& subtract(const BitSet& other) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    BitSet complement() const
    {
        BitSet r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
    friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
    friend bool operator==(const BitSet&, const BitSet&) = default;

    /// First set bit at index >= from, or npos.
    std::size_t find_next(std::size_t from) const noexcept
    {
        if (from >= size_)
            return npos;
        std::size_t wi = from / bits_per_word;
        Word w = words_[wi] & (~Word{0} << (from % bits_per_word));
        while (true) {
            if (w)
                return wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi >= words_.size())
                return npos;
            w = words_[wi];
        }
    }
    std::size_t find_first() const noexcept { return find_next(0); }

    std::vector<int> to_indices() const
    {
        std::vector<int> out;
        out.reserve(count());
        for (auto i = find_first(); i != npos; i = find_next(i + 1))
            out.push_back(static_cast<int>(i));
        return out;
    }

    template <class Range>
    static BitSet from_indices(std::size_t size, const Range& indices)
    {
        BitSet b(size);
        for (auto i : indices)
            b.set(static_cast<std::size_t>(i));
        return b;
    }

    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w) {
                fn(static_cast<int>(wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    /// Lexicographic order on the index lists; used to sort arc lists deterministically.
    friend bool operator<(const BitSet& a, const BitSet& b) { return a.to_indices() < b.to_indices(); }

private:
    void trim() noexcept
    {
        if (size_ % bits_per_word && !words_.empty())
            words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

} // namespace pgturan
