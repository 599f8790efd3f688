#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace compgraph {

/// Fixed-size dynamic bitset used by the exact oracles and the order audit.
class bitset {
public:
    bitset() = default;
    explicit bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    void set_all() noexcept {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return size_;
    }

    bitset& operator&=(const bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    bitset& operator|=(const bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// this := this \ o
    bitset& subtract(const bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool is_subset_of(const bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::size_t intersection_count(const bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    friend bitset operator&(bitset a, const bitset& b) noexcept { return a &= b; }
    friend bool operator==(const bitset&, const bitset&) = default;

private:
    void trim() noexcept {
        if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace compgraph
