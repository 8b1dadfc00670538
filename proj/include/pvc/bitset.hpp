#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace pvc {

// Fixed-capacity bitset sized at runtime. Bit i is element/vertex i.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    int capacity() const { return n_; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL; }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    std::span<std::uint64_t> words() { return words_; }
    std::span<const std::uint64_t> words() const { return words_; }

    // Visits set bits in ascending order.
    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace pvc
