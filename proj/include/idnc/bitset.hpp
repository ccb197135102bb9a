// bitset.hpp -- dynamically sized bitset over 64-bit words.
//
// The whole engine works on small index sets (packets, users, graph
// vertices), so everything funnels through this one type: set algebra is
// word-parallel and iteration uses ctz. Sizes are fixed at construction;
// binary operations require equal sizes.
#pragma once

#include <cstdint>
#include <cassert>
#include <initializer_list>
#include <vector>

namespace idnc {

class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(int n_bits) : n_(n_bits), w_((n_bits + 63) / 64, 0) {}

    static DynamicBitset of(int n_bits, std::initializer_list<int> bits) {
        DynamicBitset b(n_bits);
        for (int i : bits) b.set(i);
        return b;
    }

    int size() const { return n_; }

    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { for (auto& w : w_) w = 0; }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool any() const {
        for (auto w : w_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynamicBitset& operator&=(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    DynamicBitset& operator|=(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    // this := this & ~o
    DynamicBitset& and_not(const DynamicBitset& o) {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
        return *this;
    }

    friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
    friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }

    bool intersects(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }
    int count_and(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        int c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += __builtin_popcountll(w_[k] & o.w_[k]);
        return c;
    }
    bool is_subset_of(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    // First set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k) * 64 + __builtin_ctzll(w_[k]);
        return -1;
    }
    // First set bit strictly after `prev`, or -1.
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= n_) return -1;
        std::size_t k = std::size_t(i) >> 6;
        std::uint64_t w = w_[k] & (~std::uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k) * 64 + __builtin_ctzll(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                fn(int(k) * 64 + __builtin_ctzll(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(std::size_t(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    bool operator==(const DynamicBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const DynamicBitset& o) const { return !(*this == o); }

    // Integer comparison of the underlying mask (highest word decides).
    // Used as the deterministic tie-break between equally sized sets.
    bool mask_less(const DynamicBitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t k = w_.size(); k-- > 0;)
            if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
        return false;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace idnc
