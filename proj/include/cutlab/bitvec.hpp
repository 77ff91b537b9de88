#ifndef CUTLAB_BITVEC_HPP
#define CUTLAB_BITVEC_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace cutlab {

/// Fixed-width dynamic bitset, 0-indexed. Backbone of vertex sets and
/// adjacency rows.
class Bitvec {
public:
    Bitvec() : n_(0) {}
    explicit Bitvec(int n) : w_((n + 63) / 64, 0), n_(n) {}

    int capacity() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    Bitvec& operator&=(const Bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitvec& operator|=(const Bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitvec& subtract(const Bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend Bitvec operator&(Bitvec a, const Bitvec& b) { return a &= b; }
    friend Bitvec operator|(Bitvec a, const Bitvec& b) { return a |= b; }

    bool intersects(const Bitvec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitvec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    int count_and(const Bitvec& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool operator==(const Bitvec& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// Invokes f(i) for every set bit, in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t w = w_[k];
            while (w) {
                int b = std::countr_zero(w);
                f(int(k * 64) + b);
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> w_;
    int n_;
};

}  // namespace cutlab

#endif
