#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gridzero {

/// Minimal dynamic bitset for adjacency rows and subset intersections.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }

    /// Indices of the first `limit` set bits (all when limit == 0).
    std::vector<std::size_t> collect(std::size_t limit = 0) const {
        std::vector<std::size_t> out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(w));
                out.push_back(wi * 64 + bit);
                if (limit && out.size() == limit) return out;
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace gridzero
