#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tetracode {

/// Fixed-length bit vector over F2, packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool v = true) {
        if (v) words_[i >> 6] |= uint64_t(1) << (i & 63);
        else   words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void clear() { for (auto& w : words_) w = 0; }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    std::size_t weight() const {
        std::size_t w = 0;
        for (uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    /// |this AND o|, the overlap size.
    std::size_t overlap(const BitVec& o) const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            w += std::popcount(words_[i] & o.words_[i]);
        return w;
    }

    /// Parity of |this AND o|. The hot kernel for syndrome extraction.
    bool overlap_parity(const BitVec& o) const {
        uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1;
    }

    bool any() const {
        for (uint64_t x : words_) if (x) return true;
        return false;
    }

    bool operator==(const BitVec& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    /// Index of the highest set bit, or -1 when empty.
    int top_bit() const {
        for (std::size_t i = words_.size(); i-- > 0;)
            if (words_[i]) return int(i * 64 + 63 - std::countl_zero(words_[i]));
        return -1;
    }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

/// Incrementally row-reduced F2 basis: rank queries and span membership.
class F2Basis {
public:
    /// Reduce v against the basis; returns the remainder.
    BitVec reduce(BitVec v) const {
        int lead = v.top_bit();
        while (lead >= 0) {
            auto it = by_lead_.find(lead);
            if (it == by_lead_.end()) break;
            v ^= rows_[it->second];
            lead = v.top_bit();
        }
        return v;
    }

    /// Insert v if independent of the current span. Returns true if rank grew.
    bool add(const BitVec& v) {
        BitVec r = full_reduce(v);
        int lead = r.top_bit();
        if (lead < 0) return false;
        by_lead_.emplace(lead, rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

    bool contains(const BitVec& v) const { return full_reduce(v).top_bit() < 0; }

    std::size_t rank() const { return rows_.size(); }

private:
    // Reduce until no basis row matches the leading bit.
    BitVec full_reduce(BitVec v) const {
        for (;;) {
            int lead = v.top_bit();
            if (lead < 0) return v;
            auto it = by_lead_.find(lead);
            if (it == by_lead_.end()) return v;
            v ^= rows_[it->second];
        }
    }

    std::vector<BitVec> rows_;
    std::unordered_map<int, std::size_t> by_lead_;
};

inline std::size_t f2_rank(const std::vector<BitVec>& rows) {
    F2Basis b;
    for (const auto& r : rows) b.add(r);
    return b.rank();
}

} // namespace tetracode
