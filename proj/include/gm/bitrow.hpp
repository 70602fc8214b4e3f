#ifndef GM_BITROW_HPP
#define GM_BITROW_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace gm {

// Fixed-width bit vector used for adjacency rows and vertex-set masks.
// Bits past `size()` are kept at zero so whole-word equality is valid.
class BitRow {
public:
    BitRow() : size_(0) {}
    explicit BitRow(int size) : size_(size), words_((size + 63) / 64, 0) {
        assert(size >= 0);
    }

    int size() const { return size_; }

    bool test(int i) const {
        assert(0 <= i && i < size_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(0 <= i && i < size_);
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < size_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    void flip(int i) {
        assert(0 <= i && i < size_);
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    // Number of set bits.
    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // |this AND other| without materializing the intersection.
    int and_count(const BitRow& other) const {
        assert(size_ == other.size_);
        int c = 0;
        for (size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & other.words_[k]);
        return c;
    }

    bool intersects(const BitRow& other) const {
        assert(size_ == other.size_);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    // In-place symmetric difference; used to complement a neighbourhood
    // inside a cell mask.
    void xor_with(const BitRow& mask) {
        assert(size_ == mask.size_);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] ^= mask.words_[k];
    }

    // First set bit at position >= from, or -1.
    int next_set(int from) const {
        if (from >= size_) return -1;
        int k = from >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (k << 6) + std::countr_zero(w);
            if (++k == static_cast<int>(words_.size())) return -1;
            w = words_[k];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next_set(0); i != -1; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

    bool operator==(const BitRow& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }
    bool operator!=(const BitRow& other) const { return !(*this == other); }

private:
    int size_;
    std::vector<uint64_t> words_;
};

}  // namespace gm

#endif
