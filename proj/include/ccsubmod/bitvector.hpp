#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccsubmod {

/// Fixed-length bit vector encoding a subset of the ground set.
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + word_bits - 1) / word_bits, 0) {}

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool test(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1U;
    }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
    void assign(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

    void clear() noexcept;
    void set_all() noexcept;

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool none() const noexcept { return count() == 0; }

    /// True if every bit of *this is also set in `other`.
    [[nodiscard]] bool is_subset_of(const BitVector& other) const noexcept;

    BitVector& operator|=(const BitVector& other) noexcept;
    BitVector& operator&=(const BitVector& other) noexcept;

    /// Calls f(i) for every set bit in increasing order.
    template <class Func>
    void for_each_set(Func&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type word = words_[w];
            while (word != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(word));
                f(w * word_bits + bit);
                word &= word - 1;
            }
        }
    }

    [[nodiscard]] std::vector<std::size_t> indices() const;

    /// Lowercase hex, most significant nibble first; bit 0 is the lowest bit
    /// of the last character. Length is ceil(size/4), zero-padded.
    [[nodiscard]] std::string to_hex() const;
    static BitVector from_hex(std::string_view hex, std::size_t size);

    [[nodiscard]] const std::vector<word_type>& words() const noexcept { return words_; }
    /// Overwrites word w; bits beyond size() are cleared.
    void set_word(std::size_t w, word_type value) noexcept {
        if (w + 1 == words_.size() && size_ % word_bits != 0) value &= (word_type{1} << (size_ % word_bits)) - 1;
        words_[w] = value;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

}  // namespace ccsubmod
