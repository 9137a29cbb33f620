#include "ccsubmod/bitvector.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsubmod {

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void BitVector::set_all() noexcept {
    std::fill(words_.begin(), words_.end(), ~word_type{0});
    if (const auto tail = size_ % word_bits; tail != 0 && !words_.empty())
        words_.back() = (word_type{1} << tail) - 1;
}

std::size_t BitVector::count() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVector::is_subset_of(const BitVector& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
}

BitVector& BitVector::operator|=(const BitVector& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

std::vector<std::size_t> BitVector::indices() const {
    std::vector<std::size_t> out;
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
}

std::string BitVector::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const std::size_t nibbles = (size_ + 3) / 4;
    std::string out(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; ++k) {
        unsigned value = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            const std::size_t i = k * 4 + b;
            if (i < size_ && test(i)) value |= 1U << b;
        }
        out[nibbles - 1 - k] = digits[value];
    }
    return out;
}

BitVector BitVector::from_hex(std::string_view hex, std::size_t size) {
    if (hex.size() != (size + 3) / 4) throw std::invalid_argument("hex length does not match bit vector size");
    BitVector out(size);
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char c = hex[hex.size() - 1 - k];
        unsigned value = 0;
        if (c >= '0' && c <= '9') value = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f') value = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') value = static_cast<unsigned>(c - 'A' + 10);
        else throw std::invalid_argument("invalid hex digit");
        for (std::size_t b = 0; b < 4; ++b) {
            if (((value >> b) & 1U) == 0) continue;
            const std::size_t i = k * 4 + b;
            if (i >= size) throw std::invalid_argument("hex sets a bit beyond the vector size");
            out.set(i);
        }
    }
    return out;
}

}  // namespace ccsubmod
