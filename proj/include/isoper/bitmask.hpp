#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace isoper {

// Fixed-width bit vector stored in 64-bit words. Bits past size() are
// always zero so word-level comparisons and popcounts are exact.
class BitMask {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMask() = default;
  explicit BitMask(std::size_t nbits)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const noexcept { return nbits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  std::vector<Word>& words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept { return count() == nbits_; }
  // Index of the lowest set bit, or size() when empty.
  std::size_t first() const noexcept;
  // Index of the lowest set bit strictly above `i`, or size().
  std::size_t next(std::size_t i) const noexcept;

  void fill() noexcept;
  void clear() noexcept;
  void flip() noexcept;

  BitMask& operator|=(const BitMask& o) noexcept;
  BitMask& operator&=(const BitMask& o) noexcept;
  BitMask& operator^=(const BitMask& o) noexcept;
  // this &= ~o
  BitMask& subtract(const BitMask& o) noexcept;

  bool is_subset_of(const BitMask& o) const noexcept;
  bool intersects(const BitMask& o) const noexcept;

  // OR `count` bits of `src` starting at `src_off` into this mask starting at
  // `dst_off`. Word-level; the ranges must lie inside the respective masks.
  void or_range(const BitMask& src, std::size_t src_off, std::size_t dst_off,
                std::size_t count) noexcept;

  // Numeric comparison of the masks read as unsigned integers with bit i
  // weighted 2^i.
  friend bool numeric_less(const BitMask& a, const BitMask& b) noexcept;

  friend bool operator==(const BitMask& a, const BitMask& b) noexcept {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        f(w * kWordBits + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

 private:
  Word read_bits(std::size_t off, std::size_t count) const noexcept;
  void or_bits(std::size_t off, Word bits, std::size_t count) noexcept;
  void trim() noexcept;

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

}  // namespace isoper

template <>
struct std::hash<isoper::BitMask> {
  std::size_t operator()(const isoper::BitMask& m) const noexcept { return m.hash(); }
};
