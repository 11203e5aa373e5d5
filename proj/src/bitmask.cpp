#include "isoper/bitmask.hpp"

#include <algorithm>

namespace isoper {

std::size_t BitMask::count() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitMask::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t BitMask::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return nbits_;
}

std::size_t BitMask::next(std::size_t i) const noexcept {
  ++i;
  if (i >= nbits_) return nbits_;
  std::size_t w = i / kWordBits;
  Word word = words_[w] & (~Word{0} << (i % kWordBits));
  while (true) {
    if (word != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return nbits_;
    word = words_[w];
  }
}

void BitMask::fill() noexcept {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  trim();
}

void BitMask::clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

void BitMask::flip() noexcept {
  for (Word& w : words_) w = ~w;
  trim();
}

BitMask& BitMask::operator|=(const BitMask& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

BitMask& BitMask::operator&=(const BitMask& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

BitMask& BitMask::operator^=(const BitMask& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

BitMask& BitMask::subtract(const BitMask& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool BitMask::is_subset_of(const BitMask& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~o.words_[i]) != 0) return false;
  }
  return true;
}

bool BitMask::intersects(const BitMask& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & o.words_[i]) != 0) return true;
  }
  return false;
}

BitMask::Word BitMask::read_bits(std::size_t off, std::size_t count) const noexcept {
  // count in [1, 64]
  const std::size_t w = off / kWordBits;
  const std::size_t b = off % kWordBits;
  Word v = words_[w] >> b;
  if (b != 0 && b + count > kWordBits) v |= words_[w + 1] << (kWordBits - b);
  if (count < kWordBits) v &= (Word{1} << count) - 1;
  return v;
}

void BitMask::or_bits(std::size_t off, Word bits, std::size_t count) noexcept {
  const std::size_t w = off / kWordBits;
  const std::size_t b = off % kWordBits;
  words_[w] |= bits << b;
  if (b != 0 && b + count > kWordBits) words_[w + 1] |= bits >> (kWordBits - b);
}

void BitMask::or_range(const BitMask& src, std::size_t src_off, std::size_t dst_off,
                       std::size_t count) noexcept {
  while (count > 0) {
    const std::size_t chunk = std::min(count, kWordBits);
    or_bits(dst_off, src.read_bits(src_off, chunk), chunk);
    src_off += chunk;
    dst_off += chunk;
    count -= chunk;
  }
}

bool numeric_less(const BitMask& a, const BitMask& b) noexcept {
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::size_t BitMask::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ nbits_;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ull;
    h ^= h >> 29;
  }
  return h;
}

void BitMask::trim() noexcept {
  const std::size_t tail = nbits_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

}  // namespace isoper
