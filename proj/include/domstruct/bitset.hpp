#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace domstruct {

/// Fixed-width dynamic bitset used for vertex and edge masks.
///
/// All masks built for the same graph share a word count, so the binary
/// operations below assume equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  [[nodiscard]] std::size_t count_common(const Bitset& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  [[nodiscard]] bool intersects(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend auto operator<=>(const Bitset&, const Bitset&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace domstruct
