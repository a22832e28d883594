#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace xorloops {

/// Z/2 indicator vector over a fixed index range. Addition is symmetric
/// difference.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static EdgeSet from_indices(std::size_t size, const std::vector<int>& indices);

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) words_[i >> 6] |= bit; else words_[i >> 6] &= ~bit;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  EdgeSet& operator^=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  EdgeSet operator~() const;

  /// Parity of |this ∩ o|.
  bool dot(const EdgeSet& o) const {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
  }
  bool intersects(const EdgeSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }
  bool subset_of(const EdgeSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  /// Lowest set index, or -1.
  int lowest() const;

  std::vector<int> indices() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int b = std::countr_zero(w);
        f(static_cast<int>(k * 64 + b));
        w &= w - 1;
      }
    }
  }

  /// Hex bitmask, most significant digit first, no prefix.
  std::string hex() const;
  static EdgeSet from_hex(std::size_t size, const std::string& hex);

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const EdgeSet& a, const EdgeSet& b) {
    // Numeric order of the bitmask.
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const {
    std::size_t h = s.size();
    for (auto w : s.words()) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

}  // namespace xorloops
