#ifndef NAKASEQ_MODULE_SET_HPP
#define NAKASEQ_MODULE_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nakaseq {

/// Dynamic bitset over module indices of one algebra.
class ModuleSet {
 public:
  ModuleSet() = default;
  explicit ModuleSet(std::size_t universe)
      : words_((universe + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }

  ModuleSet& operator&=(const ModuleSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  friend ModuleSet operator&(ModuleSet lhs, const ModuleSet& rhs) {
    lhs &= rhs;
    return lhs;
  }

  friend bool operator==(const ModuleSet&, const ModuleSet&) = default;

  /// Calls f(i) for each member in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct ModuleSetHash {
  std::size_t operator()(const ModuleSet& s) const noexcept { return s.hash(); }
};

}  // namespace nakaseq

#endif  // NAKASEQ_MODULE_SET_HPP
