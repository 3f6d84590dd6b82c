#pragma once

// Permutations of root indices and bitsets of roots. Everything the group
// kernels touch in their inner loops lives here.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coxinv/error.hpp"

namespace coxinv {

using RootIndex = std::uint16_t;
using Permutation = std::vector<RootIndex>;

inline Permutation identity_root_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<RootIndex>(i);
  return p;
}

/// (u v)(k) = u(v(k)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw PreconditionError("composing permutations of different root systems");
  Permutation out(u.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = u[v[k]];
  return out;
}

inline Permutation inverse(const Permutation& u) {
  Permutation out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) out[u[k]] = static_cast<RootIndex>(k);
  return out;
}

/// x u x^{-1}
inline Permutation conjugate(const Permutation& x, const Permutation& u) {
  return compose(compose(x, u), inverse(x));
}

/// Fixed-capacity dynamic bitset over root indices; hashable and totally ordered.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int b = std::countr_zero(w);
        f(wi * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

  std::vector<RootIndex> indices() const {
    std::vector<RootIndex> v;
    for_each([&](std::size_t i) { v.push_back(static_cast<RootIndex>(i)); });
    return v;
  }

  /// Image under a root permutation.
  RootSet image(const Permutation& p) const {
    RootSet out(universe_);
    for_each([&](std::size_t i) { out.insert(p[i]); });
    return out;
  }

  RootSet operator&(const RootSet& o) const {
    RootSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= o.words_[i];
    return out;
  }
  RootSet operator|(const RootSet& o) const {
    RootSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= o.words_[i];
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::size_t byte_size() const { return words_.size() * sizeof(std::uint64_t); }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend auto operator<=>(const RootSet& a, const RootSet& b) { return a.words_ <=> b.words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct RootSetHash {
  std::size_t operator()(const RootSet& s) const { return s.hash(); }
};

}  // namespace coxinv
