#pragma once

// Dynkin/Coxeter diagram combinatorics: diagram types, node subsets, Gram
// matrices in the library's normalization, diagram automorphisms, and
// recognition of a connected diagram as one of the finite types.
//
// Node numbering follows Bourbaki throughout. For D_n the fork tips are
// n-1 and n; for E_n the branch node is 4 and node 2 hangs off it; F4 has
// long roots 1,2; G2 has alpha_1 short; H_n carries the 5-bond on 1-2.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxinv/algebra.hpp"
#include "coxinv/error.hpp"

namespace coxinv {

enum class Series { A, B, C, D, E, F, G, H };

inline char series_letter(Series s) { return "ABCDEFGH"[static_cast<int>(s)]; }

/// A finite irreducible diagram type. G is the dihedral family G2(m) = I2(m).
struct DiagramType {
  Series series = Series::A;
  int rank = 1;
  int gonality = 0;  // only for G

  static DiagramType A(int n) { return {Series::A, n, 0}; }
  static DiagramType B(int n) { return {Series::B, n, 0}; }
  static DiagramType C(int n) { return {Series::C, n, 0}; }
  static DiagramType D(int n) { return {Series::D, n, 0}; }
  static DiagramType E(int n) { return {Series::E, n, 0}; }
  static DiagramType F4() { return {Series::F, 4, 0}; }
  static DiagramType G2(int m = 6) { return {Series::G, 2, m}; }
  static DiagramType H(int n) { return {Series::H, n, 0}; }

  bool valid() const {
    switch (series) {
      case Series::A: return rank >= 1;
      case Series::B:
      case Series::C: return rank >= 2;
      case Series::D: return rank >= 3;
      case Series::E: return rank >= 6 && rank <= 8;
      case Series::F: return rank == 4;
      case Series::G: return rank == 2 && gonality >= 2;
      case Series::H: return rank == 3 || rank == 4;
    }
    return false;
  }

  bool is_dihedral() const { return series == Series::G; }
  bool is_bc() const { return series == Series::B || series == Series::C; }

  /// Canonical representative of the isomorphism class of the root system.
  DiagramType canonical() const {
    if (series == Series::B && rank == 2) return C(2);
    if (series == Series::D && rank == 3) return A(3);
    if (series == Series::G && gonality == 3) return A(2);
    if (series == Series::G && gonality == 4) return C(2);
    return *this;
  }

  /// Same Coxeter graph (B and C identified).
  bool same_coxeter_type(const DiagramType& o) const {
    auto a = canonical(), b = o.canonical();
    if (a.is_bc() && b.is_bc()) return a.rank == b.rank;
    return a == b;
  }

  std::string name() const {
    if (series == Series::G) return gonality == 6 ? "G2" : "G2(" + std::to_string(gonality) + ")";
    return std::string(1, series_letter(series)) + std::to_string(rank);
  }

  /// Name with B and C merged into "BC".
  std::string coxeter_name() const {
    if (is_bc()) return "BC" + std::to_string(rank);
    return name();
  }

  friend bool operator==(const DiagramType&, const DiagramType&) = default;
  friend auto operator<=>(const DiagramType&, const DiagramType&) = default;
};

enum class Realization { B, C };

/// Parses "A3", "BC5", "B5", "C5", "D6", "E7", "F4", "H3", "G2", "G2:8", "G2(8)", "I2:8".
inline DiagramType parse_type(std::string_view text, Realization bc = Realization::C) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  auto fail = [&]() -> DiagramType { throw PreconditionError("cannot parse diagram type '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 6) fail();
    int v = 0;
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  if (s.empty()) return fail();
  DiagramType t;
  if (s.rfind("G2", 0) == 0 || s.rfind("I2", 0) == 0) {
    std::string_view rest = std::string_view(s).substr(2);
    int m = 6;
    if (s[0] == 'I' && rest.empty()) fail();
    if (!rest.empty()) {
      if (rest.front() == ':') {
        m = parse_int(rest.substr(1));
      } else if (rest.front() == '(' && rest.back() == ')') {
        m = parse_int(rest.substr(1, rest.size() - 2));
      } else {
        fail();
      }
    }
    t = DiagramType::G2(m);
  } else if (s.rfind("BC", 0) == 0) {
    int n = parse_int(std::string_view(s).substr(2));
    t = bc == Realization::C ? DiagramType::C(n) : DiagramType::B(n);
  } else {
    const std::string letters = "ABCDEFH";
    if (letters.find(s[0]) == std::string::npos) fail();
    int n = parse_int(std::string_view(s).substr(1));
    Series ser = s[0] == 'H' ? Series::H : static_cast<Series>(s[0] - 'A');
    t = DiagramType{ser, n, 0};
  }
  if (!t.valid()) throw PreconditionError("invalid rank for diagram type '" + std::string(text) + "'");
  return t;
}

/// Order of W for a finite irreducible type.
inline std::uint64_t weyl_group_order(const DiagramType& t) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (t.series) {
    case Series::A: return fact(t.rank + 1);
    case Series::B:
    case Series::C: return (std::uint64_t{1} << t.rank) * fact(t.rank);
    case Series::D: return (std::uint64_t{1} << (t.rank - 1)) * fact(t.rank);
    case Series::E: return t.rank == 6 ? 51840 : (t.rank == 7 ? 2903040 : 696729600);
    case Series::F: return 1152;
    case Series::G: return 2 * static_cast<std::uint64_t>(t.gonality);
    case Series::H: return t.rank == 3 ? 120 : 14400;
  }
  return 0;
}

/// Subset of the simple nodes, stored as a bit mask of 0-based indices.
/// Printed and constructed with 1-based Bourbaki labels.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::uint32_t mask) : mask_(mask) {}

  /// From 1-based labels.
  static NodeSet of(std::initializer_list<int> labels) { return of(std::vector<int>(labels)); }
  static NodeSet of(const std::vector<int>& labels) {
    std::uint32_t m = 0;
    for (int l : labels) {
      if (l < 1 || l > 32) throw PreconditionError("node label out of range");
      m |= 1u << (l - 1);
    }
    return NodeSet(m);
  }
  static NodeSet all(int n) { return NodeSet(n >= 32 ? ~0u : ((1u << n) - 1)); }
  /// Nodes lo..hi inclusive, 1-based; empty when lo > hi.
  static NodeSet range(int lo, int hi) {
    NodeSet s;
    for (int l = lo; l <= hi; ++l) s.insert0(l - 1);
    return s;
  }

  std::uint32_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  bool contains0(int i) const { return (mask_ >> i) & 1u; }
  void insert0(int i) { mask_ |= 1u << i; }
  bool within(int n) const { return (mask_ & ~NodeSet::all(n).mask_) == 0; }

  std::vector<int> indices0() const {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
      if (contains0(i)) v.push_back(i);
    return v;
  }
  std::vector<int> labels() const {
    auto v = indices0();
    for (auto& x : v) ++x;
    return v;
  }

  NodeSet operator|(NodeSet o) const { return NodeSet(mask_ | o.mask_); }
  NodeSet operator&(NodeSet o) const { return NodeSet(mask_ & o.mask_); }
  NodeSet minus(NodeSet o) const { return NodeSet(mask_ & ~o.mask_); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int l : labels()) {
      if (!first) s += ",";
      s += std::to_string(l);
      first = false;
    }
    return s + "}";
  }

  /// Parses "{1,3,4}" or "{}".
  static NodeSet parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw PreconditionError("bad node set '" + std::string(text) + "'");
    std::vector<int> labels;
    std::string cur;
    for (std::size_t i = 1; i + 1 <= s.size() - 1; ++i) {
      char c = s[i];
      if (c == ',') {
        if (cur.empty()) throw PreconditionError("bad node set '" + std::string(text) + "'");
        labels.push_back(std::stoi(cur));
        cur.clear();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        cur.push_back(c);
      } else {
        throw PreconditionError("bad node set '" + std::string(text) + "'");
      }
    }
    if (!cur.empty()) labels.push_back(std::stoi(cur));
    return of(labels);
  }

  friend bool operator==(NodeSet a, NodeSet b) { return a.mask_ == b.mask_; }

  /// Canonical order: by size, then lexicographically on sorted labels.
  friend bool operator<(NodeSet a, NodeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.labels() < b.labels();
  }

 private:
  std::uint32_t mask_ = 0;
};

/// Permutation of 0-based node indices.
using NodePermutation = std::vector<int>;

inline NodePermutation identity_permutation(int n) {
  NodePermutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_identity(const NodePermutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline NodeSet permute_nodes(const NodePermutation& p, NodeSet s) {
  NodeSet out;
  for (int i : s.indices0()) out.insert0(p[static_cast<std::size_t>(i)]);
  return out;
}

/// Orbits of a node permutation restricted to `within`, each orbit sorted; orbits ordered by minimum.
inline std::vector<NodeSet> orbits(const NodePermutation& p, NodeSet within) {
  std::vector<NodeSet> out;
  NodeSet seen;
  for (int i : within.indices0()) {
    if (seen.contains0(i)) continue;
    NodeSet orbit;
    int j = i;
    do {
      orbit.insert0(j);
      j = p[static_cast<std::size_t>(j)];
    } while (j != i);
    if ((orbit & within) != orbit) throw PreconditionError("permutation does not preserve the node subset");
    seen = seen | orbit;
    out.push_back(orbit);
  }
  return out;
}

/// Coxeter matrix entries m_ij (m_ii = 1).
using CoxeterMatrix = std::vector<std::vector<int>>;

inline CoxeterMatrix coxeter_matrix(const DiagramType& t) {
  const int n = t.rank;
  CoxeterMatrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto bond = [&](int a, int b, int v) {  // 1-based
    m[a - 1][b - 1] = v;
    m[b - 1][a - 1] = v;
  };
  switch (t.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1, 3);
      break;
    case Series::B:
    case Series::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, 3);
      bond(n - 1, n, 4);
      break;
    case Series::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, 3);
      bond(n - 2, n, 3);
      break;
    case Series::E:
      bond(1, 3, 3);
      bond(2, 4, 3);
      for (int i = 3; i < n; ++i) bond(i, i + 1, 3);
      break;
    case Series::F:
      bond(1, 2, 3);
      bond(2, 3, 4);
      bond(3, 4, 3);
      break;
    case Series::G:
      bond(1, 2, t.gonality);
      break;
    case Series::H:
      bond(1, 2, 5);
      for (int i = 2; i < n; ++i) bond(i, i + 1, 3);
      break;
  }
  return m;
}

/// True when W(t) has a realization over Q(phi) in this library (everything but G2(m), m >= 7).
inline bool has_exact_realization(const DiagramType& t) {
  return !t.is_dihedral() || (t.gonality >= 2 && t.gonality <= 6);
}

/// Gram matrix <alpha_i, alpha_j> of the simple roots.
///
/// Crystallographic long roots have squared length 2 (B_n short 1, C_n short 1,
/// F4 short 1, G2 short 2/3). H_n, G2(2), G2(3), G2(5) are unit-normalized;
/// G2(4) uses the C2 normalization since sqrt 2 is not in Q(phi).
inline Matrix<Golden> gram_matrix(const DiagramType& t) {
  if (!t.valid()) throw PreconditionError("invalid diagram type");
  if (!has_exact_realization(t))
    throw PreconditionError(t.name() + " has no exact vector realization; use the dihedral model");
  const int n = t.rank;
  Matrix<Golden> g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const auto m = coxeter_matrix(t);
  const Golden half = Golden(make_rational(-1, 2));
  auto set = [&](int a, int b, const Golden& v) {
    g(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) = v;
    g(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) = v;
  };
  auto simply_laced = [&](const Golden& diag, const Golden& off) {
    for (int i = 0; i < n; ++i) g(i, i) = diag;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && m[i][j] == 3) g(i, j) = off;
  };
  switch (t.series) {
    case Series::A:
    case Series::D:
    case Series::E:
      simply_laced(Golden(2), Golden(-1));
      break;
    case Series::B:
      simply_laced(Golden(2), Golden(-1));
      g(n - 1, n - 1) = Golden(1);
      set(n - 1, n, Golden(-1));
      break;
    case Series::C:
      simply_laced(Golden(1), half);
      g(n - 1, n - 1) = Golden(2);
      set(n - 1, n, Golden(-1));
      break;
    case Series::F:
      g(0, 0) = Golden(2);
      g(1, 1) = Golden(2);
      g(2, 2) = Golden(1);
      g(3, 3) = Golden(1);
      set(1, 2, Golden(-1));
      set(2, 3, Golden(-1));
      set(3, 4, half);
      break;
    case Series::G:
      switch (t.gonality) {
        case 2: simply_laced(Golden(1), Golden(0)); break;
        case 3: simply_laced(Golden(1), half); break;
        case 4:
          g(0, 0) = Golden(1);
          g(1, 1) = Golden(2);
          set(1, 2, Golden(-1));
          break;
        case 5:
          g(0, 0) = Golden(1);
          g(1, 1) = Golden(1);
          set(1, 2, Golden(Rational(0), make_rational(-1, 2)));
          break;
        case 6:
          g(0, 0) = Golden(make_rational(2, 3));
          g(1, 1) = Golden(2);
          set(1, 2, Golden(-1));
          break;
        default: break;
      }
      break;
    case Series::H:
      simply_laced(Golden(1), half);
      set(1, 2, Golden(Rational(0), make_rational(-1, 2)));
      break;
  }
  return g;
}

/// Bond order m from cos^2 = <a,b>^2 / (<a,a><b,b>) for simple-root pairs; 0 if not a finite bond.
inline int bond_order_from_cos2(const Golden& c2) {
  if (c2.is_zero()) return 2;
  if (c2 == Golden(make_rational(1, 4))) return 3;
  if (c2 == Golden(make_rational(1, 2))) return 4;
  if (c2 == Golden(make_rational(3, 4))) return 6;
  // cos^2(pi/5) = phi^2/4 = (1 + phi)/4
  if (c2 == Golden(make_rational(1, 4), make_rational(1, 4))) return 5;
  return 0;
}

/// Coxeter matrix read off a Gram matrix; throws if some pair is not a finite bond.
inline CoxeterMatrix coxeter_matrix_from_gram(const Matrix<Golden>& g) {
  const std::size_t n = g.rows();
  CoxeterMatrix m(n, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (sign(g(i, j)) > 0) throw PreconditionError("simple roots with positive inner product");
      Golden c2 = g(i, j) * g(i, j) / (g(i, i) * g(j, j));
      int b = bond_order_from_cos2(c2);
      if (b == 0) throw PreconditionError("Gram matrix entry is not a finite Coxeter bond");
      m[i][j] = b;
    }
  return m;
}

/// Diagram automorphisms: node permutations p with G[p i][p j] == G[i][j], found by backtracking.
inline std::vector<NodePermutation> diagram_automorphisms(const Matrix<Golden>& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<NodePermutation> out;
  NodePermutation p(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<void(int)> extend = [&](int i) {
    if (i == n) {
      out.push_back(p);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || !(g(c, c) == g(i, i))) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g(c, p[j]) == g(i, j);
      if (!ok) continue;
      p[i] = c;
      used[c] = true;
      extend(i + 1);
      used[c] = false;
      p[i] = -1;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<NodePermutation> diagram_automorphisms(const DiagramType& t) {
  return diagram_automorphisms(gram_matrix(t));
}

/// Result of recognizing a connected diagram.
struct Recognition {
  DiagramType type;
  /// order[k] = local index of the node carrying Bourbaki label k+1.
  std::vector<int> order;
};

/// Recognizes a connected Coxeter diagram with node lengths (squared norms).
///
/// Throws when the diagram is disconnected or not of finite type. B2 is reported
/// as C2; the two realizations of rank >= 3 are told apart by which end of the
/// double bond is short.
inline Recognition recognize_diagram(const CoxeterMatrix& m, const std::vector<Golden>& norms) {
  const int k = static_cast<int>(m.size());
  if (k == 0) throw PreconditionError("empty diagram");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  int heavy = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && m[i][j] >= 3) {
        adj[i].push_back(j);
        if (i < j && m[i][j] > 3) ++heavy;
      }
  {
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != k) throw PreconditionError("diagram is not connected");
  }
  auto not_finite = []() -> Recognition { throw PreconditionError("diagram is not of finite type"); };

  if (k == 1) return {DiagramType::A(1), {0}};
  if (k == 2) {
    const int b = m[0][1];
    if (b == 2) throw PreconditionError("diagram is not connected");
    if (b == 3) return {DiagramType::A(2), {0, 1}};
    // short node first (C2 and G2 conventions)
    int s = norms[0] <= norms[1] ? 0 : 1;
    if (b == 4) return {DiagramType::C(2), {s, 1 - s}};
    if (b == 6) return {DiagramType::G2(6), {s, 1 - s}};
    return {DiagramType::G2(b), {0, 1}};
  }

  int branch = -1;
  std::vector<int> ends;
  for (int i = 0; i < k; ++i) {
    const auto d = adj[i].size();
    if (d > 3) return not_finite();
    if (d == 3) {
      if (branch >= 0) return not_finite();
      branch = i;
    }
    if (d == 1) ends.push_back(i);
  }
  int edges = 0;
  for (int i = 0; i < k; ++i) edges += static_cast<int>(adj[i].size());
  if (edges / 2 != k - 1) return not_finite();  // tree required

  auto walk = [&](int start, int avoid) {
    std::vector<int> path{start};
    int prev = avoid, cur = start;
    for (;;) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0 || next == branch) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  };

  if (branch < 0) {
    // a path
    std::vector<int> path = walk(ends[0], -1);
    if (ends[1] < ends[0]) path = walk(ends[1], -1);
    auto bond_at = [&](int pos) { return m[path[pos]][path[pos + 1]]; };
    std::vector<int> heavy_pos;
    for (int p = 0; p + 1 < k; ++p)
      if (bond_at(p) > 3) heavy_pos.push_back(p);
    if (heavy_pos.empty()) return {DiagramType::A(k), path};
    if (heavy_pos.size() > 1) return not_finite();
    const int hp = heavy_pos[0];
    const int b = bond_at(hp);
    if (b == 5) {
      if (k > 4) return not_finite();
      if (hp == k - 2) std::reverse(path.begin(), path.end());
      else if (hp != 0) return not_finite();
      return {DiagramType::H(k), path};
    }
    if (b != 4) return not_finite();
    if (hp == 0 || hp == k - 2) {
      if (hp == 0) std::reverse(path.begin(), path.end());
      const bool end_short = norms[path[k - 1]] < norms[path[k - 2]];
      return {end_short ? DiagramType::B(k) : DiagramType::C(k), path};
    }
    if (k == 4 && hp == 1) {
      if (norms[path[0]] < norms[path[3]]) std::reverse(path.begin(), path.end());
      return {DiagramType::F4(), path};
    }
    return not_finite();
  }

  if (heavy > 0) return not_finite();
  std::vector<std::vector<int>> arms;
  for (int w : adj[branch]) arms.push_back(walk(w, branch));
  std::stable_sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 != 1) return not_finite();
  if (a1 == 1) {
    // D_k: long arm from its end toward the branch, then branch, then the two tips.
    std::vector<int> order(arms[2].rbegin(), arms[2].rend());
    order.push_back(branch);
    order.push_back(arms[0][0]);
    order.push_back(arms[1][0]);
    return {DiagramType::D(k), order};
  }
  if (a1 == 2 && a2 >= 2 && a2 <= 4) {
    // E: 1 = far end of the length-2 arm, 2 = short arm, 3 = near node, 4 = branch, 5.. = long arm
    std::vector<int> order{arms[1][1], arms[0][0], arms[1][0], branch};
    for (int v : arms[2]) order.push_back(v);
    return {DiagramType::E(k), order};
  }
  return not_finite();
}

}  // namespace coxinv
