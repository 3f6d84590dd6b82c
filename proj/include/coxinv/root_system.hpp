#pragma once

// Finite root systems with exact coordinates in the simple-root basis.
//
// A RootSystem is immutable once built. Besides the root vectors it carries
// the permutation tables that the group kernels run on: the simple
// reflections, the reflection in every root, negation, and positivity.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/error.hpp"
#include "coxinv/perm.hpp"

namespace coxinv {

enum class LengthLabel { uniform, short_root, long_root };

/// Irreducible component type plus its relative length inside a multi-length ambient.
struct ComponentType {
  DiagramType type;
  LengthLabel length = LengthLabel::uniform;

  std::string name() const {
    std::string s = type.name();
    if (length == LengthLabel::short_root) s += "(short)";
    if (length == LengthLabel::long_root) s += "(long)";
    return s;
  }

  friend bool operator==(const ComponentType&, const ComponentType&) = default;
  friend auto operator<=>(const ComponentType&, const ComponentType&) = default;
};

/// Multiset of component types, kept sorted.
using SubsystemType = std::vector<ComponentType>;

inline std::string to_string(const SubsystemType& t) {
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += "+";
    s += t[i].name();
  }
  return s;
}

inline int total_rank(const SubsystemType& t) {
  int r = 0;
  for (const auto& c : t) r += c.type.rank;
  return r;
}

struct SubsystemComponent {
  ComponentType kind;
  /// Simple roots of the component in Bourbaki order.
  std::vector<RootIndex> simple_roots;
};

/// Component of a node subset of the ambient diagram.
struct NodeComponent {
  ComponentType kind;
  /// 0-based ambient nodes in Bourbaki order of the component.
  std::vector<int> nodes;
};

class RootSystem {
 public:
  using Coords = Vector<Golden>;

  static RootSystem build(const DiagramType& t) {
    if (!t.valid()) throw PreconditionError("invalid diagram type " + t.name());
    return RootSystem(gram_matrix(t), t);
  }

  /// Closure of the simple roots described by `gram`; the type is recognized from the roots.
  static RootSystem from_gram(const Matrix<Golden>& gram) { return RootSystem(gram, std::nullopt); }

  const DiagramType& type() const { return type_; }
  int rank() const { return static_cast<int>(gram_.rows()); }
  std::size_t size() const { return roots_.size(); }
  std::size_t positive_count() const { return roots_.size() / 2; }
  const Matrix<Golden>& gram() const { return gram_; }
  const CoxeterMatrix& coxeter() const { return coxeter_; }
  /// Bourbaki labelling of the nodes when the system was recognized rather than built by type.
  const std::vector<int>& bourbaki_order() const { return bourbaki_order_; }

  const Coords& root(RootIndex r) const { return roots_[r]; }
  RootIndex negation(RootIndex r) const { return negation_[r]; }
  bool is_positive(RootIndex r) const { return positive_[r]; }
  RootIndex simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  const Golden& norm(RootIndex r) const { return norms_[r]; }
  const Golden& height(RootIndex r) const { return heights_[r]; }
  /// 0 = shortest.
  int length_class(RootIndex r) const { return length_class_[r]; }
  int length_class_count() const { return static_cast<int>(distinct_norms_.size()); }

  const Permutation& simple_reflection(int i) const { return simple_reflections_[static_cast<std::size_t>(i)]; }
  const Permutation& reflection(RootIndex r) const { return reflections_[r]; }
  const Permutation& negation_permutation() const { return negation_; }

  std::optional<RootIndex> find(const Coords& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  RootIndex index_of(const Coords& v) const {
    auto r = find(v);
    if (!r) throw InvariantViolation("vector is not a root");
    return *r;
  }

  Golden inner(const Coords& x, const Coords& y) const { return dot(x, gram_ * y); }

  /// v - 2<v,a>/<a,a> a for the root a.
  Coords reflect(const Coords& v, RootIndex r) const {
    if (v.size() != static_cast<std::size_t>(rank())) throw PreconditionError("vector dimension mismatch");
    const Coords& a = roots_[r];
    const Golden c = Golden(2) * inner(v, a) / norms_[r];
    Coords out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!a[i].is_zero()) out[i] -= c * a[i];
    return out;
  }

  RootSet all_roots() const {
    RootSet s(size());
    for (std::size_t i = 0; i < size(); ++i) s.insert(i);
    return s;
  }

  /// Roots lying in the span of the given vectors (exact membership test).
  RootSet subsystem_in_subspace(const std::vector<Coords>& spanning) const {
    EchelonBasis<Golden> basis(static_cast<std::size_t>(rank()));
    for (const auto& v : spanning) basis.insert(v);
    RootSet out(size());
    if (basis.size() == 0) return out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!is_positive(static_cast<RootIndex>(i))) continue;
      if (basis.contains(roots_[i])) {
        out.insert(i);
        out.insert(negation_[i]);
      }
    }
    return out;
  }

  /// Orthogonal complement (w.r.t. the Gram form) of the span of the given vectors.
  std::vector<Coords> orthogonal_complement(const std::vector<Coords>& vectors) const {
    const auto n = static_cast<std::size_t>(rank());
    Matrix<Golden> m(vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      Coords gv = gram_ * vectors[r];
      for (std::size_t c = 0; c < n; ++c) m(r, c) = gv[c];
    }
    if (vectors.empty()) {
      std::vector<Coords> basis;
      for (std::size_t i = 0; i < n; ++i) {
        Coords e(n, Golden(0));
        e[i] = Golden(1);
        basis.push_back(std::move(e));
      }
      return basis;
    }
    return nullspace(std::move(m));
  }

  /// Decomposes a negation-closed subsystem into irreducible components.
  ///
  /// Positivity is inherited from the ambient system (height first, then lexicographic,
  /// which is positivity for a generic linear functional). Simple roots are the positive
  /// roots whose reflection permutes the remaining positive roots of the subsystem.
  std::vector<SubsystemComponent> classify_subsystem(const RootSet& roots) const {
    if (roots.universe() != size()) throw PreconditionError("root set from a different root system");
    std::vector<RootIndex> positives;
    bool symmetric = true;
    roots.for_each([&](std::size_t i) {
      if (!roots.contains(negation_[i])) symmetric = false;
      if (positive_[i]) positives.push_back(static_cast<RootIndex>(i));
    });
    if (!symmetric) throw PreconditionError("root set is not closed under negation");

    std::vector<RootIndex> simples;
    for (RootIndex b : positives) {
      const Permutation& sb = reflections_[b];
      bool ok = true;
      for (RootIndex g : positives) {
        if (g != b && !positive_[sb[g]]) {
          ok = false;
          break;
        }
      }
      if (ok) simples.push_back(b);
    }

    const std::size_t k = simples.size();
    CoxeterMatrix m(k, std::vector<int>(k, 1));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const int order = product_order(reflections_[simples[i]], reflections_[simples[j]]);
        m[i][j] = m[j][i] = order;
      }

    // connected components
    std::vector<int> comp(k, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < k; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < k; ++w)
          if (comp[w] < 0 && m[v][w] >= 3) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
      }
      ++ncomp;
    }

    std::vector<SubsystemComponent> out;
    for (int c = 0; c < ncomp; ++c) {
      std::vector<std::size_t> members;
      for (std::size_t i = 0; i < k; ++i)
        if (comp[i] == c) members.push_back(i);
      CoxeterMatrix sub(members.size(), std::vector<int>(members.size(), 1));
      std::vector<Golden> norms;
      for (std::size_t a = 0; a < members.size(); ++a) {
        norms.push_back(norms_[simples[members[a]]]);
        for (std::size_t b = 0; b < members.size(); ++b) sub[a][b] = m[members[a]][members[b]];
      }
      Recognition rec = recognize_diagram(sub, norms);
      SubsystemComponent sc;
      sc.kind = ComponentType{rec.type, length_label(norms)};
      for (int local : rec.order) sc.simple_roots.push_back(simples[members[static_cast<std::size_t>(local)]]);
      out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(), [](const SubsystemComponent& a, const SubsystemComponent& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.simple_roots < b.simple_roots;
    });
    return out;
  }

  SubsystemType subsystem_type(const RootSet& roots) const {
    SubsystemType t;
    for (const auto& c : classify_subsystem(roots)) t.push_back(c.kind);
    return t;
  }

  /// Components of the sub-diagram on a node subset, each in its Bourbaki order.
  std::vector<NodeComponent> node_components(NodeSet nodes) const {
    if (!nodes.within(rank())) throw PreconditionError("node set out of range");
    std::vector<NodeComponent> out;
    NodeSet seen;
    for (int s : nodes.indices0()) {
      if (seen.contains0(s)) continue;
      std::vector<int> members;
      std::vector<int> stack{s};
      seen.insert0(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (int w : nodes.indices0())
          if (!seen.contains0(w) && coxeter_[v][w] >= 3) {
            seen.insert0(w);
            stack.push_back(w);
          }
      }
      std::sort(members.begin(), members.end());
      CoxeterMatrix sub(members.size(), std::vector<int>(members.size(), 1));
      std::vector<Golden> norms;
      for (std::size_t a = 0; a < members.size(); ++a) {
        norms.push_back(gram_(members[a], members[a]));
        for (std::size_t b = 0; b < members.size(); ++b) sub[a][b] = coxeter_[members[a]][members[b]];
      }
      Recognition rec = recognize_diagram(sub, norms);
      NodeComponent nc;
      nc.kind = ComponentType{rec.type, length_label(norms)};
      for (int local : rec.order) nc.nodes.push_back(members[static_cast<std::size_t>(local)]);
      out.push_back(std::move(nc));
    }
    std::sort(out.begin(), out.end(), [](const NodeComponent& a, const NodeComponent& b) {
      if (a.kind != b.kind) return a.kind < b.kind;
      return a.nodes < b.nodes;
    });
    return out;
  }

  SubsystemType node_subset_type(NodeSet nodes) const {
    SubsystemType t;
    for (const auto& c : node_components(nodes)) t.push_back(c.kind);
    return t;
  }

  /// The permutation of all roots induced by a diagram automorphism (linear extension).
  Permutation diagram_root_permutation(const NodePermutation& sigma) const {
    if (sigma.size() != static_cast<std::size_t>(rank())) throw PreconditionError("node permutation of wrong size");
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (!(gram_(sigma[i], sigma[j]) == gram_(i, j)))
          throw PreconditionError("node permutation is not a diagram automorphism");
    Permutation p(size());
    for (std::size_t r = 0; r < size(); ++r) {
      Coords v(static_cast<std::size_t>(rank()));
      for (int i = 0; i < rank(); ++i) v[static_cast<std::size_t>(sigma[i])] = roots_[r][static_cast<std::size_t>(i)];
      p[r] = index_of(v);
    }
    return p;
  }

  /// i -> j with -w0(alpha_i) = alpha_j.
  NodePermutation neg_w0_node_permutation(const Permutation& w0) const {
    if (w0.size() != size()) throw PreconditionError("element of a different root system");
    NodePermutation p(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) {
      const RootIndex img = negation_[w0[simple(i)]];
      auto it = std::find(simple_.begin(), simple_.end(), img);
      if (it == simple_.end()) throw InvariantViolation("-w0 does not map simple roots to simple roots");
      p[static_cast<std::size_t>(i)] = static_cast<int>(it - simple_.begin());
    }
    return p;
  }

 private:
  struct CoordsLess {
    bool operator()(const Coords& a, const Coords& b) const {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                          [](const Golden& x, const Golden& y) { return structural_less(x, y); });
    }
  };

  RootSystem(Matrix<Golden> gram, std::optional<DiagramType> type) : gram_(std::move(gram)) {
    const std::size_t n = gram_.rows();
    if (n == 0 || gram_.cols() != n) throw PreconditionError("Gram matrix must be square and nonempty");
    if (!is_positive_definite(gram_)) throw PreconditionError("Gram matrix is not positive definite");
    coxeter_ = coxeter_matrix_from_gram(gram_);
    close_under_reflections();
    build_tables();
    if (type) {
      type_ = *type;
      bourbaki_order_.resize(n);
      for (std::size_t i = 0; i < n; ++i) bourbaki_order_[i] = static_cast<int>(i);
    } else {
      auto comps = classify_subsystem(all_roots());
      if (comps.size() != 1) throw PreconditionError("root system is reducible");
      type_ = comps[0].kind.type;
      for (RootIndex r : comps[0].simple_roots) {
        auto it = std::find(simple_.begin(), simple_.end(), r);
        bourbaki_order_.push_back(static_cast<int>(it - simple_.begin()));
      }
    }
  }

  void close_under_reflections() {
    const std::size_t n = gram_.rows();
    constexpr std::size_t kMaxRoots = 4096;
    std::map<Coords, int, CoordsLess> seen;
    std::vector<Coords> found;
    std::queue<std::size_t> queue;
    for (std::size_t i = 0; i < n; ++i) {
      Coords e(n, Golden(0));
      e[i] = Golden(1);
      seen.emplace(e, 0);
      found.push_back(e);
      queue.push(found.size() - 1);
    }
    while (!queue.empty()) {
      const Coords v = found[queue.front()];
      queue.pop();
      const Coords gv = gram_ * v;
      for (std::size_t i = 0; i < n; ++i) {
        if (gv[i].is_zero()) continue;
        Coords w = v;
        w[i] -= Golden(2) * gv[i] / gram_(i, i);
        if (seen.emplace(w, 0).second) {
          found.push_back(std::move(w));
          if (found.size() > kMaxRoots) throw PreconditionError("root closure does not terminate");
          queue.push(found.size() - 1);
        }
      }
    }
    // height ascending, then lexicographic (numeric) on coordinates
    std::vector<std::pair<Golden, Coords>> keyed;
    keyed.reserve(found.size());
    for (auto& v : found) {
      Golden h(0);
      for (const auto& x : v) h += x;
      keyed.emplace_back(std::move(h), std::move(v));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    for (auto& [h, v] : keyed) {
      heights_.push_back(h);
      roots_.push_back(std::move(v));
    }
  }

  void build_tables() {
    const std::size_t n = gram_.rows();
    const std::size_t count = roots_.size();
    if (count > 65535) throw PreconditionError("too many roots");
    for (std::size_t r = 0; r < count; ++r) index_.emplace(roots_[r], static_cast<RootIndex>(r));

    negation_.resize(count);
    positive_.resize(count);
    for (std::size_t r = 0; r < count; ++r) {
      Coords neg = roots_[r];
      for (auto& x : neg) x = -x;
      negation_[r] = index_of(neg);
      positive_[r] = heights_[r].sign() > 0;
    }

    simple_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Coords e(n, Golden(0));
      e[i] = Golden(1);
      simple_[i] = index_of(e);
    }

    norms_.resize(count);
    for (std::size_t r = 0; r < count; ++r) norms_[r] = inner(roots_[r], roots_[r]);
    distinct_norms_.clear();
    for (const auto& x : norms_)
      if (std::find(distinct_norms_.begin(), distinct_norms_.end(), x) == distinct_norms_.end()) distinct_norms_.push_back(x);
    std::sort(distinct_norms_.begin(), distinct_norms_.end());
    length_class_.resize(count);
    for (std::size_t r = 0; r < count; ++r)
      length_class_[r] = static_cast<int>(std::find(distinct_norms_.begin(), distinct_norms_.end(), norms_[r]) -
                                          distinct_norms_.begin());

    simple_reflections_.assign(n, Permutation(count));
    for (std::size_t r = 0; r < count; ++r) {
      const Coords gv = gram_ * roots_[r];
      for (std::size_t i = 0; i < n; ++i) {
        Coords w = roots_[r];
        if (!gv[i].is_zero()) w[i] -= Golden(2) * gv[i] / gram_(i, i);
        simple_reflections_[i][r] = index_of(w);
      }
    }

    // s_beta = s_j s_{s_j beta} s_j, descending to a simple root along decreasing height.
    reflections_.assign(count, Permutation());
    for (std::size_t i = 0; i < n; ++i) reflections_[simple_[i]] = simple_reflections_[i];
    for (std::size_t r = 0; r < count; ++r) {
      if (!positive_[r] || !reflections_[r].empty()) continue;
      bool done = false;
      for (std::size_t j = 0; j < n && !done; ++j) {
        const RootIndex lower = simple_reflections_[j][r];
        if (positive_[lower] && lower < r) {
          const auto& sj = simple_reflections_[j];
          reflections_[r] = compose(sj, compose(reflections_[lower], sj));
          done = true;
        }
      }
      if (!done) throw InvariantViolation("positive root without a lowering simple reflection");
    }
    for (std::size_t r = 0; r < count; ++r)
      if (!positive_[r]) reflections_[r] = reflections_[negation_[r]];
  }

  LengthLabel length_label(const std::vector<Golden>& component_norms) const {
    if (distinct_norms_.size() < 2) return LengthLabel::uniform;
    for (const auto& x : component_norms)
      if (!(x == component_norms.front())) return LengthLabel::uniform;
    if (component_norms.front() == distinct_norms_.front()) return LengthLabel::short_root;
    if (component_norms.front() == distinct_norms_.back()) return LengthLabel::long_root;
    return LengthLabel::uniform;
  }

  static int product_order(const Permutation& a, const Permutation& b) {
    const Permutation ab = compose(a, b);
    Permutation p = ab;
    for (int k = 1; k <= 64; ++k) {
      bool id = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) {
          id = false;
          break;
        }
      if (id) return k;
      p = compose(ab, p);
    }
    throw InvariantViolation("reflection product of unexpected order");
  }

  DiagramType type_;
  Matrix<Golden> gram_;
  CoxeterMatrix coxeter_;
  std::vector<int> bourbaki_order_;
  std::vector<Coords> roots_;
  std::vector<Golden> heights_;
  std::map<Coords, RootIndex, CoordsLess> index_;
  Permutation negation_;
  std::vector<bool> positive_;
  std::vector<RootIndex> simple_;
  std::vector<Golden> norms_;
  std::vector<Golden> distinct_norms_;
  std::vector<int> length_class_;
  std::vector<Permutation> simple_reflections_;
  std::vector<Permutation> reflections_;
};

}  // namespace coxinv
