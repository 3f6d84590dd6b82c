#pragma once

// Weyl group elements as root permutations: words, longest elements,
// enumeration, eigenspace dimensions, subgroups and conjugacy.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/error.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/root_system.hpp"

namespace coxinv {

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Permutation p) : perm_(std::move(p)) {}

  const Permutation& perm() const { return perm_; }
  std::size_t degree() const { return perm_.size(); }
  RootIndex operator()(RootIndex r) const { return perm_[r]; }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  bool is_involution() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[perm_[i]] != i) return false;
    return true;
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  Permutation perm_;
};

inline GroupElement compose(const GroupElement& u, const GroupElement& v) {
  return GroupElement(compose(u.perm(), v.perm()));
}
inline GroupElement inverse(const GroupElement& u) { return GroupElement(inverse(u.perm())); }
/// x u x^{-1}
inline GroupElement conjugate(const GroupElement& x, const GroupElement& u) {
  return GroupElement(conjugate(x.perm(), u.perm()));
}

inline GroupElement identity_element(const RootSystem& R) { return GroupElement(identity_root_permutation(R.size())); }

inline void check_same_system(const RootSystem& R, const GroupElement& w) {
  if (w.degree() != R.size()) throw PreconditionError("element belongs to a different root system");
}

/// Number of positive roots sent to negative roots.
inline int length(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  int l = 0;
  for (std::size_t r = 0; r < R.size(); ++r)
    if (R.is_positive(static_cast<RootIndex>(r)) && !R.is_positive(w(static_cast<RootIndex>(r)))) ++l;
  return l;
}

/// s_{i1} s_{i2} ... for a word of 1-based node labels.
inline GroupElement word_eval(const RootSystem& R, const std::vector<int>& word) {
  Permutation w = identity_root_permutation(R.size());
  for (int i : word) {
    if (i < 1 || i > R.rank()) throw PreconditionError("word letter " + std::to_string(i) + " out of range");
    w = compose(w, R.simple_reflection(i - 1));
  }
  return GroupElement(std::move(w));
}

/// A reduced word (1-based labels) with word_eval(R, word) == w.
inline std::vector<int> reduced_word(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  std::vector<int> rev;
  Permutation cur = w.perm();
  for (;;) {
    int descent = -1;
    for (int i = 0; i < R.rank(); ++i)
      if (!R.is_positive(cur[R.simple(i)])) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    rev.push_back(descent + 1);
    cur = compose(cur, R.simple_reflection(descent));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// Columns are the simple-root coordinates of w(alpha_i).
inline Matrix<Golden> matrix_of(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  const auto n = static_cast<std::size_t>(R.rank());
  Matrix<Golden> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& col = R.root(w(R.simple(static_cast<int>(i))));
    for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
  }
  return m;
}

/// Longest element by descent of rho: apply s_i while <x, alpha_i> > 0.
inline GroupElement longest_element(const RootSystem& R) {
  const auto n = static_cast<std::size_t>(R.rank());
  RootSystem::Coords rho(n, Golden(0));
  for (std::size_t r = 0; r < R.size(); ++r)
    if (R.is_positive(static_cast<RootIndex>(r)))
      for (std::size_t i = 0; i < n; ++i) rho[i] += R.root(static_cast<RootIndex>(r))[i];
  RootSystem::Coords x = rho;
  std::vector<int> applied;
  for (;;) {
    const auto gx = R.gram() * x;
    std::size_t i = 0;
    while (i < n && gx[i].sign() <= 0) ++i;
    if (i == n) break;
    x[i] -= Golden(2) * gx[i] / R.gram()(i, i);
    applied.push_back(static_cast<int>(i) + 1);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!(x[i] == -rho[i])) throw InvariantViolation("descent of rho did not end at -rho");
  // x = s_{ik} ... s_{i1} rho
  std::reverse(applied.begin(), applied.end());
  return word_eval(R, applied);
}

/// Longest element of the parabolic subgroup W_I.
inline GroupElement longest_parabolic(const RootSystem& R, NodeSet I) {
  if (!I.within(R.rank())) throw PreconditionError("node set out of range");
  Permutation w = identity_root_permutation(R.size());
  const auto nodes = I.indices0();
  for (;;) {
    bool grew = false;
    for (int i : nodes)
      if (R.is_positive(w[R.simple(i)])) {
        w = compose(w, R.simple_reflection(i));
        grew = true;
      }
    if (!grew) break;
  }
  return GroupElement(std::move(w));
}

inline bool is_minus_one(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  return w.perm() == R.negation_permutation();
}

inline RootSet negated_roots(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  RootSet s(R.size());
  for (std::size_t r = 0; r < R.size(); ++r)
    if (w(static_cast<RootIndex>(r)) == R.negation(static_cast<RootIndex>(r))) s.insert(r);
  return s;
}

inline RootSet fixed_roots(const RootSystem& R, const GroupElement& w) {
  check_same_system(R, w);
  RootSet s(R.size());
  for (std::size_t r = 0; r < R.size(); ++r)
    if (w(static_cast<RootIndex>(r)) == r) s.insert(r);
  return s;
}

/// Rank of the negated roots.
inline int dim_minus(const RootSystem& R, const GroupElement& w) {
  if (!w.is_involution()) throw PreconditionError("dim_minus of a non-involution");
  EchelonBasis<Golden> basis(static_cast<std::size_t>(R.rank()));
  int d = 0;
  negated_roots(R, w).for_each([&](std::size_t r) {
    if (R.is_positive(static_cast<RootIndex>(r)) && basis.insert(R.root(static_cast<RootIndex>(r)))) ++d;
  });
  return d;
}

/// (dim V - tr w) / 2, with the trace read off the permutation.
inline int dim_minus_trace(const RootSystem& R, const GroupElement& w) {
  if (!w.is_involution()) throw PreconditionError("dim_minus of a non-involution");
  Golden tr(0);
  for (int i = 0; i < R.rank(); ++i) tr += R.root(w(R.simple(i)))[static_cast<std::size_t>(i)];
  const Golden d = (Golden(R.rank()) - tr) / Golden(2);
  if (!d.is_rational() || d.rational_part().get_den() != 1) throw InvariantViolation("involution with non-integral trace");
  return static_cast<int>(d.rational_part().get_num().get_si());
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {
template <class Visit>
bool call_visit(Visit& visit, const Permutation& p) {
  if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const Permutation&>, void>) {
    visit(p);
    return true;
  } else {
    return static_cast<bool>(visit(p));
  }
}

/// Images of the simple roots; determines an element.
inline std::string element_key(const RootSystem& R, const Permutation& w) {
  std::string k(static_cast<std::size_t>(R.rank()) * sizeof(RootIndex), '\0');
  for (int i = 0; i < R.rank(); ++i) {
    const RootIndex v = w[R.simple(i)];
    k[2 * static_cast<std::size_t>(i)] = static_cast<char>(v & 0xff);
    k[2 * static_cast<std::size_t>(i) + 1] = static_cast<char>(v >> 8);
  }
  return k;
}
}  // namespace detail

/// Streams every element of W in order of length. Each element is produced once,
/// from its parent w s_i where i is its smallest right descent; no hash set is kept.
/// The visitor may return false to stop early. Returns the number of elements visited.
template <class Visit>
std::uint64_t for_each_element(const RootSystem& R, std::uint64_t cap, Visit&& visit) {
  if (weyl_group_order(R.type()) > cap)
    throw BudgetExceeded("|W(" + R.type().name() + ")| = " + std::to_string(weyl_group_order(R.type())) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  const int n = R.rank();
  std::vector<Permutation> layer{identity_root_permutation(R.size())};
  std::uint64_t count = 0;
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : layer) {
      if (++count > cap) throw BudgetExceeded("enumeration cap exceeded");
      if (!detail::call_visit(visit, w)) return count;
      for (int i = 0; i < n; ++i) {
        if (!R.is_positive(w[R.simple(i)])) continue;
        const auto& si = R.simple_reflection(i);
        bool canonical = true;
        for (int j = 0; j < i && canonical; ++j)
          if (!R.is_positive(w[si[R.simple(j)]])) canonical = false;
        if (canonical) next.push_back(compose(w, si));
      }
    }
    layer.swap(next);
  }
  return count;
}

inline std::vector<GroupElement> enumerate(const RootSystem& R, std::uint64_t cap) {
  std::vector<GroupElement> out;
  for_each_element(R, cap, [&](const Permutation& p) { out.emplace_back(p); });
  return out;
}

/// Breadth-first closure of {id} under right multiplication by the generators.
template <class Visit>
std::uint64_t for_each_in_generated(const RootSystem& R, const std::vector<GroupElement>& gens, std::uint64_t cap,
                                    Visit&& visit) {
  std::unordered_set<std::string> seen;
  std::vector<Permutation> layer{identity_root_permutation(R.size())};
  seen.insert(detail::element_key(R, layer.front()));
  std::uint64_t count = 0;
  while (!layer.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : layer) {
      if (++count > cap) throw BudgetExceeded("subgroup enumeration cap " + std::to_string(cap) + " exceeded");
      if (!detail::call_visit(visit, w)) return count;
      for (const auto& g : gens) {
        Permutation v = compose(w, g.perm());
        if (seen.insert(detail::element_key(R, v)).second) next.push_back(std::move(v));
      }
    }
    layer.swap(next);
  }
  return count;
}

// ---------------------------------------------------------------------------
// Subgroups

enum class SubgroupKind { full, centralizer_of_w0, sigma_fixed };

inline std::string to_string(SubgroupKind k) {
  switch (k) {
    case SubgroupKind::full: return "W";
    case SubgroupKind::centralizer_of_w0: return "Wo";
    case SubgroupKind::sigma_fixed: return "Wsigma";
  }
  return "?";
}

struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::full;
  /// Node permutation whose fixed subsets are the candidate representatives
  /// (-w_o for the centralizer; the given automorphism for sigma_fixed; identity for full).
  NodePermutation sigma;
  /// Root permutation of sigma (sigma_fixed only).
  Permutation sigma_roots;
  GroupElement w0;
  std::vector<GroupElement> generators;
};

/// Generators of W^sigma: simple reflections when sigma is trivial, otherwise the
/// longest elements of the parabolic subgroups of the sigma-orbits.
inline std::vector<GroupElement> orbit_generators(const RootSystem& R, const NodePermutation& sigma) {
  std::vector<GroupElement> gens;
  if (is_identity(sigma)) {
    for (int i = 0; i < R.rank(); ++i) gens.emplace_back(R.simple_reflection(i));
    return gens;
  }
  for (NodeSet orbit : orbits(sigma, NodeSet::all(R.rank()))) gens.push_back(longest_parabolic(R, orbit));
  return gens;
}

inline SubgroupSpec full_group(const RootSystem& R) {
  SubgroupSpec s;
  s.kind = SubgroupKind::full;
  s.sigma = identity_permutation(R.rank());
  s.w0 = longest_element(R);
  for (int i = 0; i < R.rank(); ++i) s.generators.emplace_back(R.simple_reflection(i));
  return s;
}

inline SubgroupSpec centralizer_of_w0(const RootSystem& R) {
  SubgroupSpec s;
  s.kind = SubgroupKind::centralizer_of_w0;
  s.w0 = longest_element(R);
  s.sigma = R.neg_w0_node_permutation(s.w0.perm());
  s.generators = orbit_generators(R, s.sigma);
  return s;
}

inline SubgroupSpec sigma_fixed(const RootSystem& R, const NodePermutation& sigma) {
  SubgroupSpec s;
  s.kind = SubgroupKind::sigma_fixed;
  s.sigma_roots = R.diagram_root_permutation(sigma);
  s.sigma = sigma;
  s.w0 = longest_element(R);
  s.generators = orbit_generators(R, sigma);
  return s;
}

inline bool in_subgroup(const RootSystem& R, const GroupElement& w, const SubgroupSpec& spec) {
  check_same_system(R, w);
  switch (spec.kind) {
    case SubgroupKind::full: return true;
    case SubgroupKind::centralizer_of_w0: return compose(w, spec.w0) == compose(spec.w0, w);
    case SubgroupKind::sigma_fixed: return conjugate(spec.sigma_roots, w.perm()) == w.perm();
  }
  return false;
}

inline std::vector<GroupElement> subgroup_generators(const RootSystem&, const SubgroupSpec& spec) {
  return spec.generators;
}

/// Upper bound for the subgroup order used by the auto mode.
inline std::uint64_t subgroup_order_bound(const RootSystem& R, const SubgroupSpec&) { return weyl_group_order(R.type()); }

template <class Visit>
std::uint64_t for_each_in_subgroup(const RootSystem& R, const SubgroupSpec& spec, std::uint64_t cap, Visit&& visit) {
  bool simple = spec.generators.size() == static_cast<std::size_t>(R.rank());
  for (std::size_t i = 0; simple && i < spec.generators.size(); ++i)
    simple = spec.generators[i].perm() == R.simple_reflection(static_cast<int>(i));
  if (simple) return for_each_element(R, cap, std::forward<Visit>(visit));
  return for_each_in_generated(R, spec.generators, cap, std::forward<Visit>(visit));
}

// ---------------------------------------------------------------------------
// Orbits of root subsets

constexpr std::uint64_t kDefaultMemoryBudget = 8ull << 30;

/// Orbit of a root subset under a list of root permutations, with a BFS tree for witnesses.
class RootSetOrbit {
 public:
  RootSetOrbit(const RootSet& seed, const std::vector<GroupElement>& gens, std::uint64_t memory_budget) {
    const std::uint64_t per_entry = 2 * seed.byte_size() + 96;
    add(seed, -1, -1);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        RootSet img = elements_[head].image(gens[g].perm());
        if (index_.count(img)) continue;
        if ((elements_.size() + 1) * per_entry > memory_budget)
          throw BudgetExceeded("orbit exceeds the memory budget of " + std::to_string(memory_budget) + " bytes");
        add(std::move(img), static_cast<std::int64_t>(head), static_cast<int>(g));
      }
    }
  }

  std::size_t size() const { return elements_.size(); }
  bool contains(const RootSet& s) const { return index_.count(s) > 0; }
  const std::vector<RootSet>& elements() const { return elements_; }

  /// Generator indices g1, ..., gk with g_k ... g_1 (seed) = s.
  std::optional<std::vector<int>> path_to(const RootSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    std::vector<int> path;
    for (std::int64_t at = static_cast<std::int64_t>(it->second); parent_[static_cast<std::size_t>(at)] >= 0;
         at = parent_[static_cast<std::size_t>(at)])
      path.push_back(via_[static_cast<std::size_t>(at)]);
    std::reverse(path.begin(), path.end());
    return path;
  }

 private:
  void add(RootSet s, std::int64_t parent, int via) {
    index_.emplace(s, elements_.size());
    elements_.push_back(std::move(s));
    parent_.push_back(parent);
    via_.push_back(via);
  }

  std::vector<RootSet> elements_;
  std::unordered_map<RootSet, std::size_t, RootSetHash> index_;
  std::vector<std::int64_t> parent_;
  std::vector<int> via_;
};

enum class ConjugacyMode { exhaustive, neg_orbit };

struct ConjugacyOptions {
  std::uint64_t cap = 3'000'000;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
};

struct ConjugacyResult {
  bool conjugate = false;
  /// x with x w x^{-1} = w'.
  std::optional<GroupElement> witness;
};

/// Decides whether the involutions w and w2 are conjugate inside the subgroup.
inline ConjugacyResult conjugate_in(const RootSystem& R, const GroupElement& w, const GroupElement& w2,
                                    const SubgroupSpec& spec, ConjugacyMode mode, const ConjugacyOptions& opts = {}) {
  check_same_system(R, w);
  check_same_system(R, w2);
  if (!w.is_involution() || !w2.is_involution()) throw PreconditionError("conjugate_in expects involutions");
  ConjugacyResult res;
  if (mode == ConjugacyMode::exhaustive) {
    for_each_in_subgroup(R, spec, opts.cap, [&](const Permutation& x) {
      if (conjugate(x, w.perm()) == w2.perm()) {
        res.conjugate = true;
        res.witness = GroupElement(x);
        return false;
      }
      return true;
    });
    return res;
  }
  RootSetOrbit orbit(negated_roots(R, w), spec.generators, opts.memory_budget);
  auto path = orbit.path_to(negated_roots(R, w2));
  if (!path) return res;
  Permutation x = identity_root_permutation(R.size());
  for (int g : *path) x = compose(spec.generators[static_cast<std::size_t>(g)].perm(), x);
  res.conjugate = true;
  res.witness = GroupElement(std::move(x));
  return res;
}

}  // namespace coxinv
