#pragma once

// Folding along an order-2 diagram automorphism sigma: the folded root system
// with one node per sigma-orbit, and the embedding iota of its Weyl group into W.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/error.hpp"
#include "coxinv/involutions.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

struct Folding {
  std::shared_ptr<const RootSystem> ambient;
  NodePermutation sigma;
  Permutation sigma_roots;
  /// Folded node j corresponds to orbits[j]; orbits are ordered by their smallest node.
  std::vector<NodeSet> orbits;
  /// Orbit sums, in ambient simple-root coordinates.
  std::vector<RootSystem::Coords> folded_simple_roots;
  Matrix<Golden> folded_gram;
  std::shared_ptr<const RootSystem> folded;
  /// Ambient images of the folded simple reflections: the longest element of each orbit.
  std::vector<GroupElement> generators;

  const DiagramType& folded_type() const { return folded->type(); }
};

/// Folds R along sigma. The folded simple root of an orbit O is the plain sum of the
/// roots in O; the scale does not affect the type.
inline Folding fold(std::shared_ptr<const RootSystem> R, const NodePermutation& sigma) {
  if (!R) throw PreconditionError("null root system");
  Folding f;
  f.ambient = R;
  f.sigma_roots = R->diagram_root_permutation(sigma);  // rejects non-automorphisms
  f.sigma = sigma;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (sigma[static_cast<std::size_t>(sigma[i])] != static_cast<int>(i))
      throw PreconditionError("only automorphisms of order at most 2 can be folded");
  f.orbits = orbits(sigma, NodeSet::all(R->rank()));
  const auto n = static_cast<std::size_t>(R->rank());
  for (NodeSet o : f.orbits) {
    RootSystem::Coords a(n, Golden(0));
    for (int i : o.indices0()) a[static_cast<std::size_t>(i)] = Golden(1);
    f.folded_simple_roots.push_back(std::move(a));
  }
  const std::size_t k = f.orbits.size();
  f.folded_gram = Matrix<Golden>(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) f.folded_gram(i, j) = R->inner(f.folded_simple_roots[i], f.folded_simple_roots[j]);
  if (!is_positive_definite(f.folded_gram)) throw PreconditionError("folded Gram matrix is not positive definite");
  f.folded = std::make_shared<const RootSystem>(RootSystem::from_gram(f.folded_gram));
  for (NodeSet o : f.orbits) f.generators.push_back(longest_parabolic(*R, o));
  return f;
}

inline Folding fold(const RootSystem& R, const NodePermutation& sigma) {
  return fold(std::make_shared<const RootSystem>(R), sigma);
}

/// iota of a word (1-based folded node labels).
inline GroupElement iota(const Folding& f, const std::vector<int>& folded_word) {
  Permutation w = identity_root_permutation(f.ambient->size());
  for (int j : folded_word) {
    if (j < 1 || static_cast<std::size_t>(j) > f.generators.size()) throw PreconditionError("folded letter out of range");
    w = compose(w, f.generators[static_cast<std::size_t>(j - 1)].perm());
  }
  return GroupElement(std::move(w));
}

/// iota of an element of the folded Weyl group.
inline GroupElement iota(const Folding& f, const GroupElement& folded_element) {
  return iota(f, reduced_word(*f.folded, folded_element));
}

/// Orbits meeting I, as folded nodes.
inline NodeSet folded_subdiagram(const Folding& f, NodeSet I) {
  if (!(permute_nodes(f.sigma, I) == I)) throw PreconditionError("node set " + I.to_string() + " is not sigma-invariant");
  NodeSet J;
  for (std::size_t j = 0; j < f.orbits.size(); ++j)
    if (!(f.orbits[j] & I).empty()) J.insert0(static_cast<int>(j));
  return J;
}

/// Union of the orbits of the folded nodes in J.
inline NodeSet unfolded_subdiagram(const Folding& f, NodeSet J) {
  NodeSet I;
  for (int j : J.indices0()) {
    if (static_cast<std::size_t>(j) >= f.orbits.size()) throw PreconditionError("folded node out of range");
    I = I | f.orbits[static_cast<std::size_t>(j)];
  }
  return I;
}

/// sigma-invariant subsets I on which sigma agrees with -w_I.
inline std::vector<NodeSet> admissible_subsets(const Folding& f) {
  std::vector<NodeSet> out;
  for (NodeSet I : all_subsets(f.ambient->rank())) {
    if (!(permute_nodes(f.sigma, I) == I)) continue;
    const auto neg = neg_longest_parabolic_action(*f.ambient, I);
    bool agree = true;
    for (int i : I.indices0()) agree = agree && neg[static_cast<std::size_t>(i)] == f.sigma[static_cast<std::size_t>(i)];
    if (agree) out.push_back(I);
  }
  return out;
}

/// iota(w_{I^sigma}) == w_I.
inline bool longest_words_compatible(const Folding& f, NodeSet I) {
  const NodeSet J = folded_subdiagram(f, I);
  return iota(f, longest_parabolic(*f.folded, J)) == longest_parabolic(*f.ambient, I);
}

/// Defining relations of the folded Coxeter group hold for the generator images.
inline bool iota_relations_hold(const Folding& f) {
  const auto& m = f.folded->coxeter();
  for (std::size_t a = 0; a < f.generators.size(); ++a)
    for (std::size_t b = 0; b < f.generators.size(); ++b) {
      const GroupElement p = compose(f.generators[a], f.generators[b]);
      GroupElement q = p;
      int order = 1;
      while (!q.is_identity() && order <= 64) {
        q = compose(q, p);
        ++order;
      }
      if (order != m[a][b]) return false;
    }
  return true;
}

namespace detail {
inline std::set<Permutation> generated_set(const RootSystem& R, const std::vector<GroupElement>& gens, std::uint64_t cap) {
  std::set<Permutation> out;
  for_each_in_generated(R, gens, cap, [&](const Permutation& p) { out.insert(p); });
  return out;
}
}  // namespace detail

/// The image of iota, as a set of ambient permutations.
inline std::set<Permutation> iota_image(const Folding& f, std::uint64_t cap) {
  return detail::generated_set(*f.ambient, f.generators, cap);
}

/// Elements of W commuting with sigma, by enumeration of W.
inline std::set<Permutation> sigma_fixed_elements(const Folding& f, std::uint64_t cap) {
  std::set<Permutation> out;
  const Permutation sinv = inverse(f.sigma_roots);
  for_each_element(*f.ambient, cap, [&](const Permutation& w) {
    if (compose(compose(f.sigma_roots, w), sinv) == w) out.insert(w);
  });
  return out;
}

/// iota(W_{I^sigma}) == W_I intersected with the sigma-fixed elements.
inline bool parabolic_compatible(const Folding& f, NodeSet I, std::uint64_t cap) {
  const NodeSet J = folded_subdiagram(f, I);
  std::vector<GroupElement> folded_gens;
  for (int j : J.indices0()) folded_gens.push_back(f.generators[static_cast<std::size_t>(j)]);
  const auto lhs = detail::generated_set(*f.ambient, folded_gens, cap);
  std::vector<GroupElement> parabolic;
  for (int i : I.indices0()) parabolic.emplace_back(f.ambient->simple_reflection(i));
  const Permutation sinv = inverse(f.sigma_roots);
  std::set<Permutation> rhs;
  for_each_in_generated(*f.ambient, parabolic, cap, [&](const Permutation& w) {
    if (compose(compose(f.sigma_roots, w), sinv) == w) rhs.insert(w);
  });
  return lhs == rhs;
}

/// The sigma-fixed subgroup spec matching a folding.
inline SubgroupSpec folding_subgroup(const Folding& f) {
  SubgroupSpec s = sigma_fixed(*f.ambient, f.sigma);
  s.generators = f.generators;
  return s;
}

}  // namespace coxinv
