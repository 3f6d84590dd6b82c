#pragma once

// Involutions: standard subsets, orbit-counting eigenspace dimensions,
// classification of involution classes in W and its subgroups, and the
// pairing induced by multiplication with w_o.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"
#include "coxinv/error.hpp"
#include "coxinv/parallel.hpp"
#include "coxinv/perm.hpp"
#include "coxinv/root_system.hpp"
#include "coxinv/weyl.hpp"

namespace coxinv {

/// i -> j with -w_I(alpha_i) = alpha_j, on the nodes of I (identity elsewhere).
inline NodePermutation neg_longest_parabolic_action(const RootSystem& R, NodeSet I) {
  const GroupElement wI = longest_parabolic(R, I);
  NodePermutation p = identity_permutation(R.rank());
  for (int i : I.indices0()) {
    const RootIndex img = R.negation(wI(R.simple(i)));
    int j = -1;
    for (int k : I.indices0())
      if (R.simple(k) == img) j = k;
    if (j < 0) throw InvariantViolation("-w_I does not permute the simple roots of I");
    p[static_cast<std::size_t>(i)] = j;
  }
  return p;
}

/// w_I acts as -1 on the span of I.
inline bool is_standard(const RootSystem& R, NodeSet I) {
  return is_identity(neg_longest_parabolic_action(R, I));
}

inline std::vector<NodeSet> all_subsets(int n) {
  std::vector<NodeSet> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) out.emplace_back(m);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<NodeSet> standard_subsets(const RootSystem& R) {
  std::vector<NodeSet> out;
  for (NodeSet I : all_subsets(R.rank()))
    if (is_standard(R, I)) out.push_back(I);
  return out;
}

enum class OrbitVariant { parabolic = 1, opposite = 2, automorphism = 3 };

/// Eigenspace dimension by counting orbits:
///   parabolic:    orbits of -w_I on I                       (= dim^-(w_I))
///   opposite:     nontrivial orbits of w_o w_I on I
///                 + orbits of -w_o on the complement         (= dim^-(w_o w_I)); needs -w_o I = I
///   automorphism: nontrivial orbits of sigma(-w_I) on I
///                 + orbits of sigma on the complement        (= dim^-(sigma(-w_I))); needs sigma I = I
///                 and sigma, -w_I commuting on I
inline int dim_minus_orbits(const RootSystem& R, NodeSet I, OrbitVariant variant,
                            const std::optional<NodePermutation>& sigma = std::nullopt) {
  if (!I.within(R.rank())) throw PreconditionError("node set out of range");
  const NodePermutation neg_wI = neg_longest_parabolic_action(R, I);
  if (variant == OrbitVariant::parabolic) return static_cast<int>(orbits(neg_wI, I).size());

  NodePermutation s;
  if (variant == OrbitVariant::opposite) {
    s = R.neg_w0_node_permutation(longest_element(R).perm());
    if (!(permute_nodes(s, I) == I)) throw PreconditionError("-w_o does not preserve " + I.to_string());
  } else {
    if (!sigma) throw PreconditionError("automorphism variant needs sigma");
    s = *sigma;
    if (s.size() != static_cast<std::size_t>(R.rank())) throw PreconditionError("sigma has the wrong size");
    if (!(permute_nodes(s, I) == I)) throw PreconditionError("sigma does not preserve " + I.to_string());
    for (int i : I.indices0())
      if (s[static_cast<std::size_t>(neg_wI[static_cast<std::size_t>(i)])] !=
          neg_wI[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])])
        throw PreconditionError("sigma and -w_I do not commute on " + I.to_string());
  }
  NodePermutation on_I = identity_permutation(R.rank());
  for (int i : I.indices0()) on_I[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(neg_wI[static_cast<std::size_t>(i)])];
  int count = 0;
  for (NodeSet o : orbits(on_I, I))
    if (o.size() > 1) ++count;
  count += static_cast<int>(orbits(s, NodeSet::all(R.rank()).minus(I)).size());
  return count;
}

/// A standard subset I of H with c_I conjugate to w_H, built component by component.
inline NodeSet reduce_to_standard(const RootSystem& R, NodeSet H) {
  NodeSet out;
  for (const auto& comp : R.node_components(H)) {
    const DiagramType t = comp.kind.type;
    const auto& nodes = comp.nodes;
    const int k = static_cast<int>(nodes.size());
    if (t.series == Series::A && k >= 2) {
      for (int p = 0; p < k; p += 2) out.insert0(nodes[static_cast<std::size_t>(p)]);
    } else if (t.series == Series::D && k % 2 == 1) {
      for (int p = 1; p < k; ++p) out.insert0(nodes[static_cast<std::size_t>(p)]);
    } else if (t.series == Series::E && k == 6) {
      for (int p = 1; p <= 4; ++p) out.insert0(nodes[static_cast<std::size_t>(p)]);
    } else if (t.series == Series::G && t.gonality % 2 == 1) {
      out.insert0(nodes[0]);
    } else {
      for (int v : nodes) out.insert0(v);
    }
  }
  return out;
}

struct EigenSubsystems {
  SubsystemType plus_type;
  SubsystemType neg_type;
  RootSet plus_roots;
  RootSet neg_roots;
};

/// Root subsystems of the two eigenspaces, computed from exact eigenspace bases:
/// the -1-eigenspace is spanned by the negated roots and the +1-eigenspace is its
/// orthogonal complement.
inline EigenSubsystems eigen_subsystems(const RootSystem& R, const GroupElement& w) {
  if (!w.is_involution()) throw PreconditionError("eigen_subsystems of a non-involution");
  std::vector<RootSystem::Coords> minus_span;
  negated_roots(R, w).for_each([&](std::size_t r) {
    if (R.is_positive(static_cast<RootIndex>(r))) minus_span.push_back(R.root(static_cast<RootIndex>(r)));
  });
  EigenSubsystems e;
  e.neg_roots = R.subsystem_in_subspace(minus_span);
  e.plus_roots = R.subsystem_in_subspace(R.orthogonal_complement(minus_span));
  e.neg_type = R.subsystem_type(e.neg_roots);
  e.plus_type = R.subsystem_type(e.plus_roots);
  return e;
}

// ---------------------------------------------------------------------------
// Classical patterns

enum class PatternFamily { A_even, A_odd, BC, D, spin_minus, spin_plus };

struct PatternKey {
  PatternFamily family = PatternFamily::BC;
  int n = 0;  // A_{2n}, A_{2n-1}, BC_n, D_{n+1}; half rank m for the spin involutions of D_{2m}
  int k = 0;
  int l = 0;

  bool valid() const {
    if (family == PatternFamily::spin_minus || family == PatternFamily::spin_plus) return n >= 2;
    if (n < 1 || l < 0 || l > n || k < 0 || k > (n - l) / 2) return false;
    if (family == PatternFamily::A_odd && n < 2) return false;
    if (family == PatternFamily::D && n < 2) return false;
    return true;
  }

  std::string name() const {
    if (family == PatternFamily::spin_minus) return "c-";
    if (family == PatternFamily::spin_plus) return "c+";
    return "c(" + std::to_string(k) + "," + std::to_string(l) + ")";
  }
};

inline DiagramType pattern_ambient(const PatternKey& key, Realization bc = Realization::C) {
  switch (key.family) {
    case PatternFamily::A_even: return DiagramType::A(2 * key.n);
    case PatternFamily::A_odd: return DiagramType::A(2 * key.n - 1);
    case PatternFamily::BC: return bc == Realization::C ? DiagramType::C(key.n) : DiagramType::B(key.n);
    case PatternFamily::D: return DiagramType::D(key.n + 1);
    case PatternFamily::spin_minus:
    case PatternFamily::spin_plus: return DiagramType::D(2 * key.n);
  }
  return {};
}

inline NodeSet pattern_nodes(const PatternKey& key) {
  if (!key.valid()) throw PreconditionError("invalid pattern key " + key.name());
  const int n = key.n, k = key.k, l = key.l;
  NodeSet s;
  auto add = [&](int label) { s.insert0(label - 1); };
  switch (key.family) {
    case PatternFamily::A_even:
      for (int i = 0; i < k; ++i) {
        add(2 * i + 1);
        add(2 * n - 2 * i);
      }
      for (int v = n - l + 1; v <= n + l; ++v) add(v);
      break;
    case PatternFamily::A_odd:
      for (int i = 0; i < k; ++i) {
        add(2 * i + 1);
        add(2 * n - 1 - 2 * i);
      }
      if (l >= 1)
        for (int v = n - l + 1; v <= n + l - 1; ++v) add(v);
      break;
    case PatternFamily::BC:
      for (int i = 0; i < k; ++i) add(2 * i + 1);
      for (int v = n - l + 1; v <= n; ++v) add(v);
      break;
    case PatternFamily::D:
      for (int i = 0; i < k; ++i) add(2 * i + 1);
      if (l >= 1)
        for (int v = n + 1 - l; v <= n + 1; ++v) add(v);
      break;
    case PatternFamily::spin_minus:
    case PatternFamily::spin_plus: {
      const int m = n;
      for (int v = 1; v <= 2 * m - 3; v += 2) add(v);
      add(key.family == PatternFamily::spin_minus ? 2 * m - 1 : 2 * m);
      break;
    }
  }
  return s;
}

/// (k, l) -> (k, n - 2k - l).
inline std::pair<int, int> dagger_prediction(int n, int k, int l) {
  if (l < 0 || l > n || k < 0 || k > (n - l) / 2) throw PreconditionError("invalid pattern index");
  return {k, n - 2 * k - l};
}

/// All valid (k, l) for a given n, ordered by l then k.
inline std::vector<std::pair<int, int>> pattern_indices(int n) {
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l <= n; ++l)
    for (int k = 0; k <= (n - l) / 2; ++k) out.emplace_back(k, l);
  return out;
}

// ---------------------------------------------------------------------------
// Classification

struct InvolutionClass {
  GroupElement representative;
  /// Every scanned subset I whose w_I lies in the class, in canonical order.
  std::vector<NodeSet> reps;
  /// The standard members of `reps`.
  std::vector<NodeSet> standard_reps;
  int dim_minus = 0;
  int dim_plus = 0;
  SubsystemType neg_type;
  SubsystemType plus_type;
  std::optional<std::uint64_t> size;
};

enum class ClassifyMode { exhaustive, orbit, automatic };

inline std::string to_string(ClassifyMode m) {
  switch (m) {
    case ClassifyMode::exhaustive: return "exhaustive";
    case ClassifyMode::orbit: return "orbit";
    case ClassifyMode::automatic: return "auto";
  }
  return "?";
}

struct ClassifyOptions {
  ClassifyMode mode = ClassifyMode::automatic;
  std::uint64_t cap = 3'000'000;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  int threads = 1;
};

using MemberSet = std::unordered_set<RootSet, RootSetHash>;

struct ClassTable {
  std::string type_name;
  int rank = 0;
  SubgroupKind kind = SubgroupKind::full;
  ClassifyMode mode_used = ClassifyMode::orbit;
  std::vector<InvolutionClass> classes;
  /// pairing[i] = class of w_o * representative of class i; empty when not computed.
  std::vector<int> pairing;
  /// Exhaustive mode only: involutions in the subgroup and whether the classes cover them.
  std::optional<std::uint64_t> involution_count;
  std::optional<std::uint64_t> subgroup_order;
  bool coverage_verified = false;
  /// Negated-root sets of every class member, parallel to `classes` (empty for symbolic tables).
  std::vector<MemberSet> members;

  /// Class containing w_I for a scanned subset I.
  std::optional<int> class_of(NodeSet I) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (NodeSet r : classes[c].reps)
        if (r == I) return static_cast<int>(c);
    return std::nullopt;
  }

  /// Class of an arbitrary involution of the subgroup.
  std::optional<int> locate(const RootSystem& R, const GroupElement& w) const {
    const RootSet neg = negated_roots(R, w);
    for (std::size_t c = 0; c < members.size(); ++c)
      if (members[c].count(neg)) return static_cast<int>(c);
    return std::nullopt;
  }
};

namespace detail {

struct Candidate {
  NodeSet I;
  GroupElement w;
  RootSet neg;
  int dim = 0;
  SubsystemType neg_type;
};

inline RootSet image_of(const std::vector<RootIndex>& members, const Permutation& x, std::size_t universe) {
  RootSet s(universe);
  for (RootIndex r : members) s.insert(x[r]);
  return s;
}

/// One pass over the subgroup, conjugating each seed by every element.
inline std::vector<MemberSet> class_sweep(const RootSystem& R, const SubgroupSpec& spec, const std::vector<RootSet>& seeds,
                                          std::uint64_t cap, std::uint64_t* order, std::uint64_t* involutions) {
  std::vector<std::vector<RootIndex>> seed_members;
  for (const auto& s : seeds) seed_members.push_back(s.indices());
  std::vector<MemberSet> sets(seeds.size());
  std::uint64_t n_elems = 0, n_inv = 0;
  for_each_in_subgroup(R, spec, cap, [&](const Permutation& x) {
    ++n_elems;
    bool inv = true;
    for (std::size_t i = 0; i < x.size() && inv; ++i)
      if (x[x[i]] != i) inv = false;
    if (inv) ++n_inv;
    for (std::size_t s = 0; s < seeds.size(); ++s) sets[s].insert(image_of(seed_members[s], x, R.size()));
  });
  if (order) *order = n_elems;
  if (involutions) *involutions = n_inv;
  return sets;
}

}  // namespace detail

/// Candidate subsets for a subgroup: all subsets for W, sigma-invariant ones otherwise.
inline std::vector<NodeSet> candidate_subsets(const RootSystem& R, const SubgroupSpec& spec) {
  std::vector<NodeSet> out;
  for (NodeSet I : all_subsets(R.rank()))
    if (spec.kind == SubgroupKind::full || permute_nodes(spec.sigma, I) == I) out.push_back(I);
  return out;
}

inline ClassifyMode resolve_mode(const RootSystem& R, const SubgroupSpec& spec, const ClassifyOptions& opts) {
  if (opts.mode != ClassifyMode::automatic) return opts.mode;
  return subgroup_order_bound(R, spec) <= opts.cap ? ClassifyMode::exhaustive : ClassifyMode::orbit;
}

/// Partition of the involutions of the subgroup into conjugacy classes.
///
/// Candidates w_I are bucketed by (dim^-, type of the negated roots) and conjugacy is
/// decided only inside a bucket: by membership in classes swept over the whole subgroup
/// (exhaustive) or in orbits of negated-root sets under the generators (orbit).
inline ClassTable classify(const RootSystem& R, const SubgroupSpec& spec, const ClassifyOptions& opts = {}) {
  const ClassifyMode mode = resolve_mode(R, spec, opts);
  const auto subsets = candidate_subsets(R, spec);

  std::vector<detail::Candidate> cands(subsets.size());
  parallel_for(subsets.size(), opts.threads, [&](std::size_t i) {
    auto& c = cands[i];
    c.I = subsets[i];
    c.w = longest_parabolic(R, c.I);
    if (!in_subgroup(R, c.w, spec)) throw InvariantViolation("w_I outside the subgroup for I = " + c.I.to_string());
    c.neg = negated_roots(R, c.w);
    c.dim = dim_minus_trace(R, c.w);
    c.neg_type = R.subsystem_type(c.neg);
  });

  using BucketKey = std::pair<int, SubsystemType>;
  std::map<BucketKey, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < cands.size(); ++i) buckets[{cands[i].dim, cands[i].neg_type}].push_back(i);

  ClassTable table;
  table.type_name = R.type().name();
  table.rank = R.rank();
  table.kind = spec.kind;
  table.mode_used = mode;

  // class index -> candidate indices; first entry is the seed
  std::vector<std::vector<std::size_t>> groups;
  std::vector<MemberSet> members;

  if (mode == ClassifyMode::orbit) {
    for (const auto& [key, idx] : buckets) {
      std::vector<std::size_t> local;  // classes opened in this bucket
      for (std::size_t i : idx) {
        bool placed = false;
        for (std::size_t g : local)
          if (members[g].count(cands[i].neg)) {
            groups[g].push_back(i);
            placed = true;
            break;
          }
        if (placed) continue;
        RootSetOrbit orbit(cands[i].neg, spec.generators, opts.memory_budget);
        members.emplace_back(orbit.elements().begin(), orbit.elements().end());
        groups.push_back({i});
        local.push_back(groups.size() - 1);
      }
    }
  } else {
    // Seeds are swept in rounds: first one per bucket, then any candidate left uncovered.
    std::vector<std::size_t> pending;
    for (const auto& [key, idx] : buckets) pending.push_back(idx.front());
    std::map<BucketKey, std::vector<std::size_t>> bucket_groups;
    std::uint64_t order = 0, involutions = 0;
    bool counted = false;
    while (!pending.empty()) {
      std::vector<RootSet> seeds;
      for (std::size_t i : pending) seeds.push_back(cands[i].neg);
      auto sets = detail::class_sweep(R, spec, seeds, opts.cap, &order, &involutions);
      counted = true;
      for (std::size_t s = 0; s < pending.size(); ++s) {
        const auto& c = cands[pending[s]];
        members.push_back(std::move(sets[s]));
        groups.push_back({pending[s]});
        bucket_groups[{c.dim, c.neg_type}].push_back(groups.size() - 1);
      }
      pending.clear();
      for (const auto& [key, idx] : buckets) {
        for (std::size_t i : idx) {
          bool placed = false;
          for (std::size_t g : bucket_groups[key])
            if (groups[g].front() == i || members[g].count(cands[i].neg)) {
              placed = true;
              break;
            }
          if (!placed) {
            pending.push_back(i);
            break;  // one new seed per bucket per round
          }
        }
      }
    }
    // assign every candidate to its class
    for (auto& g : groups) g.resize(1);
    for (const auto& [key, idx] : buckets)
      for (std::size_t i : idx) {
        bool placed = false;
        for (std::size_t g : bucket_groups[key]) {
          if (groups[g].front() == i) {
            placed = true;
            break;
          }
          if (members[g].count(cands[i].neg)) {
            groups[g].push_back(i);
            placed = true;
            break;
          }
        }
        if (!placed) throw InvariantViolation("candidate left unclassified");
      }
    if (counted) {
      table.subgroup_order = order;
      table.involution_count = involutions;
      std::uint64_t total = 0;
      MemberSet uni;
      for (const auto& m : members) {
        total += m.size();
        uni.insert(m.begin(), m.end());
      }
      table.coverage_verified = total == involutions && uni.size() == total;
    }
  }

  // order classes by (dim^-, first subset)
  std::vector<std::size_t> perm(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::sort(groups[g].begin(), groups[g].end(),
              [&](std::size_t a, std::size_t b) { return cands[a].I < cands[b].I; });
    perm[g] = g;
  }
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = cands[groups[a].front()];
    const auto& cb = cands[groups[b].front()];
    if (ca.dim != cb.dim) return ca.dim < cb.dim;
    return ca.I < cb.I;
  });
  for (std::size_t g : perm) {
    const auto& seed = cands[groups[g].front()];
    InvolutionClass cls;
    cls.representative = seed.w;
    for (std::size_t i : groups[g]) {
      cls.reps.push_back(cands[i].I);
      if (is_standard(R, cands[i].I)) cls.standard_reps.push_back(cands[i].I);
    }
    cls.dim_minus = seed.dim;
    cls.dim_plus = R.rank() - seed.dim;
    cls.neg_type = seed.neg_type;
    cls.plus_type = R.subsystem_type(fixed_roots(R, seed.w));
    cls.size = members[g].size();
    table.classes.push_back(std::move(cls));
    table.members.push_back(std::move(members[g]));
  }
  return table;
}

/// Class of w_o * w for each class; an involution on the classes.
inline std::vector<int> w0_pairing(const ClassTable& table, const RootSystem& R, const SubgroupSpec& spec) {
  for (const auto& g : spec.generators)
    if (!(compose(g, spec.w0) == compose(spec.w0, g)))
      throw PreconditionError("w_o is not central in the chosen subgroup of W(" + R.type().name() + ")");
  std::vector<int> pairing;
  for (const auto& cls : table.classes) {
    const GroupElement image = compose(spec.w0, cls.representative);
    auto c = table.locate(R, image);
    if (!c) throw InvariantViolation("w_o times a class representative lies in no class");
    pairing.push_back(*c);
  }
  for (std::size_t i = 0; i < pairing.size(); ++i)
    if (pairing[static_cast<std::size_t>(pairing[i])] != static_cast<int>(i))
      throw InvariantViolation("multiplication by w_o is not an involution on classes");
  return pairing;
}

/// classify followed by w0_pairing.
inline ClassTable classify_with_pairing(const RootSystem& R, const SubgroupSpec& spec, const ClassifyOptions& opts = {}) {
  ClassTable t = classify(R, spec, opts);
  t.pairing = w0_pairing(t, R, spec);
  return t;
}

}  // namespace coxinv
