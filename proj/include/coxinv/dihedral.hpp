#pragma once

// Symbolic dihedral groups W(G2(n)) = W(I2(n)) of order 2n.
//
// r = s1 s2 is the rotation and f_k = r^k s1 the reflections, so s1 = f_0 and
// s2 = f_{n-1}. Products: r^a r^b = r^{a+b}, r^a f_b = f_{a+b}, f_a r^b = f_{a-b},
// f_a f_b = r^{a-b}.

#include <cstdint>
#include <string>
#include <vector>

#include "coxinv/diagram.hpp"
#include "coxinv/error.hpp"
#include "coxinv/involutions.hpp"

namespace coxinv::dihedral {

struct Element {
  bool reflection = false;
  int index = 0;  // exponent of r, or the k of f_k; reduced mod n

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

class Group {
 public:
  explicit Group(int n) : n_(n) {
    if (n < 2) throw PreconditionError("dihedral gonality must be at least 2");
  }

  int n() const { return n_; }
  std::uint64_t order() const { return 2 * static_cast<std::uint64_t>(n_); }

  Element identity() const { return {false, 0}; }
  Element rotation(int k) const { return {false, mod(k)}; }
  Element reflection(int k) const { return {true, mod(k)}; }
  Element s1() const { return reflection(0); }
  Element s2() const { return reflection(n_ - 1); }

  Element compose(const Element& a, const Element& b) const {
    if (!a.reflection && !b.reflection) return rotation(a.index + b.index);
    if (!a.reflection && b.reflection) return reflection(a.index + b.index);
    if (a.reflection && !b.reflection) return reflection(a.index - b.index);
    return rotation(a.index - b.index);
  }

  Element inverse(const Element& a) const { return a.reflection ? a : rotation(-a.index); }

  bool is_involution(const Element& a) const { return a.reflection || (2 * a.index) % n_ == 0; }

  /// Product s_{i1} s_{i2} ... of 1-based letters.
  Element word_eval(const std::vector<int>& word) const {
    Element w = identity();
    for (int i : word) {
      if (i != 1 && i != 2) throw PreconditionError("dihedral word letter out of range");
      w = compose(w, i == 1 ? s1() : s2());
    }
    return w;
  }

  Element longest() const {
    if (n_ % 2 == 0) return rotation(n_ / 2);
    return reflection((n_ - 1) / 2);
  }

  /// w_{I} for I a subset of {1, 2}.
  Element longest_parabolic(NodeSet I) const {
    if (!I.within(2)) throw PreconditionError("node set out of range");
    if (I.size() == 2) return longest();
    if (I.contains0(0)) return s1();
    if (I.contains0(1)) return s2();
    return identity();
  }

  bool is_minus_one(const Element& a) const { return n_ % 2 == 0 && a == rotation(n_ / 2); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (int k = 0; k < n_; ++k) out.push_back(rotation(k));
    for (int k = 0; k < n_; ++k) out.push_back(reflection(k));
    return out;
  }

  /// W for n even, the centralizer {x : x w_o = w_o x} otherwise.
  std::vector<Element> subgroup(SubgroupKind kind) const {
    if (kind == SubgroupKind::sigma_fixed) throw PreconditionError("sigma-fixed subgroups are not modelled for dihedral types");
    std::vector<Element> out;
    const Element w0 = longest();
    for (const auto& x : elements())
      if (kind == SubgroupKind::full || compose(x, w0) == compose(w0, x)) out.push_back(x);
    return out;
  }

  /// Closed form: all reflections are conjugate when n is odd; f_j ~ f_j' iff j = j' mod 2 when n is even.
  bool reflections_conjugate(int j, int j2) const {
    if (n_ % 2 == 1) return true;
    return (mod(j) - mod(j2)) % 2 == 0;
  }

  int dim_minus(const Element& a) const {
    if (!is_involution(a)) throw PreconditionError("dim_minus of a non-involution");
    if (a.reflection) return 1;
    return a.index == 0 ? 0 : 2;
  }

 private:
  int mod(int k) const { return ((k % n_) + n_) % n_; }
  int n_;
};

inline bool conjugate_in(const Group& G, const Element& a, const Element& b, SubgroupKind kind) {
  for (const auto& x : G.subgroup(kind))
    if (G.compose(G.compose(x, a), G.inverse(x)) == b) return true;
  return false;
}

/// Involution classes of W(G2(n)) (n even) or W_o(G2(n)) (n odd), with the w_o pairing.
inline ClassTable classify(int n, SubgroupKind kind) {
  const Group G(n);
  if (kind == SubgroupKind::sigma_fixed) throw PreconditionError("sigma-fixed subgroups are not modelled for dihedral types");
  const bool w0_central = n % 2 == 0;
  if (kind == SubgroupKind::full && !w0_central)
    throw PreconditionError("w_o is not central in W(G2(" + std::to_string(n) + ")); use the centralizer");

  // candidates: subsets of {1,2}; in W_o only those fixed by -w_o (which swaps 1 and 2 for odd n)
  std::vector<NodeSet> subsets;
  for (NodeSet I : all_subsets(2))
    if (kind == SubgroupKind::full || w0_central || I.size() != 1) subsets.push_back(I);

  const auto group = G.subgroup(kind);
  std::vector<std::vector<NodeSet>> groups;
  std::vector<Element> reps;
  for (NodeSet I : subsets) {
    const Element w = G.longest_parabolic(I);
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (conjugate_in(G, reps[c], w, kind)) {
        groups[c].push_back(I);
        placed = true;
        break;
      }
    if (!placed) {
      groups.push_back({I});
      reps.push_back(w);
    }
  }

  auto class_members = [&](const Element& w) {
    std::vector<Element> out;
    for (const auto& x : group) {
      Element y = G.compose(G.compose(x, w), G.inverse(x));
      bool seen = false;
      for (const auto& z : out) seen = seen || z == y;
      if (!seen) out.push_back(y);
    }
    return out;
  };

  ClassTable t;
  t.type_name = DiagramType::G2(n).name();
  t.rank = 2;
  t.kind = kind;
  t.mode_used = ClassifyMode::exhaustive;
  t.subgroup_order = group.size();
  std::uint64_t involutions = 0, covered = 0;
  for (const auto& x : group)
    if (G.is_involution(x)) ++involutions;

  const SubsystemType whole = {ComponentType{DiagramType::G2(n).canonical(), LengthLabel::uniform}};
  for (std::size_t c = 0; c < reps.size(); ++c) {
    InvolutionClass cls;
    cls.reps = groups[c];
    for (NodeSet I : groups[c])
      if (I.size() <= 1 || w0_central) cls.standard_reps.push_back(I);
    cls.dim_minus = G.dim_minus(reps[c]);
    cls.dim_plus = 2 - cls.dim_minus;
    const ComponentType a1{DiagramType::A(1), LengthLabel::uniform};
    if (cls.dim_minus == 1) {
      cls.neg_type = {a1};
      // a root orthogonal to the mirror exists exactly when n is even
      if (n % 2 == 0) cls.plus_type = {a1};
    } else if (cls.dim_minus == 2) {
      cls.neg_type = whole;
    } else {
      cls.plus_type = whole;
    }
    if (n == 2 && cls.dim_minus == 2) cls.neg_type = {a1, a1};
    if (n == 2 && cls.dim_minus == 0) cls.plus_type = {a1, a1};
    const auto mem = class_members(reps[c]);
    cls.size = mem.size();
    covered += mem.size();
    t.classes.push_back(std::move(cls));
  }
  t.involution_count = involutions;
  t.coverage_verified = covered == involutions;

  // classes are already in (dim^-, canonical subset) order for subsets of {1,2}
  const Element w0 = G.longest();
  for (std::size_t c = 0; c < reps.size(); ++c) {
    const Element img = G.compose(w0, reps[c]);
    int found = -1;
    for (std::size_t d = 0; d < reps.size() && found < 0; ++d)
      if (conjugate_in(G, reps[d], img, kind)) found = static_cast<int>(d);
    if (found < 0) throw InvariantViolation("w_o times a dihedral class representative lies in no class");
    t.pairing.push_back(found);
  }
  return t;
}

}  // namespace coxinv::dihedral
