// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "coxinv/coxinv.hpp"

using namespace coxinv;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) notes << what;
    else if (notes.tellp() < 400) notes << "; " << what;
    pass = false;
  }
};

ClassifyOptions exhaustive() {
  ClassifyOptions o;
  o.mode = ClassifyMode::exhaustive;
  return o;
}

int dim_minus_linear(const RootSystem& R, const Permutation& w) {
  Matrix<Golden> m(static_cast<std::size_t>(R.rank()), static_cast<std::size_t>(R.rank()));
  for (int i = 0; i < R.rank(); ++i) {
    const auto& col = R.root(w[R.simple(i)]);
    for (std::size_t r = 0; r < col.size(); ++r) m(r, static_cast<std::size_t>(i)) = col[r];
  }
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += Golden(1);
  return R.rank() - static_cast<int>(rank(m));
}

// 1. w_o = -1 exactly for the expected types
void longest_is_minus_one(Outcome& o) {
  struct Row {
    DiagramType t;
    bool minus_one;
  };
  std::vector<Row> rows = {{DiagramType::A(1), true}, {DiagramType::D(4), true}, {DiagramType::D(6), true},
                           {DiagramType::E(7), true}, {DiagramType::E(8), true}, {DiagramType::F4(), true},
                           {DiagramType::H(3), true}, {DiagramType::H(4), true}, {DiagramType::D(5), false},
                           {DiagramType::D(7), false}, {DiagramType::E(6), false}};
  for (int r = 2; r <= 7; ++r) rows.push_back({DiagramType::C(r), true});
  for (int r = 2; r <= 8; ++r) rows.push_back({DiagramType::A(r), false});
  for (const auto& row : rows) {
    const RootSystem R = RootSystem::build(row.t);
    o.expect(is_minus_one(R, longest_element(R)) == row.minus_one, row.t.name());
  }
  for (int n = 2; n <= 24; ++n) {
    const dihedral::Group G(n);
    o.expect(G.is_minus_one(G.longest()) == (n % 2 == 0), "G2(" + std::to_string(n) + ")");
    const DiagramType t = DiagramType::G2(n);
    if (has_exact_realization(t)) {
      const RootSystem R = RootSystem::build(t);
      o.expect(is_minus_one(R, longest_element(R)) == (n % 2 == 0), t.name() + " (vectors)");
    }
  }
}

// 2. every involution is conjugate to a standard one
void standard_representatives(Outcome& o) {
  std::vector<DiagramType> types;
  for (int r = 1; r <= 8; ++r) types.push_back(DiagramType::A(r));
  for (int r = 2; r <= 7; ++r) types.push_back(DiagramType::C(r));
  for (int r = 4; r <= 7; ++r) types.push_back(DiagramType::D(r));
  for (const auto& t : {DiagramType::E(6), DiagramType::E(7), DiagramType::F4(), DiagramType::H(3), DiagramType::H(4)})
    types.push_back(t);
  for (int m = 2; m <= 6; ++m) types.push_back(DiagramType::G2(m));
  for (const auto& t : types) {
    const RootSystem R = RootSystem::build(t);
    const ClassTable table = classify(R, full_group(R), exhaustive());
    o.expect(table.coverage_verified, t.name() + ": classes miss involutions");
    for (const auto& c : table.classes)
      o.expect(!c.standard_reps.empty(), t.name() + ": class without a standard representative");
  }
}

// 3. eigenspace dimensions by orbit counting
void orbit_counts(Outcome& o) {
  std::vector<DiagramType> types;
  for (int r = 1; r <= 8; ++r) types.push_back(DiagramType::A(r));
  for (int r = 2; r <= 6; ++r) types.push_back(DiagramType::C(r));
  for (int r = 4; r <= 7; ++r) types.push_back(DiagramType::D(r));
  for (const auto& t : {DiagramType::E(6), DiagramType::E(7), DiagramType::F4(), DiagramType::H(3), DiagramType::H(4)})
    types.push_back(t);
  for (const auto& t : types) {
    const RootSystem R = RootSystem::build(t);
    const GroupElement w0 = longest_element(R);
    const NodePermutation neg_w0 = R.neg_w0_node_permutation(w0.perm());
    for (NodeSet I : all_subsets(R.rank())) {
      const GroupElement wI = longest_parabolic(R, I);
      o.expect(dim_minus_orbits(R, I, OrbitVariant::parabolic) == dim_minus_linear(R, wI.perm()),
               t.name() + " " + I.to_string() + " (parabolic)");
      if (permute_nodes(neg_w0, I) == I)
        o.expect(dim_minus_orbits(R, I, OrbitVariant::opposite) == dim_minus_linear(R, compose(w0, wI).perm()),
                 t.name() + " " + I.to_string() + " (opposite)");
    }
  }
  for (const auto& t : {DiagramType::A(3), DiagramType::A(4), DiagramType::A(5), DiagramType::A(6), DiagramType::D(4),
                        DiagramType::D(5), DiagramType::D(6), DiagramType::E(6)}) {
    const RootSystem R = RootSystem::build(t);
    const Permutation neg = R.negation_permutation();
    for (const auto& sigma : diagram_automorphisms(t)) {
      if (is_identity(sigma)) continue;
      bool order2 = true;
      for (std::size_t i = 0; i < sigma.size(); ++i) order2 = order2 && sigma[static_cast<std::size_t>(sigma[i])] == static_cast<int>(i);
      if (!order2) continue;
      const Permutation sroots = R.diagram_root_permutation(sigma);
      for (NodeSet I : all_subsets(R.rank())) {
        if (!(permute_nodes(sigma, I) == I)) continue;
        const Permutation x = compose(sroots, compose(neg, longest_parabolic(R, I).perm()));
        if (!GroupElement(x).is_involution()) continue;
        o.expect(dim_minus_orbits(R, I, OrbitVariant::automorphism, sigma) == dim_minus_linear(R, x),
                 t.name() + " " + I.to_string() + " (automorphism)");
      }
    }
  }
}

// 4. closed-form eigenspace dimensions for the classical patterns
void classical_dims(Outcome& o) {
  for (int n = 1; n <= 6; ++n)
    for (auto fam : {PatternFamily::A_even, PatternFamily::A_odd, PatternFamily::BC, PatternFamily::D}) {
      if (fam != PatternFamily::A_even && n < 2) continue;
      const bool d_odd = fam == PatternFamily::D && (n + 1) % 2 == 1;
      if (fam == PatternFamily::D && !d_odd) continue;
      const RootSystem R = RootSystem::build(pattern_ambient({fam, n, 0, 0}));
      const GroupElement w0 = longest_element(R);
      for (auto [k, l] : pattern_indices(n)) {
        std::pair<int, int> want;
        if (fam == PatternFamily::A_even || fam == PatternFamily::A_odd) want = {2 * k + l, n - l};
        else if (fam == PatternFamily::BC || l % 2 == 0) want = {k + l, n - k - l};
        else want = {k + l + 1, n - k - l + 1};
        const GroupElement c = longest_parabolic(R, pattern_nodes({fam, n, k, l}));
        const std::pair<int, int> got{dim_minus(R, c), dim_minus(R, compose(w0, c))};
        o.expect(got == want, R.type().name() + " c(" + std::to_string(k) + "," + std::to_string(l) + ")");
      }
    }
}

// 5. printed tables verify
void tables_verify(Outcome& o) {
  std::vector<DiagramType> types = {DiagramType::F4(), DiagramType::H(3), DiagramType::H(4), DiagramType::E(6),
                                    DiagramType::E(7)};
  for (int n = 1; n <= 4; ++n) {
    types.push_back(DiagramType::A(2 * n));
    if (n >= 2) types.push_back(DiagramType::A(2 * n - 1));
  }
  for (int n = 2; n <= 6; ++n) types.push_back(DiagramType::C(n));
  for (int r = 4; r <= 8; ++r) types.push_back(DiagramType::D(r));
  for (const auto& t : types) {
    const VerifyReport r = verify(expected_table(t));
    o.expect(r.passed(), t.name());
  }
}

// 6. E8 by orbit classification
void e8_orbit(Outcome& o) {
  VerifyOptions opts;
  opts.classify.mode = ClassifyMode::orbit;
  const VerifyReport r = verify(expected_table(DiagramType::E(8)), opts);
  o.expect(r.lines.size() == 6, "E8 table has " + std::to_string(r.lines.size()) + " lines");
  for (const auto& l : r.lines) o.expect(l.pass, "E8 line " + std::to_string(l.number) + ": " + l.detail);
  o.expect(r.passed(), "E8 checks");
  const auto c5 = r.table.class_of(NodeSet::of({1, 4, 6, 8}));
  const auto c6 = r.table.class_of(NodeSet::of({2, 3, 4, 5}));
  o.expect(c5 && c6 && *c5 != *c6, "E8 lines 5 and 6 not separated");
  if (c5 && c6) {
    const SubsystemType a1x4(4, ComponentType{DiagramType::A(1), LengthLabel::uniform});
    o.expect(r.table.classes[static_cast<std::size_t>(*c5)].neg_type == a1x4, "E8 line 5 neg type");
    o.expect(r.table.classes[static_cast<std::size_t>(*c6)].neg_type ==
                 SubsystemType{ComponentType{DiagramType::D(4), LengthLabel::uniform}},
             "E8 line 6 neg type");
    o.expect(r.table.classes[static_cast<std::size_t>(*c5)].dim_minus == 4 &&
                 r.table.classes[static_cast<std::size_t>(*c6)].dim_minus == 4,
             "E8 lines 5 and 6 dims");
  }
}

// 7. folding
void folding(Outcome& o) {
  struct Row {
    DiagramType ambient, folded;
  };
  const std::vector<Row> rows = {{DiagramType::A(4), DiagramType::C(2)}, {DiagramType::A(6), DiagramType::C(3)},
                                 {DiagramType::A(5), DiagramType::C(3)}, {DiagramType::A(7), DiagramType::C(4)},
                                 {DiagramType::D(5), DiagramType::C(4)}, {DiagramType::E(6), DiagramType::F4()}};
  for (const auto& row : rows) {
    const RootSystem R = RootSystem::build(row.ambient);
    const Folding f = fold(R, neg_longest_parabolic_action(R, NodeSet::all(R.rank())));
    const std::string name = row.ambient.name();
    o.expect(f.folded_type().same_coxeter_type(row.folded), name + " folds to " + f.folded_type().name());
    o.expect(iota_relations_hold(f), name + ": relations");
    const auto image = iota_image(f, 3'000'000);
    o.expect(image.size() == weyl_group_order(f.folded_type()), name + ": iota not injective");
    o.expect(image == sigma_fixed_elements(f, 3'000'000), name + ": image is not the fixed subgroup");
    for (NodeSet I : admissible_subsets(f)) {
      o.expect(longest_words_compatible(f, I), name + " " + I.to_string() + ": longest words");
      o.expect(parabolic_compatible(f, I, 3'000'000), name + " " + I.to_string() + ": parabolic");
    }
  }
}

// 8. dihedral groups
void dihedral_groups(Outcome& o) {
  for (int n = 2; n <= 12; n += 2) {
    const ClassTable t = dihedral::classify(n, SubgroupKind::full);
    const bool swapped = t.pairing[1] == 2;
    o.expect(swapped == (n % 4 == 2), "I2(" + std::to_string(n) + ") swap");
    const VerifyReport r = verify(expected_table(DiagramType::G2(n)));
    o.expect(r.passed(), "I2(" + std::to_string(n) + ") verify");
    o.expect(r.flags.size() == 1, "I2(" + std::to_string(n) + ") flag missing");
  }
  for (int n = 3; n <= 23; n += 2) {
    const dihedral::Group G(n);
    o.expect(G.subgroup(SubgroupKind::centralizer_of_w0).size() == 2, "I2(" + std::to_string(n) + ") W_o");
    const VerifyReport r = verify(expected_table(DiagramType::G2(n)));
    o.expect(r.passed() && r.lines.size() == 1, "I2(" + std::to_string(n) + ") table");
  }
}

// 9. properties over every group of order at most 51840
void properties(Outcome& o) {
  std::vector<DiagramType> types;
  for (int r = 1; r <= 7; ++r) types.push_back(DiagramType::A(r));
  for (int r = 2; r <= 6; ++r) types.push_back(DiagramType::C(r));
  for (int r = 3; r <= 6; ++r) types.push_back(DiagramType::B(r));
  for (int r = 4; r <= 6; ++r) types.push_back(DiagramType::D(r));
  for (const auto& t : {DiagramType::E(6), DiagramType::F4(), DiagramType::H(3), DiagramType::H(4), DiagramType::G2(4),
                        DiagramType::G2(6)})
    types.push_back(t);
  std::mt19937 rng(1);
  for (const auto& t : types) {
    const RootSystem R = RootSystem::build(t);
    const std::string name = t.name();
    std::vector<Permutation> all, invs;
    const Permutation id = identity_root_permutation(R.size());
    for_each_element(R, 3'000'000, [&](const Permutation& p) {
      all.push_back(p);
      if (compose(p, p) == id) invs.push_back(p);
    });
    std::unordered_map<RootSet, Permutation, RootSetHash> by_neg;
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (const auto& p : invs) {
      const GroupElement w(p);
      const RootSet neg = negated_roots(R, w);
      const auto [it, fresh] = by_neg.emplace(neg, p);
      o.expect(fresh || it->second == p, name + ": negated set shared");
      const Permutation& x = all[pick(rng)];
      RootSet moved(R.size());
      neg.for_each([&](std::size_t r) { moved.insert(x[r]); });
      o.expect(negated_roots(R, GroupElement(conjugate(x, p))) == moved, name + ": transport");
      o.expect(dim_minus(R, w) == dim_minus_trace(R, w), name + ": rank vs trace");
    }
    const GroupElement w0 = longest_element(R);
    const bool central = is_minus_one(R, w0);
    const ClassTable table = classify_with_pairing(R, central ? full_group(R) : centralizer_of_w0(R), exhaustive());
    for (std::size_t i = 0; i < table.pairing.size(); ++i)
      o.expect(table.pairing[static_cast<std::size_t>(table.pairing[i])] == static_cast<int>(i), name + ": pairing");
    std::uint64_t count = 0, located = 0;
    for (const auto& p : invs) {
      const GroupElement w(p);
      if (!central && !(compose(w, w0) == compose(w0, w))) continue;
      ++count;
      located += table.locate(R, w) ? 1 : 0;
    }
    o.expect(table.coverage_verified && count == located && count == *table.involution_count, name + ": coverage");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"w_o = -1 exactly for the expected types", longest_is_minus_one},
      {"every involution is conjugate to a standard one", standard_representatives},
      {"orbit counts give eigenspace dimensions", orbit_counts},
      {"closed-form dimensions of classical patterns", classical_dims},
      {"printed pairing tables verify", tables_verify},
      {"E8 table verifies by orbit classification", e8_orbit},
      {"folding isomorphisms and compatibilities", folding},
      {"dihedral groups", dihedral_groups},
      {"property suites on groups of order <= 51840", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%.1f s)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.pass ? "" : ": ", o.notes.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
