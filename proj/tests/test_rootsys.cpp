#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "coxinv/root_system.hpp"
#include "coxinv/weyl.hpp"

using namespace coxinv;

namespace {

using Coords = RootSystem::Coords;

std::vector<DiagramType> all_exact_types() {
  std::vector<DiagramType> v;
  for (int n = 1; n <= 8; ++n) v.push_back(DiagramType::A(n));
  for (int n = 2; n <= 7; ++n) v.push_back(DiagramType::B(n));
  for (int n = 2; n <= 7; ++n) v.push_back(DiagramType::C(n));
  for (int n = 4; n <= 8; ++n) v.push_back(DiagramType::D(n));
  for (int n = 6; n <= 8; ++n) v.push_back(DiagramType::E(n));
  v.push_back(DiagramType::F4());
  for (int m = 2; m <= 6; ++m) v.push_back(DiagramType::G2(m));
  v.push_back(DiagramType::H(3));
  v.push_back(DiagramType::H(4));
  return v;
}

std::string key(const Coords& v) {
  std::string k;
  for (const auto& x : v) k += x.to_string() + ";";
  return k;
}

Golden form(const Matrix<Golden>& g, const Coords& x, const Coords& y) {
  Golden s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
  return s;
}

// Closure of the simple roots under simple reflections, written out from the Gram matrix.
std::set<std::string> closure_oracle(const Matrix<Golden>& g) {
  const std::size_t n = g.rows();
  std::vector<Coords> queue;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    Coords e(n, Golden(0));
    e[i] = Golden(1);
    queue.push_back(e);
    seen.insert(key(e));
  }
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t i = 0; i < n; ++i) {
      Coords v = queue[h];
      Coords a(n, Golden(0));
      a[i] = Golden(1);
      const Golden c = Golden(2) * form(g, v, a) / g(i, i);
      v[i] -= c;
      if (seen.insert(key(v)).second) queue.push_back(v);
    }
  }
  return seen;
}

std::size_t expected_root_count(const DiagramType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank);
  switch (t.series) {
    case Series::A: return n * (n + 1);
    case Series::B:
    case Series::C: return 2 * n * n;
    case Series::D: return 2 * n * (n - 1);
    case Series::E: return n == 6 ? 72 : (n == 7 ? 126 : 240);
    case Series::F: return 48;
    case Series::G: return 2 * static_cast<std::size_t>(t.gonality);
    case Series::H: return n == 3 ? 30 : 120;
  }
  return 0;
}

Coords unit(std::size_t n, std::size_t i) {
  Coords e(n, Golden(0));
  e[i] = Golden(1);
  return e;
}

}  // namespace

TEST_CASE("type parsing") {
  CHECK(parse_type("E7") == DiagramType::E(7));
  CHECK(parse_type("BC5") == DiagramType::C(5));
  CHECK(parse_type("BC5", Realization::B) == DiagramType::B(5));
  CHECK(parse_type("G2:8") == DiagramType::G2(8));
  CHECK(parse_type("g2") == DiagramType::G2(6));
  CHECK(parse_type("I2:5") == DiagramType::G2(5));
  CHECK(parse_type("D6") == DiagramType::D(6));
  CHECK_THROWS_AS(parse_type("E9"), PreconditionError);
  CHECK_THROWS_AS(parse_type("X3"), PreconditionError);
  CHECK_THROWS_AS(parse_type("G2:1"), PreconditionError);
  CHECK_THROWS_AS(parse_type(""), PreconditionError);
}

TEST_CASE("node sets") {
  const NodeSet s = NodeSet::parse("{4, 1,3}");
  CHECK(s.to_string() == "{1,3,4}");
  CHECK(NodeSet::parse("{}").empty());
  CHECK(NodeSet::of({2}) < NodeSet::of({1, 2}));
  CHECK(NodeSet::of({1, 4}) < NodeSet::of({2, 3}));
  CHECK_THROWS_AS(NodeSet::parse("1,2"), PreconditionError);
  CHECK_THROWS_AS(NodeSet::parse("{1,,2}"), PreconditionError);
}

TEST_CASE("root counts match the closure oracle") {
  for (const auto& t : all_exact_types()) {
    INFO(t.name());
    const RootSystem R = RootSystem::build(t);
    CHECK(R.size() == expected_root_count(t));
    const auto positive_keys = closure_oracle(R.gram());
    std::set<std::string> built;
    for (std::size_t r = 0; r < R.size(); ++r) built.insert(key(R.root(static_cast<RootIndex>(r))));
    // the oracle closes the simple roots, which reaches every root
    CHECK(positive_keys == built);
  }
}

TEST_CASE("build examples") {
  CHECK(RootSystem::build(DiagramType::A(1)).size() == 2);
  CHECK(RootSystem::build(DiagramType::E(8)).size() == 240);
  CHECK(RootSystem::build(DiagramType::H(3)).size() == 30);
  CHECK_THROWS_AS(RootSystem::build(DiagramType::G2(7)), PreconditionError);
  CHECK_THROWS_AS(RootSystem::build(DiagramType{Series::E, 5, 0}), PreconditionError);
}

TEST_CASE("negation closure, reducedness, root order") {
  for (const auto& t : all_exact_types()) {
    INFO(t.name());
    const RootSystem R = RootSystem::build(t);
    const std::size_t n = static_cast<std::size_t>(R.rank());
    for (std::size_t r = 0; r < R.size(); ++r) {
      const auto ri = static_cast<RootIndex>(r);
      const auto& v = R.root(ri);
      Coords neg(n);
      for (std::size_t i = 0; i < n; ++i) neg[i] = -v[i];
      CHECK(R.root(R.negation(ri)) == neg);
      CHECK(R.is_positive(ri) != R.is_positive(R.negation(ri)));
    }
    // no root is a multiple c * beta with c != +-1
    for (std::size_t a = 0; a < R.size(); ++a)
      for (std::size_t b = 0; b < R.size(); ++b) {
        const auto& x = R.root(static_cast<RootIndex>(a));
        const auto& y = R.root(static_cast<RootIndex>(b));
        std::size_t p = 0;
        while (x[p].is_zero()) ++p;
        if (y[p].is_zero()) continue;
        const Golden c = y[p] / x[p];
        bool multiple = true;
        for (std::size_t i = 0; i < n && multiple; ++i) multiple = y[i] == c * x[i];
        if (multiple) CHECK((c == Golden(1) || c == Golden(-1)));
      }
    // heights weakly increase along the index order
    for (std::size_t r = 1; r < R.size(); ++r)
      CHECK(R.height(static_cast<RootIndex>(r - 1)) <= R.height(static_cast<RootIndex>(r)));
  }
}

TEST_CASE("every root is a W-image of a simple root") {
  for (const auto& t : all_exact_types()) {
    INFO(t.name());
    const RootSystem R = RootSystem::build(t);
    std::vector<bool> reached(R.size(), false);
    std::vector<RootIndex> queue;
    for (int i = 0; i < R.rank(); ++i) {
      reached[R.simple(i)] = true;
      queue.push_back(R.simple(i));
    }
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int i = 0; i < R.rank(); ++i) {
        const RootIndex img = R.simple_reflection(i)[queue[h]];
        if (!reached[img]) {
          reached[img] = true;
          queue.push_back(img);
        }
      }
    CHECK(queue.size() == R.size());
  }
}

TEST_CASE("reflect") {
  const RootSystem A2 = RootSystem::build(DiagramType::A(2));
  const RootIndex a1 = A2.simple(0), a2 = A2.simple(1);
  CHECK(A2.reflect(A2.root(a1), a1) == A2.root(A2.negation(a1)));
  CHECK(A2.reflect(A2.root(a2), a1) == Coords{Golden(1), Golden(1)});
  const RootSystem A3 = RootSystem::build(DiagramType::A(3));
  CHECK(A3.reflect(A3.root(A3.simple(0)), A3.simple(2)) == A3.root(A3.simple(0)));
  // the permutation table agrees with the vector formula
  const RootSystem F4 = RootSystem::build(DiagramType::F4());
  for (std::size_t r = 0; r < F4.size(); ++r)
    for (std::size_t s = 0; s < F4.size(); s += 7)
      CHECK(F4.root(F4.reflection(static_cast<RootIndex>(s))[r]) ==
            F4.reflect(F4.root(static_cast<RootIndex>(r)), static_cast<RootIndex>(s)));
}

TEST_CASE("subsystem in a subspace") {
  const RootSystem C5 = RootSystem::build(DiagramType::C(5));
  // +1-eigenspace of the reflection in alpha_5: the orthogonal complement of alpha_5
  const auto fixed = C5.subsystem_in_subspace(C5.orthogonal_complement({unit(5, 4)}));
  const auto a123 = C5.subsystem_in_subspace({unit(5, 0), unit(5, 1), unit(5, 2)});
  CHECK(a123.count() == 12);
  CHECK((fixed & a123) == a123);
  CHECK(C5.subsystem_type(a123) == SubsystemType{{DiagramType::A(3), LengthLabel::short_root}});
  CHECK(C5.subsystem_in_subspace({unit(5, 0), unit(5, 1), unit(5, 2), unit(5, 3), unit(5, 4)}).count() == C5.size());
  CHECK(C5.subsystem_in_subspace({}).count() == 0);
}

TEST_CASE("classify_subsystem examples") {
  const RootSystem E7 = RootSystem::build(DiagramType::E(7));
  RootSet pm(E7.size());
  pm.insert(E7.simple(0));
  pm.insert(E7.negation(E7.simple(0)));
  CHECK(E7.subsystem_type(pm) == SubsystemType{{DiagramType::A(1), LengthLabel::uniform}});

  const RootSystem D4 = RootSystem::build(DiagramType::D(4));
  CHECK(D4.subsystem_type(negated_roots(D4, longest_element(D4))) == SubsystemType{{DiagramType::D(4), LengthLabel::uniform}});

  const RootSystem C2 = RootSystem::build(DiagramType::C(2));
  RootSet shorts(C2.size());
  for (std::size_t r = 0; r < C2.size(); ++r)
    if (C2.norm(static_cast<RootIndex>(r)) == Golden(1)) shorts.insert(r);
  CHECK(shorts.count() == 4);
  const ComponentType ashort{DiagramType::A(1), LengthLabel::short_root};
  CHECK(C2.subsystem_type(shorts) == SubsystemType{ashort, ashort});

  RootSet lopsided(C2.size());
  lopsided.insert(C2.simple(0));
  CHECK_THROWS_AS(C2.classify_subsystem(lopsided), PreconditionError);
}

TEST_CASE("the whole root system classifies as its own type") {
  for (const auto& t : all_exact_types()) {
    INFO(t.name());
    const RootSystem R = RootSystem::build(t);
    const auto comps = R.subsystem_type(R.all_roots());
    if (t == DiagramType::G2(2)) {
      CHECK(comps.size() == 2);  // reducible: A1 + A1
      continue;
    }
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].type == t.canonical());
  }
}

TEST_CASE("subsystem types of node subsets") {
  const RootSystem E8 = RootSystem::build(DiagramType::E(8));
  const ComponentType a1{DiagramType::A(1), LengthLabel::uniform};
  CHECK(E8.node_subset_type(NodeSet::of({2, 3, 4, 5})) == SubsystemType{{DiagramType::D(4), LengthLabel::uniform}});
  CHECK(E8.node_subset_type(NodeSet::of({1, 4, 6, 8})) == SubsystemType{a1, a1, a1, a1});
  const RootSystem F4 = RootSystem::build(DiagramType::F4());
  CHECK(F4.node_subset_type(NodeSet::of({1, 2})) == SubsystemType{{DiagramType::A(2), LengthLabel::long_root}});
  CHECK(F4.node_subset_type(NodeSet::of({3, 4})) == SubsystemType{{DiagramType::A(2), LengthLabel::short_root}});
  CHECK(F4.node_subset_type(NodeSet::of({1, 2, 3})) == SubsystemType{{DiagramType::B(3), LengthLabel::uniform}});
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(DiagramType::A(3)).size() == 2);
  CHECK(diagram_automorphisms(DiagramType::E(7)).size() == 1);
  const auto d4 = diagram_automorphisms(DiagramType::D(4));
  CHECK(d4.size() == 6);
  for (const auto& p : d4) CHECK(p[1] == 1);  // node 2 is the branch node
  CHECK(diagram_automorphisms(DiagramType::E(6)).size() == 2);
  CHECK(diagram_automorphisms(DiagramType::C(4)).size() == 1);
  CHECK(diagram_automorphisms(DiagramType::F4()).size() == 1);
  CHECK(diagram_automorphisms(DiagramType::G2(5)).size() == 2);
}

TEST_CASE("-w_o as a diagram automorphism") {
  auto neg_w0 = [](const DiagramType& t) {
    const RootSystem R = RootSystem::build(t);
    return R.neg_w0_node_permutation(longest_element(R).perm());
  };
  CHECK(is_identity(neg_w0(DiagramType::E(7))));
  CHECK(neg_w0(DiagramType::A(3)) == NodePermutation{2, 1, 0});
  CHECK(neg_w0(DiagramType::E(6)) == NodePermutation{5, 1, 4, 3, 2, 0});
  CHECK(neg_w0(DiagramType::D(5)) == NodePermutation{0, 1, 2, 4, 3});
  CHECK(is_identity(neg_w0(DiagramType::D(6))));

  for (const auto& t : all_exact_types()) {
    INFO(t.name());
    const RootSystem R = RootSystem::build(t);
    const auto p = R.neg_w0_node_permutation(longest_element(R).perm());
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p[static_cast<std::size_t>(p[i])] == static_cast<int>(i));
      for (std::size_t j = 0; j < p.size(); ++j)
        CHECK(R.gram()(i, j) == R.gram()(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j])));
    }
  }
  const RootSystem A2 = RootSystem::build(DiagramType::A(2));
  CHECK_THROWS(A2.neg_w0_node_permutation(A2.simple_reflection(0)));
}

TEST_CASE("from_gram recognizes the type") {
  CHECK(RootSystem::from_gram(gram_matrix(DiagramType::F4())).type() == DiagramType::F4());
  CHECK(RootSystem::from_gram(gram_matrix(DiagramType::B(3))).type() == DiagramType::B(3));
  CHECK(RootSystem::from_gram(gram_matrix(DiagramType::C(3))).type() == DiagramType::C(3));
  CHECK(RootSystem::from_gram(gram_matrix(DiagramType::H(4))).type() == DiagramType::H(4));
}
