#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "coxinv/algebra.hpp"
#include "coxinv/diagram.hpp"

using namespace coxinv;

namespace {

Golden random_golden(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return Golden(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

// Plain Gaussian elimination over Q that pivots from the last column backwards.
std::size_t rank_by_reverse_pivoting(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t cc = cols; cc-- > 0 && r < rows;) {
    std::size_t p = r;
    while (p < rows && m[p][cc] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][cc] == 0) continue;
      const Rational f = m[i][cc] / m[r][cc];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
  const Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), PreconditionError);
}

TEST_CASE("golden field axioms on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Golden x = random_golden(rng), y = random_golden(rng), z = random_golden(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == Golden(0));
    if (!x.is_zero()) CHECK(x * x.inverse() == Golden(1));
  }
}

TEST_CASE("golden product matches the float evaluation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Golden x = random_golden(rng), y = random_golden(rng);
    const double fx = to_double(x.rational_part()) + to_double(x.phi_part()) * kPhi;
    const double fy = to_double(y.rational_part()) + to_double(y.phi_part()) * kPhi;
    CHECK(std::abs((x * y).to_double() - fx * fy) < 1e-9);
    // (a + b phi)(c + d phi) = (ac + bd) + (ad + bc + bd) phi
    const Rational a = x.rational_part(), b = x.phi_part(), c = y.rational_part(), d = y.phi_part();
    CHECK((x * y) == Golden(Rational(a * c + b * d), Rational(a * d + b * c + b * d)));
  }
  CHECK(Golden::phi() * Golden::phi() == Golden::phi() + Golden(1));
}

TEST_CASE("golden sign is exact near zero") {
  // phi - 1.618034 is tiny and positive; 1 - phi is negative
  CHECK((Golden::phi() - Golden(make_rational(1618033, 1000000))).sign() == 1);
  CHECK((Golden::phi() - Golden(make_rational(1618034, 1000000))).sign() == -1);
  CHECK((Golden(1) - Golden::phi()).sign() == -1);
  CHECK(Golden(0).sign() == 0);
}

TEST_CASE("rank of basic matrices") {
  CHECK(rank(Matrix<Golden>::identity(2)) == 2);
  CHECK(rank(Matrix<Golden>(3, 4)) == 0);
  Matrix<Golden> m(2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 3;
  m(1, 0) = 2, m(1, 1) = 4, m(1, 2) = 6;
  CHECK(rank(m) == 1);
}

TEST_CASE("H3 Gram matrix has full rank and is positive definite") {
  const auto g = gram_matrix(DiagramType::H(3));
  CHECK(rank(g) == 3);
  CHECK(is_positive_definite(g));
  // the 5-bond entry is -phi/2 for unit roots
  CHECK(g(0, 1) == Golden(Rational(0), make_rational(-1, 2)));
}

TEST_CASE("rank agrees with an independent elimination order") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> entry(-3, 3), dim(1, 6), sparse(0, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<Rational>> raw(rows, std::vector<Rational>(cols));
    Matrix<Golden> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const long v = sparse(rng) == 0 ? 0 : entry(rng);
        raw[i][j] = v;
        m(i, j) = Golden(v);
      }
    // duplicate a row now and then to force rank deficiency
    if (rows > 1 && trial % 3 == 0) {
      raw[rows - 1] = raw[0];
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j);
    }
    CHECK(rank(m) == rank_by_reverse_pivoting(raw));
  }
}

TEST_CASE("trace") {
  CHECK(trace(Matrix<Golden>::identity(5)) == Golden(5));
  // s1 in A2, simple-root basis: s1(a1) = -a1, s1(a2) = a1 + a2
  Matrix<Golden> s1(2, 2);
  s1(0, 0) = -1, s1(0, 1) = 1, s1(1, 0) = 0, s1(1, 1) = 1;
  CHECK(trace(s1) == Golden(0));
  CHECK_THROWS_AS(trace(Matrix<Golden>(2, 3)), PreconditionError);
}

TEST_CASE("nullspace vectors are annihilated") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix<Golden> m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = Golden(make_rational(entry(rng)), make_rational(entry(rng)));
    const auto basis = nullspace(m);
    CHECK(basis.size() + rank(m) == 5);
    for (const auto& v : basis) {
      const auto mv = m * v;
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("echelon basis membership") {
  EchelonBasis<Golden> b(3);
  CHECK(b.insert({Golden(1), Golden(1), Golden(0)}));
  CHECK(b.insert({Golden(0), Golden(1), Golden(1)}));
  CHECK_FALSE(b.insert({Golden(1), Golden(2), Golden(1)}));
  CHECK(b.contains({Golden(2), Golden(1), Golden(-1)}));
  CHECK_FALSE(b.contains({Golden(0), Golden(0), Golden(1)}));
  CHECK(b.size() == 2);
}

TEST_CASE("positive definiteness") {
  Matrix<Golden> m(2, 2);
  m(0, 0) = 2, m(0, 1) = -1, m(1, 0) = -1, m(1, 1) = 2;
  CHECK(is_positive_definite(m));
  m(0, 1) = -2, m(1, 0) = -2;  // affine A1
  CHECK_FALSE(is_positive_definite(m));
}
