#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "seidel/creation.hpp"
#include "seidel/oracle.hpp"

using namespace seidel;
using oracle::ExactMatrix;

namespace {

ExactMatrix exact(const std::vector<std::vector<int>>& rows) {
  return oracle::to_exact(DenseMatrix<int>::from_rows(rows));
}

IntPoly poly(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

}  // namespace

TEST_CASE("det_exact") {
  CHECK(oracle::det_exact(oracle::to_exact(seidel_matrix(parse_sequence("001111")))) == 11);
  CHECK(oracle::det_exact(ExactMatrix::identity(5)) == 1);
  CHECK(oracle::det_exact(exact({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == 2);
  CHECK(oracle::det_exact(exact({{0, 1}, {1, 0}})) == -1);
  CHECK(oracle::det_exact(exact({{1, 2}, {2, 4}})) == 0);
  CHECK(oracle::det_exact(exact({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})) == -1);
  CHECK(oracle::det_exact(ExactMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(oracle::det_exact(ExactMatrix(2, 3)), DomainError);
}

TEST_CASE("det_exact matches Leibniz on random small integer matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    DenseMatrix<int> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 && j == 0 ? 0 : 1);
    CHECK(oracle::det_exact(oracle::to_exact(m)) == brute::leibniz_det(m));
  }
}

TEST_CASE("charpoly_exact") {
  CHECK(oracle::charpoly_exact(oracle::to_exact(seidel_matrix(parse_sequence("0101")))) ==
        poly({5, 0, -6, 0, 1}));
  CHECK(oracle::charpoly_exact(ExactMatrix(1, 1)) == poly({0, 1}));
  CHECK(oracle::charpoly_exact(oracle::to_exact(seidel_matrix(parse_sequence("011")))) ==
        poly({2, -3, 0, 1}));
}

TEST_CASE("kernel_rank") {
  const auto s = oracle::to_exact(seidel_matrix(parse_sequence("01100111")));
  ExactMatrix plus = s, minus = s;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    plus(i, i) += 1;
    minus(i, i) -= 1;
  }
  CHECK(oracle::kernel_rank(plus) == 1);
  CHECK(oracle::kernel_rank(minus) == 4);
  CHECK(oracle::kernel_rank(ExactMatrix::identity(4)) == 0);
  CHECK(oracle::kernel_rank(ExactMatrix(3, 3)) == 3);
  // Zero leading column forces a skipped pivot column.
  CHECK(oracle::kernel_rank(exact({{0, 1, 2}, {0, 2, 4}, {0, 0, 1}})) == 1);
  CHECK(oracle::kernel_rank(exact({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 1);
}

TEST_CASE("eig_symmetric") {
  DenseMatrix<double> d(3, 3);
  d(0, 0) = 3;
  d(1, 1) = -1;
  d(2, 2) = 2;
  CHECK(oracle::eig_symmetric(d) == std::vector<double>{-1, 2, 3});

  const auto q = DenseMatrix<double>::from_rows({{1, -2}, {-2, -1}});
  const auto ev = oracle::eig_symmetric(q);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

  const auto k4 = oracle::eig_symmetric(seidel_matrix(parse_sequence("0111")).cast<double>());
  const std::vector<double> expected{-3, 1, 1, 1};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(k4[i] - expected[i]) < 1e-12);

  CHECK(oracle::eig_symmetric(DenseMatrix<double>(3, 3)) == std::vector<double>{0, 0, 0});
  CHECK_THROWS_AS(oracle::eig_symmetric(DenseMatrix<double>::from_rows({{0, 1}, {0.5, 0}})), DomainError);
}

TEST_CASE("eig_symmetric reports non-convergence when the sweep budget is zero") {
  oracle::JacobiOptions options;
  options.max_sweeps = 0;
  CHECK_THROWS_AS(oracle::eig_symmetric(DenseMatrix<double>::from_rows({{0, 1}, {1, 0}}), options),
                  VerificationError);
}

TEST_CASE("oracle routines agree on random +-1 symmetric matrices") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 8;
    const DenseMatrix<int> m = brute::random_seidel_like(n, rng);
    const ExactMatrix e = oracle::to_exact(m);
    const mpz_class det = oracle::det_exact(e);
    const mpz_class sign = n % 2 == 0 ? 1 : -1;
    CHECK(det == sign * oracle::charpoly_exact(e)(mpz_class(0)));

    const auto ev = oracle::eig_symmetric(m.cast<double>());
    double sum = 0, product = 1;
    for (double v : ev) {
      sum += v;
      product *= v;
    }
    CHECK(std::abs(sum) < 1e-9 * static_cast<double>(n));
    const double d = det.get_d();
    CHECK(std::abs(product - d) <= 1e-6 * std::max(1.0, std::abs(d)));

    std::size_t nonzero = 0;
    for (double v : ev) nonzero += std::abs(v) > 1e-8 ? 1 : 0;
    CHECK(oracle::kernel_rank(e) == n - nonzero);
  }
}
