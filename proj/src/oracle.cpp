#include "seidel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel::oracle {

ExactMatrix to_exact(const DenseMatrix<int>& m) { return m.cast<mpz_class>(); }

mpz_class det_exact(const ExactMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  ExactMatrix a = m;
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPoly charpoly_exact(const ExactMatrix& m) {
  if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();

  // Forward-difference table of f(j) = det(jI - m), j = 0..n.
  std::vector<mpz_class> diffs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    ExactMatrix shifted(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) shifted(r, c) = (r == c ? mpz_class(j) : 0) - m(r, c);
    diffs[j] = det_exact(shifted);
  }
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t j = n; j >= level; --j) diffs[j] -= diffs[j - 1];

  // p(x) = sum_j diffs[j] * x(x-1)...(x-j+1) / j!
  std::vector<mpq_class> coeffs(n + 1);
  std::vector<mpz_class> falling{1};  // coefficients of x(x-1)...(x-j+1)
  mpz_class factorial = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j > 0) {
      factorial *= static_cast<unsigned long>(j);
      std::vector<mpz_class> next(falling.size() + 1);
      for (std::size_t i = 0; i < falling.size(); ++i) {
        next[i + 1] += falling[i];
        next[i] -= falling[i] * static_cast<unsigned long>(j - 1);
      }
      falling = std::move(next);
    }
    for (std::size_t i = 0; i < falling.size(); ++i) {
      coeffs[i] += mpq_class(diffs[j] * falling[i], factorial);
      coeffs[i].canonicalize();
    }
  }

  std::vector<mpz_class> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs[i].get_den() != 1)
      throw VerificationError("interpolated characteristic polynomial is not integral");
    out[i] = coeffs[i].get_num();
  }
  return IntPoly(std::move(out));
}

std::size_t kernel_rank(const ExactMatrix& m) {
  if (!m.square()) throw DomainError("kernel rank of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix a = m;
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(rank, j), a(pivot, j));
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class v = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, col) = 0;
    }
    previous = a(rank, col);
    ++rank;
  }
  return n - rank;
}

namespace {

double off_diagonal_norm(const DenseMatrix<double>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

double frobenius_norm(const DenseMatrix<double>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> eig_symmetric(const DenseMatrix<double>& m, const JacobiOptions& options) {
  if (!m.square()) throw DomainError("eigenvalues of a non-square matrix");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > options.symmetry_tolerance)
        throw DomainError("eig_symmetric: input is not symmetric");

  DenseMatrix<double> a = m;
  const double threshold = options.relative_tolerance * frobenius_norm(m);
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ == options.max_sweeps)
      throw VerificationError("eig_symmetric: no convergence within sweep budget");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace seidel::oracle
