#include "seidel/quotient.hpp"

#include <cmath>

#include "seidel/oracle.hpp"

namespace seidel {

QuotientMatrix quotient_matrix(const BlockForm& bf) {
  if (bf.k() == 0) throw DomainError("quotient matrix needs k >= 1");
  QuotientMatrix q{bf.cell_sizes(), {}};
  const std::size_t dim = q.dim();
  q.entries = DenseMatrix<long long>(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t c = 0; c < dim; ++c) {
      const long long size = q.cell_sizes[c];
      q.entries(p, c) = p == c ? cell_sign(p, p) * (size - 1) : cell_sign(p, c) * size;
    }
  }
  return q;
}

DenseMatrix<double> symmetrize(const QuotientMatrix& q) {
  const std::size_t dim = q.dim();
  DenseMatrix<double> m(dim, dim);
  for (std::size_t p = 0; p < dim; ++p) {
    m(p, p) = static_cast<double>(q.entries(p, p));
    for (std::size_t c = p + 1; c < dim; ++c) {
      const double v =
          cell_sign(p, c) * std::sqrt(static_cast<double>(q.cell_sizes[p]) * q.cell_sizes[c]);
      m(p, c) = v;
      m(c, p) = v;
    }
  }
  return m;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  return oracle::eig_symmetric(symmetrize(q));
}

bool has_minus_one(const BlockForm& bf) { return bf.t.back() == 1; }

bool has_plus_one(const BlockForm& bf) { return bf.s.front() == 1; }

std::vector<long long> quotient_minus_one_vector(const BlockForm& bf) {
  if (!has_minus_one(bf)) return {};
  std::vector<long long> x(2 * bf.k(), 0);
  x[x.size() - 2] = 1;
  x.back() = bf.s.back();
  return x;
}

std::vector<long long> quotient_plus_one_vector(const BlockForm& bf) {
  if (!has_plus_one(bf)) return {};
  std::vector<long long> x(2 * bf.k(), 0);
  x[0] = bf.t.front();
  x[1] = -1;
  return x;
}

DenseMatrix<long long> partition_indicator(const BlockForm& bf) {
  const std::vector<int> sizes = bf.cell_sizes();
  DenseMatrix<long long> p(bf.n(), sizes.size());
  std::size_t vertex = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c)
    for (int i = 0; i < sizes[c]; ++i) p(vertex++, c) = 1;
  return p;
}

}  // namespace seidel
