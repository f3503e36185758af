#pragma once

#include <algorithm>
#include <vector>

#include "seidel/creation.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

// Quotient of S over the equitable partition into the 2k runs of the
// creation sequence. Cells alternate 0-cells and 1-cells:
// (V_{s_1}, V_{t_1}, ..., V_{s_k}, V_{t_k}).
struct QuotientMatrix {
  std::vector<int> cell_sizes;
  DenseMatrix<long long> entries;

  std::size_t k() const { return cell_sizes.size() / 2; }
  std::size_t dim() const { return cell_sizes.size(); }
};

// Sign of every S entry between cells p and q (p != q, or distinct vertices
// of one cell): +1 when the later cell is a 0-cell, -1 when it is a 1-cell.
inline int cell_sign(std::size_t p, std::size_t q) { return (std::max(p, q) % 2 == 0) ? 1 : -1; }

// Entry (p, q) = cell_sign(p, q) * |C_q| off the diagonal; the diagonal is
// s_j - 1 on 0-cells and -(t_j - 1) on 1-cells.
QuotientMatrix quotient_matrix(const BlockForm& bf);

// D^{1/2} Q D^{-1/2} with D = diag(cell sizes); exactly symmetric.
DenseMatrix<double> symmetrize(const QuotientMatrix& q);

// The 2k eigenvalues of Q, ascending. They are pairwise distinct.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

// -1 is a (simple) eigenvalue of Q iff t_k = 1, with eigenvector (0, ..., 0, 1, s_k).
bool has_minus_one(const BlockForm& bf);
// +1 is a (simple) eigenvalue of Q iff s_1 = 1, with eigenvector (t_1, -1, 0, ..., 0).
bool has_plus_one(const BlockForm& bf);

// Exact Q eigenvectors for +-1 when the predicates hold; empty otherwise.
std::vector<long long> quotient_minus_one_vector(const BlockForm& bf);
std::vector<long long> quotient_plus_one_vector(const BlockForm& bf);

// n x 2k cell-indicator matrix P; S P = P Q.
DenseMatrix<long long> partition_indicator(const BlockForm& bf);

}  // namespace seidel
