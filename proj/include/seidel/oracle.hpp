#pragma once

#include <gmpxx.h>

#include <vector>

#include "seidel/int_poly.hpp"
#include "seidel/matrix.hpp"

// Brute-force linear algebra with no knowledge of threshold structure. The
// closed forms elsewhere in the library are checked against these routines.
namespace seidel::oracle {

using ExactMatrix = DenseMatrix<mpz_class>;

ExactMatrix to_exact(const DenseMatrix<int>& m);

// Bareiss fraction-free elimination with row exchanges.
mpz_class det_exact(const ExactMatrix& m);

// det(xI - m) by evaluating at x = 0..n with det_exact and interpolating
// through Newton forward differences.
IntPoly charpoly_exact(const ExactMatrix& m);

// Dimension of the rational null space.
std::size_t kernel_rank(const ExactMatrix& m);

struct JacobiOptions {
  double relative_tolerance = 1e-13;  // on the off-diagonal Frobenius norm
  int max_sweeps = 64;
  double symmetry_tolerance = 1e-12;
};

// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
// ascending. Throws DomainError for non-symmetric input and
// VerificationError if the sweep budget runs out.
std::vector<double> eig_symmetric(const DenseMatrix<double>& m, const JacobiOptions& options = {});

}  // namespace seidel::oracle
