#pragma once

#include <gmpxx.h>

#include <vector>

#include "seidel/creation.hpp"
#include "seidel/int_poly.hpp"

namespace seidel {

// Which coefficient multiplies (x + beta_{r-1})^2 * Phi_{r-2} in the
// three-term recurrence. Only `derived` is correct; `printed_statement`
// (coefficient 2) is kept for the regression guard that proves it wrong.
enum class RecurrenceVariant { derived, printed_statement };

// Characteristic polynomial det(xI - S) via
//   Phi_1 = x, Phi_2 = x^2 - 1,
//   Phi_r = 2 b Phi_{r-1} - b^2 Phi_{r-2},  b = x + beta_{r-1}.
// Exact; monic of degree n with vanishing x^{n-1} coefficient.
IntPoly char_poly(const CreationSequence& seq,
                  RecurrenceVariant variant = RecurrenceVariant::derived);

// Gaussian pivots of the tridiagonal matrix congruent to S:
//   d_1 = -2 beta_2, d_i = -2 beta_{i+1} - 1/d_{i-1} (2 <= i < n), d_n = -1/d_{n-1}.
// Requires n >= 2. Every d_i with i < n satisfies |d_i| > 1.
std::vector<mpq_class> pivot_sequence(const CreationSequence& seq);

// det(S) as the product of the pivots; 0 for the one-vertex graph.
mpz_class determinant(const CreationSequence& seq);

// Coefficient vector of char_poly, constant term first. Equal fingerprints
// are exactly Seidel cospectrality.
std::vector<mpz_class> fingerprint(const CreationSequence& seq);

}  // namespace seidel
