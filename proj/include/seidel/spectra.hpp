#pragma once

#include <utility>
#include <vector>

#include "seidel/creation.hpp"
#include "seidel/quotient.hpp"

namespace seidel {

// Total multiplicities of -1 and +1 in S, quotient copies included:
//   n_{-1} = sum s_i - k + [t_k = 1],  n_{+1} = sum t_i - k + [s_1 = 1].
struct Multiplicities {
  int minus_one = 0;
  int plus_one = 0;
  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

Multiplicities multiplicities(const BlockForm& bf);

// Seidel spectrum split into the cell-sum-zero part (pure +-1 copies) and the
// 2k simple quotient eigenvalues. Quotient eigenvalues known to be exactly
// -1 or +1 are stored exactly.
struct Spectrum {
  int minus_one_mult = 0;  // copies outside the quotient part
  int plus_one_mult = 0;
  std::vector<double> quotient;  // ascending
  std::size_t n = 0;

  int total_minus_one() const;
  int total_plus_one() const;
  // Full multiset, ascending, n values.
  std::vector<double> eigenvalues() const;
  // Distinct values; +-1 copies merged symbolically, quotient values compared
  // with absolute tolerance.
  int distinct_count(double tolerance = 1e-7) const;
};

// Requires n >= 2.
Spectrum assemble_spectrum(const CreationSequence& seq);

struct EigvecFamily {
  int value = 0;
  std::vector<std::vector<long long>> vectors;
};

// X_j^i = e_1 + ... + e_j - j e_{j+1} in R^i, 1 <= j <= i - 1.
std::vector<long long> helmert_vector(int i, int j);

// Y-family (-1, from 0-cells) and Z-family (+1, from 1-cells). Every vector
// is checked exactly against S before returning; a failure throws
// VerificationError.
std::pair<EigvecFamily, EigvecFamily> eigvec_families(const CreationSequence& seq);

// P x: repeats x_c over every vertex of cell c.
template <typename T>
std::vector<T> lift_quotient_vector(const BlockForm& bf, const std::vector<T>& x) {
  const std::vector<int> sizes = bf.cell_sizes();
  if (x.size() != sizes.size())
    throw DomainError("quotient vector has " + std::to_string(x.size()) + " entries, expected " +
                      std::to_string(sizes.size()));
  std::vector<T> out;
  out.reserve(bf.n());
  for (std::size_t c = 0; c < sizes.size(); ++c) out.insert(out.end(), sizes[c], x[c]);
  return out;
}

// True iff S v = value * v holds exactly.
bool is_exact_eigenvector(const DenseMatrix<int>& s, const std::vector<long long>& v, int value);

}  // namespace seidel
