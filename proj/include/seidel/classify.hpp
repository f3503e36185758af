#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidel/creation.hpp"
#include "seidel/int_poly.hpp"

namespace seidel {

// String patterns for threshold graphs with few distinct Seidel eigenvalues.
enum class DistinctClassKind {
  two_complete,  // 0 1^{n-1}
  two_star,      // 0^{n-1} 1
  four_type_a,   // 0 1^{t_1} 0^{s_2} 1
  four_type_b,   // 0^{s_1} 1^{t_1}, s_1 > 1, t_1 > 1
  five_type_a,   // 0 1^{t_1} 0^{s_2} 1^{t_2}, t_2 > 1
  five_type_b,   // 0^{s_1} 1^{t_1} 0^{s_2} 1, s_1 > 1
  general,
};

const char* to_string(DistinctClassKind kind);

struct DistinctClass {
  DistinctClassKind predicted = DistinctClassKind::general;
  std::optional<int> predicted_count;  // empty for `general`
  int observed_count = 0;
  std::size_t k = 0;

  bool agrees() const { return !predicted_count || *predicted_count == observed_count; }
};

// Pattern match only; does not look at the spectrum.
DistinctClassKind predict_class(const BlockForm& bf);
std::optional<int> predicted_count(DistinctClassKind kind);

// Prediction plus the distinct-eigenvalue count of the assembled spectrum.
// Throws VerificationError if the count is 3 or falls outside [2k, 2k + 2].
// A disagreement with the pattern prediction is reported through agrees().
DistinctClass classify(const CreationSequence& seq);

// The two eigenvalues of 0 1^{t1} 0^{s2} 1 other than +-1, larger first.
std::pair<double, double> four_type_a_roots(int t1, int s2);

struct CospectralPair {
  CreationSequence first;   // 0^{n-2} 1^2
  CreationSequence second;  // 0 1 0^{n-3} 1
  IntPoly charpoly;
};

// Throws DomainError for n < 4 and VerificationError if the fingerprints differ.
CospectralPair cospectral_pair(std::size_t n);

// x^2 + (4 - n) x + (7 - 3n), the factor shared by the pair beyond +-1.
IntPoly cospectral_pair_quadratic(std::size_t n);

struct CospectralClass {
  std::vector<CreationSequence> members;  // lexicographic
  std::vector<mpz_class> fingerprint;
};

constexpr std::size_t kDefaultSearchCap = 18;

struct SearchOptions {
  std::size_t cap = kDefaultSearchCap;
  unsigned jobs = 1;
};

// Groups all connected sequences of length n by fingerprint and returns
// every group of size >= 2, ordered by size then by first member.
std::vector<CospectralClass> cospectral_search(std::size_t n, const SearchOptions& options = {});

}  // namespace seidel
