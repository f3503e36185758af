#include "seidel/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seidel {

Multiplicities multiplicities(const BlockForm& bf) {
  if (bf.k() == 0) throw DomainError("multiplicities need k >= 1");
  const int k = static_cast<int>(bf.k());
  const int sum_s = std::accumulate(bf.s.begin(), bf.s.end(), 0);
  const int sum_t = std::accumulate(bf.t.begin(), bf.t.end(), 0);
  return {sum_s - k + (has_minus_one(bf) ? 1 : 0), sum_t - k + (has_plus_one(bf) ? 1 : 0)};
}

int Spectrum::total_minus_one() const {
  return minus_one_mult + static_cast<int>(std::count(quotient.begin(), quotient.end(), -1.0));
}

int Spectrum::total_plus_one() const {
  return plus_one_mult + static_cast<int>(std::count(quotient.begin(), quotient.end(), 1.0));
}

std::vector<double> Spectrum::eigenvalues() const {
  std::vector<double> all(quotient);
  all.insert(all.end(), static_cast<std::size_t>(minus_one_mult), -1.0);
  all.insert(all.end(), static_cast<std::size_t>(plus_one_mult), 1.0);
  std::sort(all.begin(), all.end());
  return all;
}

int Spectrum::distinct_count(double tolerance) const {
  std::vector<double> values(quotient);
  if (minus_one_mult > 0 && std::find(values.begin(), values.end(), -1.0) == values.end())
    values.push_back(-1.0);
  if (plus_one_mult > 0 && std::find(values.begin(), values.end(), 1.0) == values.end())
    values.push_back(1.0);
  std::sort(values.begin(), values.end());
  int count = values.empty() ? 0 : 1;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] >= tolerance) ++count;
  return count;
}

namespace {

void snap(std::vector<double>& values, double target) {
  auto closest = std::min_element(values.begin(), values.end(), [target](double a, double b) {
    return std::abs(a - target) < std::abs(b - target);
  });
  if (std::abs(*closest - target) > 1e-6)
    throw VerificationError("quotient eigenvalue " + std::to_string(target) +
                            " predicted but not found");
  *closest = target;
}

}  // namespace

Spectrum assemble_spectrum(const CreationSequence& seq) {
  const BlockForm bf = block_form(seq);
  const int k = static_cast<int>(bf.k());
  Spectrum spec;
  spec.n = seq.size();
  spec.minus_one_mult = std::accumulate(bf.s.begin(), bf.s.end(), 0) - k;
  spec.plus_one_mult = std::accumulate(bf.t.begin(), bf.t.end(), 0) - k;
  spec.quotient = quotient_eigenvalues(quotient_matrix(bf));
  if (has_minus_one(bf)) snap(spec.quotient, -1.0);
  if (has_plus_one(bf)) snap(spec.quotient, 1.0);
  std::sort(spec.quotient.begin(), spec.quotient.end());
  return spec;
}

std::vector<long long> helmert_vector(int i, int j) {
  if (i < 2 || j < 1 || j > i - 1) throw DomainError("helmert_vector needs 1 <= j < i");
  std::vector<long long> x(static_cast<std::size_t>(i), 0);
  for (int l = 0; l < j; ++l) x[static_cast<std::size_t>(l)] = 1;
  x[static_cast<std::size_t>(j)] = -j;
  return x;
}

bool is_exact_eigenvector(const DenseMatrix<int>& s, const std::vector<long long>& v, int value) {
  if (s.cols() != v.size()) return false;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    long long acc = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) acc += s(i, j) * v[j];
    if (acc != value * v[i]) return false;
  }
  return true;
}

std::pair<EigvecFamily, EigvecFamily> eigvec_families(const CreationSequence& seq) {
  const BlockForm bf = block_form(seq);
  const std::vector<int> sizes = bf.cell_sizes();
  EigvecFamily minus{-1, {}};
  EigvecFamily plus{1, {}};
  std::size_t offset = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    EigvecFamily& family = c % 2 == 0 ? minus : plus;
    for (int j = 1; j < sizes[c]; ++j) {
      std::vector<long long> v(seq.size(), 0);
      const std::vector<long long> x = helmert_vector(sizes[c], j);
      std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(offset));
      family.vectors.push_back(std::move(v));
    }
    offset += static_cast<std::size_t>(sizes[c]);
  }

  const DenseMatrix<int> s = seidel_matrix(seq);
  for (const EigvecFamily* family : {&minus, &plus})
    for (const auto& v : family->vectors)
      if (!is_exact_eigenvector(s, v, family->value))
        throw VerificationError("constructed vector is not an eigenvector for " +
                                std::to_string(family->value));
  return {std::move(minus), std::move(plus)};
}

}  // namespace seidel
