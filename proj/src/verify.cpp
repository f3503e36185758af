#include "seidel/verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "seidel/charpoly.hpp"
#include "seidel/oracle.hpp"
#include "seidel/quotient.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

namespace {

constexpr double kSpectrumTolerance = 1e-8;
constexpr double kSimplicityGap = 1e-8;
constexpr double kMembershipTolerance = 1e-9;

class Recorder {
 public:
  Recorder(const CreationSequence& seq, VerifyReport& report) : seq_(seq), report_(report) {}

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    if (ok) {
      ++report_.passed[name];
    } else {
      report_.failures.push_back(seq_.str() + ": " + name + (detail.empty() ? "" : " (" + detail + ")"));
    }
  }

 private:
  const CreationSequence& seq_;
  VerifyReport& report_;
};

oracle::ExactMatrix shifted(const DenseMatrix<int>& s, int shift) {
  oracle::ExactMatrix m = oracle::to_exact(s);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += shift;
  return m;
}

bool seidel_shape_ok(const DenseMatrix<int>& s, const DenseMatrix<int>& a) {
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j) {
      const int expected = (i == j ? 0 : 1) - 2 * a(i, j);
      if (s(i, j) != expected || s(i, j) != s(j, i)) return false;
      if (i != j && s(i, j) != 1 && s(i, j) != -1) return false;
    }
  return true;
}

bool multisets_close(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void verify_quotient(const BlockForm& bf, const DenseMatrix<int>& s,
                     const std::vector<double>& oracle_values, Recorder& rec) {
  const QuotientMatrix q = quotient_matrix(bf);
  const DenseMatrix<long long> p = partition_indicator(bf);
  rec.check("quotient_lifting", s.cast<long long>() * p == p * q.entries);

  const std::vector<double> values = quotient_eigenvalues(q);
  double gap = INFINITY;
  for (std::size_t i = 1; i < values.size(); ++i) gap = std::min(gap, values[i] - values[i - 1]);
  rec.check("quotient_simple", gap > kSimplicityGap, "min gap " + std::to_string(gap));

  bool subset = true;
  for (double v : values) {
    const bool found = std::any_of(oracle_values.begin(), oracle_values.end(),
                                   [v](double o) { return std::abs(o - v) < kMembershipTolerance; });
    subset = subset && found;
  }
  rec.check("quotient_subset", subset);

  auto contains = [&](double target) {
    return std::any_of(values.begin(), values.end(),
                       [target](double v) { return std::abs(v - target) < kMembershipTolerance; });
  };
  rec.check("quotient_minus_one", contains(-1.0) == has_minus_one(bf));
  rec.check("quotient_plus_one", contains(1.0) == has_plus_one(bf));

  const auto minus_x = quotient_minus_one_vector(bf);
  const auto plus_x = quotient_plus_one_vector(bf);
  bool lifted_ok = true;
  if (!minus_x.empty()) lifted_ok = lifted_ok && is_exact_eigenvector(s, lift_quotient_vector(bf, minus_x), -1);
  if (!plus_x.empty()) lifted_ok = lifted_ok && is_exact_eigenvector(s, lift_quotient_vector(bf, plus_x), 1);
  rec.check("quotient_pm1_vectors", lifted_ok);
}

void verify_eigvecs(const CreationSequence& seq, const BlockForm& bf, Recorder& rec) {
  const auto [minus, plus] = eigvec_families(seq);
  std::vector<std::vector<long long>> all = minus.vectors;
  all.insert(all.end(), plus.vectors.begin(), plus.vectors.end());
  // Cell indicators stand in for every lifted quotient vector.
  const DenseMatrix<long long> p = partition_indicator(bf);
  for (std::size_t c = 0; c < p.cols(); ++c) {
    std::vector<long long> col(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) col[r] = p(r, c);
    all.push_back(std::move(col));
  }
  bool orthogonal = true;
  const std::size_t families = minus.vectors.size() + plus.vectors.size();
  for (std::size_t i = 0; i < families; ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) orthogonal = orthogonal && dot(all[i], all[j]) == 0;
  rec.check("eigvec_orthogonal", orthogonal);
  rec.check("eigvec_complete", all.size() == seq.size());
}

}  // namespace

void verify_sequence(const CreationSequence& seq, VerifyReport& report) {
  Recorder rec(seq, report);
  const std::size_t n = seq.size();
  try {
    const DenseMatrix<int> s = seidel_matrix(seq);
    rec.check("seidel_matrix", seidel_shape_ok(s, adjacency_matrix(seq)));

    const oracle::ExactMatrix exact = oracle::to_exact(s);
    const IntPoly phi = char_poly(seq);
    rec.check("char_poly", phi == oracle::charpoly_exact(exact));
    rec.check("char_poly_shape", phi.degree() == static_cast<int>(n) && phi.leading() == 1 &&
                                     (n < 2 || phi.coeff(n - 1) == 0));

    const mpz_class det = determinant(seq);
    const mpz_class sign = n % 2 == 0 ? 1 : -1;
    rec.check("determinant", det == oracle::det_exact(exact) && det == sign * phi(mpz_class(0)),
              det.get_str());
    if (n < 2) return;

    const auto pivots = pivot_sequence(seq);
    bool bounded = true;
    for (std::size_t i = 0; i + 1 < pivots.size(); ++i) bounded = bounded && abs(pivots[i]) > 1;
    rec.check("pivot_bound", bounded);

    const BlockForm bf = block_form(seq);
    const Multiplicities mult = multiplicities(bf);
    rec.check("multiplicity_minus_one",
              static_cast<std::size_t>(mult.minus_one) == oracle::kernel_rank(shifted(s, 1)));
    rec.check("multiplicity_plus_one",
              static_cast<std::size_t>(mult.plus_one) == oracle::kernel_rank(shifted(s, -1)));

    const std::vector<double> oracle_values = oracle::eig_symmetric(s.cast<double>());
    const Spectrum spectrum = assemble_spectrum(seq);
    rec.check("spectrum", multisets_close(spectrum.eigenvalues(), oracle_values, kSpectrumTolerance));
    rec.check("spectrum_pm1_totals", spectrum.total_minus_one() == mult.minus_one &&
                                         spectrum.total_plus_one() == mult.plus_one);

    verify_quotient(bf, s, oracle_values, rec);
    verify_eigvecs(seq, bf, rec);

    const DistinctClass cls = classify(seq);
    rec.check("distinct_range", true);
    if (!cls.agrees())
      report.pattern_exceptions.push_back(
          {seq.str(), cls.predicted, *cls.predicted_count, cls.observed_count});
  } catch (const std::exception& e) {
    rec.check("exception", false, e.what());
  }
}

VerifyReport run_verification(std::size_t max_n, unsigned jobs) {
  if (max_n < 1 || max_n > kMaxVerifyLength)
    throw DomainError("verify length must lie in [1, " + std::to_string(kMaxVerifyLength) + "], got " +
                      std::to_string(max_n));
  std::vector<CreationSequence> all{CreationSequence::from_bits("0")};
  for (std::size_t n = 2; n <= max_n; ++n)
    for (const auto& seq : enumerate_sequences(n)) all.push_back(seq);

  jobs = std::max(1u, jobs);
  std::vector<VerifyReport> partial(jobs);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < all.size(); i += jobs) verify_sequence(all[i], partial[w]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w);
    for (auto& t : workers) t.join();
  }

  VerifyReport report;
  report.max_n = max_n;
  report.sequences = all.size();
  for (auto& part : partial) {
    for (const auto& [name, count] : part.passed) report.passed[name] += count;
    report.failures.insert(report.failures.end(), part.failures.begin(), part.failures.end());
    report.pattern_exceptions.insert(report.pattern_exceptions.end(), part.pattern_exceptions.begin(),
                                     part.pattern_exceptions.end());
  }
  std::sort(report.failures.begin(), report.failures.end());
  std::sort(report.pattern_exceptions.begin(), report.pattern_exceptions.end(),
            [](const PatternException& a, const PatternException& b) {
              if (a.sequence.size() != b.sequence.size()) return a.sequence.size() < b.sequence.size();
              return a.sequence < b.sequence;
            });
  return report;
}

}  // namespace seidel
