#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "seidel/classify.hpp"
#include "seidel/creation.hpp"

namespace seidel {

constexpr std::size_t kMaxVerifyLength = 16;

struct PatternException {
  std::string sequence;
  DistinctClassKind predicted = DistinctClassKind::general;
  int predicted_count = 0;
  int observed_count = 0;
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::size_t sequences = 0;
  std::map<std::string, std::size_t> passed;  // check name -> sequences passing
  std::vector<std::string> failures;
  // Graphs whose distinct-eigenvalue count differs from the string-pattern
  // prediction. Reported, not counted as failures.
  std::vector<PatternException> pattern_exceptions;

  bool ok() const { return failures.empty(); }
};

// Every closed form against the brute-force oracle for one sequence.
// Appends to report.passed / report.failures.
void verify_sequence(const CreationSequence& seq, VerifyReport& report);

// All connected sequences with 1 <= n <= max_n, split over `jobs` threads.
VerifyReport run_verification(std::size_t max_n, unsigned jobs = 1);

}  // namespace seidel
