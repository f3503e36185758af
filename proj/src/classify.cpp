#include "seidel/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "seidel/charpoly.hpp"
#include "seidel/spectra.hpp"

namespace seidel {

const char* to_string(DistinctClassKind kind) {
  switch (kind) {
    case DistinctClassKind::two_complete: return "Two_Complete";
    case DistinctClassKind::two_star: return "Two_Star";
    case DistinctClassKind::four_type_a: return "Four_TypeA";
    case DistinctClassKind::four_type_b: return "Four_TypeB";
    case DistinctClassKind::five_type_a: return "Five_TypeA";
    case DistinctClassKind::five_type_b: return "Five_TypeB";
    case DistinctClassKind::general: return "General";
  }
  return "unknown";
}

DistinctClassKind predict_class(const BlockForm& bf) {
  if (bf.k() == 1) {
    // "01" is both K_2 and S_2; report it as complete.
    if (bf.s[0] == 1) return DistinctClassKind::two_complete;
    if (bf.t[0] == 1) return DistinctClassKind::two_star;
    return DistinctClassKind::four_type_b;
  }
  if (bf.k() == 2) {
    const bool s1_unit = bf.s[0] == 1;
    const bool t2_unit = bf.t[1] == 1;
    if (s1_unit && t2_unit) return DistinctClassKind::four_type_a;
    if (s1_unit) return DistinctClassKind::five_type_a;
    if (t2_unit) return DistinctClassKind::five_type_b;
  }
  return DistinctClassKind::general;
}

std::optional<int> predicted_count(DistinctClassKind kind) {
  switch (kind) {
    case DistinctClassKind::two_complete:
    case DistinctClassKind::two_star: return 2;
    case DistinctClassKind::four_type_a:
    case DistinctClassKind::four_type_b: return 4;
    case DistinctClassKind::five_type_a:
    case DistinctClassKind::five_type_b: return 5;
    case DistinctClassKind::general: return std::nullopt;
  }
  return std::nullopt;
}

DistinctClass classify(const CreationSequence& seq) {
  const BlockForm bf = block_form(seq);
  DistinctClass out;
  out.k = bf.k();
  out.predicted = predict_class(bf);
  out.predicted_count = predicted_count(out.predicted);
  out.observed_count = assemble_spectrum(seq).distinct_count();
  const int k2 = static_cast<int>(2 * out.k);
  if (out.observed_count == 3 || out.observed_count < k2 || out.observed_count > k2 + 2)
    throw VerificationError(seq.str() + " has " + std::to_string(out.observed_count) +
                            " distinct eigenvalues, outside the admissible range");
  return out;
}

std::pair<double, double> four_type_a_roots(int t1, int s2) {
  if (t1 < 1 || s2 < 1) throw DomainError("four_type_a_roots needs t1, s2 >= 1");
  const double shift = s2 - t1;
  const double disc = shift * shift + 4.0 * (1.0 + t1 + s2 + 2.0 * t1 * s2);
  const double root = std::sqrt(disc);
  return {(shift + root) / 2.0, (shift - root) / 2.0};
}

IntPoly cospectral_pair_quadratic(std::size_t n) {
  const long nn = static_cast<long>(n);
  return IntPoly({mpz_class(7 - 3 * nn), mpz_class(4 - nn), mpz_class(1)});
}

CospectralPair cospectral_pair(std::size_t n) {
  if (n < 4) throw DomainError("cospectral pair needs n >= 4, got " + std::to_string(n));
  CospectralPair pair{
      CreationSequence::from_bits(std::string(n - 2, '0') + "11"),
      CreationSequence::from_bits("010" + std::string(n - 4, '0') + "1"),
      {},
  };
  pair.charpoly = char_poly(pair.first);
  if (char_poly(pair.second) != pair.charpoly)
    throw VerificationError("cospectral pair fingerprints differ at n = " + std::to_string(n));
  return pair;
}

namespace {

std::string fingerprint_key(const std::vector<mpz_class>& coeffs) {
  std::string key;
  for (const auto& c : coeffs) {
    key += c.get_str(36);
    key += ',';
  }
  return key;
}

struct Bucket {
  std::vector<mpz_class> fingerprint;
  std::vector<CreationSequence> members;
};

using BucketMap = std::unordered_map<std::string, Bucket>;

void fill_range(std::size_t n, std::uint64_t begin, std::uint64_t end, BucketMap& out) {
  for (std::uint64_t i = begin; i < end; ++i) {
    CreationSequence seq = sequence_at(n, i);
    std::vector<mpz_class> fp = fingerprint(seq);
    auto [it, inserted] = out.try_emplace(fingerprint_key(fp));
    if (inserted) it->second.fingerprint = std::move(fp);
    it->second.members.push_back(std::move(seq));
  }
}

}  // namespace

std::vector<CospectralClass> cospectral_search(std::size_t n, const SearchOptions& options) {
  if (n < 2 || n > options.cap)
    throw DomainError("cospectral search length must lie in [2, " + std::to_string(options.cap) +
                      "], got " + std::to_string(n));
  const std::uint64_t total = sequence_count(n);
  const unsigned jobs = std::max(1u, options.jobs);

  std::vector<BucketMap> partial(jobs);
  if (jobs == 1) {
    fill_range(n, 0, total, partial[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t begin = total * w / jobs;
      const std::uint64_t end = total * (w + 1) / jobs;
      workers.emplace_back(fill_range, n, begin, end, std::ref(partial[w]));
    }
    for (auto& t : workers) t.join();
  }

  BucketMap merged;
  for (auto& part : partial) {
    for (auto& [key, bucket] : part) {
      auto [it, inserted] = merged.try_emplace(key);
      if (inserted) it->second.fingerprint = std::move(bucket.fingerprint);
      auto& dst = it->second.members;
      dst.insert(dst.end(), std::make_move_iterator(bucket.members.begin()),
                 std::make_move_iterator(bucket.members.end()));
    }
  }

  std::vector<CospectralClass> classes;
  for (auto& [key, bucket] : merged) {
    if (bucket.members.size() < 2) continue;
    std::sort(bucket.members.begin(), bucket.members.end());
    classes.push_back({std::move(bucket.members), std::move(bucket.fingerprint)});
  }
  std::sort(classes.begin(), classes.end(), [](const CospectralClass& a, const CospectralClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members.front() < b.members.front();
  });
  return classes;
}

}  // namespace seidel
