#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "seidel/charpoly.hpp"
#include "seidel/classify.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;

namespace {

bool near_any(const std::vector<double>& values, double target) {
  return std::any_of(values.begin(), values.end(), [&](double v) { return std::abs(v - target) < 1e-9; });
}

std::vector<std::string> member_strings(const CospectralClass& cls) {
  std::vector<std::string> out;
  for (const auto& m : cls.members) out.push_back(m.str());
  return out;
}

}  // namespace

TEST_CASE("classify examples") {
  auto check = [](const char* text, DistinctClassKind kind, int count) {
    const DistinctClass cls = classify(parse_sequence(text));
    CHECK_MESSAGE(cls.predicted == kind, text);
    CHECK_MESSAGE(cls.observed_count == count, text);
    CHECK(cls.agrees());
  };
  check("01111", DistinctClassKind::two_complete, 2);
  check("00001", DistinctClassKind::two_star, 2);
  check("01", DistinctClassKind::two_complete, 2);
  check("0011", DistinctClassKind::four_type_b, 4);
  check("010011", DistinctClassKind::five_type_a, 5);
  check("0101", DistinctClassKind::four_type_a, 4);
  check("0011001", DistinctClassKind::five_type_b, 5);

  // Matches the five-value string pattern, but t_1 = 1 leaves +1 out of the spectrum.
  const DistinctClass odd = classify(parse_sequence("0010001"));
  CHECK(odd.predicted == DistinctClassKind::five_type_b);
  CHECK(odd.observed_count == 4);
  CHECK_FALSE(odd.agrees());
  const DistinctClass general = classify(parse_sequence("010101"));
  CHECK(general.predicted == DistinctClassKind::general);
  CHECK_FALSE(general.predicted_count.has_value());
  CHECK(general.observed_count == 6);
}

TEST_CASE("five-eigenvalue patterns over-predict when s_2 = 1 or t_1 = 1") {
  // 0 1^{t1} 0 1^{t2}: no -1 outside the quotient, so only four values.
  const DistinctClass a = classify(parse_sequence("01011"));
  CHECK(a.predicted == DistinctClassKind::five_type_a);
  CHECK(a.observed_count == 4);
  CHECK_FALSE(a.agrees());
  // 0^{s1} 1 0^{s2} 1: no +1 outside the quotient.
  const DistinctClass b = classify(parse_sequence("00101"));
  CHECK(b.predicted == DistinctClassKind::five_type_b);
  CHECK(b.observed_count == 4);
  CHECK_FALSE(b.agrees());
}

TEST_CASE("distinct counts, exhaustive n <= 12") {
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& seq : enumerate_sequences(n)) {
      const DistinctClass cls = classify(seq);
      const BlockForm bf = block_form(seq);
      const int k2 = static_cast<int>(2 * bf.k());
      CHECK(cls.observed_count != 3);
      CHECK(cls.observed_count >= k2);
      CHECK(cls.observed_count <= k2 + 2);

      // Exact characterization with the s_2 / t_1 side conditions.
      const bool k1 = bf.k() == 1, k2pair = bf.k() == 2;
      const bool two = k1 && (bf.s[0] == 1 || bf.t[0] == 1);
      const bool five = k2pair && ((bf.s[0] == 1 && bf.t[1] > 1 && bf.s[1] > 1) ||
                                   (bf.s[0] > 1 && bf.t[1] == 1 && bf.t[0] > 1));
      const bool four = (k1 && bf.s[0] > 1 && bf.t[0] > 1) ||
                        (k2pair && ((bf.s[0] == 1) || (bf.t[1] == 1)) && !five);
      CHECK_MESSAGE((cls.observed_count == 2) == two, seq.str());
      CHECK_MESSAGE((cls.observed_count == 4) == four, seq.str());
      CHECK_MESSAGE((cls.observed_count == 5) == five, seq.str());
    }
}

TEST_CASE("four_type_a_roots") {
  const auto [hi, lo] = four_type_a_roots(1, 1);
  CHECK(hi == doctest::Approx(std::sqrt(5.0)));
  CHECK(lo == doctest::Approx(-std::sqrt(5.0)));

  const double r33 = std::sqrt(33.0);
  const auto a = four_type_a_roots(1, 2);
  CHECK(a.first == doctest::Approx((1 + r33) / 2));
  CHECK(a.second == doctest::Approx((1 - r33) / 2));
  const auto b = four_type_a_roots(2, 1);
  CHECK(b.first == doctest::Approx((-1 + r33) / 2));
  CHECK(b.second == doctest::Approx((-1 - r33) / 2));

  const auto spec_a = assemble_spectrum(parse_sequence("01001")).eigenvalues();
  CHECK(near_any(spec_a, a.first));
  CHECK(near_any(spec_a, a.second));
  const auto spec_b = assemble_spectrum(parse_sequence("01101")).eigenvalues();
  CHECK(near_any(spec_b, b.first));
  CHECK(near_any(spec_b, b.second));
  CHECK_THROWS_AS(four_type_a_roots(0, 1), DomainError);
}

TEST_CASE("four_type_a_roots match the spectrum for every 0 1^t 0^s 1 with n <= 14") {
  for (int t1 = 1; t1 <= 10; ++t1)
    for (int s2 = 1; t1 + s2 + 2 <= 14; ++s2) {
      const auto seq = CreationSequence::from_bits("0" + std::string(t1, '1') + std::string(s2, '0') + "1");
      const auto values = assemble_spectrum(seq).eigenvalues();
      const auto [hi, lo] = four_type_a_roots(t1, s2);
      CHECK(near_any(values, hi));
      CHECK(near_any(values, lo));
    }
}

TEST_CASE("cospectral_pair") {
  const auto four = cospectral_pair(4);
  CHECK(four.first.str() == "0011");
  CHECK(four.second.str() == "0101");
  CHECK(four.charpoly == IntPoly({5, 0, -6, 0, 1}));
  CHECK(degree_sequence(four.first) != degree_sequence(four.second));

  const auto five = cospectral_pair(5);
  CHECK(five.first.str() == "00011");
  CHECK(five.second.str() == "01001");
  // Phi = (x+1)^2 (x-1) (x^2 - x - 8)
  CHECK(five.charpoly == IntPoly({-1, 0, 1}) * IntPoly({1, 1}) * cospectral_pair_quadratic(5));
  CHECK(cospectral_pair_quadratic(5) == IntPoly({-8, -1, 1}));

  CHECK_THROWS_AS(cospectral_pair(3), DomainError);
}

TEST_CASE("cospectral pair members share fingerprints but not degree sequences, 4 <= n <= 18") {
  for (std::size_t n = 4; n <= 18; ++n) {
    const auto pair = cospectral_pair(n);
    CHECK(fingerprint(pair.first) == fingerprint(pair.second));
    CHECK(degree_sequence(pair.first) != degree_sequence(pair.second));
    // Both spectra contain the roots of x^2 + (4 - n) x + (7 - 3n).
    const double b = 4.0 - static_cast<double>(n), c = 7.0 - 3.0 * static_cast<double>(n);
    const double disc = std::sqrt(b * b - 4 * c);
    for (const auto& seq : {pair.first, pair.second}) {
      const auto values = assemble_spectrum(seq).eigenvalues();
      CHECK(near_any(values, (-b + disc) / 2));
      CHECK(near_any(values, (-b - disc) / 2));
    }
  }
}

TEST_CASE("cospectral_search small cases") {
  CHECK(cospectral_search(3).empty());
  CHECK(cospectral_search(2).empty());

  const auto four = cospectral_search(4);
  REQUIRE(four.size() == 1);
  CHECK(member_strings(four[0]) == std::vector<std::string>{"0011", "0101"});
  CHECK(four[0].fingerprint == IntPoly({5, 0, -6, 0, 1}).coeffs());

  const auto five = cospectral_search(5);
  const bool found = std::any_of(five.begin(), five.end(), [](const CospectralClass& cls) {
    const auto m = member_strings(cls);
    return std::find(m.begin(), m.end(), "00011") != m.end() &&
           std::find(m.begin(), m.end(), "01001") != m.end();
  });
  CHECK(found);

  CHECK_THROWS_AS(cospectral_search(19), DomainError);
  CHECK_THROWS_AS(cospectral_search(1), DomainError);
  CHECK_THROWS_AS(cospectral_search(6, {5, 1}), DomainError);
  CHECK_NOTHROW(cospectral_search(6, {6, 2}));
}

TEST_CASE("cospectral_search is ordered, consistent and independent of the worker count") {
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto serial = cospectral_search(n);
    const auto parallel = cospectral_search(n, {kDefaultSearchCap, 3});
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(member_strings(serial[i]) == member_strings(parallel[i]));
      CHECK(serial[i].fingerprint == parallel[i].fingerprint);
    }
    for (std::size_t i = 1; i < serial.size(); ++i) {
      const auto& a = serial[i - 1];
      const auto& b = serial[i];
      CHECK((a.members.size() < b.members.size() ||
             (a.members.size() == b.members.size() && a.members.front() < b.members.front())));
    }
    for (const auto& cls : serial) {
      CHECK(cls.members.size() >= 2);
      CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
      const auto& ref = cls.members.front();
      const auto ref_mult = multiplicities(block_form(ref));
      for (const auto& m : cls.members) {
        CHECK(fingerprint(m) == cls.fingerprint);
        CHECK(determinant(m) == determinant(ref));
        CHECK(multiplicities(block_form(m)) == ref_mult);
      }
    }
  }
}
