#include "seidel/json_io.hpp"

#include <limits>

namespace seidel::json_io {

json coeffs_to_json(const std::vector<mpz_class>& coeffs) {
  json out = json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

json poly_to_json(const IntPoly& p) { return coeffs_to_json(p.coeffs()); }

IntPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) {
    if (c.is_string()) {
      mpz_class v;
      if (v.set_str(c.get<std::string>(), 10) != 0)
        throw DomainError("invalid decimal coefficient: " + c.get<std::string>());
      coeffs.push_back(v);
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(std::to_string(c.get<long long>()));
    } else {
      throw DomainError("polynomial coefficients must be decimal strings");
    }
  }
  return IntPoly(std::move(coeffs));
}

json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

json to_json(const BlockForm& bf) { return {{"s", bf.s}, {"t", bf.t}, {"k", bf.k()}}; }

json to_json(const QuotientMatrix& q) {
  return {{"entries", q.entries.to_rows()}, {"cell_sizes", q.cell_sizes}};
}

json to_json(const Spectrum& spectrum) {
  return {{"minus_one", spectrum.minus_one_mult},
          {"plus_one", spectrum.plus_one_mult},
          {"quotient", spectrum.quotient},
          {"n", spectrum.n}};
}

json to_json(const Multiplicities& m) {
  return {{"minus_one", m.minus_one}, {"plus_one", m.plus_one}};
}

json to_json(const EigvecFamily& family) {
  return {{"value", family.value}, {"vectors", family.vectors}};
}

json to_json(const DistinctClass& cls) {
  json out{{"predicted", to_string(cls.predicted)},
           {"observed_count", cls.observed_count},
           {"k", cls.k},
           {"agrees", cls.agrees()}};
  out["predicted_count"] = cls.predicted_count ? json(*cls.predicted_count) : json(nullptr);
  return out;
}

json to_json(const std::vector<CospectralClass>& classes) {
  json out = json::array();
  for (const auto& cls : classes) {
    json members = json::array();
    for (const auto& m : cls.members) members.push_back(m.str());
    out.push_back({{"fingerprint", coeffs_to_json(cls.fingerprint)}, {"members", members}});
  }
  return out;
}

json to_json(const VerifyReport& report) {
  json exceptions = json::array();
  for (const auto& e : report.pattern_exceptions)
    exceptions.push_back({{"sequence", e.sequence},
                          {"predicted", to_string(e.predicted)},
                          {"predicted_count", e.predicted_count},
                          {"observed_count", e.observed_count}});
  return {{"max_n", report.max_n},
          {"sequences", report.sequences},
          {"passed", report.passed},
          {"failures", report.failures},
          {"pattern_exceptions", exceptions},
          {"ok", report.ok()}};
}

}  // namespace seidel::json_io
