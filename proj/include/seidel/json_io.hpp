#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <vector>

#include "seidel/classify.hpp"
#include "seidel/creation.hpp"
#include "seidel/int_poly.hpp"
#include "seidel/quotient.hpp"
#include "seidel/spectra.hpp"
#include "seidel/verify.hpp"

// JSON schemas shared by the CLI and anything consuming its output.
namespace seidel::json_io {

using nlohmann::json;

// Array of decimal strings, constant term first.
json poly_to_json(const IntPoly& p);
json coeffs_to_json(const std::vector<mpz_class>& coeffs);
IntPoly poly_from_json(const json& j);

// JSON integer when it fits in 64 bits, decimal string otherwise.
json integer_to_json(const mpz_class& v);

// "p/q" in lowest terms, or "p" for integers.
std::string rational_to_string(const mpq_class& q);

json to_json(const BlockForm& bf);
// {"entries": [[...]], "cell_sizes": [...]}
json to_json(const QuotientMatrix& q);
// {"minus_one": m, "plus_one": p, "quotient": [...], "n": n}
json to_json(const Spectrum& spectrum);
json to_json(const Multiplicities& m);
json to_json(const EigvecFamily& family);
json to_json(const DistinctClass& cls);
// [{"fingerprint": [...], "members": [...]}]
json to_json(const std::vector<CospectralClass>& classes);
json to_json(const VerifyReport& report);

}  // namespace seidel::json_io
