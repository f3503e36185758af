#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace seidel {

// Univariate polynomial with arbitrary-precision integer coefficients,
// constant term first. The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  // x + c
  static IntPoly linear(const mpz_class& c);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class operator()(const mpz_class& x) const;
  mpq_class operator()(const mpq_class& x) const;
  double operator()(double x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend IntPoly operator*(const mpz_class& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form, highest degree first: "x^4 - 6*x^2 + 5".
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

}  // namespace seidel
