#include "seidel/int_poly.hpp"

#include <algorithm>

namespace seidel {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly({c}); }

IntPoly IntPoly::linear(const mpz_class& c) { return IntPoly({c, mpz_class(1)}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
    acc.canonicalize();
  }
  return acc;
}

double IntPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += mag.get_str();
    if (d > 0) {
      if (!unit) out += "*";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace seidel
