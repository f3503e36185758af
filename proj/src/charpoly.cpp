#include "seidel/charpoly.hpp"

#include "seidel/errors.hpp"

namespace seidel {

IntPoly char_poly(const CreationSequence& seq, RecurrenceVariant variant) {
  const std::size_t n = seq.size();
  IntPoly prev = IntPoly({0, 1});      // Phi_1
  if (n == 1) return prev;
  IntPoly cur = IntPoly({-1, 0, 1});   // Phi_2
  const mpz_class tail = variant == RecurrenceVariant::derived ? 1 : 2;
  for (std::size_t r = 3; r <= n; ++r) {
    const IntPoly b = IntPoly::linear(seq.beta(r - 2));
    IntPoly next = mpz_class(2) * (b * cur) - tail * (b * b * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<mpq_class> pivot_sequence(const CreationSequence& seq) {
  const std::size_t n = seq.size();
  if (n < 2) throw DomainError("pivot sequence needs at least two vertices");
  std::vector<mpq_class> d;
  d.reserve(n);
  d.emplace_back(-2 * seq.beta(1));
  for (std::size_t i = 2; i <= n; ++i) {
    const mpq_class& last = d.back();
    if (abs(last) <= 1)
      throw VerificationError("pivot bound |d_i| > 1 violated at i = " + std::to_string(i - 1));
    mpq_class next = -1 / last;
    if (i < n) next += -2 * seq.beta(i);
    next.canonicalize();
    d.push_back(std::move(next));
  }
  return d;
}

mpz_class determinant(const CreationSequence& seq) {
  if (seq.size() == 1) return 0;
  mpq_class product = 1;
  for (const auto& d : pivot_sequence(seq)) product *= d;
  product.canonicalize();
  if (product.get_den() != 1)
    throw VerificationError("pivot product is not an integer: " + product.get_str());
  return product.get_num();
}

std::vector<mpz_class> fingerprint(const CreationSequence& seq) {
  return char_poly(seq).coeffs();
}

}  // namespace seidel
