#pragma once

#include <compare>
#include <cstdint>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "seidel/errors.hpp"
#include "seidel/matrix.hpp"

namespace seidel {

// Binary creation sequence a_1..a_n of a threshold graph: a_i = 0 adds v_i as
// an isolated vertex, a_i = 1 adds it as a dominating vertex. Validated
// sequences always start with 0 and, for n >= 2, end with 1 (connected).
// Indices into the sequence are 0-based; error positions are 1-based.
class CreationSequence {
 public:
  // Validates charset, a_1 = 0 and connectivity.
  static CreationSequence from_bits(std::string_view bits);
  // Charset check only. Used by oracle-side tests that need disconnected graphs.
  static CreationSequence unchecked(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  int alpha(std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  int beta(std::size_t i) const { return 1 - 2 * alpha(i); }
  const std::string& str() const { return bits_; }

  auto operator<=>(const CreationSequence&) const = default;

 private:
  explicit CreationSequence(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

// Accepts raw bits ("01100111") or block notation ("0 1^2 0^2 1^3",
// "0:1,1:2,0:2,1:3"). Whitespace is ignored; an omitted exponent means 1.
CreationSequence parse_sequence(std::string_view text);

// Run-length form 0^{s_1} 1^{t_1} ... 0^{s_k} 1^{t_k}.
struct BlockForm {
  std::vector<int> s;
  std::vector<int> t;

  std::size_t k() const { return s.size(); }
  std::size_t n() const;
  // Cell sizes in partition order (s_1, t_1, ..., s_k, t_k).
  std::vector<int> cell_sizes() const;
  std::string expand() const;

  // Validates s_i, t_i >= 1 and equal lengths.
  static BlockForm from_runs(std::vector<int> s, std::vector<int> t);

  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

// Throws DomainError for the one-vertex sequence "0".
BlockForm block_form(const CreationSequence& seq);

// beta_i = 1 - 2 a_i.
std::vector<int> sign_vector(const CreationSequence& seq);

// Entry (i, j) = beta_max(i,j) off the diagonal, 0 on it.
DenseMatrix<int> seidel_matrix(const CreationSequence& seq);
DenseMatrix<int> adjacency_matrix(const CreationSequence& seq);

// Vertex degrees sorted in non-increasing order.
std::vector<int> degree_sequence(const CreationSequence& seq);

constexpr std::size_t kMaxEnumerationLength = 64;

// 2^{n-2}; throws DomainError unless 2 <= n <= kMaxEnumerationLength.
std::uint64_t sequence_count(std::size_t n);

// index-th connected sequence of length n in lexicographic order; the free
// middle bits are the binary digits of index, most significant first.
CreationSequence sequence_at(std::size_t n, std::uint64_t index);

// Lazy lexicographic enumeration of all 2^{n-2} connected sequences. Any
// index sub-range can be regenerated independently with sequence_at.
inline auto enumerate_sequences(std::size_t n) {
  const std::uint64_t count = sequence_count(n);
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([n](std::uint64_t i) { return sequence_at(n, i); });
}

}  // namespace seidel
