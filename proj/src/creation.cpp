#include "seidel/creation.hpp"

#include <algorithm>
#include <cctype>

namespace seidel {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::empty: return "empty";
    case ParseErrorKind::bad_syntax: return "bad_syntax";
    case ParseErrorKind::leading_one: return "leading_one";
    case ParseErrorKind::disconnected: return "disconnected";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kMaxParsedLength = 1u << 20;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

void check_charset(std::string_view bits) {
  if (bits.empty()) throw ParseError(ParseErrorKind::empty, 0, "empty creation sequence");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw ParseError(ParseErrorKind::bad_syntax, i + 1,
                       "invalid symbol '" + std::string(1, bits[i]) + "' at position " +
                           std::to_string(i + 1));
  }
}

std::string parse_raw(std::string_view text) {
  std::string bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (c != '0' && c != '1')
      throw ParseError(ParseErrorKind::bad_syntax, i + 1,
                       "invalid symbol '" + std::string(1, c) + "' at position " +
                           std::to_string(i + 1));
    bits.push_back(c);
  }
  return bits;
}

// term := symbol [ ('^' | ':') count ], terms separated by whitespace or ','.
std::string parse_blocks(std::string_view text) {
  std::string bits;
  std::size_t i = 0;
  auto skip = [&](bool commas) {
    while (i < text.size() && (is_space(text[i]) || (commas && text[i] == ','))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError(ParseErrorKind::bad_syntax, std::min(i + 1, text.size()),
                      msg + " at position " + std::to_string(std::min(i + 1, text.size())));
  };

  skip(true);
  while (i < text.size()) {
    const char symbol = text[i];
    if (symbol != '0' && symbol != '1') throw fail("expected block symbol 0 or 1");
    ++i;
    const std::size_t after_symbol = i;
    skip(false);
    std::size_t count = 1;
    if (i >= text.size() || (text[i] != '^' && text[i] != ':')) i = after_symbol;
    if (i < text.size() && (text[i] == '^' || text[i] == ':')) {
      ++i;
      skip(false);
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw fail("expected exponent");
      count = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        count = count * 10 + static_cast<std::size_t>(text[i] - '0');
        if (count > kMaxParsedLength) throw fail("exponent too large");
        ++i;
      }
      if (count == 0) throw fail("exponent must be positive");
    }
    if (bits.size() + count > kMaxParsedLength) throw fail("sequence too long");
    bits.append(count, symbol);
    const std::size_t before = i;
    skip(true);
    if (i == before && i < text.size()) throw fail("expected separator");
  }
  return bits;
}

}  // namespace

CreationSequence CreationSequence::from_bits(std::string_view bits) {
  check_charset(bits);
  if (bits.front() != '0')
    throw ParseError(ParseErrorKind::leading_one, 1, "first symbol must be 0");
  if (bits.size() >= 2 && bits.back() != '1')
    throw ParseError(ParseErrorKind::disconnected, bits.size(),
                     "last symbol (position " + std::to_string(bits.size()) +
                         ") must be 1 for a connected threshold graph");
  return CreationSequence(std::string(bits));
}

CreationSequence CreationSequence::unchecked(std::string_view bits) {
  check_charset(bits);
  return CreationSequence(std::string(bits));
}

CreationSequence parse_sequence(std::string_view text) {
  const bool blocks = text.find_first_of("^:,") != std::string_view::npos;
  std::string bits = blocks ? parse_blocks(text) : parse_raw(text);
  if (bits.empty()) throw ParseError(ParseErrorKind::empty, 0, "empty creation sequence");
  return CreationSequence::from_bits(bits);
}

std::size_t BlockForm::n() const {
  std::size_t total = 0;
  for (int v : s) total += static_cast<std::size_t>(v);
  for (int v : t) total += static_cast<std::size_t>(v);
  return total;
}

std::vector<int> BlockForm::cell_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(2 * k());
  for (std::size_t i = 0; i < k(); ++i) {
    sizes.push_back(s[i]);
    sizes.push_back(t[i]);
  }
  return sizes;
}

std::string BlockForm::expand() const {
  std::string bits;
  bits.reserve(n());
  for (std::size_t i = 0; i < k(); ++i) {
    bits.append(static_cast<std::size_t>(s[i]), '0');
    bits.append(static_cast<std::size_t>(t[i]), '1');
  }
  return bits;
}

BlockForm BlockForm::from_runs(std::vector<int> s, std::vector<int> t) {
  if (s.empty() || s.size() != t.size())
    throw DomainError("block form needs k >= 1 matching 0-runs and 1-runs");
  auto positive = [](int v) { return v >= 1; };
  if (!std::all_of(s.begin(), s.end(), positive) || !std::all_of(t.begin(), t.end(), positive))
    throw DomainError("block run lengths must be positive");
  return BlockForm{std::move(s), std::move(t)};
}

BlockForm block_form(const CreationSequence& seq) {
  if (seq.size() < 2) throw DomainError("the one-vertex graph has no block form");
  const std::string& bits = seq.str();
  if (bits.front() != '0' || bits.back() != '1')
    throw DomainError("block form requires a sequence starting with 0 and ending with 1");
  BlockForm bf;
  std::size_t i = 0;
  while (i < bits.size()) {
    const char c = bits[i];
    std::size_t j = i;
    while (j < bits.size() && bits[j] == c) ++j;
    (c == '0' ? bf.s : bf.t).push_back(static_cast<int>(j - i));
    i = j;
  }
  return bf;
}

std::vector<int> sign_vector(const CreationSequence& seq) {
  std::vector<int> beta(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) beta[i] = seq.beta(i);
  return beta;
}

DenseMatrix<int> seidel_matrix(const CreationSequence& seq) {
  const std::size_t n = seq.size();
  DenseMatrix<int> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = seq.beta(std::max(i, j));
  return m;
}

DenseMatrix<int> adjacency_matrix(const CreationSequence& seq) {
  const std::size_t n = seq.size();
  DenseMatrix<int> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = seq.alpha(std::max(i, j));
  return m;
}

std::vector<int> degree_sequence(const CreationSequence& seq) {
  const std::size_t n = seq.size();
  // Vertex i sees every later dominating vertex, and all earlier ones if it dominates.
  std::vector<int> degree(n, 0);
  int later_dominating = 0;
  for (std::size_t i = n; i-- > 0;) {
    degree[i] = later_dominating + (seq.alpha(i) ? static_cast<int>(i) : 0);
    later_dominating += seq.alpha(i);
  }
  std::sort(degree.begin(), degree.end(), std::greater<>());
  return degree;
}

std::uint64_t sequence_count(std::size_t n) {
  if (n < 2 || n > kMaxEnumerationLength)
    throw DomainError("enumeration length must lie in [2, " +
                      std::to_string(kMaxEnumerationLength) + "], got " + std::to_string(n));
  return std::uint64_t{1} << (n - 2);
}

CreationSequence sequence_at(std::size_t n, std::uint64_t index) {
  if (index >= sequence_count(n)) throw DomainError("enumeration index out of range");
  std::string bits(n, '0');
  bits.back() = '1';
  for (std::size_t pos = n - 2; pos >= 1; --pos) {
    if (index & 1u) bits[pos] = '1';
    index >>= 1;
  }
  return CreationSequence::from_bits(bits);
}

}  // namespace seidel
