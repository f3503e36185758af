#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "seidel/charpoly.hpp"
#include "seidel/classify.hpp"
#include "seidel/creation.hpp"
#include "seidel/json_io.hpp"
#include "seidel/quotient.hpp"
#include "seidel/spectra.hpp"
#include "seidel/verify.hpp"

namespace seidel::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxListedEnumeration = 24;

// Result of one subcommand; exit code 3 when the mathematics disagreed.
struct Outcome {
  json result;
  int code = kOk;
};

void render_text(const json& value, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!value.is_object()) {
    out << pad << value.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, v] : value.items()) width = std::max(width, key.size());
  for (const auto& [key, v] : value.items()) {
    out << pad << key << std::string(width - key.size(), ' ') << " : ";
    if (v.is_object()) {
      out << '\n';
      render_text(v, out, indent + 2);
    } else {
      out << v.dump() << '\n';
    }
  }
}

json sequence_list(const std::vector<CreationSequence>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) out.push_back(s.str());
  return out;
}

Outcome cmd_spectrum(const CreationSequence& seq) {
  const Spectrum spectrum = assemble_spectrum(seq);
  return {{{"sequence", seq.str()},
           {"spectrum", json_io::to_json(spectrum)},
           {"multiplicities", json_io::to_json(multiplicities(block_form(seq)))},
           {"eigenvalues", spectrum.eigenvalues()}}};
}

Outcome cmd_charpoly(const CreationSequence& seq) {
  const IntPoly phi = char_poly(seq);
  return {{{"sequence", seq.str()}, {"charpoly", json_io::poly_to_json(phi)}, {"text", phi.to_string()}}};
}

Outcome cmd_det(const CreationSequence& seq, bool with_pivots) {
  json result{{"sequence", seq.str()}, {"det", json_io::integer_to_json(determinant(seq))}};
  if (with_pivots) {
    json pivots = json::array();
    if (seq.size() >= 2)
      for (const auto& d : pivot_sequence(seq)) pivots.push_back(json_io::rational_to_string(d));
    result["pivots"] = pivots;
  }
  return {result};
}

Outcome cmd_quotient(const CreationSequence& seq) {
  const BlockForm bf = block_form(seq);
  const QuotientMatrix q = quotient_matrix(bf);
  return {{{"sequence", seq.str()},
           {"block_form", json_io::to_json(bf)},
           {"quotient", json_io::to_json(q)},
           {"eigenvalues", quotient_eigenvalues(q)},
           {"has_minus_one", has_minus_one(bf)},
           {"has_plus_one", has_plus_one(bf)}}};
}

Outcome cmd_eigvecs(const CreationSequence& seq) {
  const BlockForm bf = block_form(seq);
  const auto [minus, plus] = eigvec_families(seq);
  const DenseMatrix<int> s = seidel_matrix(seq);
  json lifted = json::array();
  for (const auto& [value, x] : {std::pair{-1, quotient_minus_one_vector(bf)},
                                 std::pair{1, quotient_plus_one_vector(bf)}}) {
    if (x.empty()) continue;
    const auto v = lift_quotient_vector(bf, x);
    if (!is_exact_eigenvector(s, v, value))
      throw VerificationError("lifted quotient vector failed S v = " + std::to_string(value) + " v");
    lifted.push_back({{"value", value}, {"quotient_vector", x}, {"vector", v}});
  }
  return {{{"sequence", seq.str()},
           {"minus_one", minus.vectors},
           {"plus_one", plus.vectors},
           {"lifted", lifted}}};
}

Outcome cmd_classify(const CreationSequence& seq) {
  const DistinctClass cls = classify(seq);
  json result = json_io::to_json(cls);
  result["sequence"] = seq.str();
  return {result, cls.agrees() ? kOk : kMismatch};
}

Outcome cmd_enumerate(std::size_t n, bool count_only) {
  json result{{"n", n}, {"count", sequence_count(n)}};
  if (!count_only) {
    if (n > kMaxListedEnumeration)
      throw DomainError("listing is limited to n <= " + std::to_string(kMaxListedEnumeration) +
                        "; use --count-only");
    json list = json::array();
    for (const auto& seq : enumerate_sequences(n)) list.push_back(seq.str());
    result["sequences"] = list;
  }
  return {result};
}

Outcome cmd_cospectral_pair(std::size_t n) {
  const CospectralPair pair = cospectral_pair(n);
  return {{{"n", n},
           {"members", sequence_list({pair.first, pair.second})},
           {"charpoly", json_io::poly_to_json(pair.charpoly)},
           {"quadratic", json_io::poly_to_json(cospectral_pair_quadratic(n))},
           {"degree_sequences", {degree_sequence(pair.first), degree_sequence(pair.second)}}}};
}

Outcome cmd_cospectral_search(std::size_t n, unsigned jobs, std::size_t cap) {
  return {json_io::to_json(cospectral_search(n, {cap, jobs}))};
}

Outcome cmd_verify(std::size_t n, unsigned jobs) {
  const VerifyReport report = run_verification(n, jobs);
  return {json_io::to_json(report), report.ok() ? kOk : kMismatch};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seidel spectra of connected threshold graphs", "seidel-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string seq_text;
  std::size_t n = 0;
  unsigned jobs = 1;
  std::size_t cap = kDefaultSearchCap;
  bool with_pivots = false;
  bool count_only = false;

  std::string command;
  std::string input;
  std::function<Outcome()> action;

  auto seq_command = [&](const std::string& name, const std::string& help,
                         std::function<Outcome(const CreationSequence&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("seq", seq_text, "Creation sequence (raw bits or block notation)")->required();
    sub->callback([&, name, fn] {
      command = name;
      input = seq_text;
      action = [&, fn] { return fn(parse_sequence(seq_text)); };
    });
    return sub;
  };
  auto n_command = [&](const std::string& name, const std::string& help,
                       std::function<Outcome()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", n, "Number of vertices")->required();
    sub->callback([&, name, fn] {
      command = name;
      input = "n=" + std::to_string(n);
      action = fn;
    });
    return sub;
  };

  seq_command("spectrum", "Assembled Seidel spectrum and +-1 multiplicities", cmd_spectrum);
  seq_command("charpoly", "Exact characteristic polynomial", cmd_charpoly);
  seq_command("det", "Exact determinant", [&](const CreationSequence& s) {
    return cmd_det(s, with_pivots);
  })->add_flag("--pivots", with_pivots, "Include the tridiagonal pivot sequence");
  seq_command("quotient", "Quotient matrix and its eigenvalues", cmd_quotient);
  seq_command("eigvecs", "Integer eigenvectors for -1 and +1", cmd_eigvecs);
  seq_command("classify", "Distinct-eigenvalue class", cmd_classify);
  n_command("enumerate", "All connected threshold sequences of length n",
            [&] { return cmd_enumerate(n, count_only); })
      ->add_flag("--count-only", count_only, "Only report the count");
  n_command("cospectral-pair", "The cospectral pair 0^{n-2}1^2, 010^{n-3}1",
            [&] { return cmd_cospectral_pair(n); });
  CLI::App* search = n_command("cospectral-search", "All Seidel-cospectral classes of length n",
                               [&] { return cmd_cospectral_search(n, jobs, cap); });
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--cap", cap, "Largest n accepted");
  CLI::App* verify = n_command("verify", "Cross-check every closed form against the oracle",
                               [&] { return cmd_verify(n, jobs); });
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome = action();
  } catch (const seidel::ParseError& e) {
    err << "invalid sequence (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kValidation;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const VerificationError& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kMismatch;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;

  const json report{{"command", command},
                    {"input", input},
                    {"result", outcome.result},
                    {"elapsed_ms", elapsed.count()}};
  if (format == "text") {
    render_text(report, out, 0);
  } else {
    out << report.dump() << '\n';
  }
  if (outcome.code == kMismatch) err << command << ": result disagrees with the closed-form prediction\n";
  return outcome.code;
}

}  // namespace seidel::cli
