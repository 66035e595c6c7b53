// circhad: verification, lemma suites and exhaustive search for circulant
// Hadamard matrices.
//
// Exit codes: 0 success (verify: Hadamard), 1 negative result or failed
// suite, 2 bad input, 3 resource cap exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circhad/circulant.hpp"
#include "circhad/coding_bounds.hpp"
#include "circhad/decomposition.hpp"
#include "circhad/errors.hpp"
#include "circhad/f2.hpp"
#include "circhad/lemma_suites.hpp"
#include "circhad/report.hpp"
#include "circhad/search.hpp"

namespace fs = std::filesystem;
using namespace circhad;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

// "-" reads stdin; an existing regular file is read; anything else is the
// row text itself.
SignRow read_row(const std::string& source) {
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return SignRow::parse(text);
  }
  std::error_code ec;
  if (fs::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return SignRow::parse(text);
  }
  return SignRow::parse(source);
}

std::vector<std::size_t> parse_orders(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size()) {
      throw std::invalid_argument("invalid order '" + tok + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("no orders given");
  return out;
}

int cmd_verify(const std::string& source, const std::string& format) {
  const SignRow row = read_row(source);
  const bool hadamard = is_circulant_hadamard(row);
  const PafSpectrum spectrum = paf(row);
  const EigenvalueReport eig = eigen_report(row);
  if (format == "text") {
    std::cout << "row:        " << row.to_string() << "\n"
              << "order:      " << row.size() << "\n"
              << "row sum:    " << row.sum() << "\n"
              << "paf:        ";
    for (std::size_t t = 0; t < spectrum.values.size(); ++t) {
      std::cout << (t ? "," : "") << spectrum.values[t];
    }
    std::cout << "\ncirculant Hadamard: " << (hadamard ? "yes" : "no") << "\n";
  } else {
    Json body;
    body["row"] = to_json(row);
    body["order"] = row.size();
    body["is_circulant_hadamard"] = hadamard;
    body["row_sum"] = row.sum();
    body["paf"] = to_json(spectrum);
    body["eigenvalues"] = to_json(eig);
    std::cout << render(versioned("verify", body)) << "\n";
  }
  return hadamard ? 0 : kExitNegative;
}

int cmd_decompose(const std::string& source) {
  const SignRow row = read_row(source);
  Json body;
  body["row"] = to_json(row);
  body["decomposition"] = to_json(decompose(row));
  std::cout << render(versioned("decompose", body)) << "\n";
  return 0;
}

int cmd_conditions(const std::string& source) {
  const SignRow row = read_row(source);
  const Decomposition d = decompose(row);
  Json summary;
  summary["e1"] = to_json(d.e1);
  summary["e2"] = to_json(d.e2);
  summary["lambda1"] = d.lambda1;
  summary["lambda2"] = d.lambda2;
  summary["g1"] = to_json(d.g1);
  summary["g2"] = to_json(d.g2);
  Json body;
  body["row"] = to_json(row);
  body["is_circulant_hadamard"] = is_circulant_hadamard(row);
  body["profile"] = to_json(classify_conditions(d));
  body["decomposition"] = summary;
  std::cout << render(versioned("conditions", body)) << "\n";
  return 0;
}

struct SearchArgs {
  std::string orders;
  std::string mode = "full";
  unsigned workers = 1;
  std::string out;
  bool no_symmetry = false;
  bool no_rowsum = false;
  bool no_paf = false;
};

int cmd_search(const SearchArgs& args) {
  SearchConfig cfg;
  cfg.orders = parse_orders(args.orders);
  cfg.mode = parse_search_mode(args.mode);
  cfg.worker_count = std::max(1U, args.workers);
  cfg.symmetry_reduction = !args.no_symmetry;
  cfg.prune_rowsum = !args.no_rowsum;
  cfg.prune_paf_prefix = !args.no_paf;
  // Reject over-cap orders before anything is written.
  validate_config(cfg);

  const std::vector<SearchReport> reports = run_search(cfg);
  if (args.out.empty()) {
    Json all = Json::array();
    for (const auto& r : reports) all.push_back(versioned("search_report", to_json(r)));
    std::cout << render(all) << "\n";
    return 0;
  }
  fs::create_directories(args.out);
  std::ofstream csv(fs::path(args.out) / "summary.csv");
  csv << csv_summary_header() << "\n";
  std::cout << csv_summary_header() << "\n";
  for (const auto& r : reports) {
    const auto name = "search_" + std::string(to_string(r.mode)) + "_" +
                      std::to_string(r.order) + ".json";
    std::ofstream(fs::path(args.out) / name) << render(versioned("search_report", to_json(r)))
                                             << "\n";
    csv << csv_summary_line(r) << "\n";
    std::cout << csv_summary_line(r) << "\n";
  }
  return 0;
}

int cmd_lemmas(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = lemma_suite_names();
  } else {
    const auto& known = lemma_suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      std::cerr << "unknown suite '" << suite << "'; available: all";
      for (const auto& n : known) std::cerr << ", " << n;
      std::cerr << "\n";
      return kExitBadInput;
    }
    names = {suite};
  }
  bool all_passed = true;
  std::cout << "suite          instances  result  lemma\n";
  for (const auto& n : names) {
    const SuiteResult r = run_lemma_suite(n, seed);
    all_passed = all_passed && r.passed;
    std::string name = r.name;
    name.resize(std::max<std::size_t>(name.size(), 14), ' ');
    std::string count = std::to_string(r.instances);
    count.insert(0, count.size() < 9 ? 9 - count.size() : 0, ' ');
    std::cout << name << ' ' << count << "  " << (r.passed ? "pass" : "FAIL") << "    "
              << r.anchor << "\n";
    if (!r.passed) std::cout << "    " << r.detail << "\n";
  }
  std::cout << (all_passed ? "all suites passed" : "some suites failed") << "\n";
  return all_passed ? 0 : kExitNegative;
}

int cmd_plotkin(long m, long d, bool oracle) {
  const PlotkinQuery q = make_plotkin_query(m, d);
  if (oracle) {
    if (m < 1 || d < 0) throw std::invalid_argument("m must be positive and d non-negative");
    const CodeSearchResult code =
        max_code_bruteforce(static_cast<unsigned>(m), static_cast<unsigned>(d));
    Json body = plotkin_record(q, &code);
    Json words = Json::array();
    for (auto w : code.witness_code) {
      std::string s(static_cast<std::size_t>(m), '0');
      for (long i = 0; i < m; ++i) {
        if ((w >> i) & 1U) s[static_cast<std::size_t>(i)] = '1';
      }
      words.push_back(s);
    }
    body["witness_code"] = words;
    std::cout << render(versioned("plotkin", body)) << "\n";
  } else {
    std::cout << render(versioned("plotkin", plotkin_record(q, nullptr))) << "\n";
  }
  return 0;
}

int cmd_macwilliams(const std::string& orders) {
  Json all = Json::array();
  for (auto n : parse_orders(orders)) {
    all.push_back(versioned("macwilliams_survey", to_json(macwilliams_survey(n))));
  }
  std::cout << render(all) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circhad: circulant Hadamard matrix verification and search"};
  app.require_subcommand(1, 1);

  std::string row_source;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "check whether circm(row) is Hadamard");
  verify->add_option("row", row_source, "row text, file path, or - for stdin")->required();
  verify->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* decomp = app.add_subcommand("decompose", "odd/even block decomposition");
  decomp->add_option("row", row_source, "row text, file path, or - for stdin")->required();

  auto* conditions = app.add_subcommand("conditions", "evaluate conditions (a)-(d)");
  conditions->add_option("row", row_source, "row text, file path, or - for stdin")->required();

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "exhaustive search campaigns");
  search->add_option("--orders", sargs.orders, "comma-separated orders")->required();
  search->add_option("--mode", sargs.mode, "full, rank1_constrained or rank2_constrained")
      ->check(CLI::IsMember({"full", "rank1_constrained", "rank2_constrained"}));
  search->add_option("--workers", sargs.workers, "worker threads");
  search->add_option("--out", sargs.out, "directory for JSON reports and summary.csv");
  search->add_flag("--no-symmetry", sargs.no_symmetry, "disable symmetry reduction");
  search->add_flag("--no-rowsum", sargs.no_rowsum, "disable the row-sum rule");
  search->add_flag("--no-paf", sargs.no_paf, "disable partial autocorrelation pruning");

  std::string suite = "all";
  std::uint64_t seed = 0;
  auto* lemmas = app.add_subcommand("lemmas", "run invariant suites");
  lemmas->add_option("--suite", suite, "suite name or all");
  lemmas->add_option("--seed", seed, "seed for randomized suites");

  long m = 0;
  long d = 0;
  bool oracle = false;
  auto* plotkin = app.add_subcommand("plotkin", "Plotkin bound, optionally with exact oracle");
  plotkin->add_option("--m", m, "code length")->required();
  plotkin->add_option("--d", d, "minimum distance")->required();
  plotkin->add_flag("--oracle", oracle, "run the exhaustive maximum-code search");

  std::string mw_orders;
  auto* macw = app.add_subcommand("macwilliams", "survey circulant symmetric orthogonal F2 matrices");
  macw->add_option("--orders", mw_orders, "comma-separated orders")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*verify) return cmd_verify(row_source, format);
    if (*decomp) return cmd_decompose(row_source);
    if (*conditions) return cmd_conditions(row_source);
    if (*search) return cmd_search(sargs);
    if (*lemmas) return cmd_lemmas(suite, seed);
    if (*plotkin) return cmd_plotkin(m, d, oracle);
    if (*macw) return cmd_macwilliams(mw_orders);
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const PreconditionViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
