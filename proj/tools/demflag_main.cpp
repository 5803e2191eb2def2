// demflag: exact Demazure-flag multiplicity polynomials for sl2[t] fusion
// products, computed from Dyck-path statistics and cross-checked against
// independent formulas. Every invocation is deterministic given its flags.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "demflag/dyck.hpp"
#include "demflag/flags.hpp"
#include "demflag/json_io.hpp"
#include "demflag/oracles.hpp"
#include "demflag/partition.hpp"
#include "demflag/verify.hpp"

namespace {

using demflag::Partition;
using demflag::QPolynomial;

struct Source {
  enum class Kind { kWeyl, kHook, kDemazure, kFusion } kind = Kind::kWeyl;
  int s = 0;        // weyl weight or hook/demazure weight parameter
  int m_prime = 0;  // source level for hook/demazure
  Partition xi;     // fusion partition

  int total_weight() const {
    switch (kind) {
      case Kind::kWeyl:
        return s;
      case Kind::kHook:
        return m_prime + s;
      case Kind::kDemazure:
        return s;
      case Kind::kFusion:
        return xi.sum();
    }
    return 0;
  }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    size_t used = 0;
    values.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
  }
  return values;
}

Source parse_source(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument(
        "source must be weyl:s | hook:m',s | demazure:m',s | fusion:p1,p2,...");
  }
  const std::string kind = text.substr(0, colon);
  const std::vector<int> args = parse_int_list(text.substr(colon + 1));
  Source source;
  if (kind == "weyl") {
    if (args.size() != 1) throw std::invalid_argument("weyl source takes one weight: weyl:s");
    source.kind = Source::Kind::kWeyl;
    source.s = args[0];
  } else if (kind == "hook") {
    if (args.size() != 2) throw std::invalid_argument("hook source takes hook:m',s");
    source.kind = Source::Kind::kHook;
    source.m_prime = args[0];
    source.s = args[1];
  } else if (kind == "demazure") {
    if (args.size() != 2) throw std::invalid_argument("demazure source takes demazure:m',s");
    source.kind = Source::Kind::kDemazure;
    source.m_prime = args[0];
    source.s = args[1];
  } else if (kind == "fusion") {
    source.kind = Source::Kind::kFusion;
    source.xi = Partition(args);
  } else {
    throw std::invalid_argument("unknown source kind '" + kind + "'");
  }
  return source;
}

QPolynomial evaluate(const Source& source, int n, int m) {
  switch (source.kind) {
    case Source::Kind::kWeyl:
      return demflag::weyl_flag_poly(source.s, n, m);
    case Source::Kind::kHook:
      return demflag::hook_flag_poly(source.m_prime, source.s, n, m);
    case Source::Kind::kDemazure:
      return demflag::demazure_flag_poly(source.m_prime, source.s, n, m);
    case Source::Kind::kFusion:
      return demflag::fusion_flag_poly(source.xi, n, m);
  }
  return QPolynomial(0);
}

void print_csv_rows(std::ostream& out, int s, int n, int m, const QPolynomial& poly) {
  for (const auto& [e, c] : poly.terms()) {
    out << s << "," << n << "," << m << "," << e << "," << c.str() << "\n";
  }
}

int thread_count_from_env() {
  const char* raw = std::getenv("DEMFLAG_THREADS");
  if (!raw) return 1;
  const int value = std::atoi(raw);
  return value > 0 ? value : 1;
}

int run_poly(const std::string& source_text, int level, std::optional<int> weight,
             bool all_weights, const std::string& format) {
  const Source source = parse_source(source_text);
  const int total = source.total_weight();
  std::vector<int> weights;
  if (all_weights) {
    for (int n = total % 2; n <= total; n += 2) weights.push_back(n);
  } else if (weight) {
    weights.push_back(*weight);
  } else {
    throw std::invalid_argument("poly requires --weight n or --all-weights");
  }

  if (format == "json") {
    if (!all_weights) {
      std::cout << demflag::qpoly_to_json(evaluate(source, weights[0], level)).dump()
                << "\n";
    } else {
      nlohmann::ordered_json by_weight = nlohmann::ordered_json::object();
      for (int n : weights) {
        by_weight[std::to_string(n)] = demflag::qpoly_to_json(evaluate(source, n, level));
      }
      nlohmann::ordered_json out;
      out["source"] = source_text;
      out["level"] = level;
      out["polys"] = std::move(by_weight);
      std::cout << out.dump() << "\n";
    }
  } else if (format == "csv") {
    std::cout << "s,n,m,exponent,coefficient\n";
    for (int n : weights) print_csv_rows(std::cout, total, n, level, evaluate(source, n, level));
  } else {
    const bool latex = format == "latex";
    for (int n : weights) {
      if (all_weights) std::cout << "n=" << n << ": ";
      std::cout << evaluate(source, n, level).to_string(latex) << "\n";
    }
  }
  return 0;
}

int run_series(int m_prime, int level, int weight, int order, const std::string& format) {
  const demflag::XSeries series = demflag::generating_series(m_prime, level, weight, order);
  if (format == "json") {
    std::cout << demflag::xseries_to_json(series).dump() << "\n";
  } else {
    std::cout << series.to_string(format == "latex") << "\n";
  }
  return 0;
}

int run_paths(int length, int weight, std::optional<int> level,
              std::optional<int> height_bound, int prefix_ups) {
  std::optional<demflag::AdmissiblePairSet> pairs;
  demflag::EnumerateOptions options;
  if (level) {
    pairs.emplace(*level, weight);
    options.pairs = &*pairs;
  }
  if (height_bound) options.height_bound = *height_bound;
  options.prefix_ups = prefix_ups;
  long long count = 0;
  demflag::for_each_path(length, weight, options, [&](const demflag::DyckPath& path) {
    ++count;
    std::cout << path.to_string() << " comaj=" << path.comaj() << " maj=" << path.maj()
              << " des=" << path.des() << "\n";
  });
  std::cout << "count " << count << "\n";
  return 0;
}

int run_mock_theta(const std::string& which, int order, bool literal) {
  demflag::MockThetaSelector selector;
  if (which == "phi0") {
    selector = demflag::MockThetaSelector::kPhi0;
  } else if (which == "phi1") {
    selector = demflag::MockThetaSelector::kPhi1;
  } else if (which == "psi0") {
    selector = demflag::MockThetaSelector::kPsi0;
  } else if (which == "psi1") {
    selector = demflag::MockThetaSelector::kPsi1;
  } else {
    throw std::invalid_argument("--which must be one of phi0, phi1, psi0, psi1");
  }
  const QPolynomial series = demflag::mock_theta_series(selector, order);
  const QPolynomial paths = demflag::mock_theta_from_paths(selector, order, literal);
  bool all_match = true;
  for (int e = 0; e <= order; ++e) {
    const auto a = series.coeff(e);
    const auto b = paths.coeff(e);
    std::cout << "q^" << e << " series=" << a.str() << " paths=" << b.str()
              << (a == b ? "" : "  MISMATCH") << "\n";
    all_match = all_match && a == b;
  }
  std::cout << (all_match ? "all coefficients match" : "coefficients differ") << "\n";
  return all_match ? 0 : 1;
}

int run_table(int m_prime, int level, int max_s, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (int s = 0; s <= max_s; ++s) {
      for (int n = s % 2; n <= s; n += 2) {
        nlohmann::ordered_json cell;
        cell["s"] = s;
        cell["n"] = n;
        cell["poly"] = demflag::qpoly_to_json(demflag::demazure_flag_poly(m_prime, s, n, level));
        cells.push_back(std::move(cell));
      }
    }
    nlohmann::ordered_json out;
    out["from_level"] = m_prime;
    out["level"] = level;
    out["cells"] = std::move(cells);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "s,n,m,exponent,coefficient\n";
    for (int s = 0; s <= max_s; ++s) {
      for (int n = s % 2; n <= s; n += 2) {
        print_csv_rows(std::cout, s, n, level,
                       demflag::demazure_flag_poly(m_prime, s, n, level));
      }
    }
  }
  return 0;
}

// Reads `key = value` lines (TOML-style, # comments) for max-s, max-m and
// order; entries only apply where the matching flag was not given.
void apply_bounds_config(const std::string& path, demflag::VerifyBounds& bounds,
                         bool flag_max_s, bool flag_max_m, bool flag_order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read bounds config " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string text) {
      const auto first = text.find_first_not_of(" \t\r");
      const auto last = text.find_last_not_of(" \t\r");
      return first == std::string::npos ? std::string() : text.substr(first, last - first + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) continue;
    const int number = std::stoi(value);
    if (key == "max-s" || key == "max_s") {
      if (!flag_max_s) bounds.max_s = number;
    } else if (key == "max-m" || key == "max_m") {
      if (!flag_max_m) bounds.max_m = number;
    } else if (key == "order") {
      if (!flag_order) bounds.order = number;
    } else {
      throw std::invalid_argument("unknown bounds key '" + key + "' in " + path);
    }
  }
}

int run_verify(std::vector<std::string> suites, const demflag::VerifyBounds& bounds,
               const std::string& json_path) {
  if (suites.empty()) suites.push_back("all");
  std::vector<std::string> expanded;
  for (const std::string& name : suites) {
    if (name == "all") {
      for (const std::string& s : demflag::suite_names()) expanded.push_back(s);
    } else {
      expanded.push_back(name);
    }
  }
  const int threads = thread_count_from_env();
  std::vector<demflag::SuiteReport> reports;
  bool all_pass = true;
  for (const std::string& name : expanded) {
    reports.push_back(demflag::run_suite(name, bounds, threads));
    const demflag::SuiteReport& report = reports.back();
    std::cout << "suite " << report.name << ": " << report.passed() << "/"
              << report.checks.size() << " checks passed\n";
    for (const demflag::CheckResult& check : report.checks) {
      if (!check.pass) {
        std::cout << "  FAIL " << check.id << ": " << check.detail << "\n";
      } else if (!check.detail.empty()) {
        std::cout << "  note " << check.id << ": " << check.detail << "\n";
      }
    }
    all_pass = all_pass && report.all_pass();
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::runtime_error("cannot write JSON report to " + json_path);
    out << demflag::report_to_json(reports).dump(2) << "\n";
  }
  std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicity polynomials of Demazure flags of sl2[t] fusion "
               "products, with Dyck-path enumeration and independent oracle suites"};
  app.require_subcommand(1);

  // poly
  std::string poly_source;
  int poly_level = 1;
  std::optional<int> poly_weight;
  bool poly_all_weights = false;
  std::string poly_format = "text";
  CLI::App* poly = app.add_subcommand("poly", "compute one multiplicity polynomial");
  poly->add_option("--source", poly_source,
                   "weyl:s | hook:m',s | demazure:m',s | fusion:p1,p2,...")
      ->required();
  poly->add_option("--level", poly_level, "target level m")->required();
  poly->add_option("--weight", poly_weight, "target weight n");
  poly->add_flag("--all-weights", poly_all_weights, "tabulate every reachable weight");
  poly->add_option("--format", poly_format, "text | json | csv | latex")
      ->check(CLI::IsMember({"text", "json", "csv", "latex"}));

  // series
  int series_from = 1, series_level = 1, series_weight = 0, series_order = 8;
  std::string series_format = "text";
  CLI::App* series = app.add_subcommand("series", "truncated generating series in x");
  series->add_option("--from", series_from, "source level m'")->required();
  series->add_option("--level", series_level, "target level m")->required();
  series->add_option("--weight", series_weight, "target weight n")->required();
  series->add_option("--order", series_order, "truncation order in x");
  series->add_option("--format", series_format, "text | json | latex")
      ->check(CLI::IsMember({"text", "json", "latex"}));

  // paths
  int paths_length = 0, paths_weight = 0, paths_prefix = 0;
  std::optional<int> paths_level, paths_bound;
  CLI::App* paths = app.add_subcommand("paths", "list paths with their statistics");
  paths->add_option("--length", paths_length, "number of steps s")->required();
  paths->add_option("--weight", paths_weight, "end height n")->required();
  paths->add_option("--level", paths_level, "level m: restrict to admissible paths");
  paths->add_option("--height-bound", paths_bound, "extra height ceiling");
  paths->add_option("--prefix-ups", paths_prefix, "require this many leading up-steps");

  // verify
  std::vector<std::string> verify_suites;
  demflag::VerifyBounds bounds;
  std::string verify_json;
  CLI::App* verify = app.add_subcommand("verify", "run oracle agreement suites");
  verify->add_option("suites", verify_suites,
                     "km lpart chebyshev mock schur dims recursion transitivity all");
  std::string verify_config;
  CLI::Option* opt_max_s =
      verify->add_option("--max-s", bounds.max_s, "largest path length in the grids");
  CLI::Option* opt_max_m =
      verify->add_option("--max-m", bounds.max_m, "largest level in the grids");
  CLI::Option* opt_order =
      verify->add_option("--order", bounds.order, "series truncation / k range");
  verify->add_option("--json", verify_json, "write the full per-cell report here");
  verify->add_option("--config", verify_config,
                     "TOML-style file with suite bounds (flags take precedence)");

  // mock-theta
  std::string mock_which = "psi1";
  int mock_order = 30;
  bool mock_literal = false;
  CLI::App* mock = app.add_subcommand("mock-theta",
                                      "fifth-order mock theta coefficients two ways");
  mock->add_option("--which", mock_which, "phi0 | phi1 | psi0 | psi1")->required();
  mock->add_option("--order", mock_order, "compare through q^order");
  mock->add_flag("--literal", mock_literal,
                 "use the printed floor(n) reading for phi0/phi1 instead of floor(n/2)");

  // table
  int table_from = 1, table_level = 1, table_max_s = 10;
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand("table", "grid of polynomials over (s,n)");
  table->add_option("--from", table_from, "source level m'")->required();
  table->add_option("--level", table_level, "target level m")->required();
  table->add_option("--max-s", table_max_s, "largest source weight");
  table->add_option("--format", table_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (poly->parsed()) {
      return run_poly(poly_source, poly_level, poly_weight, poly_all_weights, poly_format);
    }
    if (series->parsed()) {
      return run_series(series_from, series_level, series_weight, series_order,
                        series_format);
    }
    if (paths->parsed()) {
      return run_paths(paths_length, paths_weight, paths_level, paths_bound, paths_prefix);
    }
    if (verify->parsed()) {
      if (!verify_config.empty()) {
        apply_bounds_config(verify_config, bounds, opt_max_s->count() > 0,
                            opt_max_m->count() > 0, opt_order->count() > 0);
      }
      return run_verify(verify_suites, bounds, verify_json);
    }
    if (mock->parsed()) {
      return run_mock_theta(mock_which, mock_order, mock_literal);
    }
    if (table->parsed()) {
      return run_table(table_from, table_level, table_max_s, table_format);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
