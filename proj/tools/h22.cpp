// Command-line front end: verification suites, kernel and operator dumps,
// weighted-composition symbol construction.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "h22/h22.hpp"

namespace {

using h22::complex;

/// Raised for bad user input; maps to exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string space = "h22";
  std::size_t trunc = 128;
  std::uint64_t seed = 7;
  std::string format = "json";
  std::string out;
  bool timings = false;
};

/// Accepts "a", "bi", "a+bi", "a-bi" and "a,b".
complex parse_complex(const std::string& text) {
  static const std::string num = R"(([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))";
  static const std::regex pair_re("^\\s*" + num + "\\s*,\\s*" + num + "\\s*$");
  static const std::regex real_re("^\\s*" + num + "\\s*$");
  static const std::regex imag_re("^\\s*([+-]?(?:\\d+\\.?\\d*|\\.\\d+)?(?:[eE][+-]?\\d+)?)i\\s*$");
  static const std::regex full_re("^\\s*" + num + "\\s*([+-])\\s*((?:\\d+\\.?\\d*|\\.\\d+)?(?:[eE][+-]?\\d+)?)i\\s*$");
  auto coef = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return std::stod(s);
  };
  std::smatch m;
  if (std::regex_match(text, m, pair_re)) return {std::stod(m[1]), std::stod(m[2])};
  if (std::regex_match(text, m, real_re)) return {std::stod(m[1]), 0.0};
  if (std::regex_match(text, m, imag_re)) return {0.0, coef(m[1])};
  if (std::regex_match(text, m, full_re)) {
    const double im = coef(m[3]);
    return {std::stod(m[1]), m[2] == "-" ? -im : im};
  }
  throw UsageError("cannot parse complex number '" + text + "'");
}

h22::Series read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  try {
    return h22::read_coefficients_csv(in);
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string fmt(double x) { return h22::format_g17(x); }

std::string fmt(complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

std::string compact(const h22::json& j) {
  if (j.is_number_float()) return h22::format_double(j.get<double>());
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      s += (i ? ";" : "") + compact(j[i]);
    }
    return s + "]";
  }
  if (j.is_object() && j.contains("re") && j.contains("im")) {
    return compact(j["re"]) + (j["im"].get<double>() < 0 ? "" : "+") + compact(j["im"]) + "i";
  }
  return j.dump();
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += '"';
  }
  return q + "\"";
}

int cmd_verify(const Config& cfg, const std::string& suite, std::ostream& out) {
  h22::SuiteId id{};
  try {
    id = h22::parse_suite(suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto reports = h22::run_suite(id, cfg.seed);
  if (cfg.format == "json") {
    out << h22::dump_json(h22::reports_to_json(reports, cfg.timings));
  } else if (cfg.format == "csv") {
    out << "check_id,verdict,lhs,rhs,tolerance,runtime_ms\n";
    for (const auto& r : reports) {
      out << quote_csv(r.check_id) << ',' << h22::to_string(r.verdict) << ',' << quote_csv(compact(r.lhs)) << ','
          << quote_csv(compact(r.rhs)) << ',' << h22::format_double(r.tolerance) << ','
          << (cfg.timings && r.runtime_ms ? std::to_string(*r.runtime_ms) : std::string()) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      std::string tag(h22::to_string(r.verdict));
      for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      out << '[' << tag << "] " << r.check_id << "  lhs=" << compact(r.lhs) << "  rhs=" << compact(r.rhs)
          << "  tol=" << h22::format_double(r.tolerance);
      if (cfg.timings && r.runtime_ms) out << "  " << *r.runtime_ms << " ms";
      out << '\n';
    }
    out << reports.size() << " checks: " << h22::count_verdict(reports, h22::Verdict::pass) << " pass, "
        << h22::count_verdict(reports, h22::Verdict::fail) << " fail, "
        << h22::count_verdict(reports, h22::Verdict::finding) << " finding\n";
  }
  return h22::count_verdict(reports, h22::Verdict::fail) == 0 ? 0 : 1;
}

int cmd_kernel(const Config& cfg, const h22::SpaceWeights& space, complex w, std::ostream& out) {
  if (!(std::abs(w) < 1.0)) {
    throw UsageError("kernel point must satisfy |w| < 1");
  }
  const auto K = h22::kernel_series(w, cfg.trunc, space);
  const complex at_w = h22::evaluate(K, w);
  const double norm2 = h22::norm_sq(K, space);
  if (cfg.format == "json") {
    h22::json coeffs = h22::json::array();
    for (std::size_t n = 0; n <= K.order(); ++n) {
      coeffs.push_back({{"n", n}, {"re", K[n].real()}, {"im", K[n].imag()}});
    }
    h22::json doc = {{"space", std::string(space.name())},
                     {"w", h22::to_json_value(w)},
                     {"N", cfg.trunc},
                     {"coefficients", coeffs},
                     {"value_at_w", h22::to_json_value(at_w)},
                     {"norm_sq", norm2}};
    out << h22::dump_json(doc);
    return 0;
  }
  out << "n,coeff_re,coeff_im\n";
  for (std::size_t n = 0; n <= K.order(); ++n) {
    out << n << ',' << fmt(K[n]) << '\n';
  }
  out << "K_w(w)," << fmt(at_w) << '\n';
  out << "norm_sq," << fmt(norm2) << ",0\n";
  return 0;
}

int cmd_operator(const Config& cfg, const h22::SpaceWeights& space, const std::string& kind,
                 const std::string& symbol_path, const std::string& weight_path, std::ostream& out) {
  if (symbol_path.empty()) {
    throw UsageError("operator: --symbol is required");
  }
  const h22::Series symbol = read_series_file(symbol_path);
  std::optional<h22::Series> weight;
  if (kind == "wcomp") {
    if (weight_path.empty()) {
      throw UsageError("operator wcomp: --weight is required");
    }
    weight = read_series_file(weight_path);
  }
  if (kind != "mult") {
    const double sup = h22::sup_norm(symbol);
    if (!(sup < 1.0)) {
      throw UsageError("operator: symbol is not a self-map of the disk (sampled sup " + fmt(sup) + ")");
    }
  }
  h22::OperatorMatrix T = kind == "mult"   ? h22::multiplication_matrix(symbol, cfg.trunc, space)
                          : kind == "comp" ? h22::composition_matrix(symbol, cfg.trunc, space)
                                           : h22::weighted_composition_matrix(*weight, symbol, cfg.trunc, space);
  const double sigma = h22::operator_norm_estimate(T);
  const std::size_t block = T.safe_block();
  const double residual = h22::symmetry_residual(T, block);
  std::optional<h22::HsPartialSum> hs;
  if (kind == "comp") {
    hs = h22::hs_partial_sum(symbol, cfg.trunc, space);
  }
  if (cfg.format == "json") {
    h22::json entries = h22::json::array();
    for (Eigen::Index m = 0; m < T.entries.rows(); ++m) {
      for (Eigen::Index n = 0; n < T.entries.cols(); ++n) {
        const complex v = T.entries(m, n);
        entries.push_back({{"m", m}, {"n", n}, {"re", v.real()}, {"im", v.imag()}});
      }
    }
    h22::json doc = {{"operator", T.descriptor.describe()},
                     {"space", std::string(space.name())},
                     {"N", cfg.trunc},
                     {"entries", entries},
                     {"operator_norm_estimate", sigma},
                     {"symmetry_residual", residual},
                     {"symmetry_block", block},
                     {"warnings", T.warnings}};
    if (hs) {
      doc["hs_partial_sum"] = hs->partial;
    }
    out << h22::dump_json(doc);
    return 0;
  }
  h22::write_matrix_csv(out, T);
  out << "# operator," << quote_csv(T.descriptor.describe()) << '\n';
  out << "# operator_norm_estimate," << fmt(sigma) << '\n';
  if (hs) {
    out << "# hs_partial_sum," << fmt(hs->partial) << '\n';
  }
  out << "# symmetry_residual," << fmt(residual) << ",block," << block << '\n';
  for (const auto& w : T.warnings) {
    out << "# warning," << quote_csv(w) << '\n';
  }
  return 0;
}

int cmd_symbols(const Config& cfg, complex a0, complex a1, complex a2, std::ostream& out) {
  if (!(std::abs(a0) < 1.0)) {
    throw UsageError("symbols: |a0| must be < 1");
  }
  const auto sym = h22::symbols_from_params({a0, a1, a2}, cfg.trunc);
  const std::size_t n_c = a0 == complex{} ? 1 : 8;
  const auto c = h22::c_expansion(a0, n_c);
  const auto z3w = h22::z3w_coefficient_check(a0, a1);
  const auto grid = h22::default_grid(cfg.seed);
  h22::KernelResidual kr;
  try {
    kr = h22::kernel_identity_residual(sym.psi, sym.phi, grid, 400);
  } catch (const std::domain_error& e) {
    throw UsageError(std::string("symbols: ") + e.what());
  }
  const bool equal = z3w.lhs == z3w.rhs ||
                     std::abs(z3w.lhs - z3w.rhs) <= 1e-12 * std::max(std::abs(z3w.lhs), std::abs(z3w.rhs));
  if (cfg.format == "json") {
    auto series_json = [](const h22::Series& f) {
      h22::json arr = h22::json::array();
      for (std::size_t n = 0; n <= f.order(); ++n) {
        arr.push_back({{"n", n}, {"re", f[n].real()}, {"im", f[n].imag()}});
      }
      return arr;
    };
    h22::json cs = h22::json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      cs.push_back({{"i", i + 1}, {"c", c[i]}});
    }
    h22::json doc = {{"a0", h22::to_json_value(a0)},
                     {"a1", h22::to_json_value(a1)},
                     {"a2", h22::to_json_value(a2)},
                     {"N", cfg.trunc},
                     {"phi", series_json(sym.phi)},
                     {"psi", series_json(sym.psi)},
                     {"c", cs},
                     {"z3w", {{"lhs", h22::to_json_value(z3w.lhs)}, {"rhs", h22::to_json_value(z3w.rhs)}, {"equal", equal}}},
                     {"kernel_identity_residual", kr.residual},
                     {"kernel_tail_bound", kr.tail_bound},
                     {"grid_pairs", kr.pairs}};
    out << h22::dump_json(doc);
    return 0;
  }
  out << "# phi\n";
  h22::write_coefficients_csv(out, sym.phi);
  out << "# psi\n";
  h22::write_coefficients_csv(out, sym.psi);
  out << "# c\ni,c_i\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << i + 1 << ',' << fmt(c[i]) << '\n';
  }
  out << "# z3w\nside,re,im\n";
  out << "lhs," << fmt(z3w.lhs) << '\n';
  out << "rhs," << fmt(z3w.rhs) << '\n';
  out << "# z3w_equal," << (equal ? "true" : "false") << '\n';
  out << "# kernel_identity_residual," << fmt(kr.residual) << ",pairs," << kr.pairs << ",tail_bound,"
      << fmt(kr.tail_bound) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical toolkit for the weighted Hardy-type space H22 of the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--space", cfg.space, "Space: hardy, bergman, h21, h22")
      ->check(CLI::IsMember({"hardy", "bergman", "h21", "h22"}))
      ->capture_default_str();
  app.add_option("--trunc", cfg.trunc, "Truncation order N (>= 8)")->check(CLI::Range(8, 1 << 20))->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "human"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_flag("--timings", cfg.timings, "Include per-check runtime_ms (output is then not reproducible)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "basis, kernels, thm31, thm32, thm33, thm41, thm42, thm34 or all")->required();

  std::string w_text;
  auto* kernel = app.add_subcommand("kernel", "Dump reproducing-kernel coefficients");
  kernel->add_option("--w", w_text, "Kernel point, e.g. 0.3, 0.1+0.2i or 0.1,0.2")->required();

  std::string kind;
  std::string symbol_path;
  std::string weight_path;
  auto* op = app.add_subcommand("operator", "Dump a truncated operator matrix");
  op->add_option("kind", kind, "mult, comp or wcomp")->required()->check(CLI::IsMember({"mult", "comp", "wcomp"}));
  op->add_option("--symbol", symbol_path, "Coefficient CSV for f (mult) or phi (comp, wcomp)");
  op->add_option("--weight", weight_path, "Coefficient CSV for Psi (wcomp)");

  std::string a0_text;
  std::string a1_text;
  std::string a2_text = "3888";
  auto* symbols = app.add_subcommand("symbols", "Build weighted-composition symbols from (a0, a1, a2)");
  symbols->add_option("--a0", a0_text, "phi(0)")->required();
  symbols->add_option("--a1", a1_text, "phi'(0)")->required();
  symbols->add_option("--a2", a2_text, "3888 Psi(0)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    const auto space = h22::SpaceWeights::parse(cfg.space);
    if (*verify) {
      status = cmd_verify(cfg, suite, buffer);
    } else if (*kernel) {
      status = cmd_kernel(cfg, space, parse_complex(w_text), buffer);
    } else if (*op) {
      status = cmd_operator(cfg, space, kind, symbol_path, weight_path, buffer);
    } else {
      status = cmd_symbols(cfg, parse_complex(a0_text), parse_complex(a1_text), parse_complex(a2_text), buffer);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}
