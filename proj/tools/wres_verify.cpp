// Command-line front end: run the boundary-term verifications, inspect single
// cases and catalog symbols, and evaluate ad-hoc pi+ projections.
//
// Exit codes: 0 success (paper-form mismatches are reported findings),
//             1 internal inconsistency (the engine disagrees with itself),
//             2 usage / parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wres/engine.hpp"
#include "wres/numeric.hpp"
#include "wres/parser.hpp"
#include "wres/report.hpp"

namespace {

using namespace wres;

struct Options {
  std::string theorem = "both";
  std::string n_csv = "0,1,2";
  std::string id;
  std::string output = "text";
  std::string out_path;
  bool numeric_oracle = false;
  double tol = 1e-9;
};

std::vector<int> parse_n_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    size_t used = 0;
    int n = std::stoi(piece, &used);
    if (used != piece.size()) throw std::invalid_argument("bad n: " + piece);
    check_n(n);  // throws std::out_of_range outside [0, 8]
    out.push_back(n);
  }
  if (out.empty()) throw std::invalid_argument("empty n list");
  return out;
}

std::vector<int> parse_theorems(const std::string& t) {
  if (t == "1") return {1};
  if (t == "2") return {2};
  if (t == "both") return {1, 2};
  throw std::invalid_argument("theorem must be 1, 2, or both");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open " + out_path);
  f << text;
}

// numeric re-integration of every traced line integrand of one verification
// run; returns the worst relative error
double numeric_recheck(int theorem, int n) {
  std::vector<std::pair<RatFun, GaussRat>> tap;
  detail::integrand_tap = &tap;
  try {
    verify(theorem, n);
  } catch (...) {
    detail::integrand_tap = nullptr;
    throw;
  }
  detail::integrand_tap = nullptr;
  int m = 2 * n + 4;
  auto bind = oracle_binding(m);
  auto xi = oracle_xi_point(m);
  double worst = 0;
  for (const auto& [f, pref] : tap) {
    if (f.is_zero()) continue;
    NumericCheck c = numeric_line_check(f, bind, xi, 1.0);
    if (c.rel_err > worst) worst = c.rel_err;
  }
  return worst;
}

int cmd_verify(const Options& opt) {
  std::vector<int> thms = parse_theorems(opt.theorem);
  std::vector<int> ns = parse_n_list(opt.n_csv);
  bool internal_bad = false;
  std::vector<BoundaryReport> reports;
  for (int thm : thms)
    for (int n : ns) {
      BoundaryReport r = verify(thm, n);
      if (opt.numeric_oracle) {
        double err = numeric_recheck(thm, n);
        std::ostringstream w;
        w << "numeric oracle: worst line-integral relative error " << err;
        r.warnings.push_back(w.str());
        if (err > opt.tol) {
          r.warnings.push_back("numeric oracle disagrees with the exact integral");
          r.aggregate_verdict = "internal-mismatch";
        }
      }
      if (r.aggregate_verdict == "internal-mismatch") internal_bad = true;
      reports.push_back(std::move(r));
    }
  std::string text;
  if (opt.output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    text = (reports.size() == 1 ? report_to_json(reports[0]).dump(2) : arr.dump(2)) + "\n";
  } else {
    for (const auto& r : reports) text += report_to_text(r) + "\n";
  }
  emit(text, opt.out_path);
  return internal_bad ? 1 : 0;
}

int cmd_case(const Options& opt) {
  std::vector<int> thms = parse_theorems(opt.theorem);
  if (thms.size() != 1)
    throw std::invalid_argument("case: --theorem must be 1 or 2");
  std::vector<int> ns = parse_n_list(opt.n_csv);
  int thm = thms[0];
  auto labels = case_labels(thm);
  int sel = -1;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == opt.id) sel = static_cast<int>(k);
  if (sel < 0) throw std::invalid_argument("unknown case id: " + opt.id);
  bool internal_bad = false;
  std::string text;
  ordered_json arr = ordered_json::array();
  for (int n : ns) {
    CaseReport c = eval_case(enumerate_cases(thm, n)[sel], n);
    if (c.verdict == "internal-mismatch") internal_bad = true;
    if (opt.output == "json") {
      ordered_json o = case_to_json(c);
      o["n"] = n;
      arr.push_back(o);
    } else {
      std::ostringstream os;
      os << "theorem " << thm << ", n = " << n << ", case (" << c.id << ")\n"
         << "  value   = " << to_string(c.value) << "\n";
      if (c.has_paper) os << "  quoted  = " << to_string(c.paper_form) << "\n";
      os << "  verdict = " << c.verdict << "\n";
      for (const auto& w : c.warnings) os << "  warning: " << w << "\n";
      text += os.str();
    }
  }
  if (opt.output == "json")
    text = (arr.size() == 1 ? arr[0].dump(2) : arr.dump(2)) + "\n";
  emit(text, opt.out_path);
  return internal_bad ? 1 : 0;
}

std::string symexpr_text(const SymExpr& e) {
  if (e.is_zero()) return "0\n";
  std::ostringstream os;
  for (const auto& [k, c] : e.terms()) {
    os << "  [";
    if (k.xm_deg) os << "xm^" << k.xm_deg << " ";
    os << "q^" << k.q_pow;
    if (k.h_half) os << " h^(" << k.h_half << "/2)";
    os << "] " << to_string(c) << "\n";
  }
  return os.str();
}

std::string ratfun_text(const RatFun& f) {
  if (f.is_zero()) return "0\n";
  std::ostringstream os;
  for (std::size_t k = 0; k < f.numerator().size(); ++k)
    os << "  num[xm^" << k << "] = " << to_string(f.numerator()[k]) << "\n";
  os << "  / ((xm-I)^" << f.pole_order_plus() << " * (xm+I)^" << f.pole_order_minus()
     << ")\n";
  return os.str();
}

int cmd_dump_symbol(const Options& opt) {
  SymbolId id;
  if (!symbol_from_name(opt.id, id))
    throw std::invalid_argument("unknown symbol: " + opt.id);
  std::string text;
  for (int n : parse_n_list(opt.n_csv)) {
    text += opt.id + ", n = " + std::to_string(n) + ":\n";
    auto v = symbol(id, n);
    if (std::holds_alternative<SymExpr>(v))
      text += symexpr_text(std::get<SymExpr>(v));
    else
      text += ratfun_text(std::get<RatFun>(v));
  }
  emit(text, opt.out_path);
  return 0;
}

int cmd_piplus(const std::string& expr, const Options& opt) {
  RatFun f = parse_ratfun(expr);
  emit(ratfun_to_string(f.pi_plus()) + "\n", opt.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::string expr;

  CLI::App app{"Exact verification of the conformal Dirac boundary densities"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_id) {
    sub->add_option("--theorem", opt.theorem, "1, 2, or both")->capture_default_str();
    sub->add_option("--n", opt.n_csv, "comma-separated list, each in [0, 8]")
        ->capture_default_str();
    if (with_id) sub->add_option("--id", opt.id, "case label or symbol name");
    sub->add_option("--output", opt.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", opt.out_path, "write the report to a file");
    sub->add_flag("--numeric-oracle", opt.numeric_oracle,
                  "re-integrate every line integrand in floating point");
    sub->add_option("--tol", opt.tol, "numeric oracle relative tolerance")
        ->capture_default_str();
  };

  CLI::App* sverify = app.add_subcommand("verify", "run full boundary verifications");
  add_common(sverify, false);
  CLI::App* scase = app.add_subcommand("case", "evaluate a single case");
  add_common(scase, true);
  CLI::App* sdump = app.add_subcommand("dump-symbol", "print a catalog entry");
  add_common(sdump, true);
  CLI::App* spiplus = app.add_subcommand("piplus", "pi+ projection of an expression");
  spiplus->add_option("expr", expr, "expression in xm, I, rationals")->required();
  spiplus->add_option("--out", opt.out_path, "write the result to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help -> 0, anything else is a usage error
  }

  try {
    if (sverify->parsed()) return cmd_verify(opt);
    if (scase->parsed()) return cmd_case(opt);
    if (sdump->parsed()) return cmd_dump_symbol(opt);
    if (spiplus->parsed()) return cmd_piplus(expr, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const NotInHError& e) {
    std::cerr << "not in H: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
