#pragma once

// Report rendering: exact JSON (round-trip safe) and human-readable text for
// the boundary verification results. All numbers are rational strings; the
// global units pi * Vol(S_{2n+2}) are declared once per report.

#include <json.hpp>

#include <sstream>
#include <string>

#include "wres/engine.hpp"

namespace wres {

using ordered_json = nlohmann::ordered_json;

inline const char* kUnits = "pi*Vol(S_{2n+2})";

inline ordered_json value_to_json(const ScalarPoly& p) {
  ordered_json o = ordered_json::object();
  for (const auto& [mono, c] : p.terms()) {
    o[to_string(mono)] = {{"re", rat_str(c.re)}, {"im", rat_str(c.im)}};
  }
  return o;
}

inline bool param_from_string(const std::string& s, Param& out) {
  if (s == "h1") { out = Param::h1(); return true; }
  if (s == "f") { out = Param::f(); return true; }
  if (s == "finv") { out = Param::finv(); return true; }
  if (s == "vol") { out = Param::vol(); return true; }
  if (s == "s") { out = Param::s(); return true; }
  if (s == "lapf") { out = Param::lapf(); return true; }
  if (s == "gradf2") { out = Param::gradf2(); return true; }
  if (s == "flapf") { out = Param::flapf(); return true; }
  auto idx_of = [](const std::string& t) { return std::stoi(t); };
  if (s.rfind("df_", 0) == 0) { out = Param::df(idx_of(s.substr(3))); return true; }
  if (s.rfind("dfinv_", 0) == 0) { out = Param::dfinv(idx_of(s.substr(6))); return true; }
  return false;
}

inline ScalarPoly value_from_json(const ordered_json& o) {
  ScalarPoly p;
  for (auto it = o.begin(); it != o.end(); ++it) {
    ParamMono mono;
    const std::string key = it.key();
    if (key != "1") {
      std::stringstream ss(key);
      std::string piece;
      while (std::getline(ss, piece, '*')) {
        int e = 1;
        auto caret = piece.find('^');
        if (caret != std::string::npos) {
          e = std::stoi(piece.substr(caret + 1));
          piece = piece.substr(0, caret);
        }
        Param prm;
        if (!param_from_string(piece, prm))
          throw std::invalid_argument("unknown parameter in report: " + piece);
        mono[prm] += e;
      }
    }
    GaussRat c(rat_parse(it.value().at("re").get<std::string>()),
               rat_parse(it.value().at("im").get<std::string>()));
    p.add_term(mono, c);
  }
  return p;
}

inline ordered_json case_to_json(const CaseReport& c) {
  ordered_json o = ordered_json::object();
  o["id"] = c.id;
  o["tuple"] = {{"r", c.tuple.r}, {"ell", c.tuple.ell}, {"k", c.tuple.k},
                {"j", c.tuple.j}, {"alpha", c.tuple.alpha}};
  o["value"] = value_to_json(c.value);
  o["paper_form"] = c.has_paper ? value_to_json(c.paper_form) : ordered_json(nullptr);
  o["verdict"] = c.verdict;
  return o;
}

inline ordered_json report_to_json(const BoundaryReport& r) {
  ordered_json o = ordered_json::object();
  o["theorem"] = r.theorem;
  o["n"] = r.n;
  o["units"] = kUnits;
  o["cases"] = ordered_json::array();
  for (const auto& c : r.cases) o["cases"].push_back(case_to_json(c));
  o["total"] = value_to_json(r.total);
  o["paper_total"] =
      r.has_paper_total ? value_to_json(r.paper_total) : ordered_json(nullptr);
  o["aggregate_verdict"] = r.aggregate_verdict;
  o["warnings"] = r.warnings;
  return o;
}

inline BoundaryReport report_from_json(const ordered_json& o) {
  BoundaryReport r;
  r.theorem = o.at("theorem").get<int>();
  r.n = o.at("n").get<int>();
  for (const auto& cj : o.at("cases")) {
    CaseReport c;
    c.id = cj.at("id").get<std::string>();
    const auto& t = cj.at("tuple");
    c.tuple = {t.at("r").get<int>(), t.at("ell").get<int>(), t.at("k").get<int>(),
               t.at("j").get<int>(), t.at("alpha").get<int>(), r.theorem};
    c.value = value_from_json(cj.at("value"));
    if (!cj.at("paper_form").is_null()) {
      c.has_paper = true;
      c.paper_form = value_from_json(cj.at("paper_form"));
    }
    c.verdict = cj.at("verdict").get<std::string>();
    r.cases.push_back(std::move(c));
  }
  r.total = value_from_json(o.at("total"));
  if (!o.at("paper_total").is_null()) {
    r.has_paper_total = true;
    r.paper_total = value_from_json(o.at("paper_total"));
  }
  r.aggregate_verdict = o.at("aggregate_verdict").get<std::string>();
  for (const auto& w : o.at("warnings")) r.warnings.push_back(w.get<std::string>());
  return r;
}

inline std::string report_to_text(const BoundaryReport& r) {
  std::ostringstream os;
  os << "theorem " << r.theorem << ", n = " << r.n << "  [units: " << kUnits << "]\n";
  for (const auto& c : r.cases) {
    os << "  case (" << c.id << ")  [r=" << c.tuple.r << " ell=" << c.tuple.ell
       << " k=" << c.tuple.k << " j=" << c.tuple.j << " alpha=" << c.tuple.alpha
       << "]\n";
    os << "    value   = " << to_string(c.value) << "\n";
    if (c.has_paper) os << "    quoted  = " << to_string(c.paper_form) << "\n";
    os << "    verdict = " << c.verdict << "\n";
  }
  os << "  total       = " << to_string(r.total) << "\n";
  if (r.has_paper_total)
    os << "  quoted total= " << to_string(r.paper_total) << "\n";
  os << "  aggregate   = " << r.aggregate_verdict << "\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

inline std::string interior_to_text(const InteriorTerm& t) {
  std::ostringstream os;
  os << "(2*pi)^" << t.pi_power << " * " << rat_str(t.coefficient) << " * { "
     << to_string(t.body) << " } dx";
  return os.str();
}

}  // namespace wres
