#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "wres/engine.hpp"

using namespace wres;

namespace {

ScalarPoly hv(const Rat& c) {
  return ScalarPoly::var(Param::h1()) * ScalarPoly::var(Param::vol()) * GaussRat(c);
}

ScalarPoly jet(const Rat& c, Param base, Param d, bool imag = false) {
  GaussRat z = imag ? GaussRat(Rat(0), c) : GaussRat(c);
  return ScalarPoly::var(base) * ScalarPoly::var(d) * ScalarPoly::var(Param::vol()) * z;
}

const CaseReport& find_case(const BoundaryReport& r, const std::string& id) {
  for (const auto& c : r.cases)
    if (c.id == id) return c;
  throw std::runtime_error("case not found: " + id);
}

}  // namespace

TEST_CASE("five cases per theorem, labels bijective, index constraint holds") {
  for (int thm = 1; thm <= 2; ++thm) {
    auto labels = case_labels(thm);
    for (int n = 0; n <= 4; ++n) {
      auto tuples = enumerate_cases(thm, n);
      REQUIRE(tuples.size() == 5);
      std::set<std::string> seen;
      for (std::size_t k = 0; k < tuples.size(); ++k) {
        const CaseTuple& t = tuples[k];
        CHECK(t.r + t.ell - t.k - t.j - t.alpha == -(2 * n + 3));
        CaseReport rep = eval_case(t, n);
        CHECK(rep.id == labels[k]);
        seen.insert(rep.id);
      }
      CHECK(seen.size() == 5);
    }
  }
}

TEST_CASE("the tangential-derivative cases vanish identically") {
  for (int n = 0; n <= 4; ++n) {
    BoundaryReport r1 = verify(1, n);
    CHECK(find_case(r1, "aI").value.is_zero());
    CHECK(find_case(r1, "aI").verdict == "zero");
    BoundaryReport r2 = verify(2, n);
    CHECK(find_case(r2, "1").value.is_zero());
    CHECK(find_case(r2, "1").verdict == "zero");
  }
}

TEST_CASE("first-density case values, n = 1 and n = 2") {
  BoundaryReport r = verify(1, 1);
  CHECK(find_case(r, "aII").value == hv(Rat(-5, 8)));
  CHECK(find_case(r, "aIII").value == hv(Rat(5, 8)));
  CHECK(find_case(r, "b").value == hv(Rat(-15, 8)));
  CHECK(find_case(r, "c").value == hv(Rat(15, 8)));
  CHECK(find_case(r, "aII").verdict == "match");
  CHECK(find_case(r, "aIII").verdict == "match");
  // cases (b) and (c): the quoted brackets carry transcription slips; the two
  // independent engine routes agree on the corrected values
  CHECK(find_case(r, "b").verdict == "paper-form-mismatch");
  CHECK(find_case(r, "b").paper_form == hv(Rat(-35, 16)));
  CHECK(find_case(r, "c").verdict == "paper-form-mismatch");
  CHECK(find_case(r, "c").paper_form == hv(Rat(11, 8)));

  BoundaryReport r2 = verify(1, 2);
  CHECK(find_case(r2, "aII").value == hv(Rat(-7, 4)));
  CHECK(find_case(r2, "aIII").value == hv(Rat(21, 8)));
  CHECK(find_case(r2, "b").value == hv(Rat(-7)));
  CHECK(find_case(r2, "c").value == hv(Rat(49, 8)));
}

TEST_CASE("the first boundary density telescopes to zero for every n") {
  for (int n = 0; n <= 4; ++n) {
    BoundaryReport r = verify(1, n);
    CHECK(r.total.is_zero());
    ScalarPoly alt;
    for (const auto& c : r.cases) alt += c.alt_value;
    CHECK(alt.is_zero());
    CHECK(r.aggregate_verdict == (n == 0 ? "match" : "paper-form-mismatch"));
  }
}

TEST_CASE("second-density case values and totals, n = 0..2") {
  int ms[] = {4, 6, 8};
  Rat c2[] = {Rat(-3, 8), Rat(-15, 16), Rat(-63, 32)};
  Rat c3[] = {Rat(3, 8), Rat(25, 16), Rat(147, 32)};
  Rat c4[] = {Rat(-9, 8), Rat(-65, 16), Rat(-357, 32)};
  Rat c5[] = {Rat(11, 8), Rat(63, 16), Rat(303, 32)};
  Rat jets[] = {Rat(1, 2), Rat(1), Rat(15, 8)};
  Rat th[] = {Rat(1, 4), Rat(1, 2), Rat(15, 16)};
  for (int n = 0; n <= 2; ++n) {
    int m = ms[n];
    BoundaryReport r = verify(2, n);
    CHECK(find_case(r, "2").value ==
          hv(c2[n]) + jet(jets[n], Param::finv(), Param::df(m)));
    CHECK(find_case(r, "3").value ==
          hv(c3[n]) + jet(-jets[n], Param::f(), Param::dfinv(m)));
    CHECK(find_case(r, "4").value ==
          hv(c4[n]) + jet(jets[n], Param::f(), Param::df(m), true));
    CHECK(find_case(r, "5").value == hv(c5[n]));
    CHECK(r.total == hv(th[n]) + jet(jets[n], Param::finv(), Param::df(m)) +
                         jet(-jets[n], Param::f(), Param::dfinv(m)) +
                         jet(jets[n], Param::f(), Param::df(m), true));
  }
}

TEST_CASE("case (2): the h'(0) part is exactly 36 times the quoted display") {
  // the display's second xi_m-derivative lost two factorial factors; the
  // ratio is constant across n
  for (int n = 0; n <= 2; ++n) {
    CaseReport c = find_case(verify(2, n), "2");
    REQUIRE(c.has_paper);
    ParamMono key{{Param::h1(), 1}, {Param::vol(), 1}};
    GaussRat mine = c.value.terms().at(key);
    GaussRat quoted = c.paper_form.terms().at(key);
    CHECK(mine == quoted * GaussRat(36));
  }
}

TEST_CASE("both integration routes agree on every case") {
  for (int thm = 1; thm <= 2; ++thm)
    for (int n = 0; n <= 3; ++n) {
      BoundaryReport r = verify(thm, n);
      for (const auto& c : r.cases) {
        CHECK(c.routes_agree);
        CHECK(c.value == c.alt_value);
      }
      CHECK(r.aggregate_verdict != "internal-mismatch");
      // the recursed sigma_{-2n-1} route never fires its disagreement warning
      for (const auto& w : r.warnings) CHECK(w.find("recursed") == std::string::npos);
    }
}

TEST_CASE("the total is the exact sum of the case values") {
  for (int thm = 1; thm <= 2; ++thm)
    for (int n = 0; n <= 3; ++n) {
      BoundaryReport r = verify(thm, n);
      ScalarPoly sum;
      for (const auto& c : r.cases) sum += c.value;
      CHECK(r.total == sum);
    }
}

TEST_CASE("totals are linear in the jets: degree bounds") {
  for (int n = 0; n <= 3; ++n) {
    BoundaryReport r = verify(2, n);
    CHECK(r.total.degree_in(ParamKind::H1) <= 1);
    for (const auto& [mono, c] : r.total.terms()) {
      int jets = 0;
      for (const auto& [p, e] : mono)
        if (p.kind == ParamKind::DF || p.kind == ParamKind::DFINV) jets += e;
      CHECK(jets <= 1);
    }
  }
}

TEST_CASE("quoted closed forms: spot values") {
  // every n-prefixed first-density bracket carries an explicit factor n
  CHECK(closed_form(FormId::CASE_A2, 0).value.is_zero());
  CHECK(closed_form(FormId::CASE_A3, 0).value.is_zero());
  CHECK(closed_form(FormId::CASE_C, 0).value.is_zero());
  CHECK(closed_form(FormId::PHI, 0).value.is_zero());
  CHECK(closed_form(FormId::CASE_A2, 1).value == hv(Rat(-5, 8)));
  CHECK(closed_form(FormId::CASE_A3, 1).value == hv(Rat(5, 8)));
  // derivative vs. binomial evaluations of the same Q0 display disagree;
  // both are computed and reported, neither is patched
  for (int n = 0; n <= 4; ++n) {
    GaussRat qd = closed_form(FormId::Q0_DERIV, n).value.constant();
    GaussRat qb = closed_form(FormId::Q0_BINOM, n).value.constant();
    INFO("n=", n, " Q0_DERIV=", to_string(qd), " Q0_BINOM=", to_string(qb));
    // Q0 enters the density multiplied by i; a real density needs a purely
    // imaginary Q0, which the derivative form delivers
    CHECK(qd.re == 0);
    ParamMono hkey{{Param::h1(), 1}, {Param::vol(), 1}};
    ScalarPoly phi = closed_form(FormId::PHI, n).value;
    if (!phi.is_zero()) CHECK(phi.terms().at(hkey).im == 0);
  }
  // the advisory displays carry their warnings
  CHECK(!closed_form(FormId::G0, 0).warnings.empty());
  CHECK(!closed_form(FormId::G3, 0).warnings.empty());
  CHECK(!closed_form(FormId::Y0, 0).warnings.empty());
}

TEST_CASE("interior term rendering data") {
  InteriorTerm t = interior_term(1);
  CHECK(t.pi_power == 8);
  CHECK(t.coefficient == Rat(4096, 45));
  // flat metric, constant conformal factor: no interior contribution
  std::map<Param, GaussRat> flat{{Param::s(), GaussRat(0)},
                                 {Param::lapf(), GaussRat(0)},
                                 {Param::gradf2(), GaussRat(0)},
                                 {Param::flapf(), GaussRat(0)}};
  CHECK(t.body.substitute(flat).is_zero());
  CHECK(t.body.degree_in(ParamKind::S) == 1);
  CHECK(interior_term(0).pi_power == 6);
}
