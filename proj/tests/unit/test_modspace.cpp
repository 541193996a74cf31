#include <doctest.h>

#include "coxm06/errors.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/symmetry.hpp"

using namespace coxm06;

namespace {

Polynomial T(const char* t) { return parse_polynomial(t, Universe::Torus); }
Polynomial Par(const char* t) { return parse_polynomial(t, Universe::Parameter); }
Rational Q(const char* t) { return Rational::parse(t); }

}  // namespace

TEST_CASE("I6 generators") {
  auto g = i6_generators();
  REQUIRE(g.size() == 6);
  CHECK(g[0] == T("z_34 - z_24 + 1"));
  CHECK(g[5] == T("z_56 - z_26 + z_25"));
  for (const auto& p : g) {
    CHECK(p.total_degree() == 1);
    CHECK(substitute(p, plucker_parametrization(), Universe::Parameter).is_zero());
  }
}

TEST_CASE("f_pi table") {
  CHECK(f_pi(parse_matching("(12)(34)(56)")) == T("z_24 - z_25*z_26"));
  CHECK(f_pi(parse_matching("(16)(24)(35)")) == T("z_56 + z_26*z_45"));
  CHECK(f_pi(parse_matching("(14)(23)(56)")) == T("z_24*z_36 - z_25*z_46"));
  CHECK_THROWS_AS(f_pi(Matching{{{1, 2}, {1, 3}, {5, 6}}}), InvalidIndex);
}

TEST_CASE("parametrization") {
  CHECK(to_parameters(f_pi(0)) == Par("B + C - A - B*C"));
  CHECK(to_parameters(T("z_45")) == Par("A - B"));
  CHECK(to_parameters(T("z_34^-1")) == Par("-A^-1"));
  CHECK_THROWS_AS(to_parameters(T("z_24^-1")), NonInvertibleSubstitution);
  std::map<VariableId, Rational> pt{{*parse_variable("A"), 2}, {*parse_variable("B"), 3}, {*parse_variable("C"), 5}};
  CHECK(evaluate(to_parameters(f_pi(0)), pt) == -9);
}

TEST_CASE("reduce_mod_I6") {
  ReducedForm r = reduce_mod_I6(T("z_45"));
  CHECK(r.numerator == T("z_25 - z_24"));
  CHECK(r.denominator == T("1"));
  CHECK(reduce_mod_I6(T("u_12.34.56")).numerator == T("z_24 - z_25*z_26"));
  Polynomial q = T("u_13.25.46*z_45^-1 + z_56*z_24^-2");
  ReducedForm once = reduce_mod_I6(q);
  CHECK(reduce_mod_I6(once.numerator).numerator == once.numerator);
  CHECK(once.denominator == T("z_24^2*z_25 - z_24^3"));
  for (const auto& g : i6_generators()) CHECK(reduce_mod_I6(g).numerator.is_zero());
}

TEST_CASE("reduction detects vanishing exactly as sampled points do") {
  auto pts = seeded_parameter_points(6, 10);
  std::vector<Polynomial> zero = {T("z_34 - z_24 + 1"), T("u_12.34.56 - z_24 + z_25*z_26"),
                                  T("z_45*z_36 - z_46*z_35 + z_56*z_34")};
  std::vector<Polynomial> nonzero = {T("z_24 - z_25"), T("u_14.25.36 + z_46")};
  for (const auto& abc : pts) {
    TorusPoint p = sample_point(abc[0], abc[1], abc[2]);
    for (const auto& q : zero) CHECK(evaluate_slots(q, p.slot_values()) == 0);
    for (const auto& q : nonzero) CHECK(evaluate_slots(q, p.slot_values()) != 0);
  }
  for (const auto& q : zero) CHECK(reduce_mod_I6(q).numerator.is_zero());
  for (const auto& q : nonzero) CHECK_FALSE(reduce_mod_I6(q).numerator.is_zero());
}

TEST_CASE("term_ratio_mod_I6") {
  auto t = term_ratio_mod_I6(T("z_24*z_34 - z_24*z_24 + z_24"), T("z_24"));
  CHECK_FALSE(t.has_value());  // the numerator vanishes on M_{0,6}
  auto r = term_ratio_mod_I6(T("2*z_34*z_25"), T("z_24 - 1"));
  REQUIRE(r.has_value());
  CHECK(Polynomial::monomial(Universe::Torus, r->mono, r->coeff) == T("2*z_25"));
  CHECK_FALSE(term_ratio_mod_I6(T("z_24 + z_25"), T("z_24")).has_value());
}

TEST_CASE("regenerate the binomial table") {
  auto rows = regenerate_f_table();
  REQUIRE(rows.size() == 15);
  std::size_t exact = 0;
  for (const auto& r : rows) {
    CHECK(r.matches);
    exact += r.exact;
  }
  CHECK(exact == 6);
  auto term = [](const FTableRow& r) { return Polynomial::monomial(Universe::Torus, r.term.mono, r.term.coeff); };
  // (12)(35)(46) is reached by (45) with term 1; (13)(24)(56) by (23).
  CHECK(rows[1].word == std::vector<int>{4});
  CHECK(rows[1].exact);
  CHECK(term(rows[1]) == T("1"));
  CHECK(rows[3].word == std::vector<int>{2});
  CHECK(rows[3].image == T("-z_34 - z_35*z_36"));
  CHECK(act_on_torus_generator(3, f_pi(0)) == T("z_24^-2") * f_pi(0));
  SuiteReport rep = verify_f_table();
  CHECK(rep.passed());
}

TEST_CASE("sample_point") {
  TorusPoint p = sample_point(2, 3, 5);
  CHECK(p.u(parse_matching("(12)(34)(56)")) == -9);
  CHECK(p.z(4, 5) == -1);
  for (const auto& v : p.values) CHECK(v != 0);
  try {
    sample_point(1, 3, 5);
    FAIL("expected PointNotInY");
  } catch (const PointNotInY& e) {
    CHECK(e.coordinate() == "z_24");
  }
  try {
    sample_point(2, 3, 3);
    FAIL("expected PointNotInY");
  } catch (const PointNotInY& e) {
    CHECK(e.coordinate() == "z_56");
  }
  CHECK_THROWS_AS(sample_point(Q("1/2"), Q("1/2"), 3), PointNotInY);
}

TEST_CASE("seeded points are deterministic and valid") {
  auto a = seeded_parameter_points(6, 10), b = seeded_parameter_points(6, 10), c = seeded_parameter_points(7, 10);
  CHECK(a.size() == 10);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& abc : a) CHECK_NOTHROW(sample_point(abc[0], abc[1], abc[2]));
}
