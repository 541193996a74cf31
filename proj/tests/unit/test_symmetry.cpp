#include <doctest.h>

#include <random>
#include <set>

#include "coxm06/errors.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/picard.hpp"
#include "coxm06/symmetry.hpp"

using namespace coxm06;

namespace {

Polynomial C(const char* t) { return parse_polynomial(t, Universe::Cox); }
Polynomial T(const char* t) { return parse_polynomial(t, Universe::Torus); }
VariableId V(const char* n) { return *parse_variable(n); }
Permutation S(const char* c) { return Permutation::from_cycles(c); }

Permutation random_perm(std::mt19937& rng) {
  return Permutation::all()[std::uniform_int_distribution<std::size_t>(0, 719)(rng)];
}

}  // namespace

TEST_CASE("variable names round trip") {
  for (auto u : {Universe::Cox, Universe::Torus, Universe::Parameter})
    for (int s = 0; s < universe_size(u); ++s) {
      VariableId v = VariableId::from_slot(u, static_cast<std::uint8_t>(s));
      CHECK(parse_variable(v.name()) == v);
    }
  CHECK(V("x_12").slot() == 0);
  CHECK(V("x_123").slot() == 15);
  CHECK(V("y_12.34.56").slot() == 25);
  CHECK(V("y_16.25.34").slot() == 39);
  CHECK(V("u_12.34.56").slot() == 9);
  CHECK_FALSE(parse_variable("x_21"));
  CHECK_FALSE(parse_variable("x_234"));
  CHECK_FALSE(parse_variable("z_23"));
  CHECK_FALSE(parse_variable("y_34.12.56"));
}

TEST_CASE("permutations") {
  CHECK(Permutation::all().size() == 720);
  Permutation c = S("(236)");
  CHECK(c(2) == 3);
  CHECK(c(3) == 6);
  CHECK(c(6) == 2);
  CHECK(c.to_cycles() == "(236)");
  CHECK(S("(12)") * S("(23)") == S("(123)"));
  CHECK(c.parity() == 1);
  CHECK(S("(12)(34)(56)").parity() == -1);
  for (const auto& p : Permutation::all()) {
    CHECK(Permutation::from_word(p.adjacent_word()) == p);
    CHECK(p * p.inverse() == Permutation());
    CHECK(Permutation::from_cycles(p.to_cycles()) == p);
  }
  CHECK_THROWS_AS(S("(11)"), InvalidIndex);
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2, 3, 4, 5}), InvalidIndex);
}

TEST_CASE("canonicalize_variable") {
  CHECK(canonicalize_pair(2, 1) == SignedVariable{V("x_12"), -1});
  CHECK(canonicalize_triple(2, 3, 4) == SignedVariable{V("x_156"), 1});
  CHECK(canonicalize_triple(3, 2, 4) == SignedVariable{V("x_156"), -1});
  CHECK(canonicalize_triple(1, 3, 2) == SignedVariable{V("x_123"), -1});
  CHECK(canonicalize_kv(parse_matching("(34)(12)(56)")) == SignedVariable{V("y_12.34.56"), -1});
  CHECK(canonicalize_kv(parse_matching("(21)(43)(65)")) == SignedVariable{V("y_12.34.56"), 1});
  CHECK_THROWS_AS(canonicalize_pair(3, 3), InvalidIndex);
  CHECK_THROWS_AS(canonicalize_triple(1, 2, 2), InvalidIndex);
  CHECK_THROWS_AS(canonicalize_kv(Matching{{{1, 2}, {2, 3}, {4, 5}}}), InvalidIndex);
}

TEST_CASE("act_on_variable") {
  CHECK(act_on_variable(S("(12)"), V("x_123")) == SignedVariable{V("x_123"), -1});
  CHECK(act_on_variable(S("(12)"), V("x_145")) == SignedVariable{V("x_136"), 1});
  CHECK(act_on_variable(S("(12)"), V("y_12.34.56")) == SignedVariable{V("y_12.34.56"), 1});
  CHECK(act_on_variable(S("(13)"), V("x_12")) == SignedVariable{V("x_23"), -1});
  // The triple rule matches (12) x_456 = -x_456 read through x_456 = x_123.
  CHECK(act_on_variable(S("(12)"), V("x_123")).sign == -1);
  CHECK_THROWS_AS(act_on_variable(S("(12)"), V("z_24")), Error);
}

TEST_CASE("act_on_poly_S is a group action and preserves degree") {
  std::mt19937 rng(99);
  Polynomial F = C("x_12*x_34*x_125*x_126 - x_13*x_24*x_135*x_136 + x_14*x_23*x_145*x_146");
  Polynomial G = C("x_135*y_12.34.56 + x_14*x_25*x_36*x_124*x_125*x_134 + x_16*x_23*x_45*x_123*x_126*x_156");
  CHECK(act_on_poly_S(Permutation(), F) == F);
  for (int trial = 0; trial < 300; ++trial) {
    Permutation s = random_perm(rng), t = random_perm(rng);
    for (const auto& p : {F, G}) {
      CHECK(act_on_poly_S(s * t, p) == act_on_poly_S(s, act_on_poly_S(t, p)));
      CHECK(*homogeneous_degree(act_on_poly_S(s, p)) == homogeneous_degree(p)->permuted(s));
    }
  }
}

TEST_CASE("table 1 spot values") {
  CHECK(act_on_torus_generator(1, T("z_45")) == T("-z_45*z_24^-1*z_25^-1"));
  CHECK(act_on_torus_generator(2, T("z_24")) == T("-z_34"));
  CHECK(act_on_torus_generator(1, T("u_12.34.56")) == T("-u_12.34.56*z_24^-1*z_25^-1*z_26^-1"));
  CHECK(act_on_torus_generator(3, T("z_46")) == T("z_36*z_24^-1"));
}

TEST_CASE("the printed (34) z_46 entry breaks the involution") {
  std::array<Polynomial, kNumTorusZ> row = table1_row(3);
  row[7] = printed_table1_entry_34_z46();
  Polynomial z46 = T("z_46");
  Polynomial twice = act_on_torus_generator_with(3, row, act_on_torus_generator_with(3, row, z46));
  CHECK(twice != z46);
  CHECK(act_on_torus_generator(3, act_on_torus_generator(3, z46)) == z46);
}

TEST_CASE("u cocycles") {
  // Frozen from an independent computation: parametrize, strip the nine linear forms.
  std::size_t exact = 0;
  for (int g = 1; g <= 5; ++g)
    for (int p = 0; p < kNumKV; ++p) exact += u_cocycle(g, p).exact;
  CHECK(exact == 50);
  auto term = [](int g, int p) { return Polynomial::monomial(Universe::Torus, u_cocycle(g, p).term.mono, u_cocycle(g, p).term.coeff); };
  for (int p = 0; p < 15; ++p) {
    CHECK(term(1, p) == (p < 3 ? T("-z_24^-1*z_25^-1*z_26^-1") : T("z_24^-1*z_25^-1*z_26^-1")));
    CHECK(term(3, p) == (p == 1 || p == 2 ? T("-z_24^-2") : T("z_24^-2")));
    CHECK(term(4, p) == T("1"));
    CHECK(term(5, p) == T("1"));
  }
  const int signs23[15] = {1, 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, -1, 1, -1, -1};
  for (int p = 0; p < 15; ++p) CHECK(term(2, p) == Polynomial::constant(Universe::Torus, signs23[p]));
  CHECK_FALSE(u_cocycle(1, 3).exact);
  // Modulo I6 the defining identity holds.
  for (int g = 1; g <= 5; ++g)
    for (int p = 0; p < kNumKV; ++p) {
      const Cocycle& c = u_cocycle(g, p);
      Polynomial lhs = act_on_torus_generator(g, f_pi(p));
      Polynomial rhs = term(g, p) * f_pi(c.target);
      auto l = reduce_mod_I6(lhs), r = reduce_mod_I6(rhs);
      CHECK(l.numerator * r.denominator == r.numerator * l.denominator);
    }
}

TEST_CASE("group presentation on the torus") {
  SuiteReport rep = verify_group_action();
  for (const auto& c : rep.checks()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == Status::Pass);
  }
  CHECK(rep.checks().size() >= 16);
}

TEST_CASE("general permutations act through their words") {
  Polynomial q = T("u_13.25.46 + z_45*z_24^-1");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Permutation s = random_perm(rng), t = random_perm(rng);
    CHECK(act_on_torus(s * t, q) == act_on_torus(s, act_on_torus(t, q)));
  }
}

TEST_CASE("orbits") {
  auto xorb = orbit(C("x_12"));
  CHECK(xorb.size() == 15);
  std::set<std::string> names;
  for (const auto& p : xorb) names.insert(p.to_text());
  CHECK(names.count("x_12") == 1);
  CHECK(names.count("x_56") == 1);

  Polynomial F = C("x_12*x_34*x_125*x_126 - x_13*x_24*x_135*x_136 + x_14*x_23*x_145*x_146");
  CHECK(orbit(F).size() == 15);
  CHECK(orbit(-F) == orbit(F));
  Polynomial F3 = C("x_12*y_12.34.56 + x_13*x_14*x_25*x_26*x_134^2 - x_15*x_16*x_23*x_24*x_156^2");
  CHECK(orbit(F3).size() == 45);

  // Words reproduce the elements with the recorded sign.
  for (const auto& e : orbit_with_words(F3)) {
    Polynomial img = F3;
    for (int g : e.word) img = act_on_poly_S(Permutation::adjacent(g), img);
    CHECK(img == e.sign * e.poly);
  }
  CHECK(orbit(T("u_12.34.56 - z_24 + z_25*z_26"), OrbitAction::Torus).size() >= 15);
}
