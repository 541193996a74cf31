#include <doctest.h>

#include "coxm06/errors.hpp"
#include "coxm06/picard.hpp"

using namespace coxm06;

namespace {

DivisorClass cls(std::initializer_list<std::pair<const char*, long>> entries) {
  DivisorClass d;
  const auto& labels = picard_basis_labels();
  for (const auto& [name, v] : entries) {
    auto it = std::find(labels.begin(), labels.end(), name);
    REQUIRE(it != labels.end());
    d.c[it - labels.begin()] = v;
  }
  return d;
}

}  // namespace

TEST_CASE("class_of_boundary") {
  CHECK(class_of_boundary({1, 2, 6}) == cls({{"e126", 2}}));
  CHECK(class_of_boundary({1, 2}) == cls({{"e1", 1}, {"e2", 1}, {"e123", -1}, {"e124", -1}, {"e125", -1}, {"e126", -1}}));
  CHECK(class_of_boundary({3, 4}) == cls({{"e3", 1}, {"e4", 1}, {"e134", -1}, {"e125", -1}, {"e126", -1}, {"e156", -1}}));
  CHECK(class_of_boundary({3, 4, 5}) == class_of_boundary({1, 2, 6}));
  CHECK_THROWS_AS(class_of_boundary({1}), InvalidIndex);
  CHECK_THROWS_AS(class_of_boundary({1, 1}), InvalidIndex);
}

TEST_CASE("class_of_kv") {
  DivisorClass q = class_of_kv(parse_matching("(12)(34)(56)"));
  CHECK(q == cls({{"e1", 1}, {"e2", 1}, {"e3", 1}, {"e4", 1}, {"e5", 1}, {"e6", 1},
                  {"e135", -2}, {"e136", -2}, {"e145", -2}, {"e146", -2}}));
  Permutation s = Permutation::transposition(2, 3);
  for (const auto& pi : kv_matchings()) {
    Matching conj{{{s(pi[0][0]), s(pi[0][1])}, {s(pi[1][0]), s(pi[1][1])}, {s(pi[2][0]), s(pi[2][1])}}};
    CHECK(class_of_kv(conj) == class_of_kv(pi).permuted(s));
  }
  CHECK_THROWS_AS(class_of_kv(Matching{{{1, 2}, {2, 3}, {5, 6}}}), InvalidIndex);
}

TEST_CASE("boundary classes are equivariant") {
  for (const auto& s : Permutation::all())
    for (const auto& p : boundary_pairs()) CHECK(class_of_boundary({s(p[0]), s(p[1])}) == class_of_boundary({p[0], p[1]}).permuted(s));
}

TEST_CASE("A and R") {
  IntMatrix A = build_A();
  IntMatrix R = build_R();
  CHECK(A == transcribed_A());
  CHECK(A.rows() == 16);
  CHECK(A.cols() == 40);
  CHECK(R.rows() == 24);
  CHECK(R.cols() == 40);
  CHECK(rank(A) == 16);
  CHECK(rank(R) == 24);
  CHECK((A * R.transpose()).is_zero());
  CHECK(rank(IntMatrix(3, 4)) == 0);

  // Row z_24.
  std::vector<long> expected(40, 0);
  for (const char* n : {"x_13", "x_24", "x_135", "x_136"}) expected[parse_variable(n)->slot()] = 1;
  for (const char* n : {"x_14", "x_23", "x_145", "x_146"}) expected[parse_variable(n)->slot()] = -1;
  for (int c = 0; c < 40; ++c) CHECK(R.get(0, c) == expected[c]);

  std::vector<std::size_t> zrows, urows, ecols, ycols;
  for (std::size_t i = 0; i < 9; ++i) zrows.push_back(i);
  for (std::size_t i = 9; i < 24; ++i) urows.push_back(i);
  for (const auto& e : torus_pairs()) ecols.push_back(x_var(e[0], e[1]).slot());
  for (std::size_t i = 25; i < 40; ++i) ycols.push_back(i);
  CHECK(R.submatrix(zrows, ecols).is_identity());
  CHECK(R.submatrix(urows, ecols).is_zero());
  CHECK(R.submatrix(urows, ycols).is_identity());
  CHECK(R.submatrix(zrows, ycols).is_zero());

  // Rows of R span ker(A).
  auto ker = kernel_basis(A);
  CHECK(ker.size() == 24);
  for (const auto& v : ker) CHECK(row_space_coefficients(R, v).has_value());
}

TEST_CASE("kernel and solve on small matrices") {
  IntMatrix m = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(rank(m) == 1);
  auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  RationalMatrix rm(m);
  for (const auto& v : k) {
    RationalMatrix col(3, 1);
    for (int i = 0; i < 3; ++i) col.at(i, 0) = v[i];
    CHECK((rm * col) == RationalMatrix(2, 1));
  }
  CHECK_FALSE(solve(rm, {1, 1}).has_value());
  CHECK(solve(rm, {1, 2}).has_value());
}

TEST_CASE("grading") {
  auto deg = [](const char* t) { return degree_of_monomial(parse_polynomial(t).terms()[0].mono); };
  CHECK(deg("x_12*x_34*x_125*x_126") == deg("x_13*x_24*x_135*x_136"));
  CHECK(deg("x_13*x_24*x_135*x_136") == deg("x_14*x_23*x_145*x_146"));
  CHECK(degree_of_monomial(Monomial{}).is_zero());
  CHECK(is_homogeneous(parse_polynomial("x_12*x_34*x_125*x_126 - x_13*x_24*x_135*x_136")));
  CHECK_FALSE(is_homogeneous(parse_polynomial("x_12 + x_13")));
  CHECK_THROWS_AS(degree_of_monomial(Monomial::var(0, -1)), Error);
}

TEST_CASE("pairing is bilinear") {
  DualVector w;
  for (int i = 0; i < 16; ++i) w.c[i] = i - 7;
  DivisorClass a = class_of_boundary({1, 2}), b = class_of_kv(kv_matchings()[4]);
  CHECK(w.pair(a + b) == w.pair(a) + w.pair(b));
  CHECK(w.pair(3 * a) == 3 * w.pair(a));
}

TEST_CASE("Kapranov change of basis") {
  KapranovChange k = kapranov_change_of_basis();
  int e126 = 6 + 3;
  CHECK(picard_basis_labels()[e126] == "e126");
  int col = std::find(k.kapranov_labels.begin(), k.kapranov_labels.end(), "E12") - k.kapranov_labels.begin();
  CHECK(k.matrix.at(e126, col) == Rational(mpz_class(1), mpz_class(2)));
  CHECK(determinant(k.matrix) == Rational(mpz_class(1), mpz_class(2048)));
  CHECK(k.matrix * k.inverse == RationalMatrix::identity(16));
  CHECK(k.inverse * k.matrix == RationalMatrix::identity(16));
}
