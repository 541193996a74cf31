#include "coxm06/picard.hpp"

#include <algorithm>

#include "coxm06/errors.hpp"

namespace coxm06 {

namespace {

const std::vector<std::vector<long>> kTranscribedA = {
    {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {-1, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, -1, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, -2, -2, 0, -2, -2},
    {-1, 0, -1, 0, 0, 0, -1, 0, 0, 0, -1, -1, 0, 0, -1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, -2, 0, -2, -2, 0, -2},
    {-1, 0, 0, -1, 0, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, -2, -2, 0, -2, 0, 0, 0, -2, -2, 0},
    {-1, 0, 0, 0, -1, 0, 0, 0, -1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2, 0, -2, -2, 0, -2, -2, 0, 0, 0, 0},
    {0, -1, -1, 0, 0, 0, 0, -1, -1, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, -2, -2, 0, 0, 0, 0, 0, 0, -2, -2, 0, -2, -2, 0},
    {0, -1, 0, -1, 0, 0, -1, 0, -1, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, -2, 0, -2, 0, 0, 0, -2, -2, 0, 0, 0, 0, -2, 0, -2},
    {0, -1, 0, 0, -1, 0, -1, -1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -2, -2, 0, 0, 0, 0, -2, 0, -2, -2, 0, -2, 0, 0, 0},
    {0, 0, -1, -1, 0, -1, 0, 0, -1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2, -2, 0, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, -2, -2},
    {0, 0, -1, 0, -1, -1, 0, -1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, 0, -2, -2, 0, -2, 0, 0, 0, 0, -2, -2, 0, 0, 0},
    {0, 0, 0, -1, -1, -1, -1, 0, 0, -1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -2, -2, 0, -2, -2, 0, -2, -2, 0, 0, 0, 0, 0, 0},
};
const std::vector<std::vector<long>> kTranscribedR = {
    {0, 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, -1, 0, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, -1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, -1, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, -1, -2, -1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, -2, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1, -1, -2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, -2, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -2, -1, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, -2, -2, -2, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, -2, -2, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, -2, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, -2, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, -2, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, -2, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, -1, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {1, 1, -1, -1, -1, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 0, -1, -2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

/// Index in the symmetric basis of e_{1ij} for a triple (or its complement).
int triple_slot(IndexTriple t) {
  std::sort(t.begin(), t.end());
  if (t[0] != 1) {
    std::array<bool, 7> in{};
    for (int v : t) in[v] = true;
    IndexTriple c{};
    int k = 0;
    for (int v = 1; v <= 6; ++v)
      if (!in[v]) c[k++] = v;
    t = c;
  }
  return 6 + triple_index(t);
}

}  // namespace

const std::array<std::string, kPicardRank>& picard_basis_labels() {
  static const std::array<std::string, kPicardRank> labels = [] {
    std::array<std::string, kPicardRank> l;
    for (int i = 0; i < 6; ++i) l[i] = "e" + std::to_string(i + 1);
    for (int k = 0; k < kNumTriples; ++k) {
      const auto& t = boundary_triples()[k];
      l[6 + k] = "e" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    }
    return l;
  }();
  return labels;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (int i = 0; i < kPicardRank; ++i) c[i] += o.c[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (int i = 0; i < kPicardRank; ++i) c[i] -= o.c[i];
  return *this;
}

DivisorClass operator*(long k, DivisorClass a) {
  for (auto& x : a.c) x *= k;
  return a;
}

bool DivisorClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

DivisorClass DivisorClass::permuted(const Permutation& sigma) const {
  DivisorClass out;
  for (int i = 0; i < 6; ++i) out.c[sigma(i + 1) - 1] += c[i];
  for (int k = 0; k < kNumTriples; ++k) {
    const auto& t = boundary_triples()[k];
    out.c[triple_slot({sigma(t[0]), sigma(t[1]), sigma(t[2])})] += c[6 + k];
  }
  return out;
}

namespace {

std::string sparse_string(const std::array<long, kPicardRank>& c, const char* suffix) {
  std::string s;
  for (int i = 0; i < kPicardRank; ++i) {
    long v = c[i];
    if (v == 0) continue;
    if (s.empty())
      s += v < 0 ? "-" : "";
    else
      s += v < 0 ? " - " : " + ";
    long a = v < 0 ? -v : v;
    if (a != 1) s += std::to_string(a);
    s += picard_basis_labels()[i] + suffix;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string DivisorClass::to_string() const { return sparse_string(c, ""); }
std::string DualVector::to_string() const { return sparse_string(c, "*"); }

long DualVector::pair(const DivisorClass& d) const {
  long s = 0;
  for (int i = 0; i < kPicardRank; ++i) s += c[i] * d.c[i];
  return s;
}

DivisorClass class_of_boundary(const std::vector<int>& I) {
  std::array<bool, 7> in{};
  for (int v : I) {
    if (v < 1 || v > 6) throw InvalidIndex("boundary index out of range 1..6");
    if (in[v]) throw InvalidIndex("repeated index in boundary divisor");
    in[v] = true;
  }
  DivisorClass d;
  if (I.size() == 3) {
    d.c[triple_slot({I[0], I[1], I[2]})] = 2;
    return d;
  }
  if (I.size() != 2) throw InvalidIndex("boundary divisors are indexed by 2- or 3-subsets");
  int i = std::min(I[0], I[1]), j = std::max(I[0], I[1]);
  d.c[i - 1] = 1;
  d.c[j - 1] = 1;
  for (int k = 0; k < kNumTriples; ++k) {
    const auto& t = boundary_triples()[k];
    bool hi = std::find(t.begin(), t.end(), i) != t.end();
    bool hj = std::find(t.begin(), t.end(), j) != t.end();
    if (hi == hj) d.c[6 + k] -= 1;
  }
  return d;
}

DivisorClass class_of_kv(const Matching& raw) {
  validate_matching(raw);
  Matching pi = normalize_matching(raw);
  // pi = (1m)(ij)(kl): the first pair contains 1.
  const IndexPair& a = pi[1];
  const IndexPair& b = pi[2];
  DivisorClass d;
  for (int i = 0; i < 6; ++i) d.c[i] = 1;
  for (int r : a)
    for (int s : b) d.c[triple_slot({1, r, s})] -= 2;
  return d;
}

DivisorClass class_of_variable(VariableId v) {
  switch (v.kind) {
    case VarKind::Pair: {
      const auto& p = boundary_pairs()[v.index];
      return class_of_boundary({p[0], p[1]});
    }
    case VarKind::Triple: {
      const auto& t = boundary_triples()[v.index];
      return class_of_boundary({t[0], t[1], t[2]});
    }
    case VarKind::KV: return class_of_kv(kv_matchings()[v.index]);
    default: throw UniverseMismatch("degree is defined only for Cox generators, not " + v.name());
  }
}

std::vector<std::string> cox_column_labels() {
  std::vector<std::string> l;
  for (int s = 0; s < kNumCoxVariables; ++s)
    l.push_back(VariableId::from_slot(Universe::Cox, static_cast<std::uint8_t>(s)).name());
  return l;
}

std::vector<std::string> torus_row_labels() {
  std::vector<std::string> l;
  for (int s = 0; s < kNumTorusVariables; ++s)
    l.push_back(VariableId::from_slot(Universe::Torus, static_cast<std::uint8_t>(s)).name());
  return l;
}

namespace {

IntMatrix labelled_A(IntMatrix m) {
  m.row_labels.assign(picard_basis_labels().begin(), picard_basis_labels().end());
  m.col_labels = cox_column_labels();
  return m;
}

}  // namespace

IntMatrix build_A() {
  IntMatrix m(kPicardRank, kNumCoxVariables);
  for (int s = 0; s < kNumCoxVariables; ++s) {
    DivisorClass d = class_of_variable(VariableId::from_slot(Universe::Cox, static_cast<std::uint8_t>(s)));
    for (int r = 0; r < kPicardRank; ++r) m.at(r, s) = d.c[r];
  }
  return labelled_A(std::move(m));
}

IntMatrix transcribed_A() { return labelled_A(IntMatrix::from_rows(kTranscribedA)); }

IntMatrix build_R() {
  IntMatrix m = IntMatrix::from_rows(kTranscribedR);
  m.row_labels = torus_row_labels();
  m.col_labels = cox_column_labels();
  return m;
}

DivisorClass degree_of_monomial(const Monomial& m) {
  static const IntMatrix A = build_A();
  DivisorClass d;
  for (const auto& [slot, k] : m.entries()) {
    if (k < 0) throw Error("degree_of_monomial: Laurent exponents are not graded in the Cox ring");
    if (slot >= kNumCoxVariables) throw UniverseMismatch("degree_of_monomial: not a Cox monomial");
    for (int r = 0; r < kPicardRank; ++r) d.c[r] += k * A.get(r, slot);
  }
  return d;
}

std::optional<DivisorClass> homogeneous_degree(const Polynomial& p) {
  if (p.universe() != Universe::Cox) throw UniverseMismatch("grading is defined on the Cox ring only");
  if (p.is_zero()) return DivisorClass{};
  DivisorClass d = degree_of_monomial(p.terms().front().mono);
  for (const auto& t : p.terms())
    if (degree_of_monomial(t.mono) != d) return std::nullopt;
  return d;
}

KapranovChange kapranov_change_of_basis() {
  // Columns: E_1..E_5 (0..4), E_jk for 1<=j<k<=5 (5..14), H (15).
  std::vector<std::string> labels;
  for (int i = 1; i <= 5; ++i) labels.push_back("E" + std::to_string(i));
  std::array<std::array<int, 6>, 6> ejk{};
  int col = 5;
  for (int j = 1; j <= 5; ++j)
    for (int k = j + 1; k <= 5; ++k) {
      ejk[j][k] = ejk[k][j] = col++;
      labels.push_back("E" + std::to_string(j) + std::to_string(k));
    }
  labels.push_back("H");
  const int H = 15;
  const Rational half(mpz_class(1), mpz_class(2));
  const Rational quarter(mpz_class(1), mpz_class(4));

  RationalMatrix M(kPicardRank, kPicardRank);
  for (int i = 1; i <= 5; ++i) {
    const int r = i - 1;
    M.at(r, H) = half;
    M.at(r, i - 1) = half;
    for (int j = 1; j <= 5; ++j) {
      if (j == i) continue;
      M.at(r, j - 1) = -half;
      M.at(r, ejk[i][j]) += quarter;
      for (int k = j + 1; k <= 5; ++k)
        if (k != i) M.at(r, ejk[j][k]) -= quarter;
    }
  }
  M.at(5, H) = -half;
  for (int i = 1; i <= 5; ++i) {
    M.at(5, i - 1) = half;
    for (int j = i + 1; j <= 5; ++j) M.at(5, ejk[i][j]) = quarter;
  }
  for (int k = 0; k < kNumTriples; ++k) {
    const auto& t = boundary_triples()[k];
    int i = t[1], j = t[2];
    if (j == 6) {
      M.at(6 + k, ejk[1][i]) = half;
    } else {
      std::vector<int> rest;
      for (int v = 1; v <= 5; ++v)
        if (v != 1 && v != i && v != j) rest.push_back(v);
      M.at(6 + k, ejk[rest[0]][rest[1]]) = half;
    }
  }
  return {M, inverse(M), labels};
}

}  // namespace coxm06
