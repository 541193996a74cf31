#include "coxm06/cofactors.hpp"

#include <algorithm>
#include <map>

#include "coxm06/errors.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/symmetry.hpp"

namespace coxm06 {

namespace {

constexpr int kKVBase = kNumPairs + kNumTriples;

/// Positive weight: 3 on e_1..e_6 and 1 on the triple coordinates. Every pair and
/// triple generator has weight 2 and every Keel-Vermeire generator weight 10.
long weight(const DivisorClass& d) {
  long w = 0;
  for (int i = 0; i < kPicardRank; ++i) w += (i < 6 ? 3 : 1) * d.c[i];
  return w;
}

struct Enumerator {
  std::size_t cap;
  std::array<DivisorClass, kNumCoxVariables> deg;
  std::vector<Monomial> out;
  std::array<int, kNumCoxVariables> exps{};

  void emit() {
    if (out.size() >= cap)
      throw CapExceeded("more than " + std::to_string(cap) + " monomials in one degree");
    std::vector<Monomial::Entry> e;
    for (int s = 0; s < kNumCoxVariables; ++s)
      if (exps[s] != 0) e.emplace_back(static_cast<std::uint8_t>(s), exps[s]);
    out.emplace_back(std::move(e));
  }

  // The triple coordinates left over after pairs are chosen force the triple exponents.
  void finish(const DivisorClass& rem) {
    for (int k = 0; k < kNumTriples; ++k) {
      long t = rem.c[6 + k];
      if (t < 0 || t % 2 != 0) return;
    }
    for (int k = 0; k < kNumTriples; ++k) exps[kNumPairs + k] = static_cast<int>(rem.c[6 + k] / 2);
    emit();
    for (int k = 0; k < kNumTriples; ++k) exps[kNumPairs + k] = 0;
  }

  // Multigraphs on {1..6} with the prescribed vertex degrees rem.c[0..5].
  void pairs(int k, DivisorClass& rem) {
    if (k == kNumPairs) {
      for (int i = 0; i < 6; ++i)
        if (rem.c[i] != 0) return;
      finish(rem);
      return;
    }
    auto [i, j] = boundary_pairs()[k];
    long mx = std::min(rem.c[i - 1], rem.c[j - 1]);
    for (long c = 0; c <= mx; ++c) {
      // (i, 6) is the last pair touching i.
      if (j == 6 && rem.c[i - 1] != c) continue;
      for (long r = 0; r < c; ++r) rem -= deg[k];
      exps[k] = static_cast<int>(c);
      pairs(k + 1, rem);
      exps[k] = 0;
      for (long r = 0; r < c; ++r) rem += deg[k];
    }
  }

  void kvs(int p, DivisorClass& rem) {
    if (weight(rem) < 0) return;
    if (p == kNumKV) {
      long sum = 0;
      for (int i = 0; i < 6; ++i) {
        if (rem.c[i] < 0) return;
        sum += rem.c[i];
      }
      if (sum % 2 == 0) pairs(0, rem);
      return;
    }
    int slot = kKVBase + p;
    int used = 0;
    for (; weight(rem) >= 0; ++used) {
      exps[slot] = used;
      kvs(p + 1, rem);
      rem -= deg[slot];
    }
    for (int c = 0; c < used; ++c) rem += deg[slot];
    exps[slot] = 0;
  }
};

/// Incremental sparse echelon form over Q with rows reduced on insertion.
class SparseSolver {
 public:
  explicit SparseSolver(std::size_t cols) : pivot_of_(cols, npos) {}

  /// Adds the equation row . x = rhs; false if it is inconsistent with earlier rows.
  bool add(std::map<std::size_t, Rational> row, Rational rhs) {
    for (auto it = row.begin(); it != row.end();) {
      std::size_t col = it->first;
      std::size_t p = pivot_of_[col];
      if (p == npos) {
        ++it;
        continue;
      }
      Rational f = it->second;
      for (const auto& [c, v] : rows_[p].first) {
        Rational& dst = row[c];
        dst -= f * v;
      }
      rhs -= f * rows_[p].second;
      // Entries at and below col are settled; drop zeros and resume after col.
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second.is_zero() ? row.erase(jt) : std::next(jt);
      it = row.upper_bound(col);
    }
    if (row.empty()) return rhs.is_zero();
    auto [col, lead] = *row.begin();
    Rational inv = Rational(1) / lead;
    for (auto& [c, v] : row) v *= inv;
    rhs *= inv;
    pivot_of_[col] = rows_.size();
    rows_.emplace_back(std::move(row), std::move(rhs));
    return true;
  }

  /// Solution with every free variable set to zero.
  std::vector<Rational> solution() const {
    std::vector<Rational> x(pivot_of_.size());
    for (std::size_t r = rows_.size(); r-- > 0;) {
      const auto& [row, rhs] = rows_[r];
      Rational v = rhs;
      auto it = row.begin();
      std::size_t col = it->first;
      for (++it; it != row.end(); ++it) v -= it->second * x[it->first];
      x[col] = v;
    }
    return x;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_;
  std::vector<std::pair<std::map<std::size_t, Rational>, Rational>> rows_;
};

Polynomial C(const char* text) { return parse_polynomial(text, Universe::Cox); }
Polynomial act(const char* cycles, const Polynomial& p) { return act_on_poly_S(Permutation::from_cycles(cycles), p); }

}  // namespace

std::vector<Monomial> monomials_of_degree(const DivisorClass& d, std::size_t cap) {
  Enumerator e;
  e.cap = cap;
  for (int s = 0; s < kNumCoxVariables; ++s)
    e.deg[s] = class_of_variable(VariableId::from_slot(Universe::Cox, static_cast<std::uint8_t>(s)));
  DivisorClass rem = d;
  e.kvs(0, rem);
  std::sort(e.out.begin(), e.out.end(), [](const Monomial& a, const Monomial& b) { return grlex_compare(a, b) > 0; });
  return std::move(e.out);
}

const char* cofactor_status_name(CofactorStatus s) {
  switch (s) {
    case CofactorStatus::Found: return "found";
    case CofactorStatus::DegreeObstruction: return "degree obstruction";
    case CofactorStatus::NoSolution: return "no cofactors found";
    case CofactorStatus::CapExceeded: return "cap exceeded";
  }
  return "?";
}

CofactorResult find_cofactors(const Polynomial& target, const std::vector<Polynomial>& gens, std::size_t cap) {
  auto tdeg = homogeneous_degree(target);
  if (!tdeg) throw Error("find_cofactors: target is not homogeneous");
  CofactorResult res;
  res.cofactors.assign(gens.size(), Polynomial::constant(Universe::Cox, 0));

  std::vector<std::vector<Monomial>> support(gens.size());
  try {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto gdeg = homogeneous_degree(gens[g]);
      if (!gdeg) throw Error("find_cofactors: generator " + std::to_string(g) + " is not homogeneous");
      if (gens[g].is_zero()) continue;
      support[g] = monomials_of_degree(*tdeg - *gdeg, cap);
      res.unknowns += support[g].size();
    }
  } catch (const CapExceeded& e) {
    res.status = CofactorStatus::CapExceeded;
    res.message = e.what();
    return res;
  }
  if (res.unknowns == 0) {
    res.status = target.is_zero() ? CofactorStatus::Found : CofactorStatus::DegreeObstruction;
    res.message = cofactor_status_name(res.status);
    return res;
  }

  // One equation per monomial of the target degree that occurs in some product.
  std::map<Monomial, std::map<std::size_t, Rational>> eqs;
  std::size_t col = 0;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (const auto& m : support[g]) {
      for (const auto& t : gens[g].terms()) eqs[m * t.mono][col] += t.coeff;
      ++col;
    }
  std::map<Monomial, Rational> rhs;
  for (const auto& t : target.terms()) {
    rhs[t.mono] = t.coeff;
    eqs[t.mono];
  }
  res.equations = eqs.size();

  SparseSolver solver(res.unknowns);
  for (auto& [m, row] : eqs) {
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    auto r = rhs.find(m);
    if (!solver.add(std::move(row), r == rhs.end() ? Rational() : r->second)) {
      res.status = CofactorStatus::NoSolution;
      res.message = cofactor_status_name(res.status);
      return res;
    }
  }
  std::vector<Rational> x = solver.solution();
  col = 0;
  Polynomial check = Polynomial::constant(Universe::Cox, 0);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Term> terms;
    for (const auto& m : support[g]) {
      if (!x[col].is_zero()) terms.push_back({m, x[col]});
      ++col;
    }
    res.cofactors[g] = Polynomial::from_terms(Universe::Cox, std::move(terms));
    check += res.cofactors[g] * gens[g];
  }
  if (check != target) throw Error("find_cofactors: solution does not reproduce the target");
  res.status = CofactorStatus::Found;
  res.message = cofactor_status_name(res.status);
  return res;
}

CofactorProblem cofactor_problem_case4() {
  const auto& r = representatives();
  const Polynomial &F1 = r[0], &F2 = r[1], &F3 = r[2];
  CofactorProblem p;
  p.label = "class 4";
  p.target = C("x_12^2") * r[3] - F3 * act("(45)", F3);
  p.gens = {act("(35)", F1), act("(46)", F1), act("(36)", F2), act("(45)", F2), act("(34)(56)", F2), F2};
  p.gen_labels = {"(35)F1", "(46)F1", "(36)F2", "(45)F2", "(34)(56)F2", "F2"};
  return p;
}

CofactorProblem cofactor_problem_case5() {
  const auto& r = representatives();
  const Polynomial &F1 = r[0], &F2 = r[1], &F3 = r[2];
  CofactorProblem p;
  p.label = "class 5";
  p.target = C("x_12*x_13") * r[4] - F3 * act("(23)(45)", F3);
  p.gens = {act("(25)", F1),  act("(15)", F1),  act("(25)(46)", F1), act("(35)", F1),  act("(46)", F1),
            act("(36)", F1),  act("(236)", F2), act("(12)", F2),     act("(154)", F3), act("(13)(24)", F3)};
  p.gen_labels = {"(25)F1", "(15)F1", "(25)(46)F1", "(35)F1", "(46)F1",
                  "(36)F1", "(236)F2", "(12)F2",    "(154)F3", "(13)(24)F3"};
  return p;
}

SuiteReport verify_cofactor_cases() {
  SuiteReport rep("cofactors");
  for (const auto& p : {cofactor_problem_case4(), cofactor_problem_case5()}) {
    CofactorResult res = find_cofactors(p.target, p.gens);
    nlohmann::json w = {{"unknowns", res.unknowns}, {"equations", res.equations}};
    if (res.found()) {
      nlohmann::json cof = nlohmann::json::object();
      for (std::size_t g = 0; g < p.gens.size(); ++g) cof[p.gen_labels[g]] = res.cofactors[g].to_text();
      w["cofactors"] = cof;
    }
    rep.add(p.label + ": combination lies in the listed ideal", res.found(),
            std::string(res.message) + ", " + std::to_string(res.unknowns) + " unknowns, " +
                std::to_string(res.equations) + " equations",
            w);
  }
  return rep;
}

}  // namespace coxm06
