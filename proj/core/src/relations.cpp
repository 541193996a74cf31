#include "coxm06/relations.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "coxm06/errors.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/symmetry.hpp"

namespace coxm06 {

namespace {

Polynomial C(const char* text) { return parse_polynomial(text, Universe::Cox); }
Polynomial T(const char* text) { return parse_polynomial(text, Universe::Torus); }

Polynomial signed_var(const SignedVariable& v) {
  return Rational(v.sign) * Polynomial::variable(v.var);
}

Polynomial x(int i, int j) { return signed_var(canonicalize_pair(i, j)); }
Polynomial x(int i, int j, int k) { return signed_var(canonicalize_triple(i, j, k)); }
Polynomial y(IndexPair a, IndexPair b, IndexPair c) { return signed_var(canonicalize_kv(Matching{{a, b, c}})); }

// Unsigned lookups, as the subsets are meant in the monomial displays.
Polynomial ux(int i, int j) { return Polynomial::variable(canonicalize_pair(i, j).var); }
Polynomial ux(int i, int j, int k) { return Polynomial::variable(canonicalize_triple(i, j, k).var); }

/// Index orders admitted by the statement of each class.
bool admissible(int cls, const std::vector<int>& v) {
  if (cls == 1) return v[0] < v[1] && v[1] < v[2] && v[2] < v[3] && v[4] < v[5];
  if (cls == 3) return v[0] < v[1];
  return true;
}

const std::vector<std::optional<Term>>& phi_images() {
  static const std::vector<std::optional<Term>> images = [] {
    IntMatrix R = build_R();
    std::vector<std::optional<Term>> out(kNumTorusVariables);
    for (int r = 0; r < kNumTorusVariables; ++r) {
      std::vector<Monomial::Entry> e;
      for (int c = 0; c < kNumCoxVariables; ++c) {
        long k = R.get(r, c);
        if (k != 0) e.emplace_back(static_cast<std::uint8_t>(c), static_cast<int>(k));
      }
      out[r] = Term{Monomial(e), Rational(1)};
    }
    return out;
  }();
  return images;
}

/// Section images of the 40 Cox generators in Q[A, B, C].
const std::array<Polynomial, kNumCoxVariables>& section_images() {
  static const std::array<Polynomial, kNumCoxVariables> images = [] {
    std::array<Polynomial, kNumCoxVariables> out;
    Polynomial one = Polynomial::constant(Universe::Parameter, 1);
    for (int s = 0; s < kNumPairs; ++s) {
      auto [i, j] = boundary_pairs()[s];
      int e = torus_pair_index(i, j);
      out[s] = e >= 0 ? plucker_images()[e] : one;
    }
    for (int s = kNumPairs; s < kNumPairs + kNumTriples; ++s) out[s] = one;
    for (int p = 0; p < kNumKV; ++p) out[kNumPairs + kNumTriples + p] = to_parameters(f_pi(p));
    return out;
  }();
  return images;
}

}  // namespace

const Term& phi_of_slot(std::uint8_t torus_slot) {
  if (torus_slot >= kNumTorusVariables) throw InvalidIndex("torus slot out of range");
  return *phi_images()[torus_slot];
}

Polynomial phi(const Polynomial& q) {
  if (q.universe() != Universe::Torus) throw UniverseMismatch("phi expects a torus polynomial");
  return apply_monomial_map(q.as_laurent(), phi_images(), Universe::Cox);
}

Polynomial section_substitution(const Polynomial& F, std::size_t* max_terms) {
  if (F.universe() != Universe::Cox) throw UniverseMismatch("section_substitution expects a Cox polynomial");
  const auto& images = section_images();
  Polynomial total = Polynomial::constant(Universe::Parameter, 0);
  std::size_t peak = 0;
  for (const auto& t : F.terms()) {
    if (t.mono.has_negative()) throw Error("section_substitution: negative exponent in " + F.to_text());
    Polynomial prod = Polynomial::constant(Universe::Parameter, t.coeff);
    for (const auto& [slot, k] : t.mono.entries()) {
      if (images[slot].is_constant()) {
        prod *= images[slot].constant_term().pow(k);
        continue;
      }
      for (int r = 0; r < k; ++r) {
        prod = prod * images[slot];
        peak = std::max(peak, prod.size());
      }
    }
    total += prod;
    peak = std::max(peak, total.size());
  }
  if (max_terms) *max_terms = peak;
  return total;
}

std::vector<std::optional<Rational>> lifted_cox_point(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<std::optional<Rational>> abc = {a, b, c};
  std::vector<std::optional<Rational>> out(kNumCoxVariables);
  for (int s = 0; s < kNumCoxVariables; ++s) out[s] = evaluate_slots(section_images()[s], abc);
  return out;
}

Polynomial relation_formula(int cls, const std::vector<int>& idx) {
  bool five = cls == 2 || cls == 5;
  if (cls < 1 || cls > 5) throw InvalidIndex("relation class must be 1..5");
  if (idx.size() != (five ? 5u : 6u)) throw InvalidIndex("wrong number of indices for class " + std::to_string(cls));
  std::set<int> seen(idx.begin(), idx.end());
  if (seen.size() != idx.size() || *seen.begin() < (five ? 2 : 1) || *seen.rbegin() > 6)
    throw InvalidIndex("indices must be distinct and cover the required range");
  if (five) {
    int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4];
    if (cls == 2)
      return x(1, i, k) * y({1, m}, {i, j}, {k, l}) +
             x(1, j) * x(m, k) * x(i, l) * x(1, m, j) * x(1, m, k) * x(1, i, j) +
             x(1, l) * x(m, i) * x(j, k) * x(1, m, i) * x(1, m, l) * x(1, k, l);
    return y({1, i}, {j, k}, {l, m}) * y({1, j}, {i, l}, {k, m}) -
           x(1, k) * x(1, l) * x(i, k) * x(i, m) * x(j, l) * x(j, m) * x(1, i, k) * x(1, i, l) * x(1, j, k) * x(1, j, l) +
           x(1, k) * x(1, l) * x(i, j) * x(i, m) * x(j, m) * x(k, l) * x(1, i, j) * x(1, i, l) * x(1, j, k) * x(1, k, l) -
           x(1, k) * x(1, m) * x(i, j) * x(i, m) * x(j, l) * x(k, l) * x(1, i, j) * x(1, i, m) * x(1, j, k) * x(1, k, m) -
           x(1, l) * x(1, m) * x(i, j) * x(i, k) * x(j, m) * x(k, l) * x(1, i, j) * x(1, i, l) * x(1, j, m) * x(1, l, m);
  }
  int i = idx[0], j = idx[1], k = idx[2], l = idx[3], m = idx[4], n = idx[5];
  switch (cls) {
    case 1:
      return x(i, j) * x(k, l) * x(i, j, n) * x(k, l, n) - x(i, k) * x(j, l) * x(i, k, n) * x(j, l, n) +
             x(i, l) * x(j, k) * x(i, l, n) * x(j, k, n);
    case 3:
      return x(i, j) * y({i, j}, {k, l}, {m, n}) + x(i, k) * x(i, l) * x(j, m) * x(j, n) * x(i, k, l).pow(2) -
             x(i, m) * x(i, n) * x(j, l) * x(j, k) * x(i, m, n).pow(2);
    default:
      return y({i, j}, {k, l}, {m, n}) * y({i, j}, {k, m}, {l, n}) -
             x(i, l) * x(l, j) * x(j, m) * x(m, i) * x(n, k).pow(2) * x(i, j, m).pow(2) * x(i, j, l).pow(2) +
             x(i, n) * x(n, j) * x(j, k) * x(k, i) * x(m, l).pow(2) * x(i, j, k).pow(2) * x(i, j, n).pow(2);
  }
}

const std::array<Polynomial, 5>& representatives() {
  static const std::array<Polynomial, 5> reps = {
      C("x_12*x_34*x_125*x_126 - x_13*x_24*x_135*x_136 + x_14*x_23*x_145*x_146"),
      C("x_135*y_12.34.56 + x_14*x_25*x_36*x_124*x_125*x_134 + x_16*x_23*x_45*x_123*x_126*x_156"),
      C("x_12*y_12.34.56 + x_13*x_14*x_25*x_26*x_134^2 - x_15*x_16*x_23*x_24*x_156^2"),
      C("y_12.34.56*y_12.35.46 - x_14*x_15*x_24*x_25*x_36^2*x_124^2*x_125^2"
        " + x_13*x_16*x_23*x_26*x_45^2*x_123^2*x_126^2"),
      C("y_12.34.56*y_13.25.46 - x_14*x_15*x_24*x_26*x_35*x_36*x_124*x_125*x_134*x_135"
        " + x_14*x_15*x_23*x_26*x_36*x_45*x_123*x_125*x_134*x_145"
        " - x_14*x_16*x_23*x_26*x_35*x_45*x_123*x_126*x_134*x_146"
        " - x_15*x_16*x_23*x_24*x_36*x_45*x_123*x_125*x_136*x_156"),
  };
  return reps;
}

const std::vector<RelationRecord>& generate_all() {
  static const std::vector<RelationRecord> all = [] {
    std::vector<RelationRecord> out;
    std::set<std::string> seen;
    for (int cls = 1; cls <= 5; ++cls) {
      auto orb = orbit_with_words(representatives()[cls - 1]);
      if (orb.size() != kClassSizes[cls - 1])
        throw Error("class " + std::to_string(cls) + " orbit has " + std::to_string(orb.size()) + " elements, expected " +
                    std::to_string(kClassSizes[cls - 1]));
      for (auto& e : orb) {
        auto deg = homogeneous_degree(e.poly);
        if (!deg) throw Error("inhomogeneous relation " + e.poly.to_text());
        if (!seen.insert(e.poly.to_text()).second) throw Error("orbits meet at " + e.poly.to_text());
        out.push_back({cls, std::move(e.poly), *deg, std::move(e.word), e.sign});
      }
    }
    return out;
  }();
  return all;
}

bool CertificationResult::all_zero() const {
  for (const auto& c : certificates)
    if (!c.zero()) return false;
  return true;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("COXM06_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

CertificationResult certify(const std::vector<Polynomial>& polys, unsigned threads) {
  auto start = std::chrono::steady_clock::now();
  CertificationResult res;
  res.threads = std::max(1u, std::min<unsigned>(threads == 0 ? default_thread_count() : threads,
                                                static_cast<unsigned>(std::max<std::size_t>(polys.size(), 1))));
  res.certificates.resize(polys.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < polys.size();) {
      Certificate& c = res.certificates[i];
      c.index = i;
      c.residue = section_substitution(polys[i], &c.max_terms);
    }
  };
  if (res.threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < res.threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

CertificationResult certify_all(unsigned threads) {
  std::vector<Polynomial> polys;
  for (const auto& r : generate_all()) polys.push_back(r.poly);
  return certify(polys, threads);
}

Polynomial flip_term_sign(const Polynomial& p, std::size_t term) {
  if (term >= p.size()) throw InvalidIndex("term index out of range");
  std::vector<Term> terms = p.terms();
  terms[term].coeff = -terms[term].coeff;
  return Polynomial::from_terms(p.universe(), std::move(terms), p.is_laurent());
}

SuiteReport verify_phi_identities() {
  SuiteReport rep("phi-identities");
  const auto& reps = representatives();
  auto check = [&](const std::string& name, const Polynomial& lhs, const Polynomial& rhs) {
    rep.add(name, lhs == rhs, lhs == rhs ? "exact" : "lhs " + lhs.to_text() + " ; rhs " + rhs.to_text(),
            {{"lhs", lhs.to_text()}, {"rhs", rhs.to_text()}});
  };

  // The three families of z-images used in the first case.
  for (int j = 4; j <= 6; ++j) {
    int k = j == 4 ? 5 : 4, l = j == 6 ? 5 : 6;
    Polynomial pre = (ux(1, j) * ux(2, 3) * ux(1, j, k) * ux(1, j, l)).as_laurent().inverse_term();
    check("phi(z_2" + std::to_string(j) + ")", phi(Polynomial::variable(z_var(2, j))),
          ux(2, j) * ux(1, 3) * ux(1, 3, k) * ux(1, 3, l) * pre);
    check("phi(z_3" + std::to_string(j) + ")", phi(Polynomial::variable(z_var(3, j))),
          ux(3, j) * ux(1, 2) * ux(1, 2, k) * ux(1, 2, l) * pre);
  }
  for (auto [j, k] : std::vector<IndexPair>{{4, 5}, {4, 6}, {5, 6}}) {
    int l = 15 - j - k;
    Polynomial num = ux(j, k) * ux(1, 2) * ux(1, 3) * ux(1, 2, 3) * ux(1, 2, l) * ux(1, 3, l);
    Polynomial den = ux(1, j) * ux(1, k) * ux(2, 3) * ux(1, j, k) * ux(1, j, l) * ux(1, k, l);
    check("phi(z_" + std::to_string(j) + std::to_string(k) + ")", phi(Polynomial::variable(z_var(j, k))),
          num * den.as_laurent().inverse_term());
  }

  check("class 1: x_14 x_23 x_145 x_146 phi(z_34 + 1 - z_24)",
        C("x_14*x_23*x_145*x_146") * phi(T("z_34 + 1 - z_24")), reps[0].as_laurent());

  Polynomial pre23 = C("x_14*x_15*x_16*x_23^2*x_145*x_146*x_156^2").as_laurent().inverse_term();
  Polynomial h = T("u_12.34.56 + z_45 + z_25*z_36");
  check("class 2: decomposition in I(Y)", h,
        (T("u_12.34.56") - f_pi(0)) + T("z_25") * T("z_36 + 1 - z_26") + T("z_45 - z_25 + z_24"));
  check("class 2: phi(u + z_45 + z_25 z_36)", phi(h), C("x_12*x_13*x_136") * pre23 * reps[1]);
  check("class 3: phi(u - f)", phi(T("u_12.34.56") - f_pi(0)), C("x_13*x_135*x_136") * pre23 * reps[2]);
  return rep;
}

SuiteReport verify_equivariance() {
  SuiteReport rep("equivariance");
  for (int g = 1; g <= 5; ++g) {
    CoxAction act(Permutation::adjacent(g));
    std::string sg = Permutation::adjacent(g).to_cycles();
    for (int s = 0; s < kNumTorusVariables; ++s) {
      Polynomial v = Polynomial::variable(VariableId::from_slot(Universe::Torus, static_cast<std::uint8_t>(s)));
      Polynomial lhs = phi(act_on_torus_generator(g, v));
      Polynomial rhs = act.apply(phi(v));
      bool ok = lhs == rhs;
      rep.add(sg + " " + v.to_text(), ok, ok ? "exact" : "phi(s.v) = " + lhs.to_text() + " ; s.phi(v) = " + rhs.to_text(),
              {{"lhs", lhs.to_text()}, {"rhs", rhs.to_text()}});
    }
  }
  return rep;
}

SuiteReport verify_general_formulas() {
  SuiteReport rep("general-formulas");
  const auto& all = generate_all();
  std::map<std::string, int> class_of;
  for (const auto& r : all) class_of[r.poly.to_text()] = r.cls;
  for (int cls = 1; cls <= 5; ++cls) {
    bool five = cls == 2 || cls == 5;
    std::vector<int> idx = five ? std::vector<int>{2, 3, 4, 5, 6} : std::vector<int>{1, 2, 3, 4, 5, 6};
    std::size_t total = 0, in_orbit = 0, outside_ideal = 0;
    std::vector<std::string> bad;
    do {
      if (!admissible(cls, idx)) continue;
      ++total;
      Polynomial F = relation_formula(cls, idx);
      auto it = class_of.find(canonical_form(F).to_text());
      if (it != class_of.end() && it->second == cls) {
        ++in_orbit;
      } else if (!section_substitution(F).is_zero()) {
        ++outside_ideal;
      } else {
        std::string s;
        for (int i : idx) s += std::to_string(i);
        bad.push_back(s);
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::string detail = std::to_string(in_orbit) + " of " + std::to_string(total) +
                         " index choices in the orbit up to sign, " + std::to_string(outside_ideal) +
                         " not in the ideal";
    nlohmann::json w = {{"assignments", total}, {"in_orbit", in_orbit}, {"not_in_ideal", outside_ideal}};
    if (five) {
      rep.add("class " + std::to_string(cls) + ": every instance is in the orbit or outside the ideal", bad.empty(),
              detail, w);
    } else {
      rep.add("class " + std::to_string(cls) + ": every instance is in the orbit", in_orbit == total, detail, w);
    }
  }
  // The index choices used for the representatives.
  const auto& reps = representatives();
  std::vector<std::vector<int>> at = {{1, 2, 3, 4, 5, 6}, {3, 4, 5, 6, 2}, {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}};
  for (int cls = 1; cls <= 5; ++cls) {
    Polynomial F = relation_formula(cls, at[cls - 1]);
    rep.add("class " + std::to_string(cls) + " formula at the representative indices", F == reps[cls - 1],
            F.to_text());
  }
  return rep;
}

}  // namespace coxm06
