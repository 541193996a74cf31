#include "coxm06/modspace.hpp"

#include <deque>
#include <random>

#include "coxm06/errors.hpp"
#include "coxm06/symmetry.hpp"

namespace coxm06 {

namespace {

Polynomial T(const char* text) { return parse_polynomial(text, Universe::Torus); }
Polynomial Par(const char* text) { return parse_polynomial(text, Universe::Parameter); }

const std::array<Polynomial, kNumKV>& f_table() {
  static const std::array<Polynomial, kNumKV> t = {
      T("z_24 - z_25*z_26"),         T("z_25 - z_24*z_26"),         T("z_26 - z_24*z_25"),
      T("-z_34 - z_35*z_36"),        T("-z_35 - z_34*z_36"),        T("-z_36 - z_34*z_35"),
      T("z_24*z_36 - z_25*z_46"),    T("-z_46 + z_24*z_56"),        T("-z_45 - z_24*z_56"),
      T("z_25*z_36 - z_24*z_56"),    T("-z_56 + z_25*z_46"),        T("z_45 - z_25*z_46"),
      T("z_26*z_35 + z_24*z_56"),    T("z_56 + z_26*z_45"),         T("z_46 - z_26*z_45"),
  };
  return t;
}

/// Slot images for the parametrization of the whole torus ring (u -> f_pi first).
const std::vector<std::optional<Polynomial>>& parameter_images() {
  static const std::vector<std::optional<Polynomial>> images = [] {
    std::vector<std::optional<Polynomial>> z(kNumTorusVariables);
    for (int k = 0; k < kNumTorusZ; ++k) z[k] = plucker_images()[k];
    std::vector<std::optional<Polynomial>> all = z;
    for (int p = 0; p < kNumKV; ++p) all[kNumTorusZ + p] = substitute_slots(f_table()[p], z, Universe::Parameter);
    return all;
  }();
  return images;
}

/// Slot images solving I6 for z_34..z_56 (u -> f_pi first).
const std::vector<std::optional<Polynomial>>& elimination_images() {
  static const std::vector<std::optional<Polynomial>> images = [] {
    std::vector<std::optional<Polynomial>> z(kNumTorusVariables);
    const char* solved[kNumTorusZ] = {"z_24",     "z_25",        "z_26",        "z_24 - 1",   "z_25 - 1",
                                      "z_26 - 1", "z_25 - z_24", "z_26 - z_24", "z_26 - z_25"};
    for (int k = 0; k < kNumTorusZ; ++k) z[k] = T(solved[k]);
    std::vector<std::optional<Polynomial>> all = z;
    for (int p = 0; p < kNumKV; ++p) all[kNumTorusZ + p] = substitute_slots(f_table()[p], z, Universe::Torus);
    return all;
  }();
  return images;
}

/// Monomial D (nonnegative) such that D * q has no negative exponents.
Monomial clearing_monomial(const Polynomial& q) {
  std::vector<Monomial::Entry> need;
  for (const auto& t : q.terms())
    for (const auto& [s, k] : t.mono.entries())
      if (k < 0) need.emplace_back(s, -k);
  // Keep the maximum requirement per slot.
  std::sort(need.begin(), need.end());
  std::vector<Monomial::Entry> lcm;
  for (const auto& e : need) {
    if (!lcm.empty() && lcm.back().first == e.first)
      lcm.back().second = std::max(lcm.back().second, e.second);
    else
      lcm.push_back(e);
  }
  return Monomial(lcm);
}

int strip_factor(Polynomial& p, const Polynomial& factor) {
  int n = 0;
  while (!p.is_zero()) {
    auto q = divide_exact(p, factor);
    if (!q) break;
    p = std::move(*q);
    ++n;
  }
  return n;
}

}  // namespace

std::vector<Polynomial> i6_generators() {
  return {T("z_34 - z_24 + 1"), T("z_35 - z_25 + 1"), T("z_36 - z_26 + 1"),
          T("z_45 - z_25 + z_24"), T("z_46 - z_26 + z_24"), T("z_56 - z_26 + z_25")};
}

const Polynomial& f_pi(int pi_index) {
  if (pi_index < 0 || pi_index >= kNumKV) throw InvalidIndex("matching index out of range");
  return f_table()[pi_index];
}

const Polynomial& f_pi(const Matching& pi) {
  validate_matching(pi);
  return f_table()[matching_index(normalize_matching(pi))];
}

const std::array<Polynomial, kNumTorusZ>& plucker_images() {
  static const std::array<Polynomial, kNumTorusZ> images = {
      Par("1 - A"), Par("1 - B"), Par("1 - C"), Par("-A"),   Par("-B"),
      Par("-C"),    Par("A - B"), Par("A - C"), Par("B - C"),
  };
  return images;
}

Assignment plucker_parametrization() {
  Assignment a;
  for (int k = 0; k < kNumTorusZ; ++k) a[z_var(torus_pairs()[k][0], torus_pairs()[k][1])] = plucker_images()[k];
  return a;
}

Polynomial to_parameters(const Polynomial& q) {
  if (q.universe() != Universe::Torus) throw UniverseMismatch("to_parameters expects a torus polynomial");
  return substitute_slots(q, parameter_images(), Universe::Parameter);
}

ReducedForm reduce_mod_I6(const Polynomial& q) {
  if (q.universe() != Universe::Torus) throw UniverseMismatch("reduce_mod_I6 expects a torus polynomial");
  Monomial d = clearing_monomial(q);
  Polynomial dpoly = Polynomial::monomial(Universe::Torus, d);
  Polynomial cleared = (q * dpoly).as_plain();
  return {substitute_slots(cleared, elimination_images(), Universe::Torus),
          substitute_slots(dpoly, elimination_images(), Universe::Torus)};
}

std::optional<Term> term_ratio_mod_I6(const Polynomial& num, const Polynomial& den) {
  if (num.universe() != Universe::Torus || den.universe() != Universe::Torus)
    throw UniverseMismatch("term_ratio_mod_I6 expects torus polynomials");
  for (const Polynomial* p : {&num, &den})
    for (auto s : p->slots())
      if (s >= kNumTorusZ) throw Error("term_ratio_mod_I6: u variables are not allowed");
  Monomial dn = clearing_monomial(num), dd = clearing_monomial(den);
  Polynomial p1 = to_parameters((num * Polynomial::monomial(Universe::Torus, dn)).as_plain());
  Polynomial p2 = to_parameters((den * Polynomial::monomial(Universe::Torus, dd)).as_plain());
  if (p1.is_zero() || p2.is_zero()) return std::nullopt;
  std::vector<Monomial::Entry> exps;
  for (int k = 0; k < kNumTorusZ; ++k) {
    int a = strip_factor(p1, plucker_images()[k]);
    int b = strip_factor(p2, plucker_images()[k]);
    if (a != b) exps.emplace_back(static_cast<std::uint8_t>(k), a - b);
  }
  Rational c = p1.terms().front().coeff / p2.terms().front().coeff;
  if (p1 != c * p2) return std::nullopt;
  Monomial m = Monomial(exps) * dn.inverse() * dd;
  return Term{m, c};
}

std::vector<FTableRow> regenerate_f_table() {
  // Breadth-first search over conjugates of (12)(34)(56), generators tried in order.
  std::vector<std::optional<std::vector<int>>> words(kNumKV);
  words[0] = std::vector<int>{};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    for (int g = 1; g <= 5; ++g) {
      int q = matching_index(conjugate(Permutation::adjacent(g), kv_matchings()[p]));
      if (words[q]) continue;
      words[q] = *words[p];
      words[q]->push_back(g);
      queue.push_back(q);
    }
  }
  std::vector<FTableRow> rows;
  for (int p = 0; p < kNumKV; ++p) {
    FTableRow row;
    row.pi = p;
    if (!words[p]) {
      rows.push_back(row);
      continue;
    }
    row.word = *words[p];
    row.image = act_on_torus_word(row.word, f_table()[0]);
    const Polynomial& target = f_table()[p];
    const Term& lead = target.terms().front();
    for (const auto& t : row.image.terms()) {
      Polynomial m = Polynomial::monomial(Universe::Torus, t.mono * lead.mono.inverse(), t.coeff / lead.coeff);
      if (m * target == row.image) {
        row.term = m.terms().front();
        row.exact = row.matches = true;
        break;
      }
    }
    if (!row.matches) {
      if (auto t = term_ratio_mod_I6(row.image, target)) {
        row.term = *t;
        row.matches = true;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SuiteReport verify_f_table() {
  SuiteReport rep("f-table");
  auto rows = regenerate_f_table();
  std::size_t exact = 0;
  for (const auto& r : rows) {
    std::string name = "f_" + matching_to_dotted(kv_matchings()[r.pi]);
    Polynomial term = Polynomial::monomial(Universe::Torus, r.term.mono, r.term.coeff);
    std::string detail = "word " + (r.word.empty() ? std::string("()") : word_to_string(r.word)) + ", term " +
                         term.to_text() + (r.exact ? ", exact" : ", modulo I6");
    nlohmann::json w = {{"word", word_to_string(r.word)},
                        {"term", term.to_text()},
                        {"exact", r.exact},
                        {"image", r.image.to_text()},
                        {"table", f_table()[r.pi].to_text()}};
    rep.add(name, r.matches, detail, w);
    exact += r.exact ? 1 : 0;
  }
  Polynomial stab = act_on_torus_generator(3, f_table()[0]);
  rep.add("(34) stabilizes (12)(34)(56) with term z_24^-2", stab == T("z_24^-2") * f_table()[0], stab.to_text());
  rep.add("regeneration summary", true,
          std::to_string(exact) + " of 15 exact in the free Laurent ring, " + std::to_string(15 - exact) +
              " modulo I6");
  return rep;
}

std::vector<std::optional<Rational>> TorusPoint::slot_values() const {
  return std::vector<std::optional<Rational>>(values.begin(), values.end());
}

const Rational& TorusPoint::z(int i, int j) const { return values[z_var(i, j).slot()]; }
const Rational& TorusPoint::u(const Matching& pi) const { return values[u_var(normalize_matching(pi)).slot()]; }

TorusPoint sample_point(const Rational& a, const Rational& b, const Rational& c) {
  std::vector<std::optional<Rational>> abc = {a, b, c};
  TorusPoint pt;
  for (int s = 0; s < kNumTorusVariables; ++s) {
    pt.values[s] = evaluate_slots(*parameter_images()[s], abc);
    if (pt.values[s].is_zero())
      throw PointNotInY(VariableId::from_slot(Universe::Torus, static_cast<std::uint8_t>(s)).name());
  }
  return pt;
}

std::vector<std::array<Rational, 3>> seeded_parameter_points(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    long p = static_cast<long>(rng() % 41) - 20;
    long q = static_cast<long>(rng() % 9) + 1;
    return Rational(mpz_class(p), mpz_class(q));
  };
  std::vector<std::array<Rational, 3>> out;
  while (out.size() < count) {
    std::array<Rational, 3> abc = {draw(), draw(), draw()};
    try {
      sample_point(abc[0], abc[1], abc[2]);
    } catch (const PointNotInY&) {
      continue;
    }
    out.push_back(abc);
  }
  return out;
}

}  // namespace coxm06
