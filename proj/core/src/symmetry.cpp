#include "coxm06/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "coxm06/errors.hpp"
#include "coxm06/modspace.hpp"

namespace coxm06 {

// ------------------------------------------------------------ naming rules

SignedVariable canonicalize_pair(int i, int j) {
  if (i == j) throw InvalidIndex("repeated index in x_" + std::to_string(i) + std::to_string(j));
  if (i > j) return {x_var(j, i), -1};
  return {x_var(i, j), 1};
}

SignedVariable canonicalize_triple(int i, int j, int k) {
  int t[3] = {i, j, k};
  int sign = sort_parity(t, 3);
  std::sort(t, t + 3);
  if (t[0] < 1 || t[2] > 6) throw InvalidIndex("triple index out of range 1..6");
  if (t[0] != 1) {
    int c[3], n = 0;
    for (int v = 1; v <= 6; ++v)
      if (v != t[0] && v != t[1] && v != t[2]) c[n++] = v;
    return {x_var(c[0], c[1], c[2]), sign};
  }
  return {x_var(t[0], t[1], t[2]), sign};
}

SignedVariable canonicalize_kv(const Matching& raw) {
  validate_matching(raw);
  Matching m = raw;
  for (auto& p : m)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  int lead[3] = {m[0][0], m[1][0], m[2][0]};
  int sign = sort_parity(lead, 3);
  return {y_var(normalize_matching(m)), sign};
}

SignedVariable act_on_variable(const Permutation& s, VariableId v) {
  switch (v.kind) {
    case VarKind::Pair: {
      const auto& p = boundary_pairs()[v.index];
      return canonicalize_pair(s(p[0]), s(p[1]));
    }
    case VarKind::Triple: {
      const auto& t = boundary_triples()[v.index];
      int img[3] = {s(t[0]), s(t[1]), s(t[2])};
      int comp[3], n = 0;
      for (int x = 1; x <= 6; ++x)
        if (x != t[0] && x != t[1] && x != t[2]) comp[n++] = s(x);
      int sign = sort_parity(img, 3) * sort_parity(comp, 3);
      SignedVariable out = canonicalize_triple(img[0], img[1], img[2]);
      out.sign = sign;
      return out;
    }
    case VarKind::KV: {
      const auto& pi = kv_matchings()[v.index];
      Matching m{{{s(pi[0][0]), s(pi[0][1])}, {s(pi[1][0]), s(pi[1][1])}, {s(pi[2][0]), s(pi[2][1])}}};
      return canonicalize_kv(m);
    }
    default:
      throw Error("act_on_variable: " + v.name() + " is a torus or parameter variable; use act_on_torus");
  }
}

CoxAction::CoxAction(const Permutation& sigma) : sigma_(sigma), terms_(kNumCoxVariables) {
  for (int s = 0; s < kNumCoxVariables; ++s) {
    auto slot = static_cast<std::uint8_t>(s);
    images_[s] = act_on_variable(sigma, VariableId::from_slot(Universe::Cox, slot));
    terms_[s] = Term{Monomial::var(images_[s].var.slot()), Rational(images_[s].sign)};
  }
}

Polynomial CoxAction::apply(const Polynomial& p) const {
  if (p.universe() != Universe::Cox) throw UniverseMismatch("CoxAction applies to Cox polynomials only");
  return apply_monomial_map(p, terms_, Universe::Cox);
}

Polynomial act_on_poly_S(const Permutation& sigma, const Polynomial& p) { return CoxAction(sigma).apply(p); }

Matching conjugate(const Permutation& s, const Matching& pi) {
  Matching m{{{s(pi[0][0]), s(pi[0][1])}, {s(pi[1][0]), s(pi[1][1])}, {s(pi[2][0]), s(pi[2][1])}}};
  return normalize_matching(m);
}

// ------------------------------------------------------------------- torus

namespace {

using ZRow = std::array<Polynomial, kNumTorusZ>;

ZRow parse_row(const std::array<const char*, kNumTorusZ>& entries) {
  ZRow row;
  for (int k = 0; k < kNumTorusZ; ++k) row[k] = parse_polynomial(entries[k], Universe::Torus);
  return row;
}

const std::array<ZRow, 5>& table1() {
  static const std::array<ZRow, 5> t = {
      parse_row({"z_24^-1", "z_25^-1", "z_26^-1", "-z_34*z_24^-1", "-z_35*z_25^-1", "-z_36*z_26^-1",
                 "-z_45*z_24^-1*z_25^-1", "-z_46*z_24^-1*z_26^-1", "-z_56*z_25^-1*z_26^-1"}),
      parse_row({"-z_34", "-z_35", "-z_36", "-z_24", "-z_25", "-z_26", "-z_45", "-z_46", "-z_56"}),
      parse_row({"z_24^-1", "z_25*z_24^-1", "z_26*z_24^-1", "-z_34*z_24^-1", "z_45*z_24^-1", "z_46*z_24^-1",
                 "z_35*z_24^-1", "z_36*z_24^-1", "z_56*z_24^-1"}),
      parse_row({"z_25", "z_24", "z_26", "z_35", "z_34", "z_36", "-z_45", "z_56", "z_46"}),
      parse_row({"z_24", "z_26", "z_25", "z_34", "z_36", "z_35", "z_46", "z_45", "-z_56"}),
  };
  return t;
}

void check_generator(int g) {
  if (g < 1 || g > 5) throw InvalidIndex("generator index must be 1..5");
}

Polynomial apply_z_row(const ZRow& row, const Polynomial& q) {
  std::vector<std::optional<Term>> images(kNumTorusVariables);
  for (int k = 0; k < kNumTorusZ; ++k) images[k] = row[k].terms().front();
  return apply_monomial_map(q, images, Universe::Torus);
}

std::array<std::array<Cocycle, kNumKV>, 5> compute_cocycles() {
  std::array<std::array<Cocycle, kNumKV>, 5> out;
  for (int g = 1; g <= 5; ++g) {
    Permutation s = Permutation::adjacent(g);
    for (int p = 0; p < kNumKV; ++p) {
      Cocycle& c = out[g - 1][p];
      c.target = matching_index(conjugate(s, kv_matchings()[p]));
      const Polynomial& target = f_pi(c.target);
      Polynomial image = apply_z_row(table1()[g - 1], f_pi(p));
      bool found = false;
      for (const auto& t : image.terms()) {
        const Term& lead = target.terms().front();
        Polynomial m = Polynomial::monomial(Universe::Torus, t.mono * lead.mono.inverse(), t.coeff / lead.coeff);
        if (m * target == image) {
          c.term = m.terms().front();
          c.exact = true;
          found = true;
          break;
        }
      }
      if (found) continue;
      auto t = term_ratio_mod_I6(image, target);
      if (!t)
        throw NonTermCocycle("non-term cocycle: (" + std::to_string(g) + std::to_string(g + 1) + ") applied to f_" +
                             matching_to_dotted(kv_matchings()[p]));
      c.term = *t;
      c.exact = false;
    }
  }
  return out;
}

const std::array<std::array<Cocycle, kNumKV>, 5>& cocycles() {
  static const auto table = compute_cocycles();
  return table;
}

std::vector<std::optional<Term>> generator_images(int g, const ZRow& row) {
  std::vector<std::optional<Term>> images(kNumTorusVariables);
  for (int k = 0; k < kNumTorusZ; ++k) images[k] = row[k].terms().front();
  for (int p = 0; p < kNumKV; ++p) {
    const Cocycle& c = cocycles()[g - 1][p];
    images[kNumTorusZ + p] =
        Term{c.term.mono * Monomial::var(static_cast<std::uint8_t>(kNumTorusZ + c.target)), c.term.coeff};
  }
  return images;
}

const std::array<std::vector<std::optional<Term>>, 5>& torus_images() {
  static const auto images = [] {
    std::array<std::vector<std::optional<Term>>, 5> out;
    for (int g = 1; g <= 5; ++g) out[g - 1] = generator_images(g, table1()[g - 1]);
    return out;
  }();
  return images;
}

}  // namespace

const std::array<Polynomial, kNumTorusZ>& table1_row(int g) {
  check_generator(g);
  return table1()[g - 1];
}

Polynomial printed_table1_entry_34_z46() { return parse_polynomial("z_36*z_26^-1", Universe::Torus); }

const Cocycle& u_cocycle(int g, int pi) {
  check_generator(g);
  if (pi < 0 || pi >= kNumKV) throw InvalidIndex("matching index out of range");
  return cocycles()[g - 1][pi];
}

Polynomial act_on_torus_generator(int g, const Polynomial& q) {
  check_generator(g);
  if (q.universe() != Universe::Torus) throw UniverseMismatch("act_on_torus expects a torus polynomial");
  return apply_monomial_map(q, torus_images()[g - 1], Universe::Torus);
}

Polynomial act_on_torus_generator_with(int g, const std::array<Polynomial, kNumTorusZ>& zrow, const Polynomial& q) {
  check_generator(g);
  return apply_monomial_map(q, generator_images(g, zrow), Universe::Torus);
}

Polynomial act_on_torus_word(const std::vector<int>& word, const Polynomial& q) {
  Polynomial r = q;
  for (int g : word) r = act_on_torus_generator(g, r);
  return r;
}

Polynomial act_on_torus(const Permutation& sigma, const Polynomial& q) {
  return act_on_torus_word(sigma.adjacent_word(), q);
}

// ------------------------------------------------------------------ orbits

namespace {

struct PolyLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return compare(a, b) < 0; }
};

}  // namespace

std::vector<OrbitElement> orbit_with_words(const Polynomial& p, OrbitAction action) {
  std::vector<CoxAction> cox;
  if (action == OrbitAction::Cox)
    for (int g = 1; g <= 5; ++g) cox.emplace_back(Permutation::adjacent(g));
  auto apply = [&](int g, const Polynomial& q) {
    return action == OrbitAction::Cox ? cox[g - 1].apply(q) : act_on_torus_generator(g, q);
  };

  std::map<Polynomial, OrbitElement, PolyLess> seen;
  std::deque<std::pair<Polynomial, std::vector<int>>> queue;  // actual images, not canonical
  seen.emplace(canonical_form(p), OrbitElement{canonical_form(p), {}, p.is_zero() ? 1 : canonical_sign(p)});
  queue.emplace_back(p, std::vector<int>{});
  while (!queue.empty()) {
    auto [q, word] = std::move(queue.front());
    queue.pop_front();
    for (int g = 1; g <= 5; ++g) {
      Polynomial img = apply(g, q);
      Polynomial key = canonical_form(img);
      if (seen.count(key)) continue;
      std::vector<int> w = word;
      w.push_back(g);
      seen.emplace(key, OrbitElement{key, w, canonical_sign(img)});
      queue.emplace_back(std::move(img), std::move(w));
    }
  }
  std::vector<OrbitElement> out;
  out.reserve(seen.size());
  for (auto& [k, e] : seen) out.push_back(std::move(e));
  return out;
}

std::vector<Polynomial> orbit(const Polynomial& p, OrbitAction action) {
  std::vector<Polynomial> out;
  for (auto& e : orbit_with_words(p, action)) out.push_back(std::move(e.poly));
  return out;
}

// ----------------------------------------------------------- group action

SuiteReport verify_group_action() {
  SuiteReport rep("group-action");
  auto word_power = [](std::vector<int> w, int k) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
  };
  std::vector<std::pair<std::string, std::vector<int>>> relations;
  for (int i = 1; i <= 5; ++i) relations.push_back({"s" + std::to_string(i) + "^2", {i, i}});
  for (int i = 1; i <= 4; ++i)
    relations.push_back({"(s" + std::to_string(i) + " s" + std::to_string(i + 1) + ")^3", word_power({i, i + 1}, 3)});
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 2; j <= 5; ++j)
      relations.push_back({"(s" + std::to_string(i) + " s" + std::to_string(j) + ")^2", word_power({i, j}, 2)});

  for (const auto& [name, word] : relations) {
    std::vector<std::string> bad;
    for (int s = 0; s < kNumTorusVariables; ++s) {
      Polynomial v = Polynomial::variable(VariableId::from_slot(Universe::Torus, static_cast<std::uint8_t>(s)));
      Polynomial img = act_on_torus_word(word, v);
      if (img != v) bad.push_back(v.to_text() + " -> " + img.to_text());
    }
    std::string detail = bad.empty() ? "holds on all 24 torus variables" : bad.front();
    rep.add("torus " + name, bad.empty(), detail);
  }

  // Group law on Cox generators: (sigma tau) . v = sigma . (tau . v), for all sigma and generator tau.
  std::size_t failures = 0;
  std::string first;
  std::vector<CoxAction> gens;
  for (int g = 1; g <= 5; ++g) gens.emplace_back(Permutation::adjacent(g));
  for (const auto& sigma : Permutation::all()) {
    CoxAction a(sigma);
    for (int g = 1; g <= 5; ++g) {
      CoxAction composed(sigma * Permutation::adjacent(g));
      for (int s = 0; s < kNumCoxVariables; ++s) {
        auto slot = static_cast<std::uint8_t>(s);
        const SignedVariable& inner = gens[g - 1].image(slot);
        const SignedVariable& outer = a.image(inner.var.slot());
        SignedVariable both{outer.var, outer.sign * inner.sign};
        if (!(both == composed.image(slot))) {
          if (failures++ == 0)
            first = sigma.to_cycles() + " after (" + std::to_string(g) + std::to_string(g + 1) + ") on " +
                    VariableId::from_slot(Universe::Cox, slot).name();
        }
      }
    }
  }
  rep.add("cox action is a group action", failures == 0,
          failures == 0 ? "720 x 5 x 40 compositions agree" : std::to_string(failures) + " mismatches, e.g. " + first);

  std::size_t mod_i6 = 0;
  for (int g = 1; g <= 5; ++g)
    for (int p = 0; p < kNumKV; ++p) mod_i6 += u_cocycle(g, p).exact ? 0 : 1;
  rep.add("u cocycles are single Laurent terms", true,
          std::to_string(75 - mod_i6) + " exact in the free Laurent ring, " + std::to_string(mod_i6) +
              " modulo I6");
  return rep;
}

}  // namespace coxm06
