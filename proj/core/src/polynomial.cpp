#include "coxm06/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include <nlohmann/json.hpp>

#include "coxm06/errors.hpp"

namespace coxm06 {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [s, k] : entries) {
    if (!e_.empty() && e_.back().first == s)
      e_.back().second += k;
    else
      e_.emplace_back(s, k);
    if (e_.back().second == 0) e_.pop_back();
  }
}

Monomial Monomial::var(std::uint8_t slot, int exponent) {
  Monomial m;
  if (exponent != 0) m.e_.emplace_back(slot, exponent);
  return m;
}

int Monomial::exponent(std::uint8_t slot) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Entry{slot, INT32_MIN});
  return it != e_.end() && it->first == slot ? it->second : 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [s, k] : e_) d += k;
  return d;
}

bool Monomial::has_negative() const {
  return std::any_of(e_.begin(), e_.end(), [](const Entry& x) { return x.second < 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto a = e_.begin(), b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      r.e_.push_back(*a++);
    } else if (a == e_.end() || b->first < a->first) {
      r.e_.push_back(*b++);
    } else {
      int k = a->second + b->second;
      if (k != 0) r.e_.emplace_back(a->first, k);
      ++a, ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const { return pow(-1); }

Monomial Monomial::pow(int k) const {
  Monomial r;
  if (k == 0) return r;
  r.e_ = e_;
  for (auto& x : r.e_) x.second *= k;
  return r;
}

Monomial Monomial::negative_part() const {
  Monomial r;
  for (const auto& [s, k] : e_)
    if (k < 0) r.e_.emplace_back(s, -k);
  return r;
}

Monomial Monomial::positive_part() const {
  Monomial r;
  for (const auto& x : e_)
    if (x.second > 0) r.e_.push_back(x);
  return r;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db ? 1 : -1;
  const auto& x = a.entries();
  const auto& y = b.entries();
  // The first slot (in increasing order) where the exponents differ decides.
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int ea = 0, eb = 0;
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      ea = x[i++].second;
    } else if (i == x.size() || y[j].first < x[i].first) {
      eb = y[j++].second;
    } else {
      ea = x[i++].second;
      eb = y[j++].second;
    }
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

using TermMap = std::map<Monomial, Rational, GrlexGreater>;

std::vector<Term> to_terms(TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, std::move(c)});
  return out;
}

std::string slot_name(Universe u, std::uint8_t slot) {
  return VariableId::from_slot(u, slot).name();
}

}  // namespace

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Universe u, const Rational& c) {
  Polynomial p(u);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VariableId v, int exponent) {
  Polynomial p(v.universe(), exponent < 0);
  p.terms_.push_back({Monomial::var(v.slot(), exponent), Rational(1)});
  return p;
}

Polynomial Polynomial::monomial(Universe u, const Monomial& m, const Rational& c) {
  Polynomial p(u, m.has_negative());
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(Universe u, std::vector<Term> terms, bool laurent) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.mono.has_negative()) laurent = true;
    if (t.mono.span() > universe_size(u))
      throw UniverseMismatch("monomial slot outside the " + std::string(universe_name(u)) + " universe");
    auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coeff);
    if (!fresh) it->second += t.coeff;
  }
  Polynomial p(u, laurent);
  p.terms_ = to_terms(acc);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return Rational(0);
}

int Polynomial::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int k = t.mono.total_degree();
    if (first || k > d) d = k;
    first = false;
  }
  return d;
}

std::vector<std::uint8_t> Polynomial::slots() const {
  std::vector<std::uint8_t> out;
  for (const auto& t : terms_)
    for (const auto& e : t.mono.entries()) out.push_back(e.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Polynomial::mentions(std::uint8_t slot) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(slot) != 0) return true;
  return false;
}

Polynomial Polynomial::as_laurent() const {
  Polynomial p = *this;
  p.laurent_ = true;
  return p;
}

Polynomial Polynomial::as_plain() const {
  for (const auto& t : terms_)
    if (t.mono.has_negative()) throw Error("negative exponent in a plain polynomial: " + to_text());
  Polynomial p = *this;
  p.laurent_ = false;
  return p;
}

void Polynomial::check_compatible(const Polynomial& o, const char* op) {
  if (universe_ != o.universe_)
    throw UniverseMismatch(std::string("cannot ") + op + " polynomials over the " +
                           std::string(universe_name(universe_)) + " and " +
                           std::string(universe_name(o.universe_)) + " universes");
  // A plain operand mixed with a Laurent one is promoted.
  laurent_ = laurent_ || o.laurent_;
}

void Polynomial::add_scaled(const Polynomial& other, int sign) {
  const Polynomial copy = &other == this ? other : Polynomial(universe_);
  const Polynomial& o = &other == this ? copy : other;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    int c = a == terms_.end() ? -1 : b == o.terms_.end() ? 1 : grlex_compare(a->mono, b->mono);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back({b->mono, sign > 0 ? b->coeff : -b->coeff});
      ++b;
    } else {
      Rational s = sign > 0 ? a->coeff + b->coeff : a->coeff - b->coeff;
      if (!s.is_zero()) out.push_back({std::move(a->mono), std::move(s)});
      ++a, ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o, "add");
  add_scaled(o, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o, "subtract");
  add_scaled(o, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  r.check_compatible(b, "multiply");
  if (a.is_zero() || b.is_zero()) {
    r.terms_.clear();
    return r;
  }
  if (b.terms_.size() == 1) {
    const Term& t = b.terms_[0];
    // Multiplying by a single monomial preserves the order of terms.
    for (auto& x : r.terms_) {
      x.mono = x.mono * t.mono;
      x.coeff *= t.coeff;
    }
    return r;
  }
  TermMap acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Rational c = x.coeff * y.coeff;
      auto [it, fresh] = acc.try_emplace(x.mono * y.mono, c);
      if (!fresh) it->second += c;
    }
  r.terms_ = to_terms(acc);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) return inverse_term().pow(-k);
  Polynomial result = constant(universe_, 1);
  result.laurent_ = laurent_;
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::inverse_term() const {
  if (terms_.size() != 1) throw NonInvertibleSubstitution(to_text());
  Polynomial r(universe_, true);
  r.terms_.push_back({terms_[0].mono.inverse(), terms_[0].coeff.inverse()});
  return r;
}

int compare(const Polynomial& a, const Polynomial& b) {
  if (a.universe_ != b.universe_) return a.universe_ < b.universe_ ? -1 : 1;
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = grlex_compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c != 0) return -c;  // a larger leading monomial sorts later
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    c = c.abs();
    std::string factors;
    for (const auto& [slot, k] : t.mono.entries()) {
      if (!factors.empty()) factors += "*";
      factors += slot_name(universe_, slot);
      if (k != 1) factors += "^" + std::to_string(k);
    }
    if (factors.empty())
      s += c.to_string();
    else if (c.is_one())
      s += factors;
    else
      s += c.to_string() + "*" + factors;
    first = false;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_text(); }

// ------------------------------------------------------------ substitution

Polynomial substitute_slots(const Polynomial& p, const std::vector<std::optional<Polynomial>>& images,
                            Universe target) {
  for (const auto& img : images)
    if (img && img->universe() != target)
      throw UniverseMismatch("substitution image outside the target universe");
  Polynomial out(target, p.is_laurent());
  // Cache of powers per slot: exponent -> image^exponent.
  std::vector<std::map<int, Polynomial>> cache(images.size());
  auto power = [&](std::uint8_t slot, int k) -> const Polynomial& {
    auto& c = cache[slot];
    auto it = c.find(k);
    if (it != c.end()) return it->second;
    const Polynomial& img = *images[slot];
    if (k < 0 && !img.is_term())
      throw NonInvertibleSubstitution(VariableId::from_slot(p.universe(), slot).name() + " -> " +
                                      img.to_text());
    return c.emplace(k, img.pow(k)).first->second;
  };
  for (const auto& t : p.terms()) {
    Polynomial acc = Polynomial::constant(target, t.coeff);
    for (const auto& [slot, k] : t.mono.entries()) {
      if (slot >= images.size() || !images[slot])
        throw UniverseMismatch("no image for " + VariableId::from_slot(p.universe(), slot).name());
      acc *= power(slot, k);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment, std::optional<Universe> target) {
  Universe tgt = target.value_or(p.universe());
  std::vector<std::optional<Polynomial>> images(universe_size(p.universe()));
  for (const auto& [v, img] : assignment) {
    if (v.universe() != p.universe()) continue;
    if (img.universe() != tgt)
      throw UniverseMismatch("image of " + v.name() + " lies in the " +
                             std::string(universe_name(img.universe())) +
                             " universe; pass an explicit target universe");
    images[v.slot()] = img;
  }
  for (std::uint8_t s : p.slots()) {
    if (images[s]) continue;
    if (tgt != p.universe())
      throw UniverseMismatch("unassigned variable " + VariableId::from_slot(p.universe(), s).name() +
                             " cannot move to the " + std::string(universe_name(tgt)) + " universe");
    images[s] = Polynomial::variable(VariableId::from_slot(p.universe(), s));
  }
  return substitute_slots(p, images, tgt);
}

Polynomial apply_monomial_map(const Polynomial& p, const std::vector<std::optional<Term>>& images,
                              Universe target) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    Rational c = t.coeff;
    for (const auto& [slot, k] : t.mono.entries()) {
      if (slot >= images.size() || !images[slot])
        throw UniverseMismatch("no image for " + VariableId::from_slot(p.universe(), slot).name());
      const Term& img = *images[slot];
      m = m * img.mono.pow(k);
      c *= img.coeff.pow(k);
    }
    out.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_terms(target, std::move(out), p.is_laurent());
}

Rational evaluate_slots(const Polynomial& p, const std::vector<std::optional<Rational>>& values) {
  Rational total;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    for (const auto& [slot, k] : t.mono.entries()) {
      if (slot >= values.size() || !values[slot])
        throw Error("evaluate: variable " + VariableId::from_slot(p.universe(), slot).name() +
                    " is unassigned");
      const Rational& v = *values[slot];
      if (k < 0 && v.is_zero()) throw PoleAtPoint(VariableId::from_slot(p.universe(), slot).name());
      c *= v.pow(k);
    }
    total += c;
  }
  return total;
}

Rational evaluate(const Polynomial& p, const std::map<VariableId, Rational>& point) {
  std::vector<std::optional<Rational>> values(universe_size(p.universe()));
  for (const auto& [v, x] : point)
    if (v.universe() == p.universe()) values[v.slot()] = x;
  return evaluate_slots(p, values);
}

// ----------------------------------------------------------- canonical form

int canonical_sign(const Polynomial& p) {
  if (p.is_zero()) return 0;
  return p.terms().back().coeff.sign() > 0 ? 1 : -1;
}

Polynomial canonical_form(const Polynomial& p) { return canonical_sign(p) < 0 ? -p : p; }

// ---------------------------------------------------------------- division

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("division by the zero polynomial");
  if (a.universe() != b.universe()) throw UniverseMismatch("divide_exact across universes");
  Polynomial rem = a;
  Polynomial quot(a.universe(), a.is_laurent() || b.is_laurent());
  const Term& lead = b.terms().front();
  std::vector<Term> q;
  while (!rem.is_zero()) {
    const Term& r = rem.terms().front();
    Monomial m = r.mono * lead.mono.inverse();
    if (!quot.is_laurent() && m.has_negative()) return std::nullopt;
    Rational c = r.coeff / lead.coeff;
    Polynomial step = Polynomial::monomial(a.universe(), m, c);
    if (quot.is_laurent()) step = step.as_laurent();
    rem -= step * b;
    quot += step;
  }
  return quot;
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::optional<Universe> u) : s_(s), u_(u) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    if (s_.empty()) throw ParseError("empty polynomial text");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (accept_minus())
        sign = -1;
      else if (accept('+'))
        sign = 1;
      else if (!first)
        throw error("expected '+' or '-'");
      terms.push_back(term(sign));
      first = false;
      skip();
    }
    Universe u = u_.value_or(seen_.value_or(Universe::Cox));
    if (terms.size() == 1 && terms[0].coeff.is_zero() && terms[0].mono.is_one())
      return Polynomial(u);
    return Polynomial::from_terms(u, std::move(terms));
  }

 private:
  ParseError error(const std::string& what) const {
    return ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_minus() {
    skip();
    if (accept('-')) return true;
    // U+2212 MINUS SIGN
    if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return false;
  }
  Term term(int sign) {
    Rational c = sign;
    std::vector<Monomial::Entry> exps;
    bool any = false;
    while (true) {
      skip();
      if (pos_ >= s_.size()) break;
      char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        c *= number();
      } else if (std::isalpha(static_cast<unsigned char>(ch))) {
        auto [slot, k] = factor();
        exps.emplace_back(slot, k);
      } else if (ch == '(') {
        throw error("parentheses are not supported");
      } else {
        break;
      }
      any = true;
      skip();
      if (!accept('*')) {
        // Juxtaposition is also accepted as multiplication.
        skip();
        if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) continue;
        break;
      }
    }
    if (!any) throw error("expected a term");
    return {Monomial(std::move(exps)), c};
  }
  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    try {
      return Rational::parse(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      throw error("bad number");
    }
  }
  std::pair<std::uint8_t, int> factor() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                s_[pos_] == '.'))
      ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    auto v = parse_variable(name);
    if (!v) throw error("unknown variable '" + std::string(name) + "'");
    if (u_ && v->universe() != *u_) throw UniverseMismatch("variable " + std::string(name) + " outside universe");
    if (seen_ && *seen_ != v->universe()) throw UniverseMismatch("mixed universes in polynomial text");
    seen_ = v->universe();
    int k = 1;
    skip();
    if (accept('^')) {
      skip();
      int sign = accept_minus() ? -1 : 1;
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) throw error("expected exponent");
      k = sign * std::stoi(std::string(s_.substr(st, pos_ - st)));
    }
    return {v->slot(), k};
  }

  std::string_view s_;
  std::optional<Universe> u_;
  std::optional<Universe> seen_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<Universe> universe) {
  return Parser(text, universe).run();
}

// -------------------------------------------------------------------- JSON

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [slot, k] : t.mono.entries()) exps[slot_name(p.universe(), slot)] = k;
    arr.push_back({{"coeff", t.coeff.to_fraction_string()}, {"exps", exps}});
  }
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j, Universe u) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& t : j) {
    Rational c = Rational::parse(t.at("coeff").get<std::string>());
    std::vector<Monomial::Entry> exps;
    for (const auto& [name, k] : t.at("exps").items()) {
      auto v = parse_variable(name);
      if (!v || v->universe() != u) throw ParseError("bad variable '" + name + "' in polynomial JSON");
      exps.emplace_back(v->slot(), k.get<int>());
    }
    terms.push_back({Monomial(std::move(exps)), c});
  }
  return Polynomial::from_terms(u, std::move(terms));
}

}  // namespace coxm06
