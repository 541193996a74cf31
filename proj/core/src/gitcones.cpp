#include "coxm06/gitcones.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "coxm06/errors.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/simplex.hpp"
#include "coxm06/symmetry.hpp"

namespace coxm06 {

namespace {

/// Basis position of e_{1ab}.
int triple_coordinate(int a, int b) {
  IndexTriple t = {1, std::min(a, b), std::max(a, b)};
  int k = triple_index(t);
  if (k < 0) throw InvalidIndex("not a triple containing 1");
  return 6 + k;
}

/// Normalized pi with the block containing 1 first: (1j)(kl)(mn).
Matching roles(const Matching& pi) {
  validate_matching(pi);
  return normalize_matching(pi);
}

/// A 3-subset as a boundary divisor: the triple containing 1.
std::vector<int> boundary_triple(std::vector<int> s) {
  if (std::find(s.begin(), s.end(), 1) == s.end()) {
    std::vector<int> c;
    for (int v = 1; v <= 6; ++v)
      if (std::find(s.begin(), s.end(), v) == s.end()) c.push_back(v);
    s = c;
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::string subset_label(const std::vector<int>& s) {
  std::string out = "delta_";
  for (int v : s) out += std::to_string(v);
  return out;
}

std::string set_text(const std::set<long>& s) {
  std::string out = "{";
  for (long v : s) out += (out.size() > 1 ? ", " : "") + std::to_string(v);
  return out + "}";
}

/// Clears denominators and divides by the content.
DualVector primitive(const RationalVector& y) {
  mpz_class l = 1;
  for (const auto& v : y) l = lcm(l, v.denominator());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& v : y) {
    mpz_class k = v.numerator() * (l / v.denominator());
    ints.push_back(k);
    g = gcd(g, k);
  }
  DualVector w;
  for (std::size_t i = 0; i < ints.size(); ++i) w.c[i] = g == 0 ? 0 : mpz_class(ints[i] / g).get_si();
  return w;
}

}  // namespace

DualVector rho_functional(const Matching& raw) {
  Matching pi = roles(raw);
  int k = pi[1][0], l = pi[1][1], m = pi[2][0], n = pi[2][1];
  DualVector rho;
  for (int i = 0; i < 6; ++i) rho.c[i] = 1;
  for (int a : {k, l})
    for (int b : {m, n}) rho.c[triple_coordinate(a, b)] = 1;
  return rho;
}

DualVector rho_functional(int pi_index) {
  if (pi_index < 0 || pi_index >= kNumKV) throw InvalidIndex("matching index out of range");
  return rho_functional(kv_matchings()[pi_index]);
}

const std::vector<BoundaryDivisor>& boundary_divisors() {
  static const std::vector<BoundaryDivisor> all = [] {
    std::vector<BoundaryDivisor> out;
    for (const auto& p : boundary_pairs()) {
      std::vector<int> s = {p[0], p[1]};
      out.push_back({s, subset_label(s), class_of_boundary(s)});
    }
    for (const auto& t : boundary_triples()) {
      std::vector<int> s = {t[0], t[1], t[2]};
      out.push_back({s, subset_label(s), class_of_boundary(s)});
    }
    return out;
  }();
  return all;
}

std::vector<std::vector<int>> rho_positive_divisors(const Matching& raw) {
  Matching pi = roles(raw);
  int k = pi[1][0], l = pi[1][1], m = pi[2][0], n = pi[2][1];
  std::vector<std::vector<int>> out = {{pi[0][0], pi[0][1]}, {k, l}, {m, n}};
  for (int a : {k, l})
    for (int b : {m, n}) out.push_back(boundary_triple({1, a, b}));
  return out;
}

std::vector<DivisorClass> delta_generators(const Matching& raw) {
  Matching pi = roles(raw);
  auto is_block = [&](int a, int b) {
    for (const auto& p : pi)
      if ((p[0] == a && p[1] == b) || (p[0] == b && p[1] == a)) return true;
    return false;
  };
  std::vector<DivisorClass> out;
  for (const auto& bd : boundary_divisors()) {
    const auto& s = bd.subset;
    bool in = s.size() == 2 ? !is_block(s[0], s[1])
                            : is_block(s[0], s[1]) || is_block(s[0], s[2]) || is_block(s[1], s[2]) ||
                                  [&] {
                                    // A block inside the complement counts as well.
                                    std::vector<int> c;
                                    for (int v = 1; v <= 6; ++v)
                                      if (std::find(s.begin(), s.end(), v) == s.end()) c.push_back(v);
                                    return is_block(c[0], c[1]) || is_block(c[0], c[2]) || is_block(c[1], c[2]);
                                  }();
    if (in) out.push_back(bd.cls);
  }
  return out;
}

std::set<long> rho_values_on_other_kv(const Matching& raw) {
  Matching pi = roles(raw);
  DualVector rho = rho_functional(pi);
  std::set<long> out;
  for (const auto& other : kv_matchings())
    if (other != pi) out.insert(rho.pair(class_of_kv(other)));
  return out;
}

SuiteReport verify_separation(const Matching& raw) {
  Matching pi = roles(raw);
  std::string name = matching_to_cycles(pi);
  SuiteReport rep("separation " + name);
  DualVector rho = rho_functional(pi);
  nlohmann::json rho_w = rho.c;

  long q = rho.pair(class_of_kv(pi));
  rep.add(name + ": <rho, Q_pi> = -2", q == -2, "value " + std::to_string(q), {{"rho", rho_w}});

  auto positive = rho_positive_divisors(pi);
  std::string off_two, off_zero;
  for (const auto& bd : boundary_divisors()) {
    long v = rho.pair(bd.cls);
    bool listed = std::find(positive.begin(), positive.end(), bd.subset) != positive.end();
    if (listed && v != 2) off_two += " " + bd.label + "=" + std::to_string(v);
    if (!listed && v != 0) off_zero += " " + bd.label + "=" + std::to_string(v);
  }
  std::string listed_text;
  for (const auto& s : positive) listed_text += (listed_text.empty() ? "" : ", ") + subset_label(s);
  rep.add(name + ": seven listed boundary divisors pair to 2", off_two.empty(),
          off_two.empty() ? listed_text : "off:" + off_two);
  rep.add(name + ": other boundary divisors pair to 0", off_zero.empty(),
          off_zero.empty() ? "18 divisors" : "off:" + off_zero);

  std::set<long> others = rho_values_on_other_kv(pi);
  bool positive_kv = !others.empty() && *others.begin() > 0;
  rep.add(name + ": other Keel-Vermeire divisors pair positively", positive_kv, "observed " + set_text(others),
          {{"observed", std::vector<long>(others.begin(), others.end())}});

  auto gens = delta_generators(pi);
  IntMatrix M(kPicardRank, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int i = 0; i < kPicardRank; ++i) M.at(i, j) = gens[j].c[i];
  std::size_t r = rank(M);
  rep.add(name + ": Delta_pi has 18 generators spanning rank 15", gens.size() == 18 && r == 15,
          std::to_string(gens.size()) + " generators, rank " + std::to_string(r));
  return rep;
}

ExtremalityCertificate verify_kv_extremal(const Matching& raw) {
  Matching pi = roles(raw);
  ExtremalityCertificate cert;
  cert.rho = rho_functional(pi);
  cert.min_boundary_pairing = std::numeric_limits<long>::max();
  for (const auto& bd : boundary_divisors())
    cert.min_boundary_pairing = std::min(cert.min_boundary_pairing, cert.rho.pair(bd.cls));
  cert.kv_pairing = cert.rho.pair(class_of_kv(pi));
  return cert;
}

const Polynomial& j_seed() {
  static const Polynomial p = parse_polynomial(
      "x_12*x_26*x_34*x_35*x_45*x_126^2 - x_13*x_24*x_25*x_36*x_45*x_136^2"
      " + x_14*x_23*x_25*x_35*x_46*x_146^2 - x_15*x_23*x_24*x_34*x_56*x_156^2",
      Universe::Cox);
  return p;
}

std::vector<Polynomial> j_generators() {
  std::vector<Polynomial> out;
  for (const auto& r : generate_all())
    if (r.cls == 1) out.push_back(r.poly);
  for (auto& p : orbit(j_seed())) out.push_back(std::move(p));
  return out;
}

SuiteReport verify_j() {
  SuiteReport rep("J");
  auto second = orbit(j_seed());
  rep.add("second orbit has size 15", second.size() == 15, std::to_string(second.size()) + " elements");
  auto gens = j_generators();
  std::size_t with_y = 0, inhomogeneous = 0, nonzero = 0;
  std::string first_bad;
  for (const auto& g : gens) {
    bool y = false;
    for (auto s : g.slots()) y = y || s >= kNumPairs + kNumTriples;
    with_y += y;
    inhomogeneous += !is_homogeneous(g);
    if (!section_substitution(g).is_zero()) {
      ++nonzero;
      if (first_bad.empty()) first_bad = g.to_text();
    }
  }
  rep.add("30 generators", gens.size() == 30, std::to_string(gens.size()) + " generators");
  rep.add("generators are y-free", with_y == 0, std::to_string(with_y) + " mention a y");
  rep.add("generators are homogeneous", inhomogeneous == 0, std::to_string(inhomogeneous) + " inhomogeneous");
  rep.add("generators vanish under the section", nonzero == 0,
          nonzero == 0 ? "all residues zero" : std::to_string(nonzero) + " nonzero, first " + first_bad);
  return rep;
}

ConeSpec boundary_cone() {
  ConeSpec c;
  c.label = "E";
  for (const auto& bd : boundary_divisors()) c.generators.push_back(bd.cls);
  return c;
}

bool ConeAnswer::certified(const DivisorClass& v, const ConeSpec& cone) const {
  if (contains) {
    if (combination.size() != cone.generators.size()) return false;
    for (int i = 0; i < kPicardRank; ++i) {
      Rational s;
      for (std::size_t j = 0; j < combination.size(); ++j) {
        if (combination[j] < 0) return false;
        s += combination[j] * Rational(cone.generators[j].c[i]);
      }
      if (s != Rational(v.c[i])) return false;
    }
    return true;
  }
  for (const auto& g : cone.generators)
    if (functional.pair(g) < 0) return false;
  return functional.pair(v) < 0;
}

ConeAnswer cone_contains(const DivisorClass& v, const ConeSpec& cone) {
  if (cone.generators.size() > kMaxConeGenerators)
    throw CapExceeded("cone_contains: " + std::to_string(cone.generators.size()) + " generators exceed the cap of " +
                      std::to_string(kMaxConeGenerators));
  RationalMatrix G(kPicardRank, cone.generators.size());
  for (std::size_t j = 0; j < cone.generators.size(); ++j)
    for (int i = 0; i < kPicardRank; ++i) G.at(i, j) = cone.generators[j].c[i];
  RationalVector b(kPicardRank);
  for (int i = 0; i < kPicardRank; ++i) b[i] = v.c[i];
  FeasibilityResult lp = phase_one(G, b);
  ConeAnswer ans;
  ans.pivots = lp.pivots;
  ans.contains = lp.feasible;
  if (lp.feasible)
    ans.combination = lp.x;
  else
    ans.functional = primitive(lp.y);
  if (!ans.certified(v, cone)) throw Error("cone_contains: certificate failed to verify");
  return ans;
}

SuiteReport verify_cones() {
  SuiteReport rep("cones");
  for (const auto& pi : kv_matchings()) rep.merge(verify_separation(pi));
  for (const auto& pi : kv_matchings()) {
    ExtremalityCertificate c = verify_kv_extremal(pi);
    rep.add(matching_to_cycles(pi) + ": rho certifies Q_pi outside pos(delta_I)", c.valid(),
            "min boundary pairing " + std::to_string(c.min_boundary_pairing) + ", <rho, Q_pi> = " +
                std::to_string(c.kv_pairing),
            {{"rho", c.rho.c}});
  }
  rep.merge(verify_j());

  ConeSpec E = boundary_cone();
  ConeAnswer d12 = cone_contains(boundary_divisors()[0].cls, E);
  rep.add("delta_12 lies in E", d12.contains, "pivots " + std::to_string(d12.pivots));
  ConeAnswer zero = cone_contains(DivisorClass{}, E);
  rep.add("0 lies in E", zero.contains);
  for (const auto& pi : kv_matchings()) {
    ConeAnswer q = cone_contains(class_of_kv(pi), E);
    rep.add(matching_to_cycles(pi) + ": Q_pi is not in E (LP)", !q.contains,
            q.contains ? "found a combination" : "functional " + q.functional.to_string(),
            {{"functional", q.functional.c}});
  }
  return rep;
}

}  // namespace coxm06
