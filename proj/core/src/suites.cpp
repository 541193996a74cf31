#include "coxm06/suites.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "coxm06/cofactors.hpp"
#include "coxm06/errors.hpp"
#include "coxm06/gitcones.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/picard.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/symmetry.hpp"

namespace coxm06 {

namespace {

std::string record_name(const RelationRecord& r, std::size_t within) {
  return "class " + std::to_string(r.cls) + " #" + std::to_string(within + 1);
}

std::vector<std::size_t> index_range(std::size_t a, std::size_t b) {
  std::vector<std::size_t> v;
  for (std::size_t i = a; i < b; ++i) v.push_back(i);
  return v;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"grading",      "orbits",   "substitution", "equivariance",
                                                 "phi-identities", "matrices", "group-action", "f-table",
                                                 "cones",        "random-points", "all"};
  return names;
}

Mutation parse_mutation(const std::string& text) {
  static const std::regex re(R"(class([1-5]):flip-sign(?::(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("unknown mutation '" + text + "' (expected class<N>:flip-sign[:<term>])");
  Mutation out;
  out.cls = std::stoi(m[1].str());
  if (m[2].matched) out.term = std::stoul(m[2].str());
  if (out.term >= representatives()[out.cls - 1].size())
    throw ParseError("mutation term index out of range for class " + std::to_string(out.cls));
  return out;
}

Polynomial mutated_representative(const Mutation& m) {
  return flip_term_sign(representatives()[m.cls - 1], m.term);
}

SuiteReport verify_grading() {
  SuiteReport rep("grading");
  IntMatrix A = build_A();
  bool cols = true;
  for (int s = 0; s < kNumCoxVariables; ++s) {
    DivisorClass d = class_of_variable(VariableId::from_slot(Universe::Cox, static_cast<std::uint8_t>(s)));
    for (int i = 0; i < kPicardRank; ++i) cols = cols && d.c[i] == A.get(i, s);
  }
  rep.add("generator degrees are the columns of A", cols);

  const auto& all = generate_all();
  std::size_t inhomogeneous = 0;
  for (const auto& r : all)
    if (homogeneous_degree(r.poly) != r.degree) ++inhomogeneous;
  rep.add("every relation is homogeneous", inhomogeneous == 0,
          std::to_string(all.size() - inhomogeneous) + " of " + std::to_string(all.size()));

  for (int cls = 1; cls <= 5; ++cls) {
    DivisorClass d0 = *homogeneous_degree(representatives()[cls - 1]);
    std::set<DivisorClass> orbit_degrees, seen;
    for (const auto& s : Permutation::all()) orbit_degrees.insert(d0.permuted(s));
    for (const auto& r : all)
      if (r.cls == cls) seen.insert(r.degree);
    rep.add("class " + std::to_string(cls) + ": degrees form one S6 orbit", seen == orbit_degrees,
            std::to_string(seen.size()) + " distinct degrees, orbit of the representative has " +
                std::to_string(orbit_degrees.size()),
            {{"representative_degree", d0.to_string()}});
  }
  return rep;
}

SuiteReport verify_orbits() {
  SuiteReport rep("orbits");
  const auto& all = generate_all();
  std::array<std::size_t, 5> counts{};
  for (const auto& r : all) ++counts[r.cls - 1];
  for (int cls = 1; cls <= 5; ++cls)
    rep.add("class " + std::to_string(cls) + " orbit size", counts[cls - 1] == kClassSizes[cls - 1],
            std::to_string(counts[cls - 1]) + " (expected " + std::to_string(kClassSizes[cls - 1]) + ")");
  rep.add("225 relations", all.size() == 225, std::to_string(all.size()));

  std::set<std::string> texts;
  std::size_t bad_coeff = 0, bad_word = 0;
  const auto& reps = representatives();
  for (const auto& r : all) {
    texts.insert(r.poly.to_text());
    for (const auto& t : r.poly.terms())
      if (t.coeff != 1 && t.coeff != -1) ++bad_coeff;
    Polynomial img = reps[r.cls - 1];
    for (int g : r.word) img = act_on_poly_S(Permutation::adjacent(g), img);
    if (img != r.sign * r.poly) ++bad_word;
  }
  rep.add("orbits are pairwise disjoint", texts.size() == all.size(), std::to_string(texts.size()) + " distinct");
  rep.add("coefficients are +1 or -1", bad_coeff == 0, std::to_string(bad_coeff) + " other coefficients");
  rep.add("generating words reproduce each relation", bad_word == 0, std::to_string(bad_word) + " mismatches");

  std::size_t escapes = 0;
  for (const auto& r : all)
    for (int g = 1; g <= 5; ++g)
      if (!texts.count(canonical_form(act_on_poly_S(Permutation::adjacent(g), r.poly)).to_text())) ++escapes;
  rep.add("closed under the five transpositions up to sign", escapes == 0, std::to_string(escapes) + " escapes");
  rep.merge(verify_general_formulas(), "general-formulas");
  return rep;
}

SuiteReport verify_substitution(const SuiteOptions& options) {
  SuiteReport rep("substitution");
  const auto& all = generate_all();
  std::vector<Polynomial> polys;
  for (const auto& r : all) polys.push_back(r.poly);
  if (options.mutation) {
    Polynomial bad = mutated_representative(*options.mutation);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].cls != options.mutation->cls) continue;
      Polynomial img = bad;
      for (int g : all[i].word) img = act_on_poly_S(Permutation::adjacent(g), img);
      polys[i] = all[i].sign * img;
    }
  }
  CertificationResult res = certify(polys, options.threads);
  std::array<std::size_t, 5> within{};
  std::size_t peak = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Certificate& c = res.certificates[i];
    peak = std::max(peak, c.max_terms);
    std::string detail = c.zero() ? "zero residue, max terms " + std::to_string(c.max_terms)
                                  : "nonzero residue " + c.residue.to_text() + " for " + polys[i].to_text();
    nlohmann::json w = {{"relation", polys[i].to_text()}, {"max_terms", c.max_terms}};
    if (!c.zero()) w["residue"] = c.residue.to_text();
    rep.add(record_name(all[i], within[all[i].cls - 1]++), c.zero(), detail, w);
  }
  rep.add("largest intermediate expansion", true, std::to_string(peak) + " terms");

  // Negative controls: every single-sign mutation of every representative must be caught.
  const auto& reps = representatives();
  for (int cls = 1; cls <= 5; ++cls)
    for (std::size_t t = 0; t < reps[cls - 1].size(); ++t) {
      Polynomial residue = section_substitution(flip_term_sign(reps[cls - 1], t));
      rep.add("negative control class " + std::to_string(cls) + " term " + std::to_string(t) + " flipped",
              !residue.is_zero(), "residue " + residue.to_text());
    }
  return rep;
}

SuiteReport verify_matrices() {
  SuiteReport rep("matrices");
  IntMatrix A = build_A(), R = build_R();
  rep.add("A from the divisor formulas equals the transcribed A", A == transcribed_A());
  rep.add("A R^T = 0", (A * R.transpose()).is_zero(), "16 x 24");
  std::size_t ra = rank(A), rr = rank(R);
  rep.add("rank A = 16", ra == 16, std::to_string(ra));
  rep.add("rank R = 24", rr == 24, std::to_string(rr));
  std::vector<std::size_t> ecols, ycols;
  for (const auto& e : torus_pairs()) ecols.push_back(x_var(e[0], e[1]).slot());
  for (int p = 0; p < kNumKV; ++p) ycols.push_back(kNumPairs + kNumTriples + p);
  auto zrows = index_range(0, kNumTorusZ), urows = index_range(kNumTorusZ, kNumTorusVariables);
  rep.add("R: identity on z rows and E columns", R.submatrix(zrows, ecols).is_identity());
  rep.add("R: zero on u rows and E columns", R.submatrix(urows, ecols).is_zero());
  rep.add("R: identity on u rows and y columns", R.submatrix(urows, ycols).is_identity());
  rep.add("R: zero on z rows and y columns", R.submatrix(zrows, ycols).is_zero());
  auto ker = kernel_basis(A);
  bool spans = ker.size() == 24;
  for (const auto& v : ker) spans = spans && row_space_coefficients(R, v).has_value();
  rep.add("rows of R span ker A", spans, std::to_string(ker.size()) + " kernel vectors");
  KapranovChange k = kapranov_change_of_basis();
  Rational det = determinant(k.matrix);
  rep.add("Kapranov change of basis has determinant 1/2048", det == Rational(mpz_class(1), mpz_class(2048)),
          det.to_fraction_string());
  return rep;
}

SuiteReport verify_parametrization() {
  SuiteReport rep("parametrization");
  for (const auto& g : i6_generators()) {
    Polynomial img = to_parameters(g);
    rep.add("I6 generator " + g.to_text() + " vanishes", img.is_zero(), img.to_text());
  }
  Polynomial f = to_parameters(f_pi(0));
  Polynomial expected = parse_polynomial("B + C - A - B*C", Universe::Parameter);
  rep.add("f_(12)(34)(56) maps to B + C - A - B*C", f == expected, f.to_text());
  return rep;
}

SuiteReport verify_random_points(const SuiteOptions& options) {
  SuiteReport rep("random-points");
  rep.seeds = options.seeds;
  const auto& all = generate_all();
  for (auto seed : options.seeds) {
    auto pts = seeded_parameter_points(seed, options.points_per_seed);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const auto& abc = pts[k];
      TorusPoint tp = sample_point(abc[0], abc[1], abc[2]);
      std::size_t nonzero = 0;
      for (const auto& g : i6_generators())
        if (evaluate_slots(g, tp.slot_values()) != 0) ++nonzero;
      for (int p = 0; p < kNumKV; ++p)
        if (evaluate_slots(f_pi(p), tp.slot_values()) != tp.values[kNumTorusZ + p]) ++nonzero;
      auto pt = lifted_cox_point(abc[0], abc[1], abc[2]);
      std::size_t failing = 0;
      for (const auto& r : all)
        if (evaluate_slots(r.poly, pt) != 0) ++failing;
      std::string where = "seed " + std::to_string(seed) + " point " + std::to_string(k + 1);
      std::string coords = "(" + abc[0].to_string() + ", " + abc[1].to_string() + ", " + abc[2].to_string() + ")";
      nlohmann::json w = {{"A", abc[0].to_fraction_string()}, {"B", abc[1].to_fraction_string()},
                          {"C", abc[2].to_fraction_string()}};
      rep.add(where + ": point lies on M_0,6", nonzero == 0, coords, w);
      rep.add(where + ": all relations vanish", failing == 0,
              std::to_string(all.size() - failing) + " of " + std::to_string(all.size()) + " vanish at " + coords, w);
    }
  }
  return rep;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "grading") return verify_grading();
  if (name == "orbits") return verify_orbits();
  if (name == "substitution") return verify_substitution(options);
  if (name == "equivariance") return verify_equivariance();
  if (name == "phi-identities") {
    SuiteReport rep = verify_phi_identities();
    rep.merge(verify_cofactor_cases(), "cofactors");
    return rep;
  }
  if (name == "matrices") return verify_matrices();
  if (name == "group-action") return verify_group_action();
  if (name == "f-table") {
    SuiteReport rep = verify_f_table();
    rep.merge(verify_parametrization(), "parametrization");
    return rep;
  }
  if (name == "cones") return verify_cones();
  if (name == "random-points") return verify_random_points(options);
  if (name == "all") {
    SuiteReport rep("all");
    for (const auto& s : suite_names())
      if (s != "all") rep.merge(run_suite(s, options), s);
    rep.seeds = options.seeds;
    return rep;
  }
  throw Error("unknown suite '" + name + "'");
}

}  // namespace coxm06
