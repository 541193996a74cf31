// Acceptance run: prints PASS or FAIL for each of the ten criteria and exits nonzero
// if any criterion fails. Runtime limits are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "coxm06/gitcones.hpp"
#include "coxm06/linalg.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/picard.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/suites.hpp"
#include "coxm06/symmetry.hpp"

using namespace coxm06;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void require_report(const SuiteReport& rep) {
    for (const auto* c : rep.failures()) require(false, rep.suite() + ": " + c->name + " (" + c->detail + ")");
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome census() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  const auto& all = generate_all();
  std::array<std::size_t, 5> sizes{};
  std::size_t other = 0;
  for (const auto& r : all) {
    ++sizes[r.cls - 1];
    for (const auto& t : r.poly.terms()) other += t.coeff != 1 && t.coeff != -1;
  }
  double s = seconds_since(t0);
  o.require(all.size() == 225, std::to_string(all.size()) + " relations");
  o.require(sizes == kClassSizes, "class sizes differ from (15, 60, 45, 45, 60)");
  o.require(other == 0, std::to_string(other) + " coefficients other than +1, -1");
  o.require(s < 5, "took " + std::to_string(s) + " s");
  return o;
}

Outcome membership() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  CertificationResult res = certify_all();
  std::size_t bad = 0;
  for (const auto& c : res.certificates) bad += !c.zero();
  o.require(res.certificates.size() == 225 && bad == 0, std::to_string(bad) + " nonzero residues");
  for (int cls = 1; cls <= 5; ++cls) {
    const Polynomial& rep = representatives()[cls - 1];
    for (std::size_t t = 0; t < rep.size(); ++t)
      o.require(!section_substitution(flip_term_sign(rep, t)).is_zero(),
                "flipping term " + std::to_string(t) + " of class " + std::to_string(cls) + " went unnoticed");
  }
  double s = seconds_since(t0);
  o.require(s < 30, "took " + std::to_string(s) + " s");
  return o;
}

Outcome equivariance() {
  Outcome o;
  SuiteReport rep = verify_equivariance();
  o.require(rep.checks().size() == 120, std::to_string(rep.checks().size()) + " identities instead of 120");
  o.require_report(rep);
  return o;
}

Outcome parametrization() {
  Outcome o;
  o.require_report(verify_parametrization());
  SuiteOptions opts;
  opts.seeds = {kDefaultSeed};
  opts.points_per_seed = 10;
  SuiteReport pts = verify_random_points(opts);
  o.require(pts.checks().size() == 20, "expected 10 points");
  o.require_report(pts);
  return o;
}

Outcome section_five() {
  Outcome o;
  const auto& bds = boundary_divisors();
  for (const auto& pi : kv_matchings()) {
    std::string name = matching_to_cycles(pi);
    DualVector rho = rho_functional(pi);
    o.require(rho.pair(class_of_kv(pi)) == -2, name + ": <rho, Q_pi> != -2");
    auto positive = rho_positive_divisors(pi);
    std::set<std::vector<int>> pos(positive.begin(), positive.end());
    o.require(pos.size() == 7, name + ": " + std::to_string(pos.size()) + " listed divisors");
    for (const auto& bd : bds) {
      long v = rho.pair(bd.cls);
      long want = pos.count(bd.subset) ? 2 : 0;
      o.require(v == want, name + ": <rho, " + bd.label + "> = " + std::to_string(v));
    }
    for (long v : rho_values_on_other_kv(pi))
      o.require(v == 2 || v == 3, name + ": <rho, Q_pi'> takes the value " + std::to_string(v) + ", outside {2, 3}");
    std::vector<std::vector<long>> rows;
    for (const auto& d : delta_generators(pi)) rows.emplace_back(d.c.begin(), d.c.end());
    std::size_t r = rank(IntMatrix::from_rows(rows));
    o.require(r == 15, name + ": rank of Delta_pi is " + std::to_string(r));
    o.require(verify_kv_extremal(pi).valid(), name + ": rho does not certify Q_pi outside pos(delta_I)");
  }
  return o;
}

}  // namespace

int main() {
  auto total0 = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"relation census", census},
      {"membership certification", membership},
      {"grading",
       [] {
         Outcome o;
         o.require_report(verify_grading());
         return o;
       }},
      {"matrix identities",
       [] {
         Outcome o;
         o.require_report(verify_matrices());
         return o;
       }},
      {"equivariance", equivariance},
      {"table regeneration",
       [] {
         Outcome o;
         o.require_report(verify_f_table());
         o.require_report(verify_group_action());
         return o;
       }},
      {"proof-case factorizations",
       [] {
         Outcome o;
         o.require_report(verify_phi_identities());
         return o;
       }},
      {"parametrization", parametrization},
      {"separation arithmetic", section_five},
      {"J ideal",
       [] {
         Outcome o;
         o.require_report(verify_j());
         return o;
       }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = criteria[i].second();
    std::printf("%s %2zu. %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    std::size_t shown = 0;
    for (const auto& n : o.notes) {
      if (++shown > 8) {
        std::printf("       ... %zu more\n", o.notes.size() - 8);
        break;
      }
      std::printf("       %s\n", n.c_str());
    }
    failed += !o.ok;
  }

  auto t0 = std::chrono::steady_clock::now();
  SuiteReport all = run_suite("all");
  double s = seconds_since(t0);
  bool full_ok = all.passed() && s < 120;
  std::printf("%s     full suite: %zu checks, %zu failing, %.2f s (limit 120 s)\n", full_ok ? "PASS" : "FAIL",
              all.checks().size(), all.counts().fail, s);
  failed += !full_ok;
  std::printf("%d criteria failing, %.2f s total\n", failed, seconds_since(total0));
  return failed == 0 ? 0 : 1;
}
