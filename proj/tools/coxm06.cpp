// coxm06: emit the Cox ring artifacts of M_0,6 and run certification suites.
// Exit codes: 0 success, 1 mathematical failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "coxm06/errors.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/relations.hpp"
#include "coxm06/serialize.hpp"
#include "coxm06/suites.hpp"

using namespace coxm06;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError("--" + name + ": '" + text + "' is not a rational number");
  }
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symbolic engine for the Cox ring of M_0,6"};
  app.set_version_flag("--version", std::string(COXM06_VERSION));
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };

  auto* gen = app.add_subcommand("generate-relations", "Emit the 225 relations with classes, degrees and words");
  add_format(gen);

  std::string which = "both";
  auto* mats = app.add_subcommand("emit-matrices", "Emit the degree matrix A and the torus matrix R");
  mats->add_option("--which", which, "Matrix to emit")->check(CLI::IsMember({"A", "R", "both"}))->capture_default_str();
  add_format(mats);

  auto* ftab = app.add_subcommand("emit-f-table", "Emit the 15 binomials f_pi with regenerating words");
  add_format(ftab);

  std::string suite;
  std::vector<std::uint64_t> seeds;
  std::size_t points = 10;
  std::string mutate;
  unsigned threads = 0;
  auto* ver = app.add_subcommand("verify", "Run a certification suite");
  ver->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--seed", seeds, "Random-point seed (repeatable)");
  ver->add_option("--points", points, "Random points per seed")->capture_default_str()->check(CLI::PositiveNumber);
  ver->add_option("--mutate", mutate, "Negative control, e.g. class1:flip-sign or class2:flip-sign:3");
  ver->add_option("--threads", threads, "Worker threads (default: COXM06_THREADS or all cores)");
  add_format(ver);

  std::string a_text, b_text, c_text;
  auto* pev = app.add_subcommand("param-eval", "Evaluate the torus coordinates at a parameter point");
  pev->add_option("--A", a_text, "Rational p/q")->required();
  pev->add_option("--B", b_text, "Rational p/q")->required();
  pev->add_option("--C", c_text, "Rational p/q")->required();
  add_format(pev);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  bool json = format == "json";
  try {
    if (gen->parsed()) {
      const auto& all = generate_all();
      if (json)
        print_json(relations_to_json(all));
      else
        std::cout << relations_to_text(all);
      return 0;
    }
    if (mats->parsed()) {
      std::vector<std::string> names = which == "both" ? std::vector<std::string>{"A", "R"} : std::vector{which};
      if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& n : names) list.push_back(matrix_to_json(n));
        print_json(list.size() == 1 ? list[0] : nlohmann::json{{"schema", kSchemaVersion}, {"kind", "matrices"}, {"matrices", list}});
      } else {
        for (std::size_t i = 0; i < names.size(); ++i)
          std::cout << (names.size() > 1 ? (i ? "\n" : "") + names[i] + "\n" : "") << matrix_to_text(names[i]);
      }
      return 0;
    }
    if (ftab->parsed()) {
      auto rows = regenerate_f_table();
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.matches;
      if (json)
        print_json(f_table_to_json(rows));
      else
        std::cout << f_table_to_text(rows);
      return ok ? 0 : kExitFailure;
    }
    if (ver->parsed()) {
      SuiteOptions opts;
      if (!seeds.empty()) opts.seeds = seeds;
      opts.points_per_seed = points;
      opts.threads = threads;
      if (!mutate.empty()) {
        try {
          opts.mutation = parse_mutation(mutate);
        } catch (const ParseError& e) {
          throw UsageError(std::string("--mutate: ") + e.what());
        }
      }
      auto t0 = std::chrono::steady_clock::now();
      SuiteReport rep = run_suite(suite, opts);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (json)
        print_json(rep.to_json());
      else
        std::cout << rep.to_text();
      std::fprintf(stderr, "suite %s finished in %.2f s\n", suite.c_str(), secs);
      return rep.passed() ? 0 : kExitFailure;
    }
    if (pev->parsed()) {
      Rational a = parse_rational_flag("A", a_text), b = parse_rational_flag("B", b_text),
               c = parse_rational_flag("C", c_text);
      TorusPoint p = sample_point(a, b, c);
      if (json)
        print_json(torus_point_to_json(a, b, c, p));
      else
        std::cout << torus_point_to_text(a, b, c, p);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
