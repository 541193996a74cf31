#pragma once

// Named verification suites aggregating the module checks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"

namespace coxm06 {

inline constexpr std::uint64_t kDefaultSeed = 6;

/// grading, orbits, substitution, equivariance, phi-identities, matrices, group-action,
/// f-table, cones, random-points, all.
const std::vector<std::string>& suite_names();

/// Negative-control mutation "class<N>:flip-sign[:<term>]" (term defaults to 1).
struct Mutation {
  int cls = 1;
  std::size_t term = 1;
};
/// Throws ParseError on malformed text.
Mutation parse_mutation(const std::string& text);
/// The class representative with the mutation applied.
Polynomial mutated_representative(const Mutation& m);

struct SuiteOptions {
  std::vector<std::uint64_t> seeds = {kDefaultSeed};
  std::size_t points_per_seed = 10;
  std::optional<Mutation> mutation;
  unsigned threads = 0;  // 0: default_thread_count()
};

/// Throws Error for an unknown suite name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

SuiteReport verify_grading();
SuiteReport verify_orbits();
SuiteReport verify_substitution(const SuiteOptions& options = {});
SuiteReport verify_matrices();
SuiteReport verify_parametrization();
SuiteReport verify_random_points(const SuiteOptions& options = {});

}  // namespace coxm06
