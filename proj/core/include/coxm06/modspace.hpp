#pragma once

// M_{0,6} inside the 9-torus, the open set Y, and the (A, B, C) parametrization
// by the points {inf, 1, 0, A, B, C} of P^1.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"

namespace coxm06 {

/// z_34 - z_24 + 1, z_35 - z_25 + 1, z_36 - z_26 + 1, z_45 - z_25 + z_24, z_46 - z_26 + z_24, z_56 - z_26 + z_25.
std::vector<Polynomial> i6_generators();

/// The binomial cutting out the Keel-Vermeire divisor Q_pi in M_{0,6}.
const Polynomial& f_pi(int pi_index);
const Polynomial& f_pi(const Matching& pi);

/// z_ij -> (1-A, 1-B, 1-C, -A, -B, -C, A-B, A-C, B-C) in E order.
const std::array<Polynomial, kNumTorusZ>& plucker_images();
Assignment plucker_parametrization();

/// Substitutes u_pi -> f_pi and z_ij -> its parametrization. A negative exponent is allowed
/// only on z_34, z_35, z_36 (images -A, -B, -C); anything else throws NonInvertibleSubstitution.
Polynomial to_parameters(const Polynomial& q);

/// A torus Laurent polynomial modulo I6 as numerator / denominator, both polynomials in
/// z_24, z_25, z_26. The denominator is the product of the reduced images of the
/// variables carrying negative exponents.
struct ReducedForm {
  Polynomial numerator;
  Polynomial denominator;
  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

/// Replaces u_pi by f_pi and z_34, ..., z_56 by their linear expressions in z_24, z_25, z_26.
ReducedForm reduce_mod_I6(const Polynomial& q);

/// A Laurent term m in z with num = m * den on M_{0,6}, or nullopt if the ratio is not a
/// single term there. Both arguments are torus Laurent polynomials without u.
/// The answer is unique because the nine parametrized z_ij are pairwise non-associate.
std::optional<Term> term_ratio_mod_I6(const Polynomial& num, const Polynomial& den);

struct FTableRow {
  int pi = 0;               // index into kv_matchings()
  std::vector<int> word;    // application order, from (12)(34)(56)
  Polynomial image;         // word . f_(12)(34)(56)
  Term term;                // image = term * f_pi (exactly or modulo I6)
  bool exact = false;       // identity holds in the free Laurent ring
  bool matches = false;     // identity holds at all
};

/// Regenerates the 15 binomials from z_24 - z_25 z_26 along breadth-first words.
std::vector<FTableRow> regenerate_f_table();
SuiteReport verify_f_table();

/// Values of the 24 torus coordinates (z in E order, then u in matching order).
struct TorusPoint {
  std::array<Rational, kNumTorusVariables> values;
  std::vector<std::optional<Rational>> slot_values() const;
  const Rational& z(int i, int j) const;
  const Rational& u(const Matching& pi) const;
};

/// Lifts (a, b, c) to Y. Throws PointNotInY naming the first vanishing coordinate.
TorusPoint sample_point(const Rational& a, const Rational& b, const Rational& c);

/// Deterministic parameter points in Y: numerators in [-20, 20], denominators in [1, 9],
/// drawn from std::mt19937_64 seeded with seed.
std::vector<std::array<Rational, 3>> seeded_parameter_points(std::uint64_t seed, std::size_t count);

}  // namespace coxm06
