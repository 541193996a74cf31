#pragma once

// Separation of Keel-Vermeire divisors from the boundary, the hyperplanes Delta_pi,
// the ideal J of boundary equations, and exact cone membership.

#include <set>
#include <string>
#include <vector>

#include "coxm06/picard.hpp"
#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"
#include "coxm06/variables.hpp"

namespace coxm06 {

/// With pi = (1j)(kl)(mn): sum e_i* + e*_1km + e*_1kn + e*_1lm + e*_1ln.
DualVector rho_functional(const Matching& pi);
DualVector rho_functional(int pi_index);

struct BoundaryDivisor {
  std::vector<int> subset;  // a pair, or a triple containing 1
  std::string label;        // "delta_12", "delta_135"
  DivisorClass cls;
};

/// The 25 boundary divisors in Cox column order.
const std::vector<BoundaryDivisor>& boundary_divisors();

/// The seven boundary divisors on which rho_pi takes the value 2.
std::vector<std::vector<int>> rho_positive_divisors(const Matching& pi);
/// The 18 generators of Delta_pi: pairs that are not blocks of pi, and triples containing a block.
std::vector<DivisorClass> delta_generators(const Matching& pi);
/// Values of rho_pi on Q_pi' for pi' != pi.
std::set<long> rho_values_on_other_kv(const Matching& pi);

SuiteReport verify_separation(const Matching& pi);

struct ExtremalityCertificate {
  DualVector rho;
  long min_boundary_pairing = 0;
  long kv_pairing = 0;
  bool valid() const { return min_boundary_pairing >= 0 && kv_pairing < 0; }
};

ExtremalityCertificate verify_kv_extremal(const Matching& pi);

/// The displayed four-term boundary equation.
const Polynomial& j_seed();
/// The 15 relations of the first class followed by the orbit of j_seed().
std::vector<Polynomial> j_generators();
SuiteReport verify_j();

struct ConeSpec {
  std::string label;
  std::vector<DivisorClass> generators;
};

inline constexpr std::size_t kMaxConeGenerators = 64;

/// pos(delta_I) over the 25 boundary divisors.
ConeSpec boundary_cone();

struct ConeAnswer {
  bool contains = false;
  RationalVector combination;  // nonnegative, sum c_i g_i = v
  DualVector functional;       // primitive; <w, g_i> >= 0 and <w, v> < 0
  std::size_t pivots = 0;
  /// Re-checks the answer exactly against v and the cone.
  bool certified(const DivisorClass& v, const ConeSpec& cone) const;
};

/// Throws CapExceeded above kMaxConeGenerators generators.
ConeAnswer cone_contains(const DivisorClass& v, const ConeSpec& cone);

/// Separation and extremality for all 15 pi, the ideal J, and cone membership spot checks.
SuiteReport verify_cones();

}  // namespace coxm06
