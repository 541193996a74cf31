#pragma once

// The S6 action on the Cox ring (signed monomial maps) and on the torus ring
// Q[z^{+-1}, u^{+-1}] (Laurent substitutions).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxm06/permutation.hpp"
#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"
#include "coxm06/variables.hpp"

namespace coxm06 {

struct SignedVariable {
  VariableId var;
  int sign = 1;
  friend bool operator==(const SignedVariable&, const SignedVariable&) = default;
};

/// Naming convention for raw index data:
///   pair x_ij:      sort, sign -1 if swapped;
///   triple x_ijk:   sort with sign = parity of the sort, then pass to the sorted complement
///                   (no extra sign) if 1 is missing;
///   y_(ij)(kl)(mn): sort inside each pair (no sign), then order the pairs by leading
///                   element with sign = parity of that reordering.
/// Throws InvalidIndex on repeated or out-of-range indices.
SignedVariable canonicalize_pair(int i, int j);
SignedVariable canonicalize_triple(int i, int j, int k);
SignedVariable canonicalize_kv(const Matching& raw);

/// Image of a Cox generator. Pairs and Keel-Vermeire generators follow the naming
/// convention above. A triple x_T is treated as the element e_T * e_{T^c} of
/// Sym^2(wedge^3 Z^6): sign = parity(sigma(T)) * parity(sigma(T^c)), with T the sorted
/// triple containing 1 and T^c its sorted complement.
/// Throws Error for torus or parameter variables.
SignedVariable act_on_variable(const Permutation& sigma, VariableId v);

/// Precomputed signed monomial map of one permutation on the 40 Cox generators.
class CoxAction {
 public:
  explicit CoxAction(const Permutation& sigma);
  const Permutation& permutation() const { return sigma_; }
  const SignedVariable& image(std::uint8_t slot) const { return images_[slot]; }
  Polynomial apply(const Polynomial& p) const;

 private:
  Permutation sigma_;
  std::array<SignedVariable, kNumCoxVariables> images_;
  std::vector<std::optional<Term>> terms_;
};

Polynomial act_on_poly_S(const Permutation& sigma, const Polynomial& p);

/// sigma pi sigma^-1, normalized.
Matching conjugate(const Permutation& sigma, const Matching& pi);

// ------------------------------------------------------------------ torus

/// Images of z_24..z_56 under the generator (g, g+1), as single Laurent terms in z.
const std::array<Polynomial, kNumTorusZ>& table1_row(int g);

/// Entry of the (34) row at z_46 exactly as printed, z_36 / z_26. It is not the image
/// derived from the Pluecker formula (z_36 / z_24) and breaks (34)^2 = id.
Polynomial printed_table1_entry_34_z46();

/// Cocycle of the u-action: sigma . f_pi = term * f_{sigma pi sigma^-1} modulo I6.
struct Cocycle {
  int target = 0;     // index of sigma pi sigma^-1 in kv_matchings()
  Term term;          // Laurent term in z
  bool exact = true;  // true when the identity already holds in the free Laurent ring
};

/// Cocycle for generator (g, g+1) and matching index pi. Throws NonTermCocycle if no
/// single Laurent term works even modulo I6.
const Cocycle& u_cocycle(int g, int pi);

/// Action of the generator (g, g+1) on a Laurent polynomial over the torus ring.
Polynomial act_on_torus_generator(int g, const Polynomial& q);
/// Applies word[0] first.
Polynomial act_on_torus_word(const std::vector<int>& word, const Polynomial& q);
/// General sigma, through its word in adjacent transpositions.
Polynomial act_on_torus(const Permutation& sigma, const Polynomial& q);

/// Same as act_on_torus_generator but with a custom z-table (for negative controls).
Polynomial act_on_torus_generator_with(int g, const std::array<Polynomial, kNumTorusZ>& zrow,
                                       const Polynomial& q);

// ------------------------------------------------------------------ orbits

struct OrbitElement {
  Polynomial poly;        // canonical form
  std::vector<int> word;  // generators in application order, from the seed
  int sign = 1;           // word . seed = sign * poly
};

enum class OrbitAction { Cox, Torus };

/// Closure of {p} under the five adjacent transpositions, with F and -F identified.
/// Elements are sorted by canonical form; words come from breadth-first search.
std::vector<OrbitElement> orbit_with_words(const Polynomial& p, OrbitAction action = OrbitAction::Cox);
std::vector<Polynomial> orbit(const Polynomial& p, OrbitAction action = OrbitAction::Cox);

/// Checks the Coxeter presentation s_i^2 = 1, (s_i s_{i+1})^3 = 1, (s_i s_j)^2 = 1 (|i-j| > 1)
/// on all 24 torus variables, plus the group-action law on Cox generators.
SuiteReport verify_group_action();

}  // namespace coxm06
