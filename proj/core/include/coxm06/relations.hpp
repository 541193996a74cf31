#pragma once

// The monomial map phi from the torus ring to the Cox ring, the five relation
// classes, and membership certification through the section
//   x_ij -> z_ij(A,B,C) on E,  x_I -> 1 otherwise,  y_pi -> f_pi(A,B,C).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coxm06/picard.hpp"
#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"

namespace coxm06 {

/// Laurent monomial image of a torus variable: row of R (u rows carry their y).
const Term& phi_of_slot(std::uint8_t torus_slot);
/// Ring map on Laurent polynomials over the torus ring.
Polynomial phi(const Polynomial& q);

/// Cox polynomial (nonnegative exponents) to Q[A, B, C]. max_terms, when given,
/// receives the largest term count of an expanded product.
Polynomial section_substitution(const Polynomial& F, std::size_t* max_terms = nullptr);

/// Lifts a parameter point to Cox coordinates: x_ij = z_ij on E, other x = 1, y_pi = u_pi.
std::vector<std::optional<Rational>> lifted_cox_point(const Rational& a, const Rational& b, const Rational& c);

inline constexpr std::array<std::size_t, 5> kClassSizes = {15, 60, 45, 45, 60};

/// General formula of class cls (1..5) at the given indices, expanded through the
/// naming convention. Classes 1, 3, 4 take (i, j, k, l, m, n) = a permutation of 1..6;
/// classes 2 and 5 take (i, j, k, l, m) = a permutation of 2..6.
Polynomial relation_formula(int cls, const std::vector<int>& indices);

/// The five representatives at the index choices used in the membership proofs.
const std::array<Polynomial, 5>& representatives();

struct RelationRecord {
  int cls = 0;
  Polynomial poly;  // canonical form
  DivisorClass degree;
  std::vector<int> word;  // application order, from the class representative
  int sign = 1;           // word . representative = sign * poly
};

/// The 225 relations: class by class, each orbit in canonical order.
/// Throws Error if an orbit has the wrong size or two orbits meet.
const std::vector<RelationRecord>& generate_all();

struct Certificate {
  std::size_t index = 0;
  Polynomial residue;
  std::size_t max_terms = 0;
  bool zero() const { return residue.is_zero(); }
};

struct CertificationResult {
  std::vector<Certificate> certificates;  // same order as the input
  double seconds = 0;
  unsigned threads = 1;
  bool all_zero() const;
};

/// Worker count: COXM06_THREADS if set and positive, otherwise hardware concurrency.
unsigned default_thread_count();

CertificationResult certify(const std::vector<Polynomial>& polys, unsigned threads = 0);
CertificationResult certify_all(unsigned threads = 0);

/// Flips the sign of the term at position term of p.
Polynomial flip_term_sign(const Polynomial& p, std::size_t term);

SuiteReport verify_phi_identities();
SuiteReport verify_equivariance();
/// Instantiates the general formulas at every admissible index choice and compares with the orbits.
SuiteReport verify_general_formulas();

}  // namespace coxm06
