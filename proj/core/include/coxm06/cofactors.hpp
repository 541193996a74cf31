#pragma once

// Bounded-degree search for cofactors c_i with sum c_i * gen_i = target in the
// Pic-graded ring S. Cofactor supports are all monomials of the forced degree.

#include <cstddef>
#include <string>
#include <vector>

#include "coxm06/picard.hpp"
#include "coxm06/polynomial.hpp"
#include "coxm06/report.hpp"

namespace coxm06 {

inline constexpr std::size_t kDefaultMonomialCap = 20000;

/// Every monomial of S with the given degree, in decreasing grlex order.
/// Throws CapExceeded once more than cap monomials are found.
std::vector<Monomial> monomials_of_degree(const DivisorClass& d, std::size_t cap = kDefaultMonomialCap);

enum class CofactorStatus { Found, DegreeObstruction, NoSolution, CapExceeded };
const char* cofactor_status_name(CofactorStatus s);

struct CofactorResult {
  CofactorStatus status = CofactorStatus::NoSolution;
  std::vector<Polynomial> cofactors;  // one per generator, zero where unused
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::string message;
  bool found() const { return status == CofactorStatus::Found; }
};

/// Throws Error if target or a generator is not homogeneous.
CofactorResult find_cofactors(const Polynomial& target, const std::vector<Polynomial>& gens,
                              std::size_t cap = kDefaultMonomialCap);

struct CofactorProblem {
  std::string label;
  Polynomial target;
  std::vector<Polynomial> gens;
  std::vector<std::string> gen_labels;
};

/// x_12^2 h - F3 ((45) F3) against (35)F1, (46)F1, (36)F2, (45)F2, (34)(56)F2, F2.
CofactorProblem cofactor_problem_case4();
/// x_12 x_13 h - F3 ((23)(45) F3) against the ten translates of F1, F2, F3.
CofactorProblem cofactor_problem_case5();

SuiteReport verify_cofactor_cases();

}  // namespace coxm06
