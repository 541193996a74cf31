#pragma once

// The Picard lattice Z^16 in the symmetric basis e_1..e_6, e_123..e_156 and the
// grading of the Cox ring.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxm06/linalg.hpp"
#include "coxm06/permutation.hpp"
#include "coxm06/polynomial.hpp"
#include "coxm06/variables.hpp"

namespace coxm06 {

inline constexpr int kPicardRank = 16;

/// "e1".."e6", "e123".."e156".
const std::array<std::string, kPicardRank>& picard_basis_labels();

struct DivisorClass {
  std::array<long, kPicardRank> c{};

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(long k, DivisorClass a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  bool is_zero() const;
  /// Relabels basis vectors by sigma: e_i -> e_{sigma(i)}, e_{1ij} -> e_{sigma{1,i,j}} (complement if needed).
  DivisorClass permuted(const Permutation& sigma) const;
  /// Sparse rendering such as "e1 + e2 - e123".
  std::string to_string() const;
};

struct DualVector {
  std::array<long, kPicardRank> c{};
  long pair(const DivisorClass& d) const;
  friend bool operator==(const DualVector&, const DualVector&) = default;
  std::string to_string() const;  // "e1* + e135* ..."
};

/// delta_I for |I| in {2,3}. A 3-subset without 1 is replaced by its complement.
DivisorClass class_of_boundary(const std::vector<int>& I);
DivisorClass class_of_kv(const Matching& pi);
/// Degree of a Cox generator.
DivisorClass class_of_variable(VariableId v);

/// Column labels x_12, ..., x_156, y_12.34.56, ..., y_16.25.34.
std::vector<std::string> cox_column_labels();
/// Row labels z_24, ..., z_56, u_12.34.56, ..., u_16.25.34.
std::vector<std::string> torus_row_labels();

/// 16 x 40 degree matrix assembled from class_of_boundary / class_of_kv.
IntMatrix build_A();
/// The same matrix as printed (boundary block followed by the Keel-Vermeire block).
IntMatrix transcribed_A();
/// 24 x 40 matrix of vanishing orders of z_ij and u_pi along the Cox divisors.
IntMatrix build_R();

/// Throws Error on a negative exponent or a non-Cox monomial.
DivisorClass degree_of_monomial(const Monomial& m);
/// Common degree of all terms, nullopt when p is not homogeneous. The zero polynomial has degree 0.
std::optional<DivisorClass> homogeneous_degree(const Polynomial& p);
inline bool is_homogeneous(const Polynomial& p) { return homogeneous_degree(p).has_value(); }

struct KapranovChange {
  /// Row r expresses symmetric basis vector r in E_1..E_5, E_12, E_13, ..., E_45, H.
  RationalMatrix matrix;
  RationalMatrix inverse;
  std::vector<std::string> kapranov_labels;
};

KapranovChange kapranov_change_of_basis();

}  // namespace coxm06
