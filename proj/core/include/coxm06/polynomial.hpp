#pragma once

// Sparse multivariate (Laurent) polynomials over Q.
//
// Terms are kept sorted in decreasing graded-lex order, where variables are
// compared by slot and slot 0 (x_12, z_24 or A) is the largest variable.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coxm06/rational.hpp"
#include "coxm06/variables.hpp"

namespace coxm06 {

/// Exponent vector stored sparsely as (slot, exponent) pairs sorted by slot.
class Monomial {
 public:
  using Entry = std::pair<std::uint8_t, int>;

  Monomial() = default;
  /// Accepts unsorted input with repeats; zero exponents are dropped.
  explicit Monomial(std::vector<Entry> entries);
  static Monomial var(std::uint8_t slot, int exponent = 1);

  const std::vector<Entry>& entries() const { return e_; }
  int exponent(std::uint8_t slot) const;
  int total_degree() const;
  bool is_one() const { return e_.empty(); }
  bool has_negative() const;
  /// Largest slot mentioned plus one (0 for the unit monomial).
  int span() const { return e_.empty() ? 0 : e_.back().first + 1; }

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(int k) const;
  /// The denominator part: negated exponents of the negative entries.
  Monomial negative_part() const;
  Monomial positive_part() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Strict weak order used for map keys (plain lexicographic on entries).
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

 private:
  std::vector<Entry> e_;
};

/// Graded lex: returns >0 if a > b, <0 if a < b, 0 if equal.
int grlex_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  explicit Polynomial(Universe u = Universe::Cox, bool laurent = false)
      : universe_(u), laurent_(laurent) {}

  static Polynomial constant(Universe u, const Rational& c);
  static Polynomial variable(VariableId v, int exponent = 1);
  static Polynomial monomial(Universe u, const Monomial& m, const Rational& c = 1);
  /// Combines like terms and drops zeros; the Laurent flag is set if any exponent is negative.
  static Polynomial from_terms(Universe u, std::vector<Term> terms, bool laurent = false);

  Universe universe() const { return universe_; }
  bool is_laurent() const { return laurent_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_term() const { return terms_.size() == 1; }
  Rational constant_term() const;
  /// Largest total degree of a term; 0 for the zero polynomial.
  int total_degree() const;
  /// Sorted list of slots that occur with nonzero exponent.
  std::vector<std::uint8_t> slots() const;
  bool mentions(std::uint8_t slot) const;

  Polynomial as_laurent() const;
  /// Drops the Laurent flag; throws if a negative exponent is present.
  Polynomial as_plain() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Negative powers are allowed only for a single term.
  Polynomial pow(int k) const;
  /// Inverse of a single nonzero term.
  Polynomial inverse_term() const;

  /// Equality of values: same universe and same terms (the Laurent flag is ignored).
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.universe_ == b.universe_ && a.terms_ == b.terms_;
  }
  /// Total order for sorting canonical forms: term by term in grlex, then by coefficient.
  friend int compare(const Polynomial& a, const Polynomial& b);

  std::string to_text() const;

 private:
  void check_compatible(const Polynomial& o, const char* op);
  void add_scaled(const Polynomial& o, int sign);

  Universe universe_;
  bool laurent_;
  std::vector<Term> terms_;  // strictly decreasing grlex
};

using Assignment = std::map<VariableId, Polynomial>;

/// Replaces variables by polynomials. Unassigned variables map to themselves,
/// which requires the target universe to be the universe of p.
Polynomial substitute(const Polynomial& p, const Assignment& assignment,
                      std::optional<Universe> target = std::nullopt);

/// Fast path for monomial maps: slot -> single term in the target universe.
/// Slots without an image are an error.
Polynomial apply_monomial_map(const Polynomial& p, const std::vector<std::optional<Term>>& images,
                              Universe target);

/// Fast path for general maps indexed by slot (images must be in the target universe).
Polynomial substitute_slots(const Polynomial& p, const std::vector<std::optional<Polynomial>>& images,
                            Universe target);

Rational evaluate(const Polynomial& p, const std::map<VariableId, Rational>& point);
/// Evaluation with values indexed by slot; missing slots are an error.
Rational evaluate_slots(const Polynomial& p, const std::vector<std::optional<Rational>>& values);

/// Makes the coefficient of the grlex-smallest monomial positive.
Polynomial canonical_form(const Polynomial& p);
/// Returns +1 if canonical_form(p) == p, -1 otherwise (0 for p = 0).
int canonical_sign(const Polynomial& p);

/// Exact quotient a / b in the polynomial ring, or nullopt if b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Reads the text form produced by to_text. Variables are resolved by name.
Polynomial parse_polynomial(std::string_view text, std::optional<Universe> universe = std::nullopt);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, Universe u);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace coxm06
