#pragma once

// Variable naming for the three polynomial rings the engine works in:
//   Cox ring     S = Q[x_I, y_pi]        (25 boundary + 15 Keel-Vermeire generators)
//   torus ring   Q[z_ij^{+-1}, u_pi^{+-1}] (9 + 15 coordinates of the open set Y)
//   parameters   Q[A, B, C]              (points {inf, 1, 0, A, B, C} on P^1)
//
// Every variable has a "slot" inside its ring. Slots follow the column order
// {12},...,{56},{123},...,{156},(12)(34)(56),...,(16)(25)(34) of the degree
// matrix, which is also the variable order of the monomial ordering.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace coxm06 {

enum class Universe : std::uint8_t { Cox, Torus, Parameter };

enum class VarKind : std::uint8_t { Pair, Triple, KV, TorusZ, TorusU, Parameter };

using IndexPair = std::array<int, 2>;
using IndexTriple = std::array<int, 3>;
/// A product of three disjoint transpositions (ij)(kl)(mn).
using Matching = std::array<IndexPair, 3>;

inline constexpr int kNumPairs = 15;
inline constexpr int kNumTriples = 10;
inline constexpr int kNumKV = 15;
inline constexpr int kNumTorusZ = 9;
inline constexpr int kNumCoxVariables = kNumPairs + kNumTriples + kNumKV;  // 40
inline constexpr int kNumTorusVariables = kNumTorusZ + kNumKV;             // 24

std::string_view universe_name(Universe u);
int universe_size(Universe u);

struct VariableId {
  VarKind kind = VarKind::Pair;
  std::uint8_t index = 0;  // position in the canonical list of its kind

  Universe universe() const;
  std::uint8_t slot() const;
  std::string name() const;

  static VariableId from_slot(Universe u, std::uint8_t slot);

  friend bool operator==(const VariableId&, const VariableId&) = default;
  friend auto operator<=>(const VariableId& a, const VariableId& b) {
    if (auto c = a.universe() <=> b.universe(); c != 0) return c;
    return a.slot() <=> b.slot();
  }
};

/// {1,2}, {1,3}, ..., {5,6}.
const std::array<IndexPair, kNumPairs>& boundary_pairs();
/// {1,2,3}, {1,2,4}, ..., {1,5,6}; every boundary triple contains 1.
const std::array<IndexTriple, kNumTriples>& boundary_triples();
/// (12)(34)(56), (12)(35)(46), ..., (16)(25)(34): each pair sorted, pairs sorted.
const std::array<Matching, kNumKV>& kv_matchings();
/// The index set E = {24,25,26,34,35,36,45,46,56} of free torus coordinates.
const std::array<IndexPair, kNumTorusZ>& torus_pairs();

// Lookups on canonical data; return -1 when the input is not canonical.
int pair_index(int i, int j);
int triple_index(const IndexTriple& sorted_with_one);
int matching_index(const Matching& canonical);
int torus_pair_index(int i, int j);

/// Sorts each pair and orders the pairs by leading element. No sign.
Matching normalize_matching(const Matching& m);
/// Throws InvalidIndex unless m is three disjoint pairs covering 1..6.
void validate_matching(const Matching& m);
/// Parses "(12)(34)(56)" or "12.34.56".
Matching parse_matching(std::string_view text);
std::string matching_to_cycles(const Matching& m);   // "(12)(34)(56)"
std::string matching_to_dotted(const Matching& m);   // "12.34.56"

// Canonical constructors (arguments must already be canonical).
VariableId x_var(int i, int j);
VariableId x_var(int i, int j, int k);
VariableId y_var(const Matching& m);
VariableId z_var(int i, int j);
VariableId u_var(const Matching& m);
VariableId param_var(char name);

/// Inverse of VariableId::name(): "x_12", "x_135", "y_12.34.56", "z_24", "u_12.34.56", "A".
std::optional<VariableId> parse_variable(std::string_view name);

}  // namespace coxm06
