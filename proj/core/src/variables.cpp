#include "coxm06/variables.hpp"

#include <algorithm>
#include <cctype>

#include "coxm06/errors.hpp"

namespace coxm06 {

namespace {

constexpr std::array<IndexPair, kNumPairs> kPairs{{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                                   {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4},
                                                   {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}};

constexpr std::array<IndexTriple, kNumTriples> kTriples{{{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6},
                                                         {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                                         {1, 4, 6}, {1, 5, 6}}};

constexpr std::array<Matching, kNumKV> kMatchings{{
    {{{1, 2}, {3, 4}, {5, 6}}}, {{{1, 2}, {3, 5}, {4, 6}}}, {{{1, 2}, {3, 6}, {4, 5}}},
    {{{1, 3}, {2, 4}, {5, 6}}}, {{{1, 3}, {2, 5}, {4, 6}}}, {{{1, 3}, {2, 6}, {4, 5}}},
    {{{1, 4}, {2, 3}, {5, 6}}}, {{{1, 4}, {2, 5}, {3, 6}}}, {{{1, 4}, {2, 6}, {3, 5}}},
    {{{1, 5}, {2, 3}, {4, 6}}}, {{{1, 5}, {2, 4}, {3, 6}}}, {{{1, 5}, {2, 6}, {3, 4}}},
    {{{1, 6}, {2, 3}, {4, 5}}}, {{{1, 6}, {2, 4}, {3, 5}}}, {{{1, 6}, {2, 5}, {3, 4}}},
}};

constexpr std::array<IndexPair, kNumTorusZ> kTorusPairs{
    {{2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}};

std::string digits(std::initializer_list<int> xs) {
  std::string s;
  for (int x : xs) s.push_back(static_cast<char>('0' + x));
  return s;
}

bool parse_digits(std::string_view s, std::size_t n, int* out) {
  if (s.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] < '1' || s[i] > '6') return false;
    out[i] = s[i] - '0';
  }
  return true;
}

}  // namespace

std::string_view universe_name(Universe u) {
  switch (u) {
    case Universe::Cox: return "cox";
    case Universe::Torus: return "torus";
    case Universe::Parameter: return "parameter";
  }
  return "?";
}

int universe_size(Universe u) {
  switch (u) {
    case Universe::Cox: return kNumCoxVariables;
    case Universe::Torus: return kNumTorusVariables;
    case Universe::Parameter: return 3;
  }
  return 0;
}

const std::array<IndexPair, kNumPairs>& boundary_pairs() { return kPairs; }
const std::array<IndexTriple, kNumTriples>& boundary_triples() { return kTriples; }
const std::array<Matching, kNumKV>& kv_matchings() { return kMatchings; }
const std::array<IndexPair, kNumTorusZ>& torus_pairs() { return kTorusPairs; }

int pair_index(int i, int j) {
  for (int k = 0; k < kNumPairs; ++k)
    if (kPairs[k][0] == i && kPairs[k][1] == j) return k;
  return -1;
}

int triple_index(const IndexTriple& t) {
  for (int k = 0; k < kNumTriples; ++k)
    if (kTriples[k] == t) return k;
  return -1;
}

int matching_index(const Matching& m) {
  for (int k = 0; k < kNumKV; ++k)
    if (kMatchings[k] == m) return k;
  return -1;
}

int torus_pair_index(int i, int j) {
  for (int k = 0; k < kNumTorusZ; ++k)
    if (kTorusPairs[k][0] == i && kTorusPairs[k][1] == j) return k;
  return -1;
}

Universe VariableId::universe() const {
  switch (kind) {
    case VarKind::Pair:
    case VarKind::Triple:
    case VarKind::KV: return Universe::Cox;
    case VarKind::TorusZ:
    case VarKind::TorusU: return Universe::Torus;
    case VarKind::Parameter: return Universe::Parameter;
  }
  return Universe::Cox;
}

std::uint8_t VariableId::slot() const {
  switch (kind) {
    case VarKind::Pair: return index;
    case VarKind::Triple: return static_cast<std::uint8_t>(kNumPairs + index);
    case VarKind::KV: return static_cast<std::uint8_t>(kNumPairs + kNumTriples + index);
    case VarKind::TorusZ: return index;
    case VarKind::TorusU: return static_cast<std::uint8_t>(kNumTorusZ + index);
    case VarKind::Parameter: return index;
  }
  return 0;
}

VariableId VariableId::from_slot(Universe u, std::uint8_t slot) {
  switch (u) {
    case Universe::Cox:
      if (slot < kNumPairs) return {VarKind::Pair, slot};
      if (slot < kNumPairs + kNumTriples) return {VarKind::Triple, static_cast<std::uint8_t>(slot - kNumPairs)};
      if (slot < kNumCoxVariables)
        return {VarKind::KV, static_cast<std::uint8_t>(slot - kNumPairs - kNumTriples)};
      break;
    case Universe::Torus:
      if (slot < kNumTorusZ) return {VarKind::TorusZ, slot};
      if (slot < kNumTorusVariables) return {VarKind::TorusU, static_cast<std::uint8_t>(slot - kNumTorusZ)};
      break;
    case Universe::Parameter:
      if (slot < 3) return {VarKind::Parameter, slot};
      break;
  }
  throw InvalidIndex("slot " + std::to_string(slot) + " out of range for " +
                     std::string(universe_name(u)) + " universe");
}

std::string VariableId::name() const {
  switch (kind) {
    case VarKind::Pair: return "x_" + digits({kPairs[index][0], kPairs[index][1]});
    case VarKind::Triple:
      return "x_" + digits({kTriples[index][0], kTriples[index][1], kTriples[index][2]});
    case VarKind::KV: return "y_" + matching_to_dotted(kMatchings[index]);
    case VarKind::TorusZ: return "z_" + digits({kTorusPairs[index][0], kTorusPairs[index][1]});
    case VarKind::TorusU: return "u_" + matching_to_dotted(kMatchings[index]);
    case VarKind::Parameter: return std::string(1, static_cast<char>('A' + index));
  }
  return "?";
}

Matching normalize_matching(const Matching& m) {
  Matching out = m;
  for (auto& p : out)
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(out.begin(), out.end(), [](const IndexPair& a, const IndexPair& b) { return a[0] < b[0]; });
  return out;
}

void validate_matching(const Matching& m) {
  std::array<int, 7> seen{};
  for (const auto& p : m)
    for (int v : p) {
      if (v < 1 || v > 6) throw InvalidIndex("matching index out of range 1..6");
      if (seen[v]++) throw InvalidIndex("repeated index " + std::to_string(v) + " in matching");
    }
}

Matching parse_matching(std::string_view text) {
  std::array<int, 6> idx{};
  std::size_t n = 0;
  for (char c : text) {
    if (c == '(' || c == ')' || c == '.' || c == ' ') continue;
    if (c < '1' || c > '6' || n == 6) throw ParseError("bad matching '" + std::string(text) + "'");
    idx[n++] = c - '0';
  }
  if (n != 6) throw ParseError("bad matching '" + std::string(text) + "'");
  Matching m{{{idx[0], idx[1]}, {idx[2], idx[3]}, {idx[4], idx[5]}}};
  validate_matching(m);
  return m;
}

std::string matching_to_cycles(const Matching& m) {
  std::string s;
  for (const auto& p : m) s += "(" + digits({p[0], p[1]}) + ")";
  return s;
}

std::string matching_to_dotted(const Matching& m) {
  return digits({m[0][0], m[0][1]}) + "." + digits({m[1][0], m[1][1]}) + "." +
         digits({m[2][0], m[2][1]});
}

VariableId x_var(int i, int j) {
  int k = pair_index(i, j);
  if (k < 0) throw InvalidIndex("x_" + digits({i, j}) + " is not a canonical pair variable");
  return {VarKind::Pair, static_cast<std::uint8_t>(k)};
}

VariableId x_var(int i, int j, int l) {
  int k = triple_index({i, j, l});
  if (k < 0) throw InvalidIndex("x_" + digits({i, j, l}) + " is not a canonical triple variable");
  return {VarKind::Triple, static_cast<std::uint8_t>(k)};
}

VariableId y_var(const Matching& m) {
  int k = matching_index(m);
  if (k < 0) throw InvalidIndex("y_" + matching_to_dotted(m) + " is not canonical");
  return {VarKind::KV, static_cast<std::uint8_t>(k)};
}

VariableId z_var(int i, int j) {
  int k = torus_pair_index(i, j);
  if (k < 0) throw InvalidIndex("z_" + digits({i, j}) + " is not a torus coordinate");
  return {VarKind::TorusZ, static_cast<std::uint8_t>(k)};
}

VariableId u_var(const Matching& m) {
  int k = matching_index(m);
  if (k < 0) throw InvalidIndex("u_" + matching_to_dotted(m) + " is not canonical");
  return {VarKind::TorusU, static_cast<std::uint8_t>(k)};
}

VariableId param_var(char name) {
  if (name < 'A' || name > 'C') throw InvalidIndex(std::string("unknown parameter ") + name);
  return {VarKind::Parameter, static_cast<std::uint8_t>(name - 'A')};
}

std::optional<VariableId> parse_variable(std::string_view name) {
  if (name == "A" || name == "B" || name == "C") return param_var(name[0]);
  if (name.size() < 3 || name[1] != '_') return std::nullopt;
  const char head = name[0];
  std::string_view rest = name.substr(2);
  int d[6];
  try {
    if (head == 'x' && parse_digits(rest, 2, d)) {
      int k = pair_index(d[0], d[1]);
      if (k >= 0) return VariableId{VarKind::Pair, static_cast<std::uint8_t>(k)};
    } else if (head == 'x' && parse_digits(rest, 3, d)) {
      int k = triple_index({d[0], d[1], d[2]});
      if (k >= 0) return VariableId{VarKind::Triple, static_cast<std::uint8_t>(k)};
    } else if (head == 'z' && parse_digits(rest, 2, d)) {
      int k = torus_pair_index(d[0], d[1]);
      if (k >= 0) return VariableId{VarKind::TorusZ, static_cast<std::uint8_t>(k)};
    } else if (head == 'y' || head == 'u') {
      int k = matching_index(parse_matching(rest));
      if (k >= 0)
        return VariableId{head == 'y' ? VarKind::KV : VarKind::TorusU, static_cast<std::uint8_t>(k)};
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace coxm06
