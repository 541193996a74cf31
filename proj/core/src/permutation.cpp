#include "coxm06/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "coxm06/errors.hpp"

namespace coxm06 {

int sort_parity(const int* seq, std::size_t n) {
  int s = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seq[i] == seq[j]) throw InvalidIndex("repeated index " + std::to_string(seq[i]));
      if (seq[i] > seq[j]) s = -s;
    }
  return s;
}

Permutation::Permutation() { std::iota(img_.begin(), img_.end(), 1); }

Permutation Permutation::from_images(const std::array<int, 6>& images) {
  std::array<bool, 7> seen{};
  for (int v : images) {
    if (v < 1 || v > 6 || seen[v]) throw InvalidIndex("not a permutation of 1..6");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = images;
  return p;
}

Permutation Permutation::transposition(int a, int b) {
  if (a < 1 || a > 6 || b < 1 || b > 6 || a == b) throw InvalidIndex("bad transposition");
  Permutation p;
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Permutation Permutation::adjacent(int i) {
  if (i < 1 || i > 5) throw InvalidIndex("adjacent transposition index must be 1..5");
  return transposition(i, i + 1);
}

Permutation Permutation::from_cycles(std::string_view text) {
  Permutation p;
  if (text == "id" || text.empty()) return p;
  std::vector<int> cycle;
  bool open = false;
  std::array<bool, 7> used{};
  auto close = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) p.img_[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    cycle.clear();
  };
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '(') {
      if (open) throw ParseError("nested '(' in cycle notation");
      open = true;
    } else if (c == ')') {
      if (!open) throw ParseError("unbalanced ')' in cycle notation");
      close();
      open = false;
    } else if (c >= '1' && c <= '6' && open) {
      int v = c - '0';
      if (used[v]) throw InvalidIndex("index " + std::to_string(v) + " repeated in cycle notation");
      used[v] = true;
      cycle.push_back(v);
    } else {
      throw ParseError("bad character in cycle notation: '" + std::string(text) + "'");
    }
  }
  if (open) throw ParseError("unterminated cycle");
  return p;
}

const std::vector<Permutation>& Permutation::all() {
  static const std::vector<Permutation> elems = [] {
    std::vector<Permutation> v;
    std::array<int, 6> a{1, 2, 3, 4, 5, 6};
    do v.push_back(from_images(a));
    while (std::next_permutation(a.begin(), a.end()));
    return v;
  }();
  return elems;
}

Permutation Permutation::operator*(const Permutation& o) const {
  Permutation r;
  for (int i = 0; i < 6; ++i) r.img_[i] = img_[o.img_[i] - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  for (int i = 0; i < 6; ++i) r.img_[img_[i] - 1] = i + 1;
  return r;
}

int Permutation::parity() const { return sort_parity(img_.data(), 6); }

bool Permutation::is_identity() const { return *this == Permutation(); }

std::string Permutation::to_cycles() const {
  std::string s;
  std::array<bool, 7> seen{};
  for (int start = 1; start <= 6; ++start) {
    if (seen[start] || img_[start - 1] == start) continue;
    s += '(';
    for (int v = start; !seen[v]; v = img_[v - 1]) {
      seen[v] = true;
      s += static_cast<char>('0' + v);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble-sort the image array; each swap of positions (k, k+1) is a right
  // multiplication by s_k, so sigma * s_{k1} * ... * s_{km} = id.
  std::array<int, 6> a = img_;
  std::vector<int> swaps;
  for (int pass = 0; pass < 6; ++pass)
    for (int k = 0; k < 5; ++k)
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        swaps.push_back(k + 1);
      }
  // Hence sigma = s_{km} * ... * s_{k1}, which applies s_{k1} first.
  return swaps;
}

Permutation Permutation::from_word(const std::vector<int>& word) {
  Permutation p;
  for (int g : word) p = adjacent(g) * p;
  return p;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string s;
  for (int g : word) s += "(" + std::to_string(g) + std::to_string(g + 1) + ")";
  return s;
}

}  // namespace coxm06
