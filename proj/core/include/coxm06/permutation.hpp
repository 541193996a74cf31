#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace coxm06 {

/// Parity of the permutation that sorts seq: +1 even, -1 odd. Entries must be distinct.
int sort_parity(const int* seq, std::size_t n);

/// A bijection of {1,...,6}. Composition is right to left: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation();  // identity

  /// images[i-1] = sigma(i). Throws InvalidIndex unless a bijection of 1..6.
  static Permutation from_images(const std::array<int, 6>& images);
  static Permutation transposition(int a, int b);
  /// The generator (i, i+1), 1 <= i <= 5.
  static Permutation adjacent(int i);
  /// Cycle notation such as "(12)(34)", "(236)" meaning 2->3->6->2, or "()" / "id".
  static Permutation from_cycles(std::string_view text);
  /// All 720 elements in lexicographic order of image arrays.
  static const std::vector<Permutation>& all();

  int operator()(int i) const { return img_[i - 1]; }
  const std::array<int, 6>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  int parity() const;
  bool is_identity() const;
  /// Cycle notation with each cycle starting at its smallest element; "()" for the identity.
  std::string to_cycles() const;

  /// Generator indices w (each in 1..5) with sigma = s_{w.back()} * ... * s_{w.front()},
  /// i.e. w lists the generators in the order they are applied.
  std::vector<int> adjacent_word() const;
  static Permutation from_word(const std::vector<int>& word);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<int, 6> img_;
};

/// "(12)" style rendering of an application-order word, e.g. "(23)(45)"; "" for the empty word.
std::string word_to_string(const std::vector<int>& word);

}  // namespace coxm06
