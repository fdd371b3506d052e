#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twistcert/words.hpp"

namespace twistcert {

/// Largest supported strand count. Only B3 and B4 are used by the built-in
/// models; the cap bounds the fixed-size permutation storage.
inline constexpr int kMaxStrands = 6;

/// A positive braid in which any two strands cross at most once, stored as
/// its permutation. The braid sigma_{i1} ... sigma_{ik} corresponds to the
/// composite s_{i1} o ... o s_{ik} of adjacent transpositions.
class PermutationBraid {
 public:
  static PermutationBraid identity(int n);
  /// The half twist; its permutation reverses the strand order.
  static PermutationBraid delta(int n);
  /// sigma_i, 1 <= i < n.
  static PermutationBraid generator(int n, int i);
  /// Builds from one-line notation with images 1..n. Throws InputError.
  static PermutationBraid from_one_line(const std::vector<int>& images);

  int strands() const { return n_; }
  int image(int x) const { return img_[static_cast<std::size_t>(x)]; }

  bool is_identity() const;
  bool is_delta() const;
  /// Number of crossings (inversions of the permutation).
  int length() const;
  /// Bit j-1 set iff sigma_j is a left factor.
  unsigned starting_set() const;
  /// Bit j-1 set iff sigma_j is a right factor.
  unsigned finishing_set() const;

  PermutationBraid compose(const PermutationBraid& rhs) const;
  PermutationBraid inverse_permutation() const;
  /// Conjugation by the half twist: sigma_i -> sigma_{n-i}.
  PermutationBraid flip() const;
  /// The simple braid C with this * C = delta.
  PermutationBraid right_complement() const;

  /// A positive reduced word, as generator indices 1..n-1.
  std::vector<int> positive_word() const;
  /// One-line notation, e.g. "2 3 1" -> "231".
  std::string one_line() const;

  friend bool operator==(const PermutationBraid& a, const PermutationBraid& b) {
    return a.n_ == b.n_ && a.img_ == b.img_;
  }

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// A braid in left normal form: delta^inf A_1 ... A_k with every A_i a
/// proper nontrivial simple braid and each pair (A_i, A_{i+1}) left-weighted.
/// The normal form is unique, so equality is structural.
class BraidElement {
 public:
  explicit BraidElement(int n);

  static BraidElement identity(int n) { return BraidElement(n); }
  static BraidElement generator(int n, int i, int sign = 1);
  static BraidElement delta_power(int n, long long k);
  static BraidElement simple(const PermutationBraid& p);

  int strands() const { return n_; }
  long long inf() const { return inf_; }
  long long sup() const { return inf_ + static_cast<long long>(factors_.size()); }
  const std::vector<PermutationBraid>& factors() const { return factors_; }
  bool is_identity() const { return inf_ == 0 && factors_.empty(); }

  BraidElement inverse() const;
  BraidElement& operator*=(const BraidElement& rhs);
  friend BraidElement operator*(BraidElement lhs, const BraidElement& rhs) { return lhs *= rhs; }

  /// Serialized as `Δ^k · [perm, perm, ...]`.
  std::string str() const;
  /// A word in s1..s{n-1} representing this braid.
  Word to_word() const;

  friend bool operator==(const BraidElement&, const BraidElement&) = default;

 private:
  void append_factor(const PermutationBraid& p);
  void multiply_delta_power(long long k);
  void normalize();

  int n_;
  long long inf_ = 0;
  std::vector<PermutationBraid> factors_;
};

/// Model generator names of B_n: s1..s{n-1} and D for the half twist.
std::vector<std::string> braid_generator_names(int n);

/// Evaluates a word over s1..s{n-1}, D.
BraidElement braid_from_word(const Word& w, int n);
/// Evaluates `w` after substituting each generator through `binding`.
BraidElement braid_from_word(const Word& w, int n, const Binding& binding);

BraidElement braid_multiply(const BraidElement& u, const BraidElement& v);
BraidElement braid_invert(const BraidElement& u);
/// Throws InputError on strand mismatch.
bool braid_equals(const BraidElement& u, const BraidElement& v);

}  // namespace twistcert
