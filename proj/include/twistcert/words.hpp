#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistcert {

/// Raised on malformed user input: bad syntax, unknown symbols, invalid
/// parameters. The CLI maps it to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Letter {
  std::string gen;
  long long exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// An ordered set of generator names. Names are nonempty and unique.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

/// A freely reduced word: adjacent letters carry distinct generators and
/// no exponent is zero. Every constructor establishes this form.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> raw);
  Word(std::initializer_list<Letter> raw);

  static Word generator(std::string name, long long exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  /// Sum of |exponent| over letters.
  long long length() const;

  Word inverse() const;
  Word pow(long long k) const;

  /// Text form in the word syntax: `tb ta^2 tb ta^2`, or `e` for the identity.
  std::string str() const;

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> raw);
/// Same as the unchecked overload, but every letter must name a generator
/// of `alphabet`; throws InputError otherwise.
Word reduce(std::span<const Letter> raw, const Alphabet& alphabet);
Word invert(const Word& w);

enum class CommutatorConvention {
  kXYXinvYinv,  // x y x^-1 y^-1
  kXinvYinvXY,  // x^-1 y^-1 x y
};

Word commutator(const Word& x, const Word& y,
                CommutatorConvention convention = CommutatorConvention::kXYXinvYinv);

/// Substitution of words for generators.
using Binding = std::map<std::string, Word, std::less<>>;

/// Replaces each letter g^k by binding[g]^k. Throws InputError when a letter
/// has no entry.
Word substitute(const Word& w, const Binding& binding);

/// Generators of `w` in first-occurrence order.
std::vector<std::string> generators_of(const Word& w);

/// Exponent that may depend linearly on a power parameter n: coef*n + offset.
struct Exponent {
  long long coef = 0;
  long long offset = 1;

  long long at(long long n) const { return coef * n + offset; }
  bool parametric() const { return coef != 0; }
  std::string str() const;
};

/// A parsed word expression. Extends the plain token syntax with
/// parenthesised groups and exponents in a power parameter n, e.g.
/// `ta^-1 r (tb ta^2 tb ta^2)^-n r ta (tb ta^2 tb ta^2)^n`.
class WordPattern {
 public:
  WordPattern();
  explicit WordPattern(const Word& w);

  static WordPattern parse(std::string_view text);

  bool parametric() const;
  /// Evaluates at a parameter value; requires only that exponents resolve.
  Word instantiate(long long n) const;
  /// The word for a parameter-free pattern; throws if parametric.
  Word word() const;
  /// Generators used anywhere in the pattern.
  std::vector<std::string> generators() const;
  std::string str() const;

  struct Node;

 private:
  explicit WordPattern(std::shared_ptr<const Node> root);
  std::shared_ptr<const Node> root_;
};

/// Parses a parameter-free word; `n` exponents are rejected.
Word parse_word(std::string_view text);

}  // namespace twistcert
