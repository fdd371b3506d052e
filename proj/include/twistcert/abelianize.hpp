#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "twistcert/words.hpp"

namespace twistcert {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k);
  void negate_row(std::size_t i);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(const IntegerMatrix& a);

/// D = U * A * V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;

  std::vector<mpz_class> diagonal() const;
};

SmithForm smith_normal_form(const IntegerMatrix& a);

/// Z^free_rank + Z/d_1 + ... + Z/d_k with d_1 | ... | d_k and every d_i >= 2.
struct AbelianGroup {
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  bool trivial() const { return torsion.empty() && free_rank == 0; }
  /// e.g. "Z2 + Z2", "Z^2", "Z6 + Z", "0"
  std::string str() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// A finite presentation. `conjugates` maps a symbol outside the generating
/// set to the symbol it is declared conjugate to.
struct Presentation {
  Alphabet gens;
  std::vector<Word> relators;
  std::map<std::string, std::string, std::less<>> conjugates;
};

/// Line format: `gens: a b z`, `rel: <word>`, `conj: x y`; `#` starts a
/// comment. Errors carry the line number.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

/// Relator exponent-sum matrix: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const Presentation& p);
AbelianGroup abelianization(const Presentation& p);

/// The abelianization map G -> H_1(G) in canonical coordinates: one
/// coordinate per torsion factor (reduced into [0, d)) followed by one per
/// free factor.
class H1Map {
 public:
  explicit H1Map(const Presentation& p);

  const AbelianGroup& group() const { return group_; }
  const SmithForm& smith() const { return smith_; }

  /// Exponent sums over the generators; declared conjugates count as the
  /// symbol they are conjugate to.
  std::vector<mpz_class> exponent_sums(const Word& w) const;
  std::vector<mpz_class> canonical(const std::vector<mpz_class>& sums) const;
  std::vector<mpz_class> image(const Word& w) const { return canonical(exponent_sums(w)); }

 private:
  std::string resolve(const std::string& symbol) const;

  Presentation presentation_;
  SmithForm smith_;
  AbelianGroup group_;
};

std::vector<mpz_class> h1_image(const Presentation& p, const Word& w);

enum class Verdict { kObstructed, kInconclusive };
std::string to_string(Verdict v);

/// Outcome of the H_1 test for membership in [G, G]. A nonzero image proves
/// non-membership; a zero image proves nothing.
struct ObstructionCertificate {
  Verdict verdict = Verdict::kInconclusive;
  std::string element;
  AbelianGroup group;
  std::vector<mpz_class> exponent_sums;
  std::vector<mpz_class> image;
  std::string citation;
};

ObstructionCertificate commutator_obstruction(const Presentation& p, const Word& w);

/// A recorded H_1 class of a twist, for surfaces whose full presentation is
/// not shipped. The image vector is in the generator coordinates of that
/// surface's H_1 presentation.
struct ObstructionEntry {
  std::string surface;
  std::string class_label;
  std::vector<mpz_class> image;
  std::string citation;
};

/// One entry per line: `surface; class-label; image-vector; citation`.
std::vector<ObstructionEntry> parse_obstructions(std::string_view text);
ObstructionCertificate commutator_obstruction(const Presentation& p, const ObstructionEntry& entry);

std::string vector_str(const std::vector<mpz_class>& v);

}  // namespace twistcert
