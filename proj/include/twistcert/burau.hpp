#pragma once

#include <array>
#include <map>
#include <string>

#include <gmpxx.h>

#include "twistcert/words.hpp"

namespace twistcert {

/// Integer Laurent polynomial in t, stored sparsely as exponent -> coefficient
/// with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constant
  /// c * t^k
  static LaurentPoly monomial(const mpz_class& c, long k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, mpz_class>& terms() const { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string str() const;

 private:
  void add_term(long k, const mpz_class& c);
  std::map<long, mpz_class> terms_;
};

class LaurentMatrix {
 public:
  static LaurentMatrix identity();

  LaurentPoly& at(int i, int j) { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const LaurentPoly& at(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) { return a.m_ == b.m_; }
  std::string str() const;

 private:
  std::array<std::array<LaurentPoly, 2>, 2> m_;
};

/// Reduced Burau representation of B3:
///   s1 -> [[-t, 1], [0, 1]],   s2 -> [[1, 0], [t, -t]].
/// Faithful on B3, so it decides equality independently of the normal form.
LaurentMatrix burau3(const Word& w);
LaurentMatrix burau3(const Word& w, const Binding& binding);

}  // namespace twistcert
