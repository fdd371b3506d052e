#include "twistcert/burau.hpp"

namespace twistcert {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(0, mpz_class(c));
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, long k) {
  LaurentPoly p;
  p.add_term(k, c);
  return p;
}

void LaurentPoly::add_term(long k, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string coef = c.get_str();
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    if (c < 0) coef = coef.substr(1);
    if (k == 0) {
      out += coef;
      continue;
    }
    if (coef != "1") out += coef + "*";
    out += "t";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

LaurentMatrix LaurentMatrix::identity() {
  LaurentMatrix m;
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return out;
}

std::string LaurentMatrix::str() const {
  return "[[" + at(0, 0).str() + ", " + at(0, 1).str() + "], [" + at(1, 0).str() + ", " + at(1, 1).str() + "]]";
}

namespace {

LaurentPoly t(long c, long k) { return LaurentPoly::monomial(mpz_class(c), k); }

LaurentMatrix burau_letter(const std::string& gen, bool inverse) {
  LaurentMatrix m;
  if (gen == "s1") {
    if (!inverse) {
      m.at(0, 0) = t(-1, 1);
      m.at(0, 1) = 1;
      m.at(1, 1) = 1;
    } else {
      m.at(0, 0) = t(-1, -1);
      m.at(0, 1) = t(1, -1);
      m.at(1, 1) = 1;
    }
  } else if (gen == "s2") {
    if (!inverse) {
      m.at(0, 0) = 1;
      m.at(1, 0) = t(1, 1);
      m.at(1, 1) = t(-1, 1);
    } else {
      m.at(0, 0) = 1;
      m.at(1, 0) = 1;
      m.at(1, 1) = t(-1, -1);
    }
  } else if (gen == "D") {
    const LaurentMatrix a = burau_letter("s1", inverse);
    m = a * burau_letter("s2", inverse) * a;
  } else {
    throw InputError("not a generator of B3: " + gen);
  }
  return m;
}

}  // namespace

LaurentMatrix burau3(const Word& w) {
  LaurentMatrix out = LaurentMatrix::identity();
  for (const auto& l : w.letters()) {
    const LaurentMatrix g = burau_letter(l.gen, l.exp < 0);
    const long long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long long r = 0; r < reps; ++r) out = out * g;
  }
  return out;
}

LaurentMatrix burau3(const Word& w, const Binding& binding) { return burau3(substitute(w, binding)); }

}  // namespace twistcert
