#include "twistcert/garside.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace twistcert {

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands)
    throw InputError("strand count " + std::to_string(n) + " outside 2.." + std::to_string(kMaxStrands));
}

}  // namespace

// ---------------------------------------------------------------------------
// PermutationBraid

PermutationBraid PermutationBraid::identity(int n) {
  check_strands(n);
  PermutationBraid p;
  p.n_ = n;
  for (int x = 0; x < n; ++x) p.img_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
  return p;
}

PermutationBraid PermutationBraid::delta(int n) {
  PermutationBraid p = identity(n);
  for (int x = 0; x < n; ++x) p.img_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(n - 1 - x);
  return p;
}

PermutationBraid PermutationBraid::generator(int n, int i) {
  PermutationBraid p = identity(n);
  if (i < 1 || i >= n) throw InputError("braid generator index " + std::to_string(i) + " out of range");
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(i)]);
  return p;
}

PermutationBraid PermutationBraid::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  PermutationBraid p = identity(n);
  std::vector<bool> seen(images.size(), false);
  for (int x = 0; x < n; ++x) {
    const int y = images[static_cast<std::size_t>(x)] - 1;
    if (y < 0 || y >= n || seen[static_cast<std::size_t>(y)]) throw InputError("not a permutation");
    seen[static_cast<std::size_t>(y)] = true;
    p.img_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
  }
  return p;
}

bool PermutationBraid::is_identity() const {
  for (int x = 0; x < n_; ++x)
    if (image(x) != x) return false;
  return true;
}

bool PermutationBraid::is_delta() const {
  for (int x = 0; x < n_; ++x)
    if (image(x) != n_ - 1 - x) return false;
  return true;
}

int PermutationBraid::length() const {
  int inversions = 0;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (image(x) > image(y)) ++inversions;
  return inversions;
}

unsigned PermutationBraid::finishing_set() const {
  unsigned bits = 0;
  for (int j = 0; j + 1 < n_; ++j)
    if (image(j) > image(j + 1)) bits |= 1u << j;
  return bits;
}

unsigned PermutationBraid::starting_set() const { return inverse_permutation().finishing_set(); }

PermutationBraid PermutationBraid::compose(const PermutationBraid& rhs) const {
  PermutationBraid p = *this;
  for (int x = 0; x < n_; ++x) p.img_[static_cast<std::size_t>(x)] = img_[rhs.img_[static_cast<std::size_t>(x)]];
  return p;
}

PermutationBraid PermutationBraid::inverse_permutation() const {
  PermutationBraid p = *this;
  for (int x = 0; x < n_; ++x) p.img_[img_[static_cast<std::size_t>(x)]] = static_cast<std::uint8_t>(x);
  return p;
}

PermutationBraid PermutationBraid::flip() const {
  const PermutationBraid w0 = delta(n_);
  return w0.compose(*this).compose(w0);
}

PermutationBraid PermutationBraid::right_complement() const {
  return inverse_permutation().compose(delta(n_));
}

std::vector<int> PermutationBraid::positive_word() const {
  std::vector<int> reversed;
  PermutationBraid p = *this;
  while (unsigned f = p.finishing_set()) {
    const int j = std::countr_zero(f) + 1;
    reversed.push_back(j);
    p = p.compose(generator(n_, j));
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::string PermutationBraid::one_line() const {
  std::string out;
  for (int x = 0; x < n_; ++x) out += static_cast<char>('1' + image(x));
  return out;
}

// ---------------------------------------------------------------------------
// BraidElement

BraidElement::BraidElement(int n) : n_(n) { check_strands(n); }

BraidElement BraidElement::generator(int n, int i, int sign) {
  BraidElement b(n);
  const PermutationBraid s = PermutationBraid::generator(n, i);
  if (sign > 0) {
    b.factors_.push_back(s);
  } else {
    // sigma_i^-1 = delta^-1 (delta sigma_i^-1)
    b.inf_ = -1;
    b.factors_.push_back(PermutationBraid::delta(n).compose(s));
  }
  b.normalize();
  return b;
}

BraidElement BraidElement::delta_power(int n, long long k) {
  BraidElement b(n);
  b.inf_ = k;
  return b;
}

BraidElement BraidElement::simple(const PermutationBraid& p) {
  BraidElement b(p.strands());
  b.factors_.push_back(p);
  b.normalize();
  return b;
}

void BraidElement::multiply_delta_power(long long k) {
  // A delta^k = delta^k tau^k(A)
  inf_ += k;
  if (k % 2 != 0)
    for (auto& f : factors_) f = f.flip();
}

void BraidElement::append_factor(const PermutationBraid& p) { factors_.push_back(p); }

namespace {

// Moves generators from the front of `b` to the back of `a` until every
// starting generator of `b` already finishes `a`.
bool left_weight(PermutationBraid& a, PermutationBraid& b) {
  bool changed = false;
  while (unsigned movable = b.starting_set() & ~a.finishing_set()) {
    const int j = std::countr_zero(movable) + 1;
    const PermutationBraid s = PermutationBraid::generator(a.strands(), j);
    a = a.compose(s);
    b = s.compose(b);
    changed = true;
  }
  return changed;
}

}  // namespace

void BraidElement::normalize() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = factors_.size(); i-- > 1;)
      changed |= left_weight(factors_[i - 1], factors_[i]);
  }
  // In a left-weighted sequence identities can only trail and deltas only lead.
  while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
  std::size_t leading = 0;
  while (leading < factors_.size() && factors_[leading].is_delta()) ++leading;
  inf_ += static_cast<long long>(leading);
  factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(leading));
}

BraidElement& BraidElement::operator*=(const BraidElement& rhs) {
  if (rhs.n_ != n_) throw InputError("strand count mismatch");
  multiply_delta_power(rhs.inf_);
  for (const auto& f : rhs.factors_) append_factor(f);
  normalize();
  return *this;
}

BraidElement BraidElement::inverse() const {
  // (delta^p A_1 ... A_k)^-1 = A_k^-1 ... A_1^-1 delta^-p, A^-1 = complement(A) delta^-1
  BraidElement out(n_);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    out.append_factor(it->right_complement());
    out.normalize();
    out.multiply_delta_power(-1);
  }
  out.multiply_delta_power(-inf_);
  return out;
}

std::string BraidElement::str() const {
  std::string out = "Δ^" + std::to_string(inf_) + " · [";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ", ";
    out += factors_[i].one_line();
  }
  return out + "]";
}

Word BraidElement::to_word() const {
  std::vector<Letter> raw;
  const auto delta_word = PermutationBraid::delta(n_).positive_word();
  const long long reps = inf_ < 0 ? -inf_ : inf_;
  const int sign = inf_ < 0 ? -1 : 1;
  for (long long r = 0; r < reps; ++r) {
    if (sign > 0)
      for (int j : delta_word) raw.push_back({"s" + std::to_string(j), 1});
    else
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
        raw.push_back({"s" + std::to_string(*it), -1});
  }
  for (const auto& f : factors_)
    for (int j : f.positive_word()) raw.push_back({"s" + std::to_string(j), 1});
  return Word(raw);
}

std::vector<std::string> braid_generator_names(int n) {
  check_strands(n);
  std::vector<std::string> names;
  for (int i = 1; i < n; ++i) names.push_back("s" + std::to_string(i));
  names.push_back("D");
  return names;
}

BraidElement braid_from_word(const Word& w, int n) {
  BraidElement out(n);
  for (const auto& l : w.letters()) {
    if (l.gen == "D") {
      out *= BraidElement::delta_power(n, l.exp);
      continue;
    }
    int index = 0;
    const char* first = l.gen.data() + 1;
    const char* last = l.gen.data() + l.gen.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (l.gen.size() < 2 || l.gen[0] != 's' || ec != std::errc() || ptr != last || index < 1 || index >= n)
      throw InputError("not a generator of B" + std::to_string(n) + ": " + l.gen);
    const BraidElement g = BraidElement::generator(n, index, l.exp > 0 ? 1 : -1);
    const long long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long long r = 0; r < reps; ++r) out *= g;
  }
  return out;
}

BraidElement braid_from_word(const Word& w, int n, const Binding& binding) {
  return braid_from_word(substitute(w, binding), n);
}

BraidElement braid_multiply(const BraidElement& u, const BraidElement& v) { return u * v; }

BraidElement braid_invert(const BraidElement& u) { return u.inverse(); }

bool braid_equals(const BraidElement& u, const BraidElement& v) {
  if (u.strands() != v.strands()) throw InputError("strand count mismatch");
  return u == v;
}

}  // namespace twistcert
