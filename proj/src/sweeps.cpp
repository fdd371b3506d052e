#include "twistcert/sweeps.hpp"

#include <algorithm>

#include <omp.h>

#include "twistcert/burau.hpp"
#include "twistcert/garside.hpp"

namespace twistcert {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<Letter> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) raw.push_back({gens[pick(rng)], rng() % 2 == 0 ? 1 : -1});
  return Word(raw);
}

namespace {

// Unit letters: +-1 for s1^{+-1}, +-2 for s2^{+-1}.
std::vector<int> to_units(const Word& w) {
  std::vector<int> out;
  for (const auto& l : w.letters()) {
    const int g = l.gen == "s1" ? 1 : 2;
    const long long reps = l.exp < 0 ? -l.exp : l.exp;
    for (long long i = 0; i < reps; ++i) out.push_back(l.exp < 0 ? -g : g);
  }
  return out;
}

Word from_units(const std::vector<int>& units) {
  std::vector<Letter> raw;
  for (int u : units) raw.push_back({u == 1 || u == -1 ? "s1" : "s2", u < 0 ? -1 : 1});
  return Word(raw);
}

}  // namespace

Word rewrite_b3(const Word& w, std::mt19937_64& rng, int max_len) {
  std::vector<int> u = to_units(w);
  const int moves = 1 + static_cast<int>(rng() % 6);
  for (int m = 0; m < moves; ++m) {
    const auto size = static_cast<int>(u.size());
    const auto pos = static_cast<std::size_t>(rng() % (u.size() + 1));
    const int a = rng() % 2 == 0 ? 1 : 2;
    const int b = 3 - a;
    const int s = rng() % 2 == 0 ? 1 : -1;
    switch (rng() % 3) {
      case 0:  // insert x x^-1
        if (size + 2 <= max_len) u.insert(u.begin() + static_cast<std::ptrdiff_t>(pos), {s * a, -s * a});
        break;
      case 1:  // insert a relator a b a b^-1 a^-1 b^-1 (or its inverse)
        if (size + 6 <= max_len)
          u.insert(u.begin() + static_cast<std::ptrdiff_t>(pos), {s * a, s * b, s * a, -s * b, -s * a, -s * b});
        break;
      default:  // a b a -> b a b
        for (std::size_t i = 0; i + 2 < u.size(); ++i) {
          const int x = u[i], y = u[i + 1];
          if (x != u[i + 2] || x == y || x == -y || (x > 0) != (y > 0)) continue;
          u[i] = y;
          u[i + 1] = x;
          u[i + 2] = y;
          break;
        }
        break;
    }
  }
  return from_units(u);
}

std::pair<Word, Word> b3_pair(std::uint64_t seed, std::uint64_t index, int max_len) {
  auto rng = sample_rng(seed, index);
  static const std::vector<std::string> gens{"s1", "s2"};
  Word u = random_word(rng, gens, max_len);
  if (index % 2 == 0) return {u, rewrite_b3(u, rng, max_len)};
  return {std::move(u), random_word(rng, gens, max_len)};
}

OracleSweep burau_oracle_sweep(std::size_t pairs, int max_len, std::uint64_t seed, Execution exec) {
  std::size_t equal = 0, disagree = 0;
  const auto count = static_cast<std::ptrdiff_t>(pairs);
  auto sample = [&](std::ptrdiff_t i, std::size_t& eq, std::size_t& bad) {
    const auto [u, v] = b3_pair(seed, static_cast<std::uint64_t>(i), max_len);
    const bool by_garside = braid_equals(braid_from_word(u, 3), braid_from_word(v, 3));
    const bool by_burau = burau3(u) == burau3(v);
    if (by_garside) ++eq;
    if (by_garside != by_burau) ++bad;
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : equal, disagree)
    for (std::ptrdiff_t i = 0; i < count; ++i) sample(i, equal, disagree);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) sample(i, equal, disagree);
  }
  return {pairs, equal, disagree};
}

bool check_smith_certificate(const IntegerMatrix& a, const SmithForm& s) {
  const std::size_t m = a.rows(), n = a.cols();
  if (s.u.rows() != m || s.u.cols() != m || s.v.rows() != n || s.v.cols() != n) return false;
  if (s.d.rows() != m || s.d.cols() != n) return false;
  if (!(s.u * a * s.v == s.d)) return false;
  if (abs(determinant(s.u)) != 1 || abs(determinant(s.v)) != 1) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && s.d.at(i, j) != 0) return false;
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size()) {
      // d_i | d_{i+1}; zero divides only zero
      if (diag[i] == 0) {
        if (diag[i + 1] != 0) return false;
      } else if (!mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t())) {
        return false;
      }
    }
  }
  return true;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_entry) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long> entry(-max_entry, max_entry);
  const std::size_t rows = dim(rng), cols = dim(rng);
  IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
  return a;
}

SnfSweep snf_certificate_sweep(std::size_t count, std::size_t max_dim, long max_entry, std::uint64_t seed,
                               Execution exec) {
  std::size_t failures = 0;
  const auto total = static_cast<std::ptrdiff_t>(count);
  auto sample = [&](std::ptrdiff_t i) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    const IntegerMatrix a = random_matrix(rng, max_dim, max_entry);
    return check_smith_certificate(a, smith_normal_form(a)) ? 0u : 1u;
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures)
    for (std::ptrdiff_t i = 0; i < total; ++i) failures += sample(i);
  } else {
    for (std::ptrdiff_t i = 0; i < total; ++i) failures += sample(i);
  }
  return {count, failures};
}

}  // namespace twistcert
