#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twistcert/abelianize.hpp"
#include "twistcert/identities.hpp"
#include "twistcert/words.hpp"

namespace twistcert {

/// Generator for sample `index` of a seeded sweep; independent of thread
/// count and schedule.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Random freely reduced word over `gens` with 0..max_len letters of
/// exponent +-1 before reduction.
Word random_word(std::mt19937_64& rng, const std::vector<std::string>& gens, int max_len);

/// Rewrites a B3 word by inserting cancelling pairs and relators and by
/// applying the braid relation, keeping at most max_len unit letters.
Word rewrite_b3(const Word& w, std::mt19937_64& rng, int max_len);

/// Sample `index` of the B3 oracle sweep: even indices give a word and a
/// rewrite of it, odd indices two independent words.
std::pair<Word, Word> b3_pair(std::uint64_t seed, std::uint64_t index, int max_len);

struct OracleSweep {
  std::size_t pairs = 0;
  std::size_t equal_pairs = 0;
  std::size_t disagreements = 0;

  friend bool operator==(const OracleSweep&, const OracleSweep&) = default;
};

/// Compares braid_equals against burau3 equality over seeded B3 pairs.
OracleSweep burau_oracle_sweep(std::size_t pairs, int max_len, std::uint64_t seed,
                               Execution exec = Execution::kParallel);

/// D = U A V exactly, U and V unimodular, D diagonal, nonnegative, with the
/// divisibility chain.
bool check_smith_certificate(const IntegerMatrix& a, const SmithForm& s);

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_entry);

struct SnfSweep {
  std::size_t matrices = 0;
  std::size_t failures = 0;

  friend bool operator==(const SnfSweep&, const SnfSweep&) = default;
};

SnfSweep snf_certificate_sweep(std::size_t count, std::size_t max_dim, long max_entry, std::uint64_t seed,
                               Execution exec = Execution::kParallel);

}  // namespace twistcert
