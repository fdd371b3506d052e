#include <doctest.h>

#include "twistcert/sweeps.hpp"

using namespace twistcert;

TEST_SUITE("sweeps") {
  TEST_CASE("pairs are a function of (seed, index)") {
    for (std::uint64_t i = 0; i < 50; ++i) {
      CHECK(b3_pair(4, i, 30) == b3_pair(4, i, 30));
      const auto [u, v] = b3_pair(4, i, 30);
      CHECK(u.length() <= 30);
      CHECK(v.length() <= 30);
    }
  }

  TEST_CASE("Burau sweep: serial and parallel agree, no disagreements") {
    const auto s = burau_oracle_sweep(2000, 30, 1, Execution::kSerial);
    const auto p = burau_oracle_sweep(2000, 30, 1, Execution::kParallel);
    CHECK(s == p);
    CHECK(s.disagreements == 0);
    // every even-index pair is equal by construction
    CHECK(s.equal_pairs >= 1000);
    CHECK(s.equal_pairs < 2000);
  }

  TEST_CASE("SNF sweep: serial and parallel agree, no failures") {
    const auto s = snf_certificate_sweep(300, 6, 9, 2, Execution::kSerial);
    const auto p = snf_certificate_sweep(300, 6, 9, 2, Execution::kParallel);
    CHECK(s == p);
    CHECK(s.failures == 0);
    CHECK(s.matrices == 300);
  }
}
