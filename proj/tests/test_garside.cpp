#include <doctest.h>

#include <random>

#include "twistcert/garside.hpp"
#include "twistcert/sweeps.hpp"

using namespace twistcert;

namespace {

BraidElement b(const char* s, int n) { return braid_from_word(parse_word(s), n); }

std::vector<std::string> s_gens(int n) {
  std::vector<std::string> out;
  for (int i = 1; i < n; ++i) out.push_back("s" + std::to_string(i));
  return out;
}

bool subset(unsigned a, unsigned b) { return (a & ~b) == 0; }

// Structural invariant of the left normal form.
void check_normal_form(const BraidElement& x) {
  for (const auto& f : x.factors()) {
    CHECK(!f.is_identity());
    CHECK(!f.is_delta());
  }
  for (std::size_t i = 0; i + 1 < x.factors().size(); ++i)
    CHECK(subset(x.factors()[i + 1].starting_set(), x.factors()[i].finishing_set()));
}

}  // namespace

TEST_SUITE("garside") {
  TEST_CASE("reference examples") {
    CHECK(b("e", 3).is_identity());
    CHECK(b("e", 3).inf() == 0);
    const auto inv = b("s1^-1", 3);
    CHECK(inv.inf() == -1);
    CHECK(inv.factors().size() == 1);
    CHECK(braid_multiply(inv, b("s1", 3)).is_identity());
    CHECK(braid_equals(b("(s1 s2)^6", 3), b("(s2 s1^2 s2 s1^2)^2", 3)));
    CHECK(!braid_equals(b("(s1 s2)^6", 3), b("(s2 s1^2 s2 s1^2)^3", 3)));
  }

  TEST_CASE("permutation braids") {
    const auto d = PermutationBraid::delta(4);
    CHECK(d.length() == 6);
    CHECK(d.starting_set() == 0b111);
    CHECK(d.finishing_set() == 0b111);
    CHECK(d.one_line() == "4321");
    CHECK(PermutationBraid::identity(4).length() == 0);
    const auto s1 = PermutationBraid::generator(3, 1);
    CHECK(s1.starting_set() == 0b01);
    CHECK(s1.compose(s1.right_complement()) == PermutationBraid::delta(3));
    CHECK(s1.flip() == PermutationBraid::generator(3, 2));
    CHECK_THROWS_AS(PermutationBraid::from_one_line({1, 1, 2}), InputError);
    CHECK_THROWS_AS(PermutationBraid::generator(3, 3), InputError);
    const auto p = PermutationBraid::from_one_line({2, 3, 1});
    CHECK(BraidElement::simple(p) == b("s1 s2", 3));
  }

  TEST_CASE("relations") {
    CHECK(b("s1 s2 s1", 3) == b("s2 s1 s2", 3));
    CHECK(b("s1 s2 s1", 3) == b("D", 3));
    CHECK(b("s1 s2", 3) != b("s2 s1", 3));
    CHECK(b("s1 s3", 4) == b("s3 s1", 4));
    CHECK(b("s2 s3 s2", 4) == b("s3 s2 s3", 4));
    CHECK(b("s1 s1^-1", 3).is_identity());
    CHECK(b("(s1 s2)^6", 3) == BraidElement::delta_power(3, 4));
    CHECK(b("(s1 s2)^3", 3) == BraidElement::delta_power(3, 2));
    CHECK(b("(s1 s2 s3)^4", 4) == BraidElement::delta_power(4, 2));
    CHECK(b("(s1 s2 s3)^2", 4) != BraidElement::delta_power(4, 1));
    CHECK(b("s1^-1", 3).inf() == -1);
  }

  TEST_CASE("delta squared is central, delta conjugates s_i to s_{n-i}") {
    for (int n = 2; n <= 5; ++n) {
      const auto d = BraidElement::delta_power(n, 1);
      const auto d2 = BraidElement::delta_power(n, 2);
      for (int i = 1; i < n; ++i) {
        const auto s = BraidElement::generator(n, i);
        CHECK(d2 * s == s * d2);
        CHECK(d * s == BraidElement::generator(n, n - i) * d);
      }
    }
  }

  TEST_CASE("group axioms on random braids") {
    std::mt19937_64 rng(3);
    for (int n : {3, 4}) {
      const auto gens = s_gens(n);
      for (int i = 0; i < 1000; ++i) {
        const auto x = braid_from_word(random_word(rng, gens, 14), n);
        const auto y = braid_from_word(random_word(rng, gens, 14), n);
        const auto z = braid_from_word(random_word(rng, gens, 14), n);
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * x.inverse()).is_identity());
        CHECK((x.inverse() * x).is_identity());
        CHECK(braid_invert(braid_multiply(x, y)) == y.inverse() * x.inverse());
        check_normal_form(x * y);
        CHECK(braid_from_word(x.to_word(), n) == x);
      }
    }
  }

  TEST_CASE("normal form is independent of the word") {
    // Same element, different words: the representation must agree.
    std::mt19937_64 rng(5);
    for (std::uint64_t i = 0; i < 400; i += 2) {
      const auto [u, v] = b3_pair(17, i, 24);
      const auto x = braid_from_word(u, 3), y = braid_from_word(v, 3);
      CHECK(x == y);
      CHECK(x.str() == y.str());
    }
  }

  TEST_CASE("serialization") {
    CHECK(BraidElement::identity(3).str() == "Δ^0 · []");
    CHECK(b("s1 s2", 3).str() == "Δ^0 · [231]");
    CHECK(b("D^2 s1", 3).str() == "Δ^2 · [213]");
    CHECK(braid_generator_names(4) == std::vector<std::string>{"s1", "s2", "s3", "D"});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(braid_equals(BraidElement::identity(3), BraidElement::identity(4)), InputError);
    CHECK_THROWS_AS(b("s3", 3), InputError);
    CHECK_THROWS_AS(b("x", 3), InputError);
    CHECK_THROWS_AS(BraidElement(1 + kMaxStrands), InputError);
  }
}
