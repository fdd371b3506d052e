#include <doctest.h>

#include <random>

#include "twistcert/sweeps.hpp"
#include "twistcert/words.hpp"

using namespace twistcert;

namespace {
Word w(const char* s) { return parse_word(s); }
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("reference examples") {
    CHECK(invert(w("a^2 b")) == w("b^-1 a^-2"));
    CHECK(invert(Word{}).empty());
    CHECK(Word{{"a", 1}, {"a", 1}, {"b", 1}} == w("a^2 b"));
    for (long long n : {-3, 1, 4})
      CHECK(commutator(Word::generator("y", n), w("f")) ==
            Word::generator("y", n) * w("f") * Word::generator("y", -n) * w("f^-1"));
  }

  TEST_CASE("free reduction") {
    CHECK(Word{{"a", 1}, {"a", -1}}.empty());
    CHECK(Word{{"a", 2}, {"b", 1}, {"b", -1}, {"a", -2}, {"c", 1}} == Word::generator("c"));
    CHECK(Word{{"a", 1}, {"a", 1}, {"a", 1}} == Word::generator("a", 3));
    CHECK(Word{{"a", 0}}.empty());
    CHECK(Word{}.str() == "e");
    CHECK(w("tb ta^2 tb ta^2").str() == "tb ta^2 tb ta^2");
    CHECK(w("a b b^-1 a").str() == "a^2");
    CHECK(w("a b b^-1 a").length() == 2);
  }

  TEST_CASE("checked reduction rejects foreign generators") {
    const Alphabet ab({"a", "b"});
    const std::vector<Letter> raw{{"a", 1}, {"c", 1}};
    CHECK_THROWS_AS(reduce(raw, ab), InputError);
    const std::vector<Letter> fine{{"a", 1}, {"b", -1}};
    CHECK(reduce(fine, ab) == w("a b^-1"));
  }

  TEST_CASE("alphabet") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), InputError);
    CHECK_THROWS_AS(Alphabet({""}), InputError);
    const Alphabet ab({"x", "y"});
    CHECK(ab.contains("y"));
    CHECK(!ab.contains("z"));
    CHECK(ab.index_of("y") == 1);
  }

  TEST_CASE("inverse and powers on random words") {
    std::mt19937_64 rng(11);
    const std::vector<std::string> gens{"a", "b", "c"};
    for (int i = 0; i < 500; ++i) {
      const Word u = random_word(rng, gens, 12);
      const Word v = random_word(rng, gens, 12);
      CHECK((u * u.inverse()).empty());
      CHECK(u.inverse().inverse() == u);
      CHECK((u * v).inverse() == v.inverse() * u.inverse());
      CHECK(invert(u) == u.inverse());
      CHECK(u.pow(3) == u * u * u);
      CHECK(u.pow(-2) == u.inverse() * u.inverse());
      CHECK(u.pow(0).empty());
      CHECK(parse_word(u.str()) == u);
    }
  }

  TEST_CASE("commutator conventions") {
    const Word x = w("a"), y = w("b");
    CHECK(commutator(x, y) == w("a b a^-1 b^-1"));
    CHECK(commutator(x, y, CommutatorConvention::kXinvYinvXY) == w("a^-1 b^-1 a b"));
    CHECK(commutator(x, x).empty());
    CHECK(commutator(x, Word{}).empty());
    CHECK(commutator(x, y).inverse() == commutator(y, x));
  }

  TEST_CASE("substitution") {
    Binding b{{"ta", w("s1")}, {"tc", w("(s1 s2)^6")}};
    CHECK(substitute(w("ta^2 tc^-1"), b) == w("s1^2 (s1 s2)^-6"));
    CHECK_THROWS_AS(substitute(w("tz"), b), InputError);
    CHECK(generators_of(w("b a b^2 c a")) == std::vector<std::string>{"b", "a", "c"});
  }

  TEST_CASE("word patterns") {
    const auto p = WordPattern::parse("ta^-1 r (tb ta^2 tb ta^2)^-n r ta (tb ta^2 tb ta^2)^n");
    CHECK(p.parametric());
    CHECK(p.instantiate(0) == w("ta^-1 r r ta"));
    CHECK(p.instantiate(1) == w("ta^-1 r (tb ta^2 tb ta^2)^-1 r ta tb ta^2 tb ta^2"));
    CHECK_THROWS_AS(p.word(), InputError);
    CHECK(WordPattern::parse("(a b c)^2n").instantiate(-1) == w("(a b c)^-2"));
    CHECK(WordPattern::parse("a^n").instantiate(5) == w("a^5"));
    CHECK(WordPattern::parse("a^-n").instantiate(2) == w("a^-2"));
    CHECK(WordPattern::parse("e").word().empty());
    CHECK(WordPattern::parse("((a b)^2 c)^-1").word() == w("c^-1 b^-1 a^-1 b^-1 a^-1"));
    const auto gens = WordPattern::parse("(x y)^n z").generators();
    CHECK(gens.size() == 3);
  }

  TEST_CASE("malformed words") {
    CHECK_THROWS_AS(parse_word("a^n"), InputError);
    CHECK_THROWS_AS(parse_word("a^0"), InputError);
    CHECK_THROWS_AS(parse_word("(a b"), InputError);
    CHECK_THROWS_AS(parse_word("a b)"), InputError);
    CHECK_THROWS_AS(parse_word("a^"), InputError);
    CHECK_THROWS_AS(parse_word("a^x"), InputError);
  }
}
