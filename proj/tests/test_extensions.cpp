#include <doctest.h>

#include <random>

#include "twistcert/extensions.hpp"
#include "twistcert/sweeps.hpp"

using namespace twistcert;

namespace {

Word w(const char* s) { return parse_word(s); }

const ExtendedModel& ext(const char* id) { return dynamic_cast<const ExtendedModel&>(find_model(id)); }

}  // namespace

TEST_SUITE("extensions") {
  TEST_CASE("reference examples") {
    const Binding b3{{"ta", w("s1")}, {"tb", w("s2")}, {"r", w("r")}};
    CHECK(ext_equals(w("r (tb ta^2 tb ta^2)^-1 r"), w("ta^2 tb ta^2 tb"), ext("B3xZ2"), b3));
    const Binding b4{{"ta", w("s1")}, {"tb", w("s2")}, {"tc", w("s3")}, {"r", w("r")}};
    CHECK(ext_equals(w("r (ta tb tc)^-2 r"), w("(ta tb tc)^2"), ext("B4xZ2"), b4));
    CHECK(ext_equals(w("r r"), Word{}, ext("B3xZ2"), b3));
    CHECK(dihedral_equals(w("y^3 f y^-3 f^-1"), w("y^6")));
    CHECK(dihedral_coordinates(w("y^3 f y^-3 f^-1")) == DihedralElement{6, 0});
    CHECK(!dihedral_equals(w("y f"), w("f y")));
    CHECK(dihedral_coordinates(w("y f")) == DihedralElement{1, 1});
  }

  TEST_CASE("automorphism validation") {
    CHECK_NOTHROW(InvolutiveAutomorphism(3, {{"s1", w("s1^-1")}, {"s2", w("s2^-1")}}));
    CHECK_NOTHROW(InvolutiveAutomorphism(3, {{"s1", w("s2")}, {"s2", w("s1")}}));
    CHECK_NOTHROW(InvolutiveAutomorphism(4, {{"s1", w("s3^-1")}, {"s2", w("s2^-1")}, {"s3", w("s1^-1")}}));
    // not a homomorphism: the braid relator does not map to the identity
    CHECK_THROWS_AS(InvolutiveAutomorphism(3, {{"s1", w("s2")}, {"s2", w("s1^2")}}), ModelError);
    // conjugation by s1 is an automorphism of infinite order
    CHECK_THROWS_AS(InvolutiveAutomorphism(3, {{"s1", w("s1")}, {"s2", w("s1 s2 s1^-1")}}), ModelError);
    // missing generator, foreign letter
    CHECK_THROWS_AS(InvolutiveAutomorphism(3, {{"s1", w("s1^-1")}}), ModelError);
    CHECK_THROWS_AS(InvolutiveAutomorphism(3, {{"s1", w("s1")}, {"s2", w("s3")}}), InputError);
    // B4: the far commutation relator must survive too
    CHECK_THROWS_AS(InvolutiveAutomorphism(4, {{"s1", w("s2")}, {"s2", w("s1")}, {"s3", w("s3")}}), ModelError);
  }

  TEST_CASE("braid relators") {
    CHECK(braid_relators(3).size() == 1);
    CHECK(braid_relators(4).size() == 3);
    for (const auto& r : braid_relators(4)) CHECK(std::get<BraidElement>(find_model("B4").evaluate(r)).is_identity());
  }

  TEST_CASE("action of r") {
    const auto& b3x = ext("B3xZ2");
    CHECK(b3x.equals(w("r s1 r"), w("s1^-1")));
    CHECK(b3x.equals(w("r s2 r^-1"), w("s2^-1")));
    CHECK(b3x.equals(w("r^2"), Word{}));
    CHECK(b3x.equals(w("r D r"), w("D^-1")));
    CHECK(!b3x.equals(w("r"), Word{}));
    CHECK(!b3x.equals(w("r s1"), w("s1 r")));
    const auto& b4x = ext("B4xZ2");
    CHECK(b4x.equals(w("r s1 r"), w("s3^-1")));
    CHECK(b4x.equals(w("r s2 r"), w("s2^-1")));
    CHECK(b4x.equals(w("r (s1 s2 s3)^-2 r"), w("(s1 s2 s3)^2")));
    CHECK(b4x.automorphism().apply(w("s1 s2")) == w("s3^-1 s2^-1"));
  }

  TEST_CASE("associativity of the extended product") {
    std::mt19937_64 rng(8);
    for (const char* id : {"B3xZ2", "B4xZ2"}) {
      const auto& model = ext(id);
      const auto& gens = model.alphabet().names();
      for (int i = 0; i < 300; ++i) {
        const auto a = std::get<ExtendedElement>(model.evaluate(random_word(rng, gens, 10)));
        const auto b = std::get<ExtendedElement>(model.evaluate(random_word(rng, gens, 10)));
        const auto c = std::get<ExtendedElement>(model.evaluate(random_word(rng, gens, 10)));
        CHECK(model.multiply(model.multiply(a, b), c) == model.multiply(a, model.multiply(b, c)));
      }
      // evaluation is a homomorphism from words
      for (int i = 0; i < 300; ++i) {
        const Word u = random_word(rng, gens, 10), v = random_word(rng, gens, 10);
        const auto eu = std::get<ExtendedElement>(model.evaluate(u));
        const auto ev = std::get<ExtendedElement>(model.evaluate(v));
        CHECK(std::get<ExtendedElement>(model.evaluate(u * v)) == model.multiply(eu, ev));
        CHECK(model.equals(u * u.inverse(), Word{}));
      }
    }
  }

  TEST_CASE("dihedral model") {
    CHECK(dihedral_equals(w("f y f^-1"), w("y^-1")));
    CHECK(dihedral_coordinates(w("y^3 f^2 y")) == DihedralElement{4, 2});
    CHECK(dihedral_coordinates(w("f y")) == DihedralElement{-1, 1});
    CHECK(!dihedral_equals(w("f^2"), Word{}));
    for (long long n = -6; n <= 6; ++n)
      CHECK(dihedral_equals(w("y").pow(n) * w("f") * w("y").pow(-n) * w("f^-1"), w("y^2").pow(n)));
    // exhaustive associativity on a box
    for (long long a = -2; a <= 2; ++a)
      for (long long b = -2; b <= 2; ++b)
        for (long long c = -2; c <= 2; ++c)
          for (long long d = -2; d <= 2; ++d)
            for (long long e = -2; e <= 2; ++e)
              for (long long f = -2; f <= 2; ++f) {
                const DihedralElement x{a, b}, y{c, d}, z{e, f};
                CHECK((x * y) * z == x * (y * z));
              }
  }

  TEST_CASE("registry") {
    CHECK(model_ids().size() == 5);
    for (const auto& id : model_ids()) {
      CHECK(find_model(id).id() == id);
      CHECK(!find_model(id).soundness().empty());
    }
    CHECK_THROWS_AS(find_model("B5"), InputError);
    CHECK_THROWS_AS(find_model("B3").evaluate(w("r")), InputError);
    CHECK(find_model("B3xZ2").involutions() == std::vector<std::string>{"r"});
    // the extension ledger includes the base ledger
    CHECK(find_model("B3xZ2").soundness().size() > find_model("B3").soundness().size());
  }

  TEST_CASE("make_extension checks strand count") {
    const auto& b3 = dynamic_cast<const BraidModel&>(find_model("B3"));
    InvolutiveAutomorphism phi4(4, {{"s1", w("s3^-1")}, {"s2", w("s2^-1")}, {"s3", w("s1^-1")}});
    CHECK_THROWS_AS(make_extension(b3, phi4, "bad"), ModelError);
  }

  TEST_CASE("rendering") {
    CHECK(render(find_model("ZsemiZ").evaluate(w("y^2 f"))) == "(2, 1)");
    CHECK(render(find_model("B3").evaluate(w("D"))) == "Δ^1 · []");
  }
}
