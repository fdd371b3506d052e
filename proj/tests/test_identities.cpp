#include <doctest.h>

#include <set>

#include "twistcert/identities.hpp"

using namespace twistcert;

namespace {

const IdentityScript& entry(const std::string& name) {
  for (const auto& s : builtin_manifest())
    if (s.name == name) return s;
  throw std::runtime_error("no entry " + name);
}

IdentityScript one(const char* text) {
  auto v = parse_scripts(text);
  REQUIRE(v.size() == 1);
  return v[0];
}

}  // namespace

TEST_SUITE("identities") {
  TEST_CASE("reference examples") {
    CHECK(verify(entry("I-1")).status == Status::kPass);
    CHECK(verify(entry("I-2")).status == Status::kPass);
    IdentityScript cubed = entry("I-2");
    cubed.rhs = WordPattern::parse("(tb ta^2 tb ta^2)^3");
    CHECK(verify(cubed).status == Status::kFail);
  }

  TEST_CASE("built-in manifest passes") {
    const auto& manifest = builtin_manifest();
    REQUIRE(manifest.size() == 12);
    const SuiteReport r = verify_suite(manifest, Execution::kSerial);
    CHECK(r.failed == 0);
    CHECK(r.passed == 12);
    const std::set<std::string> all_n{"I-7", "I-10", "I-11", "I-12"};
    for (const auto& c : r.certificates) {
      INFO(c.name);
      CHECK(c.passed());
      CHECK(!c.error);
      CHECK((c.status == Status::kPassAllN) == (all_n.count(c.name) == 1));
      CHECK(!c.citations.empty());
    }
  }

  TEST_CASE("bracket convention probes") {
    const Certificate c = verify(entry("I-6"), builtin_manifest());
    REQUIRE(c.probes.size() == 3);
    CHECK(c.probes[0].equal);   // w^2
    CHECK(c.probes[1].equal);   // x y x^-1 y^-1 with x = w, y = ta^-1 r
    CHECK(!c.probes[2].equal);  // x^-1 y^-1 x y gives t_c^-1
  }

  TEST_CASE("lemma certificates agree with explicit checks") {
    for (const char* name : {"I-7", "I-10", "I-11"}) {
      INFO(name);
      const auto& s = entry(name);
      const Certificate c = verify(s, builtin_manifest());
      CHECK(c.status == Status::kPassAllN);
      REQUIRE(c.claim);
      REQUIRE(c.premises.size() == 1);  // the lemma certificate
      const Certificate& lemma = c.premises[0];
      CHECK(lemma.status == Status::kPassAllN);
      REQUIRE(lemma.premises.size() == 2);
      for (const auto& p : lemma.premises) CHECK(p.status == Status::kPass);
      const Model& model = find_model(s.model);
      std::set<long long> seen;
      for (const auto& ch : c.checks) {
        if (!ch.n) continue;
        seen.insert(*ch.n);
        CHECK(ch.equal);
        const Word lhs = s.lhs.instantiate(*ch.n), rhs = s.rhs.instantiate(*ch.n);
        CHECK(model.evaluate(lhs, s.binding) == model.evaluate(rhs, s.binding));
      }
      for (long long n = -8; n <= 8; ++n) CHECK(seen.count(n) == 1);
    }
  }

  TEST_CASE("reuse") {
    const Certificate c = verify(entry("I-12"), builtin_manifest());
    CHECK(c.status == Status::kPassAllN);
    CHECK_THROWS_AS(verify(entry("I-12"), {}), InputError);
  }

  TEST_CASE("mutants fail") {
    for (std::uint64_t seed : {7ull, 1ull, 2ull, 12345ull}) {
      const auto mutants = mutate(builtin_manifest(), 20, seed);
      REQUIRE(mutants.size() == 20);
      std::set<std::string> names;
      for (const auto& m : mutants) {
        names.insert(m.name);
        CHECK(!m.lemma);
        CHECK(!m.reuse);
      }
      CHECK(names.size() == 20);
      const SuiteReport r = verify_suite(mutants);
      CHECK(r.failed == 20);
      CHECK(r.passed == 0);
      for (const auto& c : r.certificates) CHECK(!c.error);
    }
    // deterministic in the seed
    const auto a = mutate(builtin_manifest(), 20, 7), b = mutate(builtin_manifest(), 20, 7);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].lhs.str() == b[i].lhs.str());
      CHECK(a[i].rhs.str() == b[i].rhs.str());
    }
    CHECK(mutate(builtin_manifest(), 0, 7).empty());
    CHECK_THROWS_AS(mutate({}, 5, 7), InputError);
  }

  TEST_CASE("serial and parallel suites agree") {
    const auto serial = verify_suite(builtin_manifest(), Execution::kSerial);
    const auto parallel = verify_suite(builtin_manifest(), Execution::kParallel);
    CHECK(serial.to_json(false).dump() == parallel.to_json(false).dump());
    CHECK(verify_suite({}).certificates.empty());
  }

  TEST_CASE("finite range scripts") {
    auto s = one("name: t\nmodel: ZsemiZ\nbind: y = y\nbind: f = f\nlhs: (y^2)^n\nrhs: y^n f y^-n f^-1\nnrange: -3..3\n");
    const Certificate c = verify(s);
    CHECK(c.status == Status::kPass);
    CHECK(c.checks.size() == 7);
    // wrong at n != 0 only
    auto bad = one("name: t\nmodel: ZsemiZ\nbind: y = y\nlhs: y^2n\nrhs: y^n\nnrange: 0..0\n");
    CHECK(verify(bad).status == Status::kPass);
    bad.nrange = NRange{-1, 1};
    CHECK(verify(bad).status == Status::kFail);
  }

  TEST_CASE("lemma premises are enforced") {
    const char* base =
        "name: L\nmodel: ZsemiZ\nbind: y = y\nbind: f = f\nbind: tg = y^2\nlhs: tg^n\nrhs: y^n f y^-n f^-1\n"
        "nrange: -2..2\nlemma.w: y\nlemma.x: f\nlemma.target: tg\nbase: tg = y y\n";
    CHECK(verify(one((std::string(base) + "premise: f y f^-1 = y^-1\n").c_str())).status == Status::kPassAllN);
    // premise does not match the template x w x^-1 = w^-1
    CHECK_THROWS_AS(verify(one((std::string(base) + "premise: f y^2 f^-1 = y^-2\n").c_str())), InputError);
    // premise false in the model
    CHECK_THROWS_AS(verify(one((std::string(base) + "premise: f y f^-1 = y\n").c_str())), InputError);
    // premise from another model
    const auto other = parse_scripts(
        "name: P\nmodel: B3xZ2\nbind: y = s1\nbind: f = r\nlhs: f y f^-1\nrhs: y^-1\n\n"
        "name: L\nmodel: ZsemiZ\nbind: y = y\nbind: f = f\nbind: tg = y^2\nlhs: tg^n\nrhs: y^n f y^-n f^-1\n"
        "nrange: -2..2\nlemma.w: y\nlemma.x: f\nlemma.target: tg\nbase: tg = y y\npremise: P\n");
    CHECK_THROWS_AS(verify(other[1], other), InputError);
  }

  TEST_CASE("cancel_involutions") {
    const std::set<std::string> inv{"r"};
    CHECK(cancel_involutions(parse_word("a r^3 b"), inv) == parse_word("a r b"));
    CHECK(cancel_involutions(parse_word("a r^2 a"), inv) == parse_word("a^2"));
    CHECK(cancel_involutions(parse_word("r^-1"), inv) == parse_word("r"));
  }

  TEST_CASE("script errors") {
    CHECK_THROWS_AS(parse_scripts("model: B3\n"), InputError);
    CHECK_THROWS_AS(parse_scripts("name: x\nmodel: B3\nwhat: 1\n"), InputError);
    CHECK_THROWS_AS(parse_nrange("3..1"), InputError);
    CHECK_THROWS_AS(parse_nrange("1-3"), InputError);
    CHECK(parse_nrange("-8..8").lo == -8);
    CHECK_THROWS_AS(validate(one("name: x\nmodel: B3\nlhs: a^n\nrhs: a\nbind: a = s1\n")), InputError);
    CHECK_THROWS_AS(validate(one("name: x\nmodel: B3\nlhs: q\nrhs: e\n")), InputError);
    CHECK_THROWS_AS(validate(one("name: x\nmodel: B9\nlhs: e\nrhs: e\n")), InputError);
    CHECK_THROWS_AS(validate(one("name: x\nmodel: B3\nbind: a = s7\nlhs: a\nrhs: a\n")), InputError);
    CHECK_THROWS_AS(load_scripts("/nonexistent/scripts.txt"), InputError);
    CHECK(parse_scripts("# nothing\n").empty());
  }

  TEST_CASE("failing suite entries become Fail certificates") {
    const auto scripts = parse_scripts("name: ok\nmodel: B3\nbind: a = s1\nlhs: a\nrhs: a\n\nname: broken\nmodel: B3\nlhs: q\nrhs: e\n");
    const auto r = verify_suite(scripts);
    CHECK(r.passed == 1);
    CHECK(r.failed == 1);
    CHECK(r.certificates[1].error);
  }

  TEST_CASE("certificate JSON") {
    const Certificate c = verify(entry("I-7"), builtin_manifest());
    const auto j = c.to_json(false);
    CHECK(j["status"] == "PassAllN");
    CHECK(!j.contains("elapsed_ms"));
    CHECK(c.to_json(true).contains("elapsed_ms"));
    CHECK(nlohmann::json::parse(j.dump()) == j);
  }
}
