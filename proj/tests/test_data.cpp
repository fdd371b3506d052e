#include <doctest.h>

#include <fstream>
#include <sstream>

#include "twistcert/builtin.hpp"
#include "twistcert/fibrations.hpp"
#include "twistcert/identities.hpp"

using namespace twistcert;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(TWC_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("data") {
  TEST_CASE("embedded copies match the data directory") {
    CHECK(builtin_manifest_text() == slurp("manifest.txt"));
    CHECK(builtin_obstructions_text() == slurp("obstructions.txt"));
    for (auto id : builtin_surfaces()) {
      std::string file(id);
      file[0] = 'n';
      CHECK(builtin_presentation_text(id) == slurp(file + ".pres"));
    }
  }

  TEST_CASE("files parse") {
    CHECK(load_scripts(std::string(TWC_DATA_DIR) + "/manifest.txt").size() == 12);
    for (const auto& s : builtin_manifest()) CHECK_NOTHROW(validate(s));
    CHECK(builtin_obstructions().size() == 6);
    for (const auto& e : builtin_obstructions()) {
      const Presentation& p = builtin_presentation(e.surface);
      CHECK(e.image.size() == p.gens.size());
      CHECK(!e.citation.empty());
    }
  }

  TEST_CASE("example inputs") {
    for (const char* f : {"torus_n6.fib", "klein_n4.fib"}) {
      INFO(f);
      const auto spec = load_fibration(std::string(TWC_DATA_DIR) + "/examples/" + f);
      CHECK(validate_factorization(spec).status == Status::kPass);
    }
    const auto scripts = load_scripts(std::string(TWC_DATA_DIR) + "/examples/chain.txt");
    const auto r = verify_suite(scripts);
    CHECK(r.passed == 3);
    CHECK(r.failed == 1);
    CHECK(r.certificates.back().name == "wrong");
  }
}
