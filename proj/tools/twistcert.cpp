// twistcert: command-line front end.
//
// Every command builds a RunReport (JSON) first; text output is rendered from
// the same data. Exit status: 0 no failures, 1 failures, 2 input errors.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistcert/abelianize.hpp"
#include "twistcert/builtin.hpp"
#include "twistcert/fibrations.hpp"
#include "twistcert/identities.hpp"

using nlohmann::json;
using namespace twistcert;

namespace {

struct Outcome {
  json items = json::array();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string text;
};

int exit_status(const Outcome& o) { return o.failed == 0 ? 0 : 1; }

json report(const std::vector<std::string>& argv, const Outcome& o) {
  json j;
  j["command"] = argv;
  j["items"] = o.items;
  j["summary"] = {{"total", o.items.size()}, {"passed", o.passed}, {"failed", o.failed}};
  j["exit_status"] = exit_status(o);
  return j;
}

std::string status_line(const Certificate& c) {
  std::string s = to_string(c.status) + "  " + c.name + "  [" + c.model + "]";
  if (c.error) s += "  error: " + *c.error;
  return s;
}

void add_certificate(Outcome& o, const Certificate& c) {
  o.items.push_back(c.to_json());
  (c.passed() ? o.passed : o.failed)++;
  o.text += status_line(c) + "\n";
  if (!c.error && !c.checks.empty() && !c.passed()) {
    for (const auto& ch : c.checks) {
      if (ch.equal) continue;
      o.text += "    n=" + (ch.n ? std::to_string(*ch.n) : std::string("-")) + ": " + ch.lhs_form +
                "  !=  " + ch.rhs_form + "\n";
      break;
    }
  }
  for (const auto& p : c.probes)
    o.text += "    probe " + p.label + ": " + (p.equal ? "equal" : "unequal") + "  (" + p.form + ")\n";
  if (c.claim) o.text += "    claim: " + *c.claim + "\n";
}

// ---------------------------------------------------------------------------

Outcome cmd_suite(const std::string& source, int mutate_count, const std::optional<std::uint64_t>& seed,
                  bool serial) {
  std::vector<IdentityScript> manifest = source == "builtin" ? builtin_manifest() : load_scripts(source);
  if (mutate_count < 0) throw InputError("--mutate needs a nonnegative count");
  if (mutate_count > 0) {
    if (!seed) throw InputError("--mutate needs an explicit --seed");
    manifest = mutate(manifest, mutate_count, *seed);
  }
  const SuiteReport r = verify_suite(manifest, serial ? Execution::kSerial : Execution::kParallel);
  Outcome o;
  for (const auto& c : r.certificates) add_certificate(o, c);
  o.text += std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed\n";
  return o;
}

Outcome cmd_verify(const std::string& path, const std::optional<std::string>& nrange) {
  std::vector<IdentityScript> scripts = load_scripts(path);
  if (nrange) {
    const NRange r = parse_nrange(*nrange);
    for (auto& s : scripts)
      if (s.nrange) s.nrange = r;
  }
  for (const auto& s : scripts) validate(s);
  Outcome o;
  for (const auto& s : scripts) add_certificate(o, verify(s, scripts));
  o.text += std::to_string(o.passed) + " passed, " + std::to_string(o.failed) + " failed\n";
  return o;
}

Presentation presentation_from(const std::string& source) {
  for (auto id : builtin_surfaces())
    if (source == id && !std::filesystem::exists(source)) return builtin_presentation(id);
  return load_presentation(source);
}

json strings(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Outcome cmd_abel(const std::string& source, const std::optional<std::string>& image) {
  const Presentation p = presentation_from(source);
  const H1Map h1(p);
  Outcome o;
  json item;
  item["presentation"] = source;
  item["group"] = h1.group().str();
  item["torsion"] = strings(h1.group().torsion);
  item["free_rank"] = h1.group().free_rank;
  item["invariant_factors"] = strings(h1.smith().diagonal());
  o.text += "H1 = " + h1.group().str() + "\n";
  if (image) {
    const Word w = parse_word(*image);
    ObstructionCertificate c = commutator_obstruction(p, w);
    item["obstruction"] = to_json(c);
    bool nonzero = false;
    for (const auto& x : c.image) nonzero = nonzero || x != 0;
    o.text += "image of " + w.str() + ": " + vector_str(c.image) + "  " + (nonzero ? "nonzero" : "zero") + "; " +
              to_string(c.verdict) + "\n";
  }
  o.items.push_back(std::move(item));
  o.passed = 1;
  return o;
}

Outcome cmd_ntable(int gmax, int hmax) {
  if (gmax < 1) throw InputError("--gmax must be >= 1");
  if (hmax < 0) throw InputError("--hmax must be >= 0");
  Outcome o;
  std::ostringstream text;
  text << "g\\h";
  for (int h = 0; h <= hmax; ++h) text << "  " << h;
  text << "\n";
  for (int g = 1; g <= gmax; ++g) {
    text << (g < 10 ? " " : "") << g << " ";
    for (int h = 0; h <= hmax; ++h) {
      const NMinResult r = n_min(g, h);
      o.items.push_back({{"g", g}, {"h", h}, {"value", to_string(r.value)}, {"citations", r.citations}});
      ++o.passed;
      text << "  " << (r.value == NValue::kUndefined ? "-" : to_string(r.value));
    }
    text << "\n";
  }
  text << "- : undefined\n";
  o.text = text.str();
  return o;
}

Outcome cmd_witness(int g, int h, const std::string& cls, long long n) {
  const WitnessRecord rec = witness(g, h, parse_curve_class(cls), n);
  Outcome o;
  o.items.push_back(rec.to_json());
  bool ok = true;
  if (rec.kind == WitnessKind::kWitness) ok = rec.identity->passed() && rec.factorization->passed();
  (ok ? o.passed : o.failed)++;
  std::ostringstream text;
  text << to_string(rec.kind) << "  N" << g << ", h=" << h << ", class " << to_string(rec.curve) << ", n=" << n
       << "\n";
  if (rec.spec) {
    text << "  model: " << rec.spec->model << "\n";
    text << "  twists: " << rec.spec->twist_word.str() << "\n";
    text << "  commutators:";
    for (const auto& c : rec.spec->commutators) text << " [" << c.x.str() << ", " << c.y.str() << "]";
    text << "\n";
    text << "  identity " << rec.identity->name << ": " << to_string(rec.identity->status) << "\n";
    text << "  factorization: " << to_string(rec.factorization->status) << "\n";
  }
  if (rec.obstruction)
    text << "  H1 = " << rec.obstruction->group.str() << ", image " << vector_str(rec.obstruction->image) << "; "
         << to_string(rec.obstruction->verdict) << "\n";
  for (const auto& c : rec.citations) text << "  - " << c << "\n";
  o.text = text.str();
  return o;
}

Outcome cmd_chi(int g, int h, long long m) {
  const long long chi = euler_characteristic(g, h, m);
  Outcome o;
  o.items.push_back({{"g", g}, {"h", h}, {"m", m}, {"chi", chi}});
  o.passed = 1;
  o.text = "chi = " + std::to_string(chi) + "\n";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);

  CLI::App app{"Certified word identities in braid and mapping class group models"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* suite = app.add_subcommand("suite", "Verify an identity manifest (`builtin` for the shipped one)");
  std::string suite_source;
  int mutate_count = 0;
  std::optional<std::uint64_t> seed;
  bool serial = false;
  suite->add_option("manifest", suite_source)->required();
  suite->add_option("--mutate", mutate_count, "Verify N seeded mutants instead of the manifest");
  suite->add_option("--seed", seed, "Seed for --mutate");
  suite->add_flag("--serial", serial, "Disable parallel verification");

  auto* verify_cmd = app.add_subcommand("verify", "Verify an identity script file");
  std::string script_path;
  std::optional<std::string> nrange;
  verify_cmd->add_option("script", script_path)->required();
  verify_cmd->add_option("--nrange", nrange, "Override the n range, a..b");

  auto* abel = app.add_subcommand("abel", "Abelianize a presentation file (or N2..N6)");
  std::string pres_source;
  std::optional<std::string> image;
  abel->add_option("presentation", pres_source)->required();
  abel->add_option("--image", image, "Word whose H1 image to test");

  auto* ntable = app.add_subcommand("ntable", "Table of the minimal number of singular fibers");
  int gmax = 12, hmax = 6;
  ntable->add_option("--gmax", gmax);
  ntable->add_option("--hmax", hmax);

  auto* witness_cmd = app.add_subcommand("witness", "Commutator expression for a twist power");
  int wg = 0, wh = 0;
  std::string wclass;
  long long wn = 0;
  witness_cmd->add_option("fiber_genus", wg)->required();
  witness_cmd->add_option("base_genus", wh)->required();
  witness_cmd->add_option("class", wclass, "klein, genus3, torus, nonsep-orientable, nonsep-nonorientable")
      ->required();
  witness_cmd->add_option("n", wn)->required();

  auto* chi = app.add_subcommand("chi", "Euler characteristic of the total space");
  int cg = 0, ch = 0;
  long long cm = 0;
  chi->add_option("fiber_genus", cg)->required();
  chi->add_option("base_genus", ch)->required();
  chi->add_option("m", cm)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const bool as_json = format == "json";
  try {
    Outcome o;
    if (*suite) o = cmd_suite(suite_source, mutate_count, seed, serial);
    else if (*verify_cmd) o = cmd_verify(script_path, nrange);
    else if (*abel) o = cmd_abel(pres_source, image);
    else if (*ntable) o = cmd_ntable(gmax, hmax);
    else if (*witness_cmd) o = cmd_witness(wg, wh, wclass, wn);
    else o = cmd_chi(cg, ch, cm);

    if (as_json) std::cout << report(args, o).dump(2) << "\n";
    else std::cout << o.text;
    return exit_status(o);
  } catch (const std::exception& e) {
    // InputError and anything raised while reading user files
    if (as_json) {
      json j{{"command", args}, {"error", e.what()}, {"exit_status", 2}};
      std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
