#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twistcert/extensions.hpp"
#include "twistcert/words.hpp"

namespace twistcert {

struct NRange {
  long long lo = 0;
  long long hi = 0;
};

/// Parses `a..b`; throws InputError when malformed or empty.
NRange parse_nrange(std::string_view text);

/// Data for an all-n certificate: given x w x^-1 = w^-1 and target = w^2,
/// target^n = w^n x w^-n x^-1 = x w^-n x^-1 w^n for every integer n.
/// `premise` and `base` name another script, or hold an inline `lhs = rhs`.
struct LemmaSpec {
  std::string premise;
  std::string base;
  WordPattern w;
  WordPattern x;
  WordPattern target;
};

/// A side comparison recorded in the certificate but not part of its status.
struct Probe {
  std::string label;
  WordPattern word;
};

struct IdentityScript {
  std::string name;
  std::string model;
  Binding binding;
  WordPattern lhs;
  WordPattern rhs;
  std::optional<NRange> nrange;
  std::vector<Probe> probes;
  std::vector<std::string> notes;
  std::optional<LemmaSpec> lemma;
  /// Certify by re-running another script of the same manifest.
  std::optional<std::string> reuse;
};

/// Script file format, one `key: value` per line, entries started by `name:`:
///   name:, model:, bind: sym = <model word>, lhs:, rhs:, nrange: a..b,
///   note:, probe: label = <word>, reuse: <name>,
///   premise: <name | lhs = rhs>, base: <name | lhs = rhs>,
///   lemma.w:, lemma.x:, lemma.target:
std::vector<IdentityScript> parse_scripts(std::string_view text);
std::vector<IdentityScript> load_scripts(const std::string& path);

/// Checks model, binding and parameter consistency. Throws InputError.
void validate(const IdentityScript& script);

enum class Status { kPass, kFail, kPassAllN };
std::string to_string(Status s);

struct Check {
  std::optional<long long> n;
  bool equal = false;
  std::string lhs_form;
  std::string rhs_form;
};

struct ProbeResult {
  std::string label;
  std::string word;
  bool equal = false;
  std::string form;
};

struct Certificate {
  std::string name;
  std::string model;
  Status status = Status::kFail;
  std::string lhs;
  std::string rhs;
  std::vector<Check> checks;
  std::vector<ProbeResult> probes;
  std::vector<std::string> citations;
  std::optional<std::string> claim;
  std::vector<Certificate> premises;
  std::optional<std::string> error;
  double elapsed_ms = 0.0;

  bool passed() const { return status != Status::kFail; }
  nlohmann::json to_json(bool with_timing = true) const;
};

/// Verifies one script. Named premises and reuse targets are looked up in
/// `context`. Model and binding errors propagate as InputError.
Certificate verify(const IdentityScript& script, const std::vector<IdentityScript>& context = {});

/// Reduces exponents of the given order-two generators mod 2 until stable.
Word cancel_involutions(const Word& w, const std::set<std::string>& involutions);

struct LemmaInput {
  std::string name;
  std::string model;
  Binding binding;
  IdentityScript premise_script;
  Certificate premise;
  IdentityScript base_script;
  Certificate base;
  Word w;
  Word x;
  Word target;
  NRange nrange{-8, 8};
};

/// Upgrades x w x^-1 = w^-1 and target = w^2 to target^n = [w^n, x] for all
/// n. Both premises must be Pass certificates in the lemma's model whose
/// scripts match the templates letter for letter (up to cancelling squares
/// of involutions). The result also carries explicit checks over `nrange`.
Certificate apply_inversion_lemma(const LemmaInput& input);

enum class Execution { kSerial, kParallel };

struct SuiteReport {
  std::vector<Certificate> certificates;
  std::size_t passed = 0;
  std::size_t failed = 0;

  nlohmann::json to_json(bool with_timing = true) const;
};

/// Verifies every script; failures and errors become Fail certificates.
/// Certificates come back in manifest order whatever the execution mode.
SuiteReport verify_suite(const std::vector<IdentityScript>& manifest, Execution exec = Execution::kParallel);

/// The built-in manifest I-1 .. I-12.
const std::vector<IdentityScript>& builtin_manifest();
std::string_view builtin_manifest_text();

/// `count` seeded perturbations of the plain (non-lemma, parameter-free)
/// entries of `manifest`: an exponent moved by +-1, two adjacent
/// non-commuting letters swapped, or an r dropped. Each changes the element.
std::vector<IdentityScript> mutate(const std::vector<IdentityScript>& manifest, int count, std::uint64_t seed);

}  // namespace twistcert
