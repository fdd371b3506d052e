#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twistcert/abelianize.hpp"
#include "twistcert/identities.hpp"
#include "twistcert/words.hpp"

namespace twistcert {

/// Minimal number of singular fibers of an admissible nonorientable
/// Lefschetz fibration with fiber N_g over a closed orientable genus-h base.
enum class NValue { kOne, kTwo, kUndefined };
std::string to_string(NValue v);

struct NMinResult {
  int g = 0;
  int h = 0;
  NValue value = NValue::kUndefined;
  std::vector<std::string> citations;
};

/// Undefined for g = 1, 1 iff g >= 4 and h >= 1, otherwise 2. Throws
/// InputError for g < 1 or h < 0.
NMinResult n_min(int g, int h);

/// Topological type of a two-sided curve in N_g.
enum class CurveClass {
  kSeparatingKleinBottle,  // cuts off a one-holed Klein bottle (nonorientable genus 2)
  kSeparatingGenus3,       // cuts off a nonorientable genus-3 piece
  kSeparatingTorus,        // cuts off a one-holed torus
  kNonsepOrientableComplement,
  kNonsepNonorientableComplement,
};

/// CLI names: klein, genus3, torus, nonsep-orientable, nonsep-nonorientable.
CurveClass parse_curve_class(std::string_view name);
std::string to_string(CurveClass c);
/// Whether a nontrivial curve of this class exists in N_g.
bool class_exists(int g, CurveClass c);

struct CommutatorPair {
  Word x;
  Word y;
};

struct FibrationSpec {
  int fiber_genus = 0;
  int base_genus = 0;
  std::string model;
  Binding binding;
  /// One letter power per vanishing cycle; m = total |exponent|.
  Word twist_word;
  std::vector<CommutatorPair> commutators;

  long long singular_fibers() const { return twist_word.length(); }
  /// Product of x y x^-1 y^-1 over the listed pairs.
  Word commutator_product() const;
  nlohmann::json to_json() const;
};

/// Lines `g:`, `h:`, `model:`, `bind: sym = <model word>`, `twists: <word>`,
/// `commutators: [x1, y1] [x2, y2] ...` (`e` for the identity).
FibrationSpec parse_fibration(std::string_view text);
FibrationSpec load_fibration(const std::string& path);

/// Pass iff the twist word equals the commutator product in the model. Throws
/// InputError when the spec is not admissible (no singular fiber) or lists a
/// number of commutators other than the base genus.
Certificate validate_factorization(const FibrationSpec& spec);

enum class WitnessKind { kWitness, kObstructed, kExternal, kOpen };
std::string to_string(WitnessKind k);

struct WitnessRecord {
  WitnessKind kind = WitnessKind::kOpen;
  int g = 0;
  int h = 0;
  long long n = 0;
  CurveClass curve = CurveClass::kSeparatingTorus;
  std::optional<FibrationSpec> spec;
  std::optional<Certificate> identity;
  std::optional<Certificate> factorization;
  std::optional<ObstructionCertificate> obstruction;
  std::vector<std::string> citations;

  nlohmann::json to_json(bool with_timing = true) const;
};

/// Decides whether t^n for a twist about a curve of class `curve` in N_g is
/// a product of h commutators: an explicit witness with certificates, an H_1
/// obstruction, or a cited external result. Requires g >= 2, h >= 1, n != 0
/// and a class that exists in N_g.
WitnessRecord witness(int g, int h, CurveClass curve, long long n);

/// chi(X) = chi(N_g) chi(Sigma_h) + m = (2 - g)(2 - 2h) + m.
long long euler_characteristic(int g, int h, long long m);

nlohmann::json to_json(const ObstructionCertificate& c);

}  // namespace twistcert
