#include "twistcert/fibrations.hpp"

#include <fstream>
#include <sstream>

#include "twistcert/builtin.hpp"
#include "twistcert/extensions.hpp"

namespace twistcert {

namespace {

const char* const kStukow =
    "cited fact (Stukow): every even power of a Dehn twist on a nonorientable surface is a single commutator";
const char* const kSzepietowski7 =
    "cited fact (Szepietowski): on a closed nonorientable surface of genus >= 7 every power of every Dehn twist is "
    "a single commutator";
const char* const kSzepietowski6 =
    "cited fact (Szepietowski): on N6 every power of the twist about a nonseparating curve with orientable "
    "complement is a single commutator of elements of the twist subgroup";
const char* const kGenusOne =
    "cited fact: every admissible genus-one nonorientable Lefschetz fibration is a P^2-bundle, so it has no "
    "singular fibers";
const char* const kFactorization =
    "a product of m nontrivial Dehn twists equal to a product of h commutators in M(N_g) yields an admissible "
    "genus-g Lefschetz fibration over the closed orientable genus-h surface with m singular fibers";

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::string to_string(NValue v) {
  switch (v) {
    case NValue::kOne: return "1";
    case NValue::kTwo: return "2";
    case NValue::kUndefined: break;
  }
  return "Undefined";
}

NMinResult n_min(int g, int h) {
  if (g < 1) throw InputError("fiber genus must be >= 1, got " + std::to_string(g));
  if (h < 0) throw InputError("base genus must be >= 0, got " + std::to_string(h));
  NMinResult r{g, h, NValue::kUndefined, {}};
  if (g == 1) {
    r.citations.push_back(kGenusOne);
    return r;
  }
  const std::string upper = std::string("upper bound N <= 2: ") + kStukow +
                            ", so t^2 = [x, y] padded with trivial commutators gives two singular fibers";
  if (h == 0) {
    r.value = NValue::kTwo;
    r.citations.push_back(
        "lower bound N > 1 for h = 0: a single twist about a nontrivial curve is not isotopic to the identity");
    r.citations.push_back(upper);
    return r;
  }
  if (g <= 3) {
    r.value = NValue::kTwo;
    r.citations.push_back(
        "lower bound N > 1: no twist about a nontrivial curve in N2 or N3 lies in the commutator subgroup "
        "(nonzero H1 image; see the N2 and N3 obstruction certificates)");
    r.citations.push_back(upper);
    return r;
  }
  r.value = NValue::kOne;
  if (g <= 6)
    r.citations.push_back(
        "N = 1: the twist about a nontrivial separating curve in N4, N5, N6 is a single commutator (identities "
        "I-11, I-10, I-7), padded with h - 1 trivial commutators");
  else
    r.citations.push_back(std::string("N = 1: ") + kSzepietowski7);
  return r;
}

CurveClass parse_curve_class(std::string_view name) {
  if (name == "klein") return CurveClass::kSeparatingKleinBottle;
  if (name == "genus3") return CurveClass::kSeparatingGenus3;
  if (name == "torus") return CurveClass::kSeparatingTorus;
  if (name == "nonsep-orientable") return CurveClass::kNonsepOrientableComplement;
  if (name == "nonsep-nonorientable") return CurveClass::kNonsepNonorientableComplement;
  throw InputError("unknown curve class '" + std::string(name) +
                   "' (klein, genus3, torus, nonsep-orientable, nonsep-nonorientable)");
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::kSeparatingKleinBottle: return "klein";
    case CurveClass::kSeparatingGenus3: return "genus3";
    case CurveClass::kSeparatingTorus: return "torus";
    case CurveClass::kNonsepOrientableComplement: return "nonsep-orientable";
    case CurveClass::kNonsepNonorientableComplement: return "nonsep-nonorientable";
  }
  return "?";
}

bool class_exists(int g, CurveClass c) {
  // A separating curve is nontrivial when neither side is a disk or a Mobius band.
  switch (c) {
    case CurveClass::kSeparatingKleinBottle: return g >= 4;
    case CurveClass::kSeparatingGenus3: return g >= 5;
    case CurveClass::kSeparatingTorus: return g >= 4;
    case CurveClass::kNonsepOrientableComplement: return g >= 2 && g % 2 == 0;
    case CurveClass::kNonsepNonorientableComplement: return g >= 3;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Fibration specs

Word FibrationSpec::commutator_product() const {
  Word out;
  for (const auto& c : commutators) out *= commutator(c.x, c.y);
  return out;
}

nlohmann::json FibrationSpec::to_json() const {
  nlohmann::json j;
  j["g"] = fiber_genus;
  j["h"] = base_genus;
  j["model"] = model;
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [sym, image] : binding) b[sym] = image.str();
  j["binding"] = b;
  j["twists"] = twist_word.str();
  j["singular_fibers"] = singular_fibers();
  j["commutators"] = nlohmann::json::array();
  for (const auto& c : commutators) j["commutators"].push_back({c.x.str(), c.y.str()});
  j["commutator_product"] = commutator_product().str();
  return j;
}

namespace {

std::vector<CommutatorPair> parse_commutators(const std::string& text) {
  std::vector<CommutatorPair> out;
  std::size_t pos = 0;
  for (;;) {
    const auto open = text.find_first_not_of(" \t", pos);
    if (open == std::string::npos) return out;
    if (text[open] != '[') throw InputError("expected '[' in commutator list");
    const auto comma = text.find(',', open);
    const auto close = text.find(']', open);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw InputError("commutators must look like [x, y]");
    out.push_back({parse_word(text.substr(open + 1, comma - open - 1)),
                   parse_word(text.substr(comma + 1, close - comma - 1))});
    pos = close + 1;
  }
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::logic_error&) {
    throw InputError(std::string("bad integer for ") + what + ": '" + s + "'");
  }
}

}  // namespace

FibrationSpec parse_fibration(std::string_view text) {
  FibrationSpec spec;
  bool have_g = false, have_h = false, have_model = false, have_twists = false;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("expected 'key: value'");
      const std::string key = trim(std::string_view(line).substr(0, colon));
      const std::string value = trim(std::string_view(line).substr(colon + 1));
      if (key == "g") {
        spec.fiber_genus = parse_int(value, "g");
        have_g = true;
      } else if (key == "h") {
        spec.base_genus = parse_int(value, "h");
        have_h = true;
      } else if (key == "model") {
        spec.model = value;
        have_model = true;
      } else if (key == "bind") {
        const auto eq = value.find('=');
        if (eq == std::string::npos) throw InputError("expected 'bind: sym = word'");
        spec.binding[trim(std::string_view(value).substr(0, eq))] = parse_word(value.substr(eq + 1));
      } else if (key == "twists") {
        spec.twist_word = parse_word(value);
        have_twists = true;
      } else if (key == "commutators") {
        spec.commutators = parse_commutators(value);
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_g || !have_h || !have_model || !have_twists)
    throw InputError("fibration spec needs g:, h:, model: and twists: lines");
  return spec;
}

FibrationSpec load_fibration(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fibration(buf.str());
}

Certificate validate_factorization(const FibrationSpec& spec) {
  if (spec.fiber_genus < 1) throw InputError("fiber genus must be >= 1");
  if (spec.base_genus < 0) throw InputError("base genus must be >= 0");
  if (spec.singular_fibers() < 1) throw InputError("not admissible: the twist word has no singular fiber");
  if (spec.commutators.size() != static_cast<std::size_t>(spec.base_genus))
    throw InputError("expected " + std::to_string(spec.base_genus) + " commutators, got " +
                     std::to_string(spec.commutators.size()));
  const Model& model = find_model(spec.model);
  const Word product = spec.commutator_product();

  Certificate c;
  c.name = "factorization g=" + std::to_string(spec.fiber_genus) + " h=" + std::to_string(spec.base_genus) +
           " m=" + std::to_string(spec.singular_fibers());
  c.model = spec.model;
  c.lhs = spec.twist_word.str();
  c.rhs = product.str();
  const Element a = model.evaluate(spec.twist_word, spec.binding);
  const Element b = model.evaluate(product, spec.binding);
  c.checks.push_back({std::nullopt, a == b, render(a), render(b)});
  c.status = a == b ? Status::kPass : Status::kFail;
  c.citations = model.soundness();
  c.citations.push_back(kFactorization);
  return c;
}

// ---------------------------------------------------------------------------
// Witnesses

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kWitness: return "Witness";
    case WitnessKind::kObstructed: return "Obstructed";
    case WitnessKind::kExternal: return "External";
    case WitnessKind::kOpen: break;
  }
  return "Open";
}

namespace {

const IdentityScript& manifest_entry(const std::string& name) {
  for (const auto& s : builtin_manifest())
    if (s.name == name) return s;
  throw InputError("built-in manifest lacks " + name);
}

std::string obstruction_label(CurveClass c) {
  return c == CurveClass::kNonsepOrientableComplement ? "nonsep-orientable-complement"
                                                      : "nonsep-nonorientable-complement";
}

// Explicit single-commutator constructions for separating curves.
void build_separating(WitnessRecord& rec, CurveClass route) {
  FibrationSpec spec;
  spec.fiber_genus = rec.g;
  spec.base_genus = rec.h;
  const long long n = rec.n;
  std::string identity;
  auto g = [](const char* name) { return Word::generator(name); };
  switch (route) {
    case CurveClass::kSeparatingKleinBottle:
      identity = "I-11";
      spec.model = "ZsemiZ";
      spec.binding = {{"tg", Word::generator("y", 2)}, {"y", g("y")}, {"f", g("f")}};
      spec.commutators.push_back({Word::generator("y", n), g("f")});
      rec.citations.push_back("the curve bounds a one-holed Klein bottle; t^n = y^n f y^-n f^-1");
      break;
    case CurveClass::kSeparatingGenus3:
      identity = "I-10";
      spec.model = "B4xZ2";
      spec.binding = {{"tg", Word::generator("D", 2)}, {"ta", g("s1")}, {"tb", g("s2")},
                      {"tc", g("s3")}, {"r", g("r")}};
      spec.commutators.push_back({parse_word("ta tb tc").pow(2 * n), g("r")});
      rec.citations.push_back(
          "the genus-3 side contains a two-holed torus with d capped by a Mobius band and e on the curve; "
          "t^n = [(ta tb tc)^2n, r]");
      break;
    default:
      identity = "I-7";
      spec.model = "B3xZ2";
      spec.binding = {{"tg", parse_word("s1 s2").pow(6)}, {"ta", g("s1")}, {"tb", g("s2")}, {"r", g("r")}};
      spec.commutators.push_back({parse_word("tb ta^2 tb ta^2").pow(n), parse_word("ta^-1 r")});
      rec.citations.push_back(
          "the curve bounds a one-holed torus and r extends over the surface; t^n = [(tb ta^2 tb ta^2)^n, ta^-1 r]");
      break;
  }
  spec.twist_word = Word::generator("tg", n);
  for (int i = 1; i < rec.h; ++i) spec.commutators.push_back({Word{}, Word{}});
  if (rec.h > 1) rec.citations.push_back("padded with h - 1 trivial commutators [e, e]");

  rec.identity = verify(manifest_entry(identity), builtin_manifest());
  rec.factorization = validate_factorization(spec);
  rec.spec = std::move(spec);
  rec.kind = WitnessKind::kWitness;
}

}  // namespace

WitnessRecord witness(int g, int h, CurveClass curve, long long n) {
  if (g < 2) throw InputError("witness needs fiber genus >= 2");
  if (h < 1) throw InputError("witness needs base genus >= 1");
  if (n == 0) throw InputError("witness needs a nonzero power");
  if (!class_exists(g, curve))
    throw InputError("N" + std::to_string(g) + " has no nontrivial curve of class " + to_string(curve));

  WitnessRecord rec;
  rec.g = g;
  rec.h = h;
  rec.n = n;
  rec.curve = curve;

  if (g >= 7) {
    rec.kind = WitnessKind::kExternal;
    rec.citations.push_back(kSzepietowski7);
    return rec;
  }

  const bool nonseparating =
      curve == CurveClass::kNonsepOrientableComplement || curve == CurveClass::kNonsepNonorientableComplement;
  if (nonseparating) {
    if (g == 6 && curve == CurveClass::kNonsepOrientableComplement) {
      rec.kind = WitnessKind::kExternal;
      rec.citations.push_back(kSzepietowski6);
      return rec;
    }
    if (n % 2 == 0) {
      rec.kind = WitnessKind::kExternal;
      rec.citations.push_back(kStukow);
      return rec;
    }
    const std::string surface = "N" + std::to_string(g);
    const std::string label = obstruction_label(curve);
    for (const auto& entry : builtin_obstructions()) {
      if (entry.surface != surface || entry.class_label != label) continue;
      ObstructionEntry scaled = entry;
      for (auto& x : scaled.image) x *= static_cast<long>(n);
      rec.obstruction = commutator_obstruction(builtin_presentation(surface), scaled);
      rec.obstruction->element = surface + ": t^" + std::to_string(n) + " for class " + label;
      rec.kind = rec.obstruction->verdict == Verdict::kObstructed ? WitnessKind::kObstructed : WitnessKind::kOpen;
      rec.citations.push_back(entry.citation);
      rec.citations.push_back("an element with nonzero image in H1 is not a product of commutators");
      return rec;
    }
    rec.kind = WitnessKind::kOpen;
    rec.citations.push_back("no H1 data recorded for this class");
    return rec;
  }

  // Separating curves in N4, N5, N6. A torus complement in N4 is a one-holed
  // Klein bottle; in N5 it is a nonorientable genus-3 piece.
  CurveClass route = curve;
  if (curve == CurveClass::kSeparatingTorus && g == 4) {
    route = CurveClass::kSeparatingKleinBottle;
    rec.citations.push_back("the complement of a one-holed torus in N4 is a one-holed Klein bottle");
  } else if (curve == CurveClass::kSeparatingTorus && g == 5) {
    route = CurveClass::kSeparatingGenus3;
    rec.citations.push_back("the complement of a one-holed torus in N5 is a nonorientable genus-3 piece");
  }
  build_separating(rec, route);
  return rec;
}

long long euler_characteristic(int g, int h, long long m) {
  if (g < 1) throw InputError("fiber genus must be >= 1");
  if (h < 0) throw InputError("base genus must be >= 0");
  if (m < 0) throw InputError("number of singular fibers must be >= 0");
  return static_cast<long long>(2 - g) * (2 - 2 * static_cast<long long>(h)) + m;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const ObstructionCertificate& c) {
  auto strs = [](const std::vector<mpz_class>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
  };
  std::vector<std::string> torsion;
  for (const auto& d : c.group.torsion) torsion.push_back(d.get_str());
  return {{"verdict", to_string(c.verdict)},
          {"element", c.element},
          {"group", c.group.str()},
          {"torsion", torsion},
          {"free_rank", c.group.free_rank},
          {"exponent_sums", strs(c.exponent_sums)},
          {"image", strs(c.image)},
          {"citation", c.citation}};
}

nlohmann::json WitnessRecord::to_json(bool with_timing) const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["g"] = g;
  j["h"] = h;
  j["n"] = n;
  j["class"] = to_string(curve);
  j["citations"] = citations;
  j["spec"] = spec ? spec->to_json() : nlohmann::json(nullptr);
  j["identity"] = identity ? identity->to_json(with_timing) : nlohmann::json(nullptr);
  j["factorization"] = factorization ? factorization->to_json(with_timing) : nlohmann::json(nullptr);
  j["obstruction"] = obstruction ? twistcert::to_json(*obstruction) : nlohmann::json(nullptr);
  return j;
}

}  // namespace twistcert
