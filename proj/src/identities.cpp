#include "twistcert/identities.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include <omp.h>

namespace twistcert {

NRange parse_nrange(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw InputError("nrange must look like a..b: " + std::string(text));
  try {
    const std::string lo(text.substr(0, dots));
    const std::string hi(text.substr(dots + 2));
    std::size_t used_lo = 0, used_hi = 0;
    NRange r{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument("trailing");
    if (r.lo > r.hi) throw InputError("empty nrange: " + std::string(text));
    return r;
  } catch (const std::logic_error&) {
    throw InputError("nrange must look like a..b: " + std::string(text));
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "Pass";
    case Status::kPassAllN: return "PassAllN";
    case Status::kFail: break;
  }
  return "Fail";
}

// ---------------------------------------------------------------------------
// Script files

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::pair<std::string, std::string> split_eq(const std::string& value) {
  const auto eq = value.find('=');
  if (eq == std::string::npos) throw InputError("expected 'a = b' in '" + value + "'");
  return {trim(std::string_view(value).substr(0, eq)), trim(std::string_view(value).substr(eq + 1))};
}

}  // namespace

std::vector<IdentityScript> parse_scripts(std::string_view text) {
  std::vector<IdentityScript> out;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  bool have_lhs = false, have_rhs = false;
  LemmaSpec pending;
  bool lemma_touched = false;

  auto finish = [&]() {
    if (out.empty()) return;
    if (lemma_touched) out.back().lemma = pending;
    pending = LemmaSpec{};
    lemma_touched = false;
    have_lhs = have_rhs = false;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    try {
      const auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("expected 'key: value'");
      const std::string key = trim(std::string_view(line).substr(0, colon));
      const std::string value = trim(std::string_view(line).substr(colon + 1));
      if (key == "name") {
        finish();
        if (value.empty()) throw InputError("empty script name");
        out.emplace_back();
        out.back().name = value;
        continue;
      }
      if (out.empty()) throw InputError("'" + key + "' before the first 'name:'");
      IdentityScript& s = out.back();
      if (key == "model") {
        s.model = value;
      } else if (key == "bind") {
        auto [sym, image] = split_eq(value);
        if (sym.empty()) throw InputError("empty binding symbol");
        s.binding[sym] = WordPattern::parse(image).word();
      } else if (key == "lhs") {
        s.lhs = WordPattern::parse(value);
        have_lhs = true;
      } else if (key == "rhs") {
        s.rhs = WordPattern::parse(value);
        have_rhs = true;
      } else if (key == "nrange") {
        s.nrange = parse_nrange(value);
      } else if (key == "note") {
        s.notes.push_back(value);
      } else if (key == "probe") {
        auto [label, word] = split_eq(value);
        s.probes.push_back({label, WordPattern::parse(word)});
      } else if (key == "reuse") {
        s.reuse = value;
      } else if (key == "premise") {
        pending.premise = value;
        lemma_touched = true;
      } else if (key == "base") {
        pending.base = value;
        lemma_touched = true;
      } else if (key == "lemma.w") {
        pending.w = WordPattern::parse(value);
        lemma_touched = true;
      } else if (key == "lemma.x") {
        pending.x = WordPattern::parse(value);
        lemma_touched = true;
      } else if (key == "lemma.target") {
        pending.target = WordPattern::parse(value);
        lemma_touched = true;
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  finish();
  return out;
}

std::vector<IdentityScript> load_scripts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scripts(buf.str());
}

namespace {

void require_bound(const IdentityScript& s, const WordPattern& p, const char* where) {
  for (const auto& g : p.generators())
    if (!s.binding.contains(g)) throw InputError(s.name + ": " + where + " uses unbound generator " + g);
}

}  // namespace

void validate(const IdentityScript& s) {
  if (s.name.empty()) throw InputError("script without a name");
  const Model& model = find_model(s.model);
  for (const auto& [sym, image] : s.binding)
    for (const auto& l : image.letters())
      if (!model.alphabet().contains(l.gen))
        throw InputError(s.name + ": binding " + sym + " uses " + l.gen + ", not a generator of " + s.model);
  if (s.reuse) return;
  require_bound(s, s.lhs, "lhs");
  require_bound(s, s.rhs, "rhs");
  for (const auto& p : s.probes) require_bound(s, p.word, "probe");
  const bool parametric = s.lhs.parametric() || s.rhs.parametric();
  if (parametric && !s.nrange) throw InputError(s.name + ": power parameter n used without nrange");
  if (s.lemma) {
    if (!s.nrange) throw InputError(s.name + ": lemma entries need an nrange");
    if (s.lemma->premise.empty() || s.lemma->base.empty())
      throw InputError(s.name + ": lemma entries need premise and base");
    for (const auto* p : {&s.lemma->w, &s.lemma->x, &s.lemma->target}) {
      require_bound(s, *p, "lemma");
      if (p->parametric()) throw InputError(s.name + ": lemma words may not depend on n");
    }
  }
}

// ---------------------------------------------------------------------------
// Verification

Word cancel_involutions(const Word& w, const std::set<std::string>& involutions) {
  Word cur = w;
  for (;;) {
    std::vector<Letter> raw;
    for (const auto& l : cur.letters()) {
      if (involutions.contains(l.gen)) {
        if (l.exp % 2 != 0) raw.push_back({l.gen, 1});
      } else {
        raw.push_back(l);
      }
    }
    Word next(raw);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Script symbols bound to a single model involution letter.
std::set<std::string> involution_symbols(const Model& model, const Binding& binding) {
  std::set<std::string> out;
  const auto invols = model.involutions();
  for (const auto& [sym, image] : binding) {
    if (image.size() != 1) continue;
    const Letter& l = image.letters().front();
    if ((l.exp == 1 || l.exp == -1) && std::find(invols.begin(), invols.end(), l.gen) != invols.end())
      out.insert(sym);
  }
  return out;
}

Check make_check(const Model& model, const Binding& binding, std::optional<long long> n, const Word& lhs,
                 const Word& rhs) {
  const Element a = model.evaluate(lhs, binding);
  const Element b = model.evaluate(rhs, binding);
  return Check{n, a == b, render(a), render(b)};
}

const IdentityScript* find_script(const std::vector<IdentityScript>& context, const std::string& name) {
  for (const auto& s : context)
    if (s.name == name) return &s;
  return nullptr;
}

IdentityScript resolve_premise(const IdentityScript& owner, const std::string& ref, const char* role,
                               const std::vector<IdentityScript>& context) {
  if (ref.find('=') != std::string::npos) {
    auto [lhs, rhs] = split_eq(ref);
    IdentityScript s;
    s.name = owner.name + "." + role;
    s.model = owner.model;
    s.binding = owner.binding;
    s.lhs = WordPattern::parse(lhs);
    s.rhs = WordPattern::parse(rhs);
    return s;
  }
  const IdentityScript* found = find_script(context, ref);
  if (!found) throw InputError(owner.name + ": " + role + " refers to unknown script " + ref);
  if (found->name == owner.name) throw InputError(owner.name + ": " + role + " refers to itself");
  return *found;
}

std::vector<long long> parameter_values(const IdentityScript& s) {
  std::vector<long long> out;
  if (!s.nrange) return out;
  for (long long n = s.nrange->lo; n <= s.nrange->hi; ++n) out.push_back(n);
  return out;
}

Word form_bracket(const Word& w, const Word& x, long long n) { return w.pow(n) * x * w.pow(-n) * x.inverse(); }
Word form_conjugated(const Word& w, const Word& x, long long n) { return x * w.pow(-n) * x.inverse() * w.pow(n); }

}  // namespace

Certificate apply_inversion_lemma(const LemmaInput& in) {
  const auto t0 = Clock::now();
  const Model& model = find_model(in.model);
  if (in.premise.status != Status::kPass || in.base.status != Status::kPass)
    throw InputError(in.name + ": inversion lemma premises are not verified");
  if (in.premise.model != in.model || in.base.model != in.model)
    throw InputError(in.name + ": inversion lemma premises live in a different model");
  if (in.premise_script.lhs.parametric() || in.premise_script.rhs.parametric() ||
      in.base_script.lhs.parametric() || in.base_script.rhs.parametric())
    throw InputError(in.name + ": inversion lemma premises must be parameter-free");

  const auto invols = involution_symbols(model, in.binding);
  auto canon = [&](const Word& w) { return cancel_involutions(w, invols); };
  auto matches = [](const Word& a, const Word& b, const Word& p, const Word& q) {
    return (a == p && b == q) || (a == q && b == p);
  };

  const Word pl = canon(in.premise_script.lhs.word());
  const Word pr = canon(in.premise_script.rhs.word());
  const Word& w = in.w;
  const Word& x = in.x;
  const bool premise_ok = matches(pl, pr, canon(x * w * x.inverse()), canon(w.inverse())) ||
                          matches(pl, pr, canon(x * w.inverse() * x.inverse()), canon(w));
  if (!premise_ok)
    throw InputError(in.name + ": premise " + in.premise_script.name + " is not of the form x w x^-1 = w^-1");
  const bool base_ok =
      matches(canon(in.base_script.lhs.word()), canon(in.base_script.rhs.word()), canon(in.target), canon(w * w));
  if (!base_ok) throw InputError(in.name + ": base " + in.base_script.name + " is not of the form target = w^2");

  Certificate c;
  c.name = in.name;
  c.model = in.model;
  c.lhs = "(" + in.target.str() + ")^n";
  c.rhs = "(" + w.str() + ")^n (" + x.str() + ") (" + w.str() + ")^-n (" + x.str() + ")^-1";
  c.claim = "for all integers n: (" + in.target.str() + ")^n = (" + w.str() + ")^n (" + x.str() + ") (" + w.str() +
            ")^-n (" + x.str() + ")^-1 = (" + x.str() + ") (" + w.str() + ")^-n (" + x.str() + ")^-1 (" +
            w.str() + ")^n";
  c.citations = model.soundness();
  c.citations.push_back(
      "inversion lemma: x w x^-1 = w^-1 gives x w^-n x^-1 = w^n for every n, so with target = w^2, "
      "target^n = w^2n = w^n x w^-n x^-1 = x w^-n x^-1 w^n");
  c.premises = {in.premise, in.base};
  bool ok = true;
  for (long long n = in.nrange.lo; n <= in.nrange.hi; ++n) {
    const Word lhs = in.target.pow(n);
    for (const Word& rhs : {form_bracket(w, x, n), form_conjugated(w, x, n)}) {
      c.checks.push_back(make_check(model, in.binding, n, lhs, rhs));
      ok = ok && c.checks.back().equal;
    }
  }
  c.status = ok ? Status::kPassAllN : Status::kFail;
  c.elapsed_ms = ms_since(t0);
  return c;
}

Certificate verify(const IdentityScript& script, const std::vector<IdentityScript>& context) {
  const auto t0 = Clock::now();
  validate(script);
  const Model& model = find_model(script.model);

  Certificate c;
  c.name = script.name;
  c.model = script.model;
  c.citations = model.soundness();
  c.citations.insert(c.citations.end(), script.notes.begin(), script.notes.end());

  if (script.reuse) {
    const IdentityScript* target = find_script(context, *script.reuse);
    if (!target || target->name == script.name || target->reuse)
      throw InputError(script.name + ": cannot reuse '" + *script.reuse + "'");
    if (target->model != script.model)
      throw InputError(script.name + ": reused script lives in model " + target->model);
    Certificate inner = verify(*target, context);
    c.status = inner.status;
    c.lhs = inner.lhs;
    c.rhs = inner.rhs;
    c.claim = inner.claim;
    c.premises.push_back(std::move(inner));
    c.elapsed_ms = ms_since(t0);
    return c;
  }

  c.lhs = script.lhs.str();
  c.rhs = script.rhs.str();

  std::vector<std::optional<long long>> ns;
  if (script.nrange)
    for (long long n : parameter_values(script)) ns.emplace_back(n);
  else
    ns.emplace_back(std::nullopt);

  bool all_equal = true;
  for (const auto& n : ns) {
    const long long at = n.value_or(0);
    c.checks.push_back(make_check(model, script.binding, n, script.lhs.instantiate(at), script.rhs.instantiate(at)));
    all_equal = all_equal && c.checks.back().equal;
  }

  if (!script.probes.empty()) {
    const long long at = ns.front().value_or(0);
    const Element lhs = model.evaluate(script.lhs.instantiate(at), script.binding);
    for (const auto& p : script.probes) {
      const Element e = model.evaluate(p.word.instantiate(at), script.binding);
      c.probes.push_back({p.label, p.word.str(), e == lhs, render(e)});
    }
  }

  if (!script.lemma) {
    c.status = all_equal ? Status::kPass : Status::kFail;
    c.elapsed_ms = ms_since(t0);
    return c;
  }

  const LemmaSpec& spec = *script.lemma;
  LemmaInput in;
  in.name = script.name + ".lemma";
  in.model = script.model;
  in.binding = script.binding;
  in.premise_script = resolve_premise(script, spec.premise, "premise", context);
  in.base_script = resolve_premise(script, spec.base, "base", context);
  in.premise = verify(in.premise_script, context);
  in.base = verify(in.base_script, context);
  in.w = spec.w.word();
  in.x = spec.x.word();
  in.target = spec.target.word();
  in.nrange = *script.nrange;
  Certificate lemma = apply_inversion_lemma(in);

  // The all-n claim covers this script when every instance is, letter for
  // letter, target^n against one of the two lemma forms.
  const auto invols = involution_symbols(model, script.binding);
  bool covered = true;
  for (long long n : parameter_values(script)) {
    const Word l = cancel_involutions(script.lhs.instantiate(n), invols);
    const Word r = cancel_involutions(script.rhs.instantiate(n), invols);
    const Word t = cancel_involutions(in.target.pow(n), invols);
    const Word a = cancel_involutions(form_bracket(in.w, in.x, n), invols);
    const Word b = cancel_involutions(form_conjugated(in.w, in.x, n), invols);
    const bool ok = (l == t && (r == a || r == b)) || (r == t && (l == a || l == b));
    covered = covered && ok;
  }

  if (!all_equal)
    c.status = Status::kFail;
  else if (lemma.status == Status::kPassAllN && covered)
    c.status = Status::kPassAllN;
  else
    c.status = Status::kPass;
  if (c.status == Status::kPassAllN) c.claim = lemma.claim;
  c.premises.push_back(std::move(lemma));
  c.elapsed_ms = ms_since(t0);
  return c;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json Certificate::to_json(bool with_timing) const {
  nlohmann::json j;
  j["name"] = name;
  j["model"] = model;
  j["status"] = to_string(status);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["checks"] = nlohmann::json::array();
  for (const auto& ch : checks) {
    nlohmann::json cj{{"equal", ch.equal}, {"lhs_form", ch.lhs_form}, {"rhs_form", ch.rhs_form}};
    cj["n"] = ch.n ? nlohmann::json(*ch.n) : nlohmann::json(nullptr);
    j["checks"].push_back(std::move(cj));
  }
  j["probes"] = nlohmann::json::array();
  for (const auto& p : probes)
    j["probes"].push_back({{"label", p.label}, {"word", p.word}, {"equal", p.equal}, {"form", p.form}});
  j["citations"] = citations;
  j["claim"] = claim ? nlohmann::json(*claim) : nlohmann::json(nullptr);
  j["premises"] = nlohmann::json::array();
  for (const auto& p : premises) j["premises"].push_back(p.to_json(with_timing));
  j["error"] = error ? nlohmann::json(*error) : nlohmann::json(nullptr);
  if (with_timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["certificates"] = nlohmann::json::array();
  for (const auto& c : certificates) j["certificates"].push_back(c.to_json(with_timing));
  j["summary"] = {{"total", certificates.size()}, {"passed", passed}, {"failed", failed}};
  return j;
}

// ---------------------------------------------------------------------------
// Suite

SuiteReport verify_suite(const std::vector<IdentityScript>& manifest, Execution exec) {
  SuiteReport report;
  report.certificates.resize(manifest.size());
  auto run = [&](std::size_t i) {
    try {
      report.certificates[i] = verify(manifest[i], manifest);
    } catch (const std::exception& e) {
      Certificate c;
      c.name = manifest[i].name;
      c.model = manifest[i].model;
      c.status = Status::kFail;
      c.error = e.what();
      report.certificates[i] = std::move(c);
    }
  };
  const auto count = static_cast<std::ptrdiff_t>(manifest.size());
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) run(static_cast<std::size_t>(i));
  }
  for (const auto& c : report.certificates) (c.passed() ? report.passed : report.failed)++;
  return report;
}

// ---------------------------------------------------------------------------
// Mutations

namespace {

enum class MutationKind { kExponent, kSwap, kDropInvolution };

std::optional<Word> try_mutation(MutationKind kind, const Word& w, const Model& model, const IdentityScript& s,
                                 std::mt19937_64& rng) {
  const auto& letters = w.letters();
  if (letters.empty()) return std::nullopt;
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<Letter> raw(letters.begin(), letters.end());
  switch (kind) {
    case MutationKind::kExponent: {
      const std::size_t i = pick(raw.size());
      raw[i].exp += (rng() % 2 == 0) ? 1 : -1;
      return Word(raw);
    }
    case MutationKind::kSwap: {
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        const Word ab{raw[i], raw[i + 1]};
        const Word ba{raw[i + 1], raw[i]};
        if (!(model.evaluate(ab, s.binding) == model.evaluate(ba, s.binding))) candidates.push_back(i);
      }
      if (candidates.empty()) return std::nullopt;
      const std::size_t i = candidates[pick(candidates.size())];
      std::swap(raw[i], raw[i + 1]);
      return Word(raw);
    }
    case MutationKind::kDropInvolution: {
      const auto invols = involution_symbols(model, s.binding);
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < raw.size(); ++i)
        if (invols.contains(raw[i].gen)) candidates.push_back(i);
      if (candidates.empty()) return std::nullopt;
      raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(candidates[pick(candidates.size())]));
      return Word(raw);
    }
  }
  return std::nullopt;
}

const char* kind_name(MutationKind k) {
  switch (k) {
    case MutationKind::kExponent: return "exponent";
    case MutationKind::kSwap: return "swap";
    case MutationKind::kDropInvolution: return "drop-r";
  }
  return "?";
}

}  // namespace

std::vector<IdentityScript> mutate(const std::vector<IdentityScript>& manifest, int count, std::uint64_t seed) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    const auto& s = manifest[i];
    if (!s.lemma && !s.reuse && !s.lhs.parametric() && !s.rhs.parametric()) eligible.push_back(i);
  }
  std::vector<IdentityScript> out;
  if (count <= 0) return out;
  if (eligible.empty()) throw InputError("manifest has no entries that can be mutated");

  std::mt19937_64 rng(seed);
  constexpr MutationKind kinds[] = {MutationKind::kExponent, MutationKind::kSwap, MutationKind::kDropInvolution};
  while (static_cast<int>(out.size()) < count) {
    const IdentityScript& src = manifest[eligible[rng() % eligible.size()]];
    const Model& model = find_model(src.model);
    const bool on_rhs = rng() % 2 == 0;
    const Word original = on_rhs ? src.rhs.word() : src.lhs.word();
    const Element before = model.evaluate(original, src.binding);
    const std::size_t first = static_cast<std::size_t>(rng() % 3);
    for (std::size_t k = 0; k < 3; ++k) {
      const MutationKind kind = kinds[(first + k) % 3];
      auto mutated = try_mutation(kind, original, model, src, rng);
      if (!mutated || model.evaluate(*mutated, src.binding) == before) continue;
      IdentityScript m = src;
      m.name = src.name + "~mut" + std::to_string(out.size() + 1);
      (on_rhs ? m.rhs : m.lhs) = WordPattern(*mutated);
      m.probes.clear();
      m.notes.push_back(std::string("mutation: ") + kind_name(kind) + " on " + (on_rhs ? "rhs" : "lhs"));
      out.push_back(std::move(m));
      break;
    }
  }
  return out;
}

}  // namespace twistcert
