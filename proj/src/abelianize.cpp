#include "twistcert/abelianize.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace twistcert {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InputError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& k) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

std::string IntegerMatrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

mpz_class determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), m.at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d.at(i, i));
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
  IntegerMatrix& d = s.d;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d.at(i, j) == 0) continue;
          if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return s;  // trailing block is zero

      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold a row holding a non-multiple into row t.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            s.u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  return s;
}

std::string AbelianGroup::str() const {
  std::vector<std::string> parts;
  for (const auto& d : torsion) parts.push_back("Z" + d.get_str());
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

// ---------------------------------------------------------------------------
// Presentations

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::vector<std::string> gens;
  std::vector<std::pair<std::size_t, Word>> rels;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  bool saw_gens = false;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) line_error(lineno, "expected 'key: value'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string value = trim(std::string_view(line).substr(colon + 1));
    try {
      if (key == "gens") {
        for (auto& g : split_ws(value)) gens.push_back(g);
        saw_gens = true;
      } else if (key == "rel") {
        rels.emplace_back(lineno, parse_word(value));
      } else if (key == "conj") {
        const auto toks = split_ws(value);
        if (toks.size() != 2) line_error(lineno, "conj expects two symbols");
        p.conjugates[toks[0]] = toks[1];
      } else {
        line_error(lineno, "unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      line_error(lineno, e.what());
    }
  }
  if (!saw_gens) throw InputError("presentation has no 'gens:' line");
  p.gens = Alphabet(gens);
  for (auto& [line, w] : rels) {
    for (const auto& l : w.letters())
      if (!p.gens.contains(l.gen)) line_error(line, "unknown generator " + l.gen);
    p.relators.push_back(std::move(w));
  }
  for (const auto& [x, y] : p.conjugates) {
    if (p.gens.contains(x)) throw InputError("conj: " + x + " is already a generator");
    if (!p.gens.contains(y) && !p.conjugates.contains(y)) throw InputError("conj: unknown symbol " + y);
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix a(p.relators.size(), p.gens.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& l : p.relators[i].letters()) a.at(i, p.gens.index_of(l.gen)) += static_cast<long>(l.exp);
  return a;
}

namespace {

AbelianGroup group_from_smith(const SmithForm& s, std::size_t ngens) {
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (const auto& d : s.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) g.torsion.push_back(d);
  }
  g.free_rank = ngens - nonzero;
  return g;
}

SmithForm smith_of(const Presentation& p) {
  // An empty relator list still needs the column space for V.
  IntegerMatrix a = relation_matrix(p);
  if (a.rows() == 0) a = IntegerMatrix(1, p.gens.size());
  return smith_normal_form(a);
}

}  // namespace

AbelianGroup abelianization(const Presentation& p) { return group_from_smith(smith_of(p), p.gens.size()); }

H1Map::H1Map(const Presentation& p)
    : presentation_(p), smith_(smith_of(p)), group_(group_from_smith(smith_, p.gens.size())) {}

std::string H1Map::resolve(const std::string& symbol) const {
  std::string cur = symbol;
  std::set<std::string> seen;
  while (!presentation_.gens.contains(cur)) {
    auto it = presentation_.conjugates.find(cur);
    if (it == presentation_.conjugates.end()) throw InputError("symbol " + cur + " is neither a generator nor declared conjugate to one");
    if (!seen.insert(cur).second) throw InputError("cyclic conjugacy declarations at " + cur);
    cur = it->second;
  }
  return cur;
}

std::vector<mpz_class> H1Map::exponent_sums(const Word& w) const {
  std::vector<mpz_class> sums(presentation_.gens.size());
  for (const auto& l : w.letters()) sums[presentation_.gens.index_of(resolve(l.gen))] += static_cast<long>(l.exp);
  return sums;
}

std::vector<mpz_class> H1Map::canonical(const std::vector<mpz_class>& sums) const {
  if (sums.size() != presentation_.gens.size())
    throw InputError("image vector has " + std::to_string(sums.size()) + " entries, group has " +
                     std::to_string(presentation_.gens.size()) + " generators");
  const IntegerMatrix& v = smith_.v;
  const auto diag = smith_.diagonal();
  std::vector<mpz_class> torsion, free;
  for (std::size_t k = 0; k < v.cols(); ++k) {
    mpz_class c = 0;
    for (std::size_t i = 0; i < sums.size(); ++i) c += sums[i] * v.at(i, k);
    const mpz_class d = k < diag.size() ? diag[k] : mpz_class(0);
    if (d == 1) continue;
    if (d == 0) {
      free.push_back(c);
    } else {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
      torsion.push_back(r);
    }
  }
  torsion.insert(torsion.end(), free.begin(), free.end());
  return torsion;
}

std::vector<mpz_class> h1_image(const Presentation& p, const Word& w) { return H1Map(p).image(w); }

std::string to_string(Verdict v) { return v == Verdict::kObstructed ? "Obstructed" : "Inconclusive"; }

namespace {

bool is_zero(const std::vector<mpz_class>& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace

ObstructionCertificate commutator_obstruction(const Presentation& p, const Word& w) {
  const H1Map h1(p);
  ObstructionCertificate c;
  c.element = w.str();
  c.group = h1.group();
  c.exponent_sums = h1.exponent_sums(w);
  c.image = h1.canonical(c.exponent_sums);
  c.verdict = is_zero(c.image) ? Verdict::kInconclusive : Verdict::kObstructed;
  return c;
}

ObstructionCertificate commutator_obstruction(const Presentation& p, const ObstructionEntry& entry) {
  const H1Map h1(p);
  ObstructionCertificate c;
  c.element = entry.surface + ": " + entry.class_label;
  c.group = h1.group();
  c.exponent_sums = entry.image;
  c.image = h1.canonical(entry.image);
  c.verdict = is_zero(c.image) ? Verdict::kInconclusive : Verdict::kObstructed;
  c.citation = entry.citation;
  return c;
}

std::vector<ObstructionEntry> parse_obstructions(std::string_view text) {
  std::vector<ObstructionEntry> out;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (trim(raw).empty() || trim(raw)[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
      const auto semi = raw.find(';', start);
      if (semi == std::string::npos) line_error(lineno, "expected 4 ';'-separated fields");
      fields.push_back(trim(std::string_view(raw).substr(start, semi - start)));
      start = semi + 1;
    }
    fields.push_back(trim(std::string_view(raw).substr(start)));
    ObstructionEntry e{fields[0], fields[1], {}, fields[3]};
    if (e.surface.empty() || e.class_label.empty()) line_error(lineno, "empty surface or class label");
    if (e.citation.empty()) line_error(lineno, "citation must be nonempty");
    for (const auto& tok : split_ws(fields[2])) {
      mpz_class x;
      if (x.set_str(tok, 10) != 0) line_error(lineno, "bad integer '" + tok + "'");
      e.image.push_back(x);
    }
    if (e.image.empty()) line_error(lineno, "empty image vector");
    out.push_back(std::move(e));
  }
  return out;
}

std::string vector_str(const std::vector<mpz_class>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

}  // namespace twistcert
