#include "twistcert/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace twistcert {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty generator name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i]) throw InputError("duplicate generator name: " + names_[i]);
  }
}

bool Alphabet::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Alphabet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown generator: " + std::string(name));
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

void push_letter(std::vector<Letter>& out, const Letter& l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
  } else {
    out.push_back(l);
  }
}

}  // namespace

Word::Word(std::span<const Letter> raw) {
  for (const auto& l : raw) push_letter(letters_, l);
}

Word::Word(std::initializer_list<Letter> raw) : Word(std::span<const Letter>(raw.begin(), raw.size())) {}

Word Word::generator(std::string name, long long exp) {
  return Word{Letter{std::move(name), exp}};
}

long long Word::length() const {
  long long total = 0;
  for (const auto& l : letters_) total += l.exp < 0 ? -l.exp : l.exp;
  return total;
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word Word::pow(long long k) const {
  if (k == 0 || empty()) return {};
  const Word base = k > 0 ? *this : inverse();
  const long long reps = k > 0 ? k : -k;
  Word out;
  for (long long i = 0; i < reps; ++i) out *= base;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) push_letter(letters_, l);
  return *this;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen;
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

Word reduce(std::span<const Letter> raw) { return Word(raw); }

Word reduce(std::span<const Letter> raw, const Alphabet& alphabet) {
  for (const auto& l : raw)
    if (!alphabet.contains(l.gen)) throw InputError("unknown generator: " + l.gen);
  return Word(raw);
}

Word invert(const Word& w) { return w.inverse(); }

Word commutator(const Word& x, const Word& y, CommutatorConvention convention) {
  if (convention == CommutatorConvention::kXYXinvYinv) return x * y * x.inverse() * y.inverse();
  return x.inverse() * y.inverse() * x * y;
}

Word substitute(const Word& w, const Binding& binding) {
  Word out;
  for (const auto& l : w.letters()) {
    auto it = binding.find(l.gen);
    if (it == binding.end()) throw InputError("unbound generator: " + l.gen);
    out *= it->second.pow(l.exp);
  }
  return out;
}

std::vector<std::string> generators_of(const Word& w) {
  std::vector<std::string> out;
  for (const auto& l : w.letters())
    if (std::find(out.begin(), out.end(), l.gen) == out.end()) out.push_back(l.gen);
  return out;
}

std::string Exponent::str() const {
  if (coef == 0) return std::to_string(offset);
  std::string out;
  if (coef == -1)
    out = "-n";
  else if (coef == 1)
    out = "n";
  else
    out = std::to_string(coef) + "n";
  if (offset > 0) out += "+" + std::to_string(offset);
  if (offset < 0) out += std::to_string(offset);
  return out;
}

// ---------------------------------------------------------------------------
// Pattern syntax

struct WordPattern::Node {
  std::string gen;               // empty for a group
  std::vector<Node> children;    // group contents
  Exponent exp;
};

namespace {

using Node = WordPattern::Node;

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  Node parse() {
    Node root;
    root.children = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return root;
  }

 private:
  std::vector<Node> sequence() {
    std::vector<Node> items;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return items;
      Node item;
      if (text_[pos_] == '(') {
        ++pos_;
        item.children = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else {
        item.gen = name();
      }
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        item.exp = exponent();
      }
      expect_delimiter();
      if (item.gen == "e") {
        if (item.exp.coef != 0 || item.exp.offset != 1) fail("identity token 'e' takes no exponent");
        continue;
      }
      items.push_back(std::move(item));
    }
  }

  std::string name() {
    const std::size_t start = pos_;
    auto is_head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_tail = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= text_.size() || !is_head(text_[pos_])) fail("expected generator name");
    while (pos_ < text_.size() && is_tail(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Exponent exponent() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long magnitude = 1;
    const bool has_digits = pos_ > start;
    if (has_digits) {
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, magnitude);
      if (ec != std::errc()) fail("exponent out of range");
    }
    const bool has_n = pos_ < text_.size() && text_[pos_] == 'n';
    if (has_n) ++pos_;
    if (!has_digits && !has_n) fail("malformed exponent");
    const long long value = negative ? -magnitude : magnitude;
    if (value == 0) fail("exponent must be nonzero");
    return has_n ? Exponent{value, 0} : Exponent{0, value};
  }

  void expect_delimiter() {
    if (pos_ == text_.size()) return;
    const char c = text_[pos_];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') return;
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("word syntax error at column " + std::to_string(pos_ + 1) + ": " + what +
                     " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool node_parametric(const Node& node) {
  if (node.exp.parametric()) return true;
  return std::any_of(node.children.begin(), node.children.end(), node_parametric);
}

Word node_eval(const Node& node, long long n) {
  Word base;
  if (node.gen.empty()) {
    for (const auto& child : node.children) base *= node_eval(child, n);
  } else {
    base = Word::generator(node.gen);
  }
  return base.pow(node.exp.at(n));
}

void node_generators(const Node& node, std::vector<std::string>& out) {
  if (!node.gen.empty() && std::find(out.begin(), out.end(), node.gen) == out.end())
    out.push_back(node.gen);
  for (const auto& child : node.children) node_generators(child, out);
}

std::string node_str(const Node& node, bool top) {
  std::string body;
  if (node.gen.empty()) {
    for (const auto& child : node.children) {
      if (!body.empty()) body += ' ';
      body += node_str(child, false);
    }
    if (body.empty()) body = "e";
    if (!top) body = "(" + body + ")";
  } else {
    body = node.gen;
  }
  if (!top && (node.exp.coef != 0 || node.exp.offset != 1)) body += "^" + node.exp.str();
  return body;
}

}  // namespace

WordPattern::WordPattern() : root_(std::make_shared<const Node>()) {}

WordPattern::WordPattern(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

WordPattern::WordPattern(const Word& w) {
  Node root;
  for (const auto& l : w.letters()) root.children.push_back(Node{l.gen, {}, Exponent{0, l.exp}});
  root_ = std::make_shared<const Node>(std::move(root));
}

WordPattern WordPattern::parse(std::string_view text) {
  return WordPattern(std::make_shared<const Node>(PatternParser(text).parse()));
}

bool WordPattern::parametric() const { return node_parametric(*root_); }

Word WordPattern::instantiate(long long n) const { return node_eval(*root_, n); }

Word WordPattern::word() const {
  if (parametric()) throw InputError("word depends on the power parameter n: " + str());
  return node_eval(*root_, 0);
}

std::vector<std::string> WordPattern::generators() const {
  std::vector<std::string> out;
  node_generators(*root_, out);
  return out;
}

std::string WordPattern::str() const { return node_str(*root_, true); }

Word parse_word(std::string_view text) { return WordPattern::parse(text).word(); }

}  // namespace twistcert
