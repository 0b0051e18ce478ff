#include "srdmod/parse.hpp"

#include <cctype>
#include <optional>
#include <charconv>

namespace srdmod {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Field k, const std::vector<std::string>& labels)
      : s_(text), k_(k), labels_(labels), n_(labels.size()) {}

  DiffOp parse() {
    DiffOp r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("parse error at column " + std::to_string(pos_ + 1) + " of \"" + s_ + "\": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  unsigned integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    unsigned v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail("integer out of range");
    return v;
  }

  DiffOp one() const { return DiffOp::identity(k_, n_); }

  DiffOp power(const DiffOp& base, unsigned e) const {
    DiffOp r = one();
    for (unsigned i = 0; i < e; ++i) r = compose(r, base);
    return r;
  }

  DiffOp expr() {
    DiffOp r(k_, n_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    for (;;) {
      DiffOp t = term();
      if (negate) t = -t;
      r += t;
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    return r;
  }

  DiffOp term() {
    DiffOp r = factor();
    for (;;) {
      if (accept('*')) {
        r = compose(r, factor());
      } else if (starts_factor()) {
        r = compose(r, factor());
      } else {
        break;
      }
    }
    return r;
  }

  DiffOp factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    DiffOp base;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      return number();
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return symbol();
    } else {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    if (accept('^')) base = power(base, integer());
    return base;
  }

  DiffOp number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    mpq_class q(s_.substr(start, pos_ - start));
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    DiffOp r = one();
    return r * Scalar(k_, q);
  }

  std::optional<std::size_t> label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == name) return i;
    return std::nullopt;
  }

  std::optional<std::size_t> numbered(const std::string& name, char prefix) const {
    if (name.size() < 2 || name[0] != prefix) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    const unsigned long v = std::stoul(name.substr(1));
    if (v == 0 || v > n_) return std::nullopt;
    return v - 1;
  }

  DiffOp symbol() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);

    std::optional<std::size_t> var = label_index(name);
    std::optional<std::size_t> der;
    if (!var) {
      der = numbered(name, 'd');
      if (!der && name.size() > 2 && name.compare(0, 2, "d_") == 0) der = label_index(name.substr(2));
      if (!der) var = numbered(name, 'x');
    }
    if (!var && !der) {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }

    if (var) {
      const unsigned e = accept('^') ? integer() : 1;
      return DiffOp::multiplication(Polynomial::monomial(k_, ExponentVector::unit(n_, *var, e)));
    }
    const auto divided = [&](unsigned e) {
      return DiffOp::monomial(k_, {ExponentVector(n_), ExponentVector::unit(n_, *der, e)});
    };
    if (!accept('^')) return divided(1);
    if (accept('[')) {
      const unsigned e = integer();
      if (!accept(']')) fail("expected ']'");
      return divided(e);
    }
    return power(divided(1), integer());
  }

  const std::string& s_;
  Field k_;
  const std::vector<std::string>& labels_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

DiffOp parse_operator(const std::string& text, Field k, const std::vector<std::string>& labels) {
  if (trim(text).empty()) throw ParseError("empty expression");
  return Parser(text, k, labels).parse();
}

Polynomial parse_polynomial(const std::string& text, Field k, const std::vector<std::string>& labels) {
  const DiffOp op = parse_operator(text, k, labels);
  Polynomial p(k, labels.size());
  for (const auto& [m, c] : op.terms()) {
    if (!m.t.is_zero()) throw ParseError("derivative in polynomial \"" + text + "\"");
    p.add_term(m.a, c);
  }
  return p;
}

std::pair<Polynomial, Polynomial> parse_fraction(const std::string& text, Field k,
                                                 const std::vector<std::string>& labels) {
  int depth = 0;
  std::size_t split = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c != '/' || depth != 0) continue;
    std::size_t j = i + 1;
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j < text.size() && (std::isalpha(static_cast<unsigned char>(text[j])) || text[j] == '(')) split = i;
  }
  if (split == std::string::npos)
    return {parse_polynomial(text, k, labels), Polynomial::constant(k, labels.size(), Scalar::one(k))};
  return {parse_polynomial(text.substr(0, split), k, labels), parse_polynomial(text.substr(split + 1), k, labels)};
}

Scalar parse_scalar(const std::string& text, Field k) {
  std::string t = trim(text);
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t = trim(t.substr(1));
  }
  if (t.empty() || t.find_first_not_of("0123456789/") != std::string::npos || t.front() == '/' ||
      t.back() == '/' || t.find('/') != t.rfind('/'))
    throw ParseError("not a rational number: \"" + text + "\"");
  mpq_class q(t);
  if (q.get_den() == 0) throw ParseError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  if (neg) q = -q;
  return Scalar(k, q);
}

std::vector<Scalar> parse_point(const std::string& text, Field k) {
  std::vector<Scalar> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_scalar(text.substr(start, comma - start), k));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::pair<int, int> parse_box(const std::string& text) {
  const std::string t = trim(text);
  const auto colon = t.find(':', 1);
  if (colon == std::string::npos) throw ParseError("box must look like lo:hi, got \"" + text + "\"");
  int lo = 0, hi = 0;
  const std::string a = t.substr(0, colon), b = t.substr(colon + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), lo);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), hi);
  if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() || r2.ec != std::errc() ||
      r2.ptr != b.data() + b.size())
    throw ParseError("box must look like lo:hi, got \"" + text + "\"");
  if (lo > hi) throw ParseError("empty box " + text);
  return {lo, hi};
}

}  // namespace srdmod
