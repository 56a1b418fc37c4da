#include "conemod/poly/parse.hpp"

#include <cctype>

#include "conemod/poly/fraction.hpp"

namespace conemod {

namespace {

template <class Value>
struct ValueOps;

template <>
struct ValueOps<Poly> {
  static constexpr bool allows_division = false;
  static Poly constant(const RingPtr& r, const Rational& c) { return Poly::constant(r, c); }
  static Poly variable(const RingPtr& r, std::size_t i) { return Poly::variable(r, i); }
  static Poly pow(const Poly& p, unsigned n) { return p.pow(n); }
  static bool is_zero(const Poly& p) { return p.is_zero(); }
  static Poly divide(const Poly& a, const Poly&) { return a; }
};

template <>
struct ValueOps<Fraction> {
  static constexpr bool allows_division = true;
  static Fraction constant(const RingPtr& r, const Rational& c) { return Fraction(Poly::constant(r, c)); }
  static Fraction variable(const RingPtr& r, std::size_t i) { return Fraction(Poly::variable(r, i)); }
  static Fraction pow(const Fraction& p, unsigned n) { return p.pow(n); }
  static bool is_zero(const Fraction& p) { return p.is_zero(); }
  static Fraction divide(const Fraction& a, const Fraction& b) { return a / b; }
};

template <class Value>
class Parser {
  using Ops = ValueOps<Value>;

 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  // A signed integer literal may open a term: "-3/2*x".
  bool at_signed_int() {
    skip_space();
    if (pos_ + 1 >= text_.size() || text_[pos_] != '-') return false;
    std::size_t q = pos_ + 1;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    return q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]));
  }

  Value expr() {
    // A leading minus on a non-numeric term is accepted as negation.
    if (peek('-') && !at_signed_int()) {
      ++pos_;
      Value v = -term(false);
      return rest_of_expr(std::move(v));
    }
    return rest_of_expr(term(true));
  }

  Value rest_of_expr(Value v) {
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term(false);
      } else if (peek('-')) {
        ++pos_;
        v -= term(false);
      } else {
        return v;
      }
    }
  }

  Value term(bool leading) {
    Value v = factor(leading);
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v *= factor(false);
      } else if (Ops::allows_division && peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        Value d = factor(false);
        if (Ops::is_zero(d)) throw ParseError("division by zero", at);
        v = Ops::divide(v, d);
      } else {
        return v;
      }
    }
  }

  Value factor(bool leading) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || (leading && at_signed_int())) {
      return Ops::constant(ring_, rational());
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = ring_->vars.index_of(name);
      if (!index) throw UnknownIdentifier(name, start);
      Value v = Ops::variable(ring_, *index);
      if (peek('^')) {
        ++pos_;
        if (!at_digit()) throw ParseError("expected exponent", pos_);
        v = Ops::pow(v, natural());
      }
      return v;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  unsigned natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected natural number", pos_);
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(std::stoul(std::string(digits)));
  }

  Rational rational() {
    skip_space();
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string literal(text_.substr(start, pos_ - start));
    // "int/posint": only consume the slash when digits follow.
    std::size_t q = pos_;
    while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
    if (q < text_.size() && text_[q] == '/') {
      std::size_t r = q + 1;
      while (r < text_.size() && std::isspace(static_cast<unsigned char>(text_[r]))) ++r;
      if (r < text_.size() && std::isdigit(static_cast<unsigned char>(text_[r]))) {
        const std::size_t den_start = r;
        while (r < text_.size() && std::isdigit(static_cast<unsigned char>(text_[r]))) ++r;
        const std::string den(text_.substr(den_start, r - den_start));
        if (Integer(den) == 0) throw ParseError("zero denominator", den_start);
        literal += "/" + den;
        pos_ = r;
      }
    }
    Rational value = parse_rational(literal);
    return negative ? Rational(-value) : value;
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser<Poly>(text, ring).parse(); }

Fraction parse_fraction(std::string_view text, const RingPtr& ring) {
  return Parser<Fraction>(text, ring).parse();
}

std::string to_string(const Monomial& m, const VarTable& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      first = false;
    } else if (c < 0) {
      s += " - ";
      c = -c;
    } else {
      s += " + ";
    }
    const std::string mono = to_string(t.mono, p.ring().vars);
    if (mono.empty()) {
      s += to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += to_string(c) + "*" + mono;
    }
  }
  return s;
}

}  // namespace conemod
