#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csgin/poly.hpp"

namespace csgin {

/// Malformed polynomial text; position() is the byte offset of the problem.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

template <FieldElement K>
class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial<K> parse() {
    Polynomial<K> p = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expression() {
    skip_space();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial<K> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial<K> power() {
    Polynomial<K> base = primary();
    if (accept('^')) {
      skip_space();
      long long e = integer();
      if (e < 0) throw ParseError("negative exponent", pos_);
      Polynomial<K> r = Polynomial<K>::constant(ring_, 1);
      for (long long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  long long integer() {
    std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (1LL << 58)) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  Polynomial<K> primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<K> inner = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = integer();
      long long den = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        den = integer();
      }
      return Polynomial<K>::constant(ring_, K::from_fraction(num, den, ring_->characteristic()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string token(text_.substr(start, pos_ - start));
      auto var = ring_->find_variable(token);
      if (!var) throw ParseError("unknown variable '" + token + "'", start);
      return Polynomial<K>::variable(ring_, *var);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `coeff*mon +- ...` with variables x<i>_<j> or ring aliases; allows ^, parentheses, a/b.
template <FieldElement K>
Polynomial<K> parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser<K>(text, ring).parse();
}

std::string monomial_to_string(const Monomial& m, const BlockRing& ring);

template <FieldElement K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coeff.prints_negative();
    K mag = neg ? -t.coeff : t.coeff;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    bool unit = mag.is_one();
    if (t.mono.is_one()) {
      out += mag.to_string();
    } else {
      if (!unit) out += mag.to_string() + "*";
      out += monomial_to_string(t.mono, *f.ring());
    }
  }
  return out;
}

}  // namespace csgin
