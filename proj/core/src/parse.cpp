#include "eulercert/parse.hpp"

#include <cctype>
#include <sstream>

#include "eulercert/errors.hpp"

namespace eulercert {

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, const FieldDesc& field)
      : text_(text), field_(field) {}

  FieldElement parse() {
    FieldElement e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = peek() == '-' || peek() == '+' ? signed_term() : term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  FieldElement signed_term() {
    if (eat('-')) return -signed_term();
    eat('+');
    return term();
  }

  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (eat('*')) v *= factor();
      else if (eat('/')) {
        FieldElement d = factor();
        if (d.is_zero()) throw ParseError("division by zero in element", pos_);
        v /= d;
      } else {
        return v;
      }
    }
  }

  FieldElement factor() {
    if (eat('-')) return -factor();
    FieldElement base = primary();
    if (eat('^')) {
      unsigned long e = integer_literal();
      FieldElement r = field_one(field_);
      for (unsigned long i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  FieldElement primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = big_integer();
      return embed_rational(Rational(n), field_);
    }
    if (c == 't' && !match_keyword("sqrt")) {
      ++pos_;
      if (field_.kind != FieldKind::RatFunc)
        throw ParseError("'t' is only valid in the ratfunc field", pos_);
      return FieldElement::rat_func(Poly::t(), Poly::one());
    }
    if (match_keyword("sqrt")) {
      pos_ += 4;
      if (!eat('(')) throw ParseError("expected '(' after sqrt", pos_);
      mpz_class d = big_integer();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      if (field_.kind != FieldKind::QuadExt)
        throw ParseError("sqrt() is only valid in a quadratic field", pos_);
      if (d != field_.d)
        throw ParseError("sqrt radicand does not match the field", pos_);
      return FieldElement::quad(Rational(0), Rational(1), d);
    }
    if (c == '.') throw ParseError("floating literals are not accepted", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  bool match_keyword(std::string_view kw) {
    skip_ws();
    return text_.substr(pos_, kw.size()) == kw;
  }

  mpz_class big_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", pos_);
    if (pos_ < text_.size() && text_[pos_] == '.')
      throw ParseError("floating literals are not accepted", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  unsigned long integer_literal() {
    mpz_class n = big_integer();
    if (!n.fits_ulong_p()) throw ParseError("integer out of range", pos_);
    return n.get_ui();
  }

  std::string_view text_;
  FieldDesc field_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_element(std::string_view text, const FieldDesc& field) {
  return ElementParser(text, field).parse();
}

FieldDesc parse_field_desc(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  if (!(in >> word)) throw ParseError("missing field descriptor");
  if (word == "rational") return FieldDesc::rational();
  if (word == "ratfunc") return FieldDesc::rat_func();
  if (word == "quad") {
    std::string digits;
    if (!(in >> digits) || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("quad field needs a nonnegative integer radicand");
    mpz_class d(digits, 10);
    if (d < 2) throw ParseError("quadratic radicand must be >= 2");
    if (mpz_perfect_square_p(d.get_mpz_t()))
      throw ParseError("quadratic radicand must not be a perfect square");
    return FieldDesc::quad(d);
  }
  throw ParseError("unknown field '" + word + "'");
}

}  // namespace eulercert
