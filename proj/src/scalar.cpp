#include "fullgroup/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fullgroup {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

mpz_class scan_digits(Cursor& c) {
  std::string digits;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) digits.push_back(c.s[c.pos++]);
  if (digits.empty()) {
    throw std::invalid_argument("expected digits at position " + std::to_string(c.pos) +
                                " in scalar literal \"" + c.s + "\"");
  }
  return mpz_class(digits);
}

// One unsigned term: "N", "N/D", "i", "Ni", "i/D", "Ni/D", "N/Di".
// Returns (real, imaginary) contribution.
std::pair<Rational, Rational> scan_term(Cursor& c) {
  bool imaginary = false;
  mpz_class num, den = 1;
  if (c.eat('i')) {
    imaginary = true;
    num = 1;
    if (c.eat('/')) den = scan_digits(c);
  } else {
    num = scan_digits(c);
    if (c.eat('/')) {
      den = scan_digits(c);
      if (c.eat('i')) imaginary = true;  // "3/5i"
    } else if (c.eat('i')) {
      imaginary = true;
      if (c.eat('/')) den = scan_digits(c);  // "3i/5"
    }
  }
  if (den == 0) throw std::invalid_argument("zero denominator in scalar literal \"" + c.s + "\"");
  Rational q(num, den);
  q.canonicalize();
  if (imaginary) return {Rational(0), q};
  return {q, Rational(0)};
}

}  // namespace

GaussianRational parse_gaussian(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw std::invalid_argument("empty scalar literal");
  Rational re(0), im(0);
  bool seen_real = false, seen_imag = false;
  bool negate = c.eat('-');
  if (!negate) c.eat('+');
  while (true) {
    auto [r, i] = scan_term(c);
    if (i == 0) {
      if (seen_real) throw std::invalid_argument("two real terms in scalar literal \"" + text + "\"");
      seen_real = true;
      re = negate ? Rational(-r) : r;
    } else {
      if (seen_imag) {
        throw std::invalid_argument("two imaginary terms in scalar literal \"" + text + "\"");
      }
      seen_imag = true;
      im = negate ? Rational(-i) : i;
    }
    if (c.done()) break;
    if (c.eat('+')) {
      negate = false;
    } else if (c.eat('-')) {
      negate = true;
    } else {
      throw std::invalid_argument("unexpected character '" + std::string(1, c.peek()) +
                                  "' at position " + std::to_string(c.pos) +
                                  " in scalar literal \"" + text + "\"");
    }
  }
  return {re, im};
}

Rational parse_rational(const std::string& text) {
  GaussianRational z = parse_gaussian(text);
  if (!z.is_real()) {
    throw std::invalid_argument("expected a rational literal, got complex \"" + text + "\"");
  }
  return z.re();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  Rational n2 = o.norm2();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n2;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n2;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out += re_.get_str();
  if (im_ != 0) {
    bool neg = im_ < 0;
    Rational a = abs(im_);
    std::string num = a.get_num().get_str();
    std::string den = a.get_den().get_str();
    std::string part = (num == "1") ? "i" : num + "i";
    if (den != "1") part += "/" + den;
    if (!out.empty()) {
      out += neg ? "-" : "+";
    } else if (neg) {
      out += "-";
    }
    out += part;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace fullgroup
