#include <cctype>

#include "citaylor/errors.hpp"
#include "citaylor/poly.hpp"

namespace citaylor {
namespace {

class Parser {
 public:
  Parser(std::string_view src, const PolyRing& ring) : src_(src), ring_(ring) {}

  Polynomial polynomial() {
    Polynomial result = ring_.zero();
    skip_space();
    mpq_class sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    result += term().scaled(sign);
    for (;;) {
      skip_space();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      result += term().scaled(op == '-' ? -1 : 1);
    }
    return result;
  }

  Monomial monomial() {
    skip_space();
    Monomial m(ring_.nvars());
    if (peek() == '1') {
      ++pos_;
      skip_space();
      if (!at_end()) fail("unexpected input after '1'");
      return m;
    }
    m = factor();
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
      m = m * factor();
    }
    return m;
  }

 private:
  Polynomial term() {
    skip_space();
    mpq_class coeff = 1;
    Monomial m(ring_.nvars());
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
    } else {
      m = factor();
    }
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      m = m * factor();
    }
    return Polynomial::term(m, ring_.field(), coeff);
  }

  mpq_class coefficient() {
    mpz_class num(digits(), 10);
    skip_space();
    if (peek() != '/') return mpq_class(num);
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    mpz_class den(digits(), 10);
    if (den == 0) throw ParseError("zero denominator", at);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  Monomial factor() {
    skip_space();
    const std::size_t start = pos_;
    if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected a variable");
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    std::string_view name = src_.substr(start, pos_ - start);
    auto index = ring_.variable_index(name);
    if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
    int exponent = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 6) throw ParseError("exponent too large", at);
      exponent = std::stoi(e);
    }
    std::vector<int> exps(ring_.nvars(), 0);
    exps[*index] = exponent;
    return Monomial(std::move(exps));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(src_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, peek()) + "'", pos_);
  }

  std::string_view src_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view src, const PolyRing& ring) {
  return Parser(src, ring).polynomial();
}

Monomial parse_monomial(std::string_view src, const PolyRing& ring) {
  return Parser(src, ring).monomial();
}

}  // namespace citaylor
