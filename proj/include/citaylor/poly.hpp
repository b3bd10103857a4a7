#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace citaylor {

/// Coefficient field: the rationals (characteristic 0) or GF(p).
class Field {
 public:
  Field() = default;
  /// Throws InputError unless characteristic is 0 or a prime.
  explicit Field(std::uint32_t characteristic);

  static Field rationals() { return Field{}; }

  std::uint32_t characteristic() const noexcept { return characteristic_; }
  bool is_prime_field() const noexcept { return characteristic_ != 0; }

  /// Maps a rational into canonical form for this field: unchanged over Q,
  /// an integer in [0, p) over GF(p). Throws CharacteristicError when the
  /// denominator vanishes mod p.
  mpq_class normalize(const mpq_class& value) const;

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint32_t n);

enum class MonomialOrder { GradedLex, GradedRevLex, Lex };

MonomialOrder parse_monomial_order(std::string_view name);
std::string_view to_string(MonomialOrder order);

/// Exponent vector x^alpha.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<int> exponents);

  std::size_t nvars() const noexcept { return exponents_.size(); }
  std::span<const int> exponents() const noexcept { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }

  int degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exponents_;
};

/// Componentwise maximum.
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// Exact quotient num/den; throws NotDivisible if den does not divide num.
Monomial divide(const Monomial& num, const Monomial& den);

/// True if a is strictly greater than b in the given order.
bool monomial_greater(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Sparse polynomial with exact coefficients. Zero coefficients are never
/// stored; each monomial appears at most once.
class Polynomial {
 public:
  using Term = std::pair<Monomial, mpq_class>;

  Polynomial() = default;
  Polynomial(std::size_t nvars, Field field) : nvars_(nvars), field_(field) {}

  static Polynomial constant(std::size_t nvars, Field field, const mpq_class& c);
  static Polynomial term(const Monomial& m, Field field, const mpq_class& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::map<Monomial, mpq_class>& terms() const noexcept { return terms_; }

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;
  mpq_class constant_term() const;
  mpq_class coefficient(const Monomial& m) const;

  /// Terms sorted by descending order; throws on zero for leading_*.
  std::vector<Term> sorted_terms(MonomialOrder order) const;
  const Monomial& leading_monomial(MonomialOrder order) const;
  Term leading_term(MonomialOrder order) const;

  /// Adds c * m to this polynomial in place.
  void add_term(const Monomial& m, const mpq_class& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;

  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_monomial(const Monomial& m, const mpq_class& c = 1) const;
  /// Reinterpret the coefficients in another field (e.g. Q -> GF(p)).
  Polynomial with_field(Field field) const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_ = 0;
  Field field_;
  std::map<Monomial, mpq_class> terms_;
};

/// Variables, coefficient field and display order of Q = k[x_1..x_n].
class PolyRing {
 public:
  PolyRing(std::vector<std::string> variables, Field field = {},
           MonomialOrder order = MonomialOrder::GradedLex);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  const Field& field() const noexcept { return field_; }
  MonomialOrder order() const noexcept { return order_; }

  std::optional<std::size_t> variable_index(std::string_view name) const;

  Polynomial zero() const { return Polynomial(nvars(), field_); }
  Polynomial one() const { return Polynomial::constant(nvars(), field_, 1); }
  Polynomial variable(std::size_t i) const;

  PolyRing with_field(Field field) const;
  PolyRing with_order(MonomialOrder order) const;

 private:
  std::vector<std::string> variables_;
  Field field_;
  MonomialOrder order_;
};

/// Parses `poly := term (('+'|'-') term)*`, `term := coeff ('*' factor)* |
/// factor ('*' factor)*`, `factor := var ('^' uint)?`,
/// `coeff := int | int '/' uint`. A leading sign is accepted.
Polynomial parse_polynomial(std::string_view src, const PolyRing& ring);
/// A single monomial such as "x^2*y" or "1".
Monomial parse_monomial(std::string_view src, const PolyRing& ring);

/// Canonical text: descending terms in the ring's order, no spaces,
/// explicit '*' and '^', unit coefficients omitted.
std::string to_string(const Polynomial& p, const PolyRing& ring);
std::string to_string(const Monomial& m, const PolyRing& ring);

}  // namespace citaylor
