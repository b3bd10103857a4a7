#include "citaylor/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "citaylor/errors.hpp"

namespace citaylor {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw InputError("characteristic " + std::to_string(characteristic) +
                     " is neither 0 nor prime");
}

mpq_class Field::normalize(const mpq_class& value) const {
  if (characteristic_ == 0) {
    mpq_class q = value;  // callers may hand in an uncanonicalized fraction
    q.canonicalize();
    return q;
  }
  mpz_class p = characteristic_;
  mpz_class num = value.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = value.get_den() % p;
  if (den == 0)
    throw CharacteristicError("denominator of " + value.get_str() +
                              " vanishes in characteristic " +
                              std::to_string(characteristic_));
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return mpq_class(r);
}

MonomialOrder parse_monomial_order(std::string_view name) {
  if (name == "grlex" || name == "graded-lex") return MonomialOrder::GradedLex;
  if (name == "grevlex" || name == "graded-reverse-lex")
    return MonomialOrder::GradedRevLex;
  if (name == "lex") return MonomialOrder::Lex;
  throw InputError("unknown monomial order '" + std::string(name) + "'");
}

std::string_view to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::GradedLex: return "graded-lex";
    case MonomialOrder::GradedRevLex: return "graded-reverse-lex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0) throw NotDivisible("negative exponent in monomial");
}

int Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial divide(const Monomial& num, const Monomial& den) {
  std::vector<int> e(num.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] = num[i] - den[i];
    if (e[i] < 0) throw NotDivisible("monomial quotient is not a monomial");
  }
  return Monomial(std::move(e));
}

bool monomial_greater(MonomialOrder order, const Monomial& a, const Monomial& b) {
  const std::size_t n = a.nvars();
  if (order != MonomialOrder::Lex) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
  }
  if (order == MonomialOrder::GradedRevLex) {
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, Field field, const mpq_class& c) {
  Polynomial p(nvars, field);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, Field field, const mpq_class& c) {
  Polynomial p(m.nvars(), field);
  p.add_term(m, c);
  return p;
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

mpq_class Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

mpq_class Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<Polynomial::Term> Polynomial::sorted_terms(MonomialOrder order) const {
  std::vector<Term> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [order](const Term& a, const Term& b) {
    return monomial_greater(order, a.first, b.first);
  });
  return out;
}

const Monomial& Polynomial::leading_monomial(MonomialOrder order) const {
  if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (monomial_greater(order, it->first, best->first)) best = it;
  return best->first;
}

Polynomial::Term Polynomial::leading_term(MonomialOrder order) const {
  const Monomial& m = leading_monomial(order);
  return {m, terms_.at(m)};
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (m.nvars() != nvars_) throw Error("monomial has wrong number of variables");
  mpq_class value = field_.normalize(c);
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, value);
  if (!inserted) {
    it->second = field_.normalize(it->second + value);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || field_ != other.field_)
    throw Error("polynomials from different rings");
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r(*this);
  r += other;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial r(*this);
  r -= other;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r(nvars_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r(nvars_, field_);
  if (field_.normalize(c) == 0) return r;
  for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const mpq_class& c) const {
  Polynomial r(nvars_, field_);
  for (const auto& [mm, coeff] : terms_) r.add_term(mm * m, coeff * c);
  return r;
}

Polynomial Polynomial::with_field(Field field) const {
  Polynomial r(nvars_, field);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return nvars_ == other.nvars_ && field_ == other.field_ && terms_ == other.terms_;
}

// ----------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::vector<std::string> variables, Field field, MonomialOrder order)
    : variables_(std::move(variables)), field_(field), order_(order) {
  std::set<std::string> seen;
  for (const auto& v : variables_) {
    if (v.empty()) throw InputError("empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw InputError("variable name '" + v + "' must start with a letter");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw InputError("variable name '" + v + "' contains '" + std::string(1, ch) + "'");
    if (!seen.insert(v).second) throw InputError("duplicate variable name '" + v + "'");
  }
}

std::optional<std::size_t> PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i)
    if (variables_[i] == name) return i;
  return std::nullopt;
}

Polynomial PolyRing::variable(std::size_t i) const {
  std::vector<int> e(nvars(), 0);
  e.at(i) = 1;
  return Polynomial::term(Monomial(std::move(e)), field_);
}

PolyRing PolyRing::with_field(Field field) const { return PolyRing(variables_, field, order_); }

PolyRing PolyRing::with_order(MonomialOrder order) const {
  return PolyRing(variables_, field_, order);
}

// ------------------------------------------------------------------ printing

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const PolyRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(ring.order())) {
    mpq_class mag = abs(c);
    if (c < 0)
      out += '-';
    else if (!first)
      out += '+';
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += to_string(m, ring);
    }
  }
  return out;
}

}  // namespace citaylor
