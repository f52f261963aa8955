#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liedd {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Parameter names are interned process-wide; a VarId is only an identity.
// Printing and leading terms order variables by natural name order
// ("z2" < "z10"), independent of interning order.
using VarId = std::uint32_t;

VarId intern_variable(std::string_view name);
const std::string& variable_name(VarId id);
bool variable_order_less(VarId a, VarId b);

struct VarPower {
  VarId var;
  std::uint32_t exp;
  friend bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product, entries sorted by VarId, exponents nonzero.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(VarId v, std::uint32_t exp = 1);

  bool is_one() const { return powers_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(VarId v) const;
  const std::vector<VarPower>& powers() const { return powers_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this, requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  /// Storage order (by VarId); total but not a canonical print order.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<VarPower> powers_;
};

/// Graded lexicographic order over the natural variable order.
bool grlex_less(const Monomial& a, const Monomial& b);

class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(VarId v);
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<VarId> variables() const;
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(VarId v) const;

  /// Greatest term in grlex order; requires !is_zero().
  const Term& leading_term() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// gcd of the numerators over lcm of the denominators, always >= 0.
  Rational content() const;
  Monomial monomial_content() const;
  /// Divides every term by m; m must divide each term.
  Polynomial divided_by_monomial(const Monomial& m) const;

  Polynomial substitute(const std::map<VarId, Rational>& values) const;
  Polynomial derivative(VarId v) const;

  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Term> terms_;  // sorted by storage order, no zero coefficients
};

/// a / b when b divides a exactly, using grlex multivariate division.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

/// Primitive part with positive leading coefficient and integer coefficients.
Polynomial primitive_part(const Polynomial& p);

/// Univariate helpers; throw NotUnivariate for >= 2 variables.
std::optional<VarId> sole_variable(const Polynomial& p);
std::optional<VarId> sole_variable(const Polynomial& a, const Polynomial& b);
void divmod_univariate(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b);

/// Canonical condition form: primitive, sign-normalized, square-free when
/// univariate; multivariate inputs only get content and sign normalization.
Polynomial poly_normalize(const Polynomial& p);

struct RootSet {
  std::vector<Rational> roots;  // ascending, distinct
  Polynomial residual;          // factor without rational roots (normalized)
};

RootSet rational_roots(const Polynomial& p);

Rational evaluate_univariate(const Polynomial& p, const Rational& x);

}  // namespace liedd
