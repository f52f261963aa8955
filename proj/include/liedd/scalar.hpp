#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "liedd/polynomial.hpp"

namespace liedd {

/// Element of Q(parameters): a rational, a polynomial or a reduced fraction.
///
/// Rationals take a fast path that never touches the polynomial machinery.
/// Fractions are kept normalized: denominator primitive with positive leading
/// coefficient, common monomial factors cancelled, and fully reduced by gcd
/// when at most one variable occurs. With several variables only exact
/// division is attempted.
class Scalar {
 public:
  enum class Kind { Rational, Polynomial, Fraction };

  Scalar() = default;
  Scalar(long v) : q_(v) {}                      // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q) : q_(q) {}           // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p);                   // NOLINT(google-explicit-constructor)
  static Scalar fraction(const Polynomial& num, const Polynomial& den);
  static Scalar variable(std::string_view name);

  Kind kind() const;
  bool is_rational() const { return rational_; }
  bool is_zero() const { return rational_ ? q_ == 0 : num_.is_zero(); }
  bool is_one() const { return rational_ && q_ == 1; }
  /// Requires is_rational().
  const Rational& rational() const;
  Polynomial numerator() const;
  Polynomial denominator() const;
  std::vector<VarId> variables() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Exact equality over the fraction field.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Throws DenominatorVanishes when the assignment kills the denominator.
  Scalar substitute(const std::map<VarId, Rational>& values) const;

  std::string to_string() const;

 private:
  static Scalar normalized(Polynomial num, Polynomial den);

  bool rational_ = true;
  Rational q_;
  Polynomial num_;
  Polynomial den_;
};

using Vector = std::vector<Scalar>;

struct ParseOptions {
  /// Names accepted as parameters.
  std::vector<std::string> declared;
  /// When set, unknown identifiers become new parameters and are appended.
  std::vector<std::string>* extend = nullptr;
};

/// Parses the Scalar literal grammar: integers, `p/q`, `+ - * / ^`,
/// parentheses, identifiers for parameters. `*` is mandatory.
Scalar parse_scalar(std::string_view text, const ParseOptions& options = {});

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);
std::vector<VarId> variables_of(const Vector& v);

}  // namespace liedd
