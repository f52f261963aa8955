// Hand-rolled generators for property tests. Fixed seeds keep runs reproducible.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "liedd/linalg.hpp"
#include "liedd/scalar.hpp"

namespace liedd::testing {

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int span = 6) {
    Rational q(integer(-span, span), integer(1, span));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(const std::vector<std::string>& vars, int terms = 3, int max_exp = 2) {
    std::vector<Polynomial::Term> out;
    const int count = integer(1, terms);
    for (int t = 0; t < count; ++t) {
      Monomial m;
      for (const auto& v : vars) {
        const int e = integer(0, max_exp);
        if (e > 0) m = m * Monomial::variable(intern_variable(v), static_cast<std::uint32_t>(e));
      }
      out.push_back({m, rational()});
    }
    return Polynomial::from_terms(std::move(out));
  }

  /// Mixed kinds: rational, polynomial, univariate fraction, bivariate fraction.
  Scalar scalar() {
    switch (integer(0, 3)) {
      case 0: return Scalar(rational());
      case 1: return Scalar(polynomial({"a", "b"}));
      case 2: {
        Polynomial d = polynomial({"t"}, 2, 2);
        if (d.is_zero()) d = Polynomial(Rational(1));
        return Scalar::fraction(polynomial({"t"}), d);
      }
      default: {
        Polynomial d = polynomial({"a", "b"}, 2, 1);
        if (d.is_zero()) d = Polynomial(Rational(1));
        return Scalar::fraction(polynomial({"a", "b"}, 2, 1), d);
      }
    }
  }

  Matrix rational_matrix(std::size_t rows, std::size_t cols, int density_percent = 60, int span = 3) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (integer(1, 100) <= density_percent) m(r, c) = Scalar(Rational(integer(-span, span)));
      }
    }
    return m;
  }

  Vector element(std::size_t n, int span = 2) {
    Vector v(n);
    for (auto& s : v) s = Scalar(Rational(integer(-span, span)));
    return v;
  }

  /// Random integer combination of the given n x n maps.
  Matrix combination(const std::vector<Matrix>& maps, std::size_t n, int span = 2) {
    Matrix m(n, n);
    for (const auto& b : maps) m = m + b.scaled(Scalar(Rational(integer(-span, span))));
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace liedd::testing
