#include "liedd/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "liedd/error.hpp"

namespace liedd {

namespace {

Scalar from_polynomial(const Polynomial& p) {
  if (p.is_constant()) return Scalar(p.constant_value());
  return Scalar(p);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorKind::Internal, "expected exact polynomial division");
  return *q;
}

}  // namespace

Scalar::Scalar(const Polynomial& p) {
  if (p.is_constant()) {
    q_ = p.constant_value();
  } else {
    rational_ = false;
    num_ = p;
    den_ = Polynomial(Rational(1));
  }
}

Scalar Scalar::variable(std::string_view name) {
  return Scalar(Polynomial::variable(intern_variable(name)));
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
  return normalized(num, den);
}

Scalar Scalar::normalized(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (num.is_zero()) return Scalar(0);
  if (den.is_constant()) return from_polynomial(num.scaled(1 / den.constant_value()));

  const Monomial common = Monomial::gcd(num.monomial_content(), den.monomial_content());
  if (!common.is_one()) {
    num = num.divided_by_monomial(common);
    den = den.divided_by_monomial(common);
    if (den.is_constant()) return from_polynomial(num.scaled(1 / den.constant_value()));
  }

  auto make_den_primitive = [&]() {
    const Polynomial prim = primitive_part(den);
    const Rational factor = den.leading_term().coeff / prim.leading_term().coeff;
    num = num.scaled(1 / factor);
    den = prim;
  };
  make_den_primitive();

  std::vector<VarId> vars = num.variables();
  for (VarId v : den.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  if (vars.size() <= 1) {
    const Polynomial g = gcd_univariate(num, den);
    if (!g.is_constant()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
      if (den.is_constant()) return from_polynomial(num.scaled(1 / den.constant_value()));
      make_den_primitive();
    }
  } else {
    if (auto q = divide_exact(num, den)) return from_polynomial(*q);
    if (auto q = divide_exact(den, num)) {
      num = Polynomial(Rational(1));
      den = *q;
      if (den.is_constant()) return Scalar(1 / den.constant_value());
      make_den_primitive();
    }
  }

  Scalar s;
  s.rational_ = false;
  s.q_ = 0;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

Scalar::Kind Scalar::kind() const {
  if (rational_) return Kind::Rational;
  return den_.is_constant() ? Kind::Polynomial : Kind::Fraction;
}

const Rational& Scalar::rational() const {
  if (!rational_) throw Error(ErrorKind::Internal, "scalar is not rational: " + to_string());
  return q_;
}

Polynomial Scalar::numerator() const { return rational_ ? Polynomial(q_) : num_; }

Polynomial Scalar::denominator() const { return rational_ ? Polynomial(Rational(1)) : den_; }

std::vector<VarId> Scalar::variables() const {
  if (rational_) return {};
  auto vars = num_.variables();
  for (VarId v : den_.variables()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), variable_order_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (rational_) {
    s.q_ = -q_;
  } else {
    s.num_ = -num_;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.rational_ && b.rational_) return Scalar(Rational(a.q_ + b.q_));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Polynomial ad = a.denominator();
  const Polynomial bd = b.denominator();
  if (ad == bd) {
    if (ad.is_constant()) return from_polynomial(a.numerator() + b.numerator());
    return Scalar::normalized(a.numerator() + b.numerator(), ad);
  }
  return Scalar::normalized(a.numerator() * bd + b.numerator() * ad, ad * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.rational_ && b.rational_) return Scalar(Rational(a.q_ - b.q_));
  return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.rational_ && b.rational_) return Scalar(Rational(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return Scalar(0);
  if (a.rational_) {
    Scalar s = b;
    s.num_ = s.num_.scaled(a.q_);
    return s;
  }
  if (b.rational_) {
    Scalar s = a;
    s.num_ = s.num_.scaled(b.q_);
    return s;
  }
  if (a.den_.is_constant() && b.den_.is_constant()) return from_polynomial(a.num_ * b.num_);
  return Scalar::normalized(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (a.rational_ && b.rational_) return Scalar(Rational(a.q_ / b.q_));
  if (b.rational_) {
    Scalar s = a;
    s.num_ = s.num_.scaled(1 / b.q_);
    return s;
  }
  return Scalar::normalized(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.rational_ || b.rational_) return a.rational_ == b.rational_ && a.q_ == b.q_;
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar Scalar::substitute(const std::map<VarId, Rational>& values) const {
  if (rational_) return *this;
  const Polynomial d = den_.substitute(values);
  if (d.is_zero()) {
    throw Error(ErrorKind::DenominatorVanishes, "denominator " + den_.to_string() + " vanishes");
  }
  return normalized(num_.substitute(values), d);
}

std::string Scalar::to_string() const {
  if (rational_) return liedd::to_string(q_);
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ------------------------------------------------------------------ parser

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "scalar literal \"" + std::string(text_) + "\" at offset " +
                                      std::to_string(pos_) + ": " + what);
  }

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

  Scalar expr() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Scalar d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        value /= d;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      Scalar result(1);
      for (unsigned long i = 0; i < e; ++i) result *= base;
      return result;
    }
    return base;
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto& declared = options_.declared;
      const bool known = std::find(declared.begin(), declared.end(), name) != declared.end();
      if (!known) {
        if (options_.extend == nullptr) {
          pos_ = start;
          fail("unknown parameter '" + name + "'");
        }
        auto& ext = *options_.extend;
        if (std::find(ext.begin(), ext.end(), name) == ext.end()) ext.push_back(name);
      }
      return Scalar::variable(name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ParseOptions& options) {
  return ScalarParser(text, options).parse();
}

// ----------------------------------------------------------------- vectors

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar(1);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::AlgebraMismatch, "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::AlgebraMismatch, "vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out(v.size());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[i] = c * v[i];
  }
  return out;
}

std::vector<VarId> variables_of(const Vector& v) {
  std::vector<VarId> vars;
  for (const auto& s : v) {
    for (VarId id : s.variables()) vars.push_back(id);
  }
  std::sort(vars.begin(), vars.end(), variable_order_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace liedd
