#include "liedd/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "liedd/error.hpp"

namespace liedd {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

struct VariableRegistry {
  std::shared_mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

VariableRegistry& registry() {
  static VariableRegistry r;
  return r;
}

// "z2" < "z10": digit runs compare numerically, other runs lexically.
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string_view ra(a.data() + i, ie - i);
      std::string_view rb(b.data() + j, je - j);
      while (ra.size() > 1 && ra.front() == '0') ra.remove_prefix(1);
      while (rb.size() > 1 && rb.front() == '0') rb.remove_prefix(1);
      if (ra.size() != rb.size()) return ra.size() < rb.size();
      if (ra != rb) return ra < rb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

}  // namespace

VarId intern_variable(std::string_view name) {
  auto& r = registry();
  const std::string key(name);
  {
    std::shared_lock lock(r.mutex);
    if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  }
  std::unique_lock lock(r.mutex);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  const auto id = static_cast<VarId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(key, id);
  return id;
}

const std::string& variable_name(VarId id) {
  auto& r = registry();
  std::shared_lock lock(r.mutex);
  return r.names.at(id);
}

bool variable_order_less(VarId a, VarId b) {
  if (a == b) return false;
  return natural_less(variable_name(a), variable_name(b));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.powers_.push_back({v, exp});
  return m;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& p : powers_) d += p.exp;
  return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (const auto& p : powers_) {
    if (p.var == v) return p.exp;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->var < b->var)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->var < a->var) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.push_back({a->var, a->exp + b->exp});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& p : powers_) {
    if (other.exponent(p.var) < p.exp) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& p : other.powers_) {
    const auto e = p.exp - exponent(p.var);
    if (e > 0) out.powers_.push_back({p.var, e});
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (const auto& p : a.powers_) {
    const auto e = std::min(p.exp, b.exponent(p.var));
    if (e > 0) out.powers_.push_back({p.var, e});
  }
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare(
      a.powers_.begin(), a.powers_.end(), b.powers_.begin(), b.powers_.end(),
      [](const VarPower& x, const VarPower& y) {
        return x.var != y.var ? x.var < y.var : x.exp < y.exp;
      });
}

namespace {

std::vector<VarPower> in_natural_order(const Monomial& m) {
  auto v = m.powers();
  std::sort(v.begin(), v.end(),
            [](const VarPower& x, const VarPower& y) { return variable_order_less(x.var, y.var); });
  return v;
}

}  // namespace

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& p : in_natural_order(*this)) {
    if (!out.empty()) out += '*';
    out += variable_name(p.var);
    if (p.exp > 1) out += '^' + std::to_string(p.exp);
  }
  return out;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  if (a == b) return false;
  std::vector<VarId> vars;
  for (const auto& p : a.powers()) vars.push_back(p.var);
  for (const auto& p : b.powers()) vars.push_back(p.var);
  std::sort(vars.begin(), vars.end(), variable_order_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (VarId v : vars) {
    const auto ea = a.exponent(v);
    const auto eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_.push_back({Monomial::variable(v), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return Rational(0);
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> vars;
  for (const auto& t : terms_) {
    for (const auto& p : t.mono.powers()) vars.push_back(p.var);
  }
  std::sort(vars.begin(), vars.end(), variable_order_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error(ErrorKind::Internal, "leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (grlex_less(best->mono, t.mono)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return o;
  Polynomial out;
  out.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.terms_.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  if (o.is_constant()) return scaled(o.terms_.front().coeff);
  if (is_constant()) return o.scaled(terms_.front().coeff);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  return from_terms(std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;
  // Multiplying every key by one monomial preserves the storage order.
  return p;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num = 0;
  Integer den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = Monomial::gcd(g, t.mono);
  return g;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({m.quotient_of(t.mono), t.coeff});
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(const std::map<VarId, Rational>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    Monomial rest;
    for (const auto& p : t.mono.powers()) {
      if (auto it = values.find(p.var); it != values.end()) {
        Rational f = 1;
        for (std::uint32_t e = 0; e < p.exp; ++e) f *= it->second;
        c *= f;
      } else {
        rest = rest * Monomial::variable(p.var, p.exp);
      }
    }
    out.push_back({std::move(rest), std::move(c)});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exponent(v);
    if (e == 0) continue;
    Monomial rest;
    for (const auto& p : t.mono.powers()) {
      const auto pe = p.var == v ? p.exp - 1 : p.exp;
      if (pe > 0) rest = rest * Monomial::variable(p.var, pe);
    }
    out.push_back({std::move(rest), t.coeff * e});
  }
  return from_terms(std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](const Term* a, const Term* b) { return grlex_less(b->mono, a->mono); });
  std::string out;
  for (const Term* t : order) {
    const bool negative = t->coeff < 0;
    const Rational mag = abs(t->coeff);
    std::string body;
    if (t->mono.is_one()) {
      body = liedd::to_string(mag);
    } else if (mag == 1) {
      body = t->mono.to_string();
    } else {
      body = liedd::to_string(mag) + "*" + t->mono.to_string();
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ----------------------------------------------------------------- helpers

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  const auto& lb = b.leading_term();
  Polynomial q;
  Polynomial r = a;
  while (!r.is_zero()) {
    const auto& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Polynomial t = Polynomial::from_terms({{lb.mono.quotient_of(lr.mono), lr.coeff / lb.coeff}});
    q += t;
    r -= t * b;
  }
  return q;
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial out = p.scaled(1 / p.content());
  if (out.leading_term().coeff < 0) out = -out;
  return out;
}

std::optional<VarId> sole_variable(const Polynomial& p) {
  const auto vars = p.variables();
  if (vars.size() > 1) throw Error(ErrorKind::NotUnivariate, "polynomial has several variables: " + p.to_string());
  if (vars.empty()) return std::nullopt;
  return vars.front();
}

std::optional<VarId> sole_variable(const Polynomial& a, const Polynomial& b) {
  auto va = sole_variable(a);
  auto vb = sole_variable(b);
  if (va && vb && *va != *vb) {
    throw Error(ErrorKind::NotUnivariate, "polynomials in different variables");
  }
  return va ? va : vb;
}

void divmod_univariate(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const auto v = sole_variable(a, b);
  q = Polynomial{};
  r = a;
  if (!v) {
    q = a.scaled(1 / b.constant_value());
    r = Polynomial{};
    return;
  }
  const auto db = b.degree_in(*v);
  const auto& lb = b.leading_term();
  while (!r.is_zero() && r.degree_in(*v) >= db) {
    const auto& lr = r.leading_term();
    Polynomial t = Polynomial::from_terms(
        {{Monomial::variable(*v, lr.mono.exponent(*v) - db), lr.coeff / lb.coeff}});
    q += t;
    r -= t * b;
  }
}

Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b) {
  sole_variable(a, b);
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  while (!y.is_zero()) {
    Polynomial q;
    Polynomial r;
    divmod_univariate(x, y, q, r);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

Polynomial poly_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  if (p.is_constant()) return Polynomial(Rational(1));
  const auto vars = p.variables();
  if (vars.size() == 1) {
    const Polynomial g = gcd_univariate(p, p.derivative(vars.front()));
    if (!g.is_constant()) {
      Polynomial q;
      Polynomial r;
      divmod_univariate(p, g, q, r);
      return primitive_part(q);
    }
  }
  return primitive_part(p);
}

Rational evaluate_univariate(const Polynomial& p, const Rational& x) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational f = t.coeff;
    const auto e = t.mono.degree();
    for (std::uint32_t i = 0; i < e; ++i) f *= x;
    sum += f;
  }
  return sum;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RootSet rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorKind::Internal, "rational_roots of the zero polynomial");
  const auto var = sole_variable(p);
  RootSet out;
  if (!var) {
    out.residual = Polynomial(Rational(1));
    return out;
  }
  Polynomial work = primitive_part(p);
  const Monomial shift = work.monomial_content();
  if (!shift.is_one()) {
    out.roots.emplace_back(0);
    work = work.divided_by_monomial(shift);
  }
  if (!work.is_constant()) {
    const Integer lead = work.leading_term().coeff.get_num();
    const Integer tail = work.constant_value().get_num();
    const auto nums = positive_divisors(tail);
    const auto dens = positive_divisors(lead);
    for (const auto& n : nums) {
      for (const auto& d : dens) {
        for (int sign : {1, -1}) {
          Rational candidate(sign * n, d);
          candidate.canonicalize();
          if (std::find(out.roots.begin(), out.roots.end(), candidate) != out.roots.end()) continue;
          if (evaluate_univariate(work, candidate) == 0) out.roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  for (const auto& root : out.roots) {
    if (root == 0) continue;
    const Polynomial factor = Polynomial::variable(*var).scaled(Rational(root.get_den())) -
                              Polynomial(Rational(root.get_num()));
    while (auto q = divide_exact(work, factor)) work = *q;
  }
  out.residual = poly_normalize(work);
  return out;
}

}  // namespace liedd
