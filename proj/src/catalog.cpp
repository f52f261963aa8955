#include "liedd/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace liedd {

using json = nlohmann::json;

std::string to_string(CatalogEntry::Recipe r) {
  switch (r) {
    case CatalogEntry::Recipe::ExplicitConstants: return "constants";
    case CatalogEntry::Recipe::MatrixRealization: return "matrices";
    case CatalogEntry::Recipe::DerivationsOfBilinear: return "derivations";
    case CatalogEntry::Recipe::DirectSum: return "direct-sum";
    case CatalogEntry::Recipe::Filiform: return "filiform";
    case CatalogEntry::Recipe::Loaded: return "file";
  }
  return "?";
}

namespace {

struct Bracket {
  std::size_t i, j;
  const char* value;
};

LieAlgebra from_brackets(std::size_t n, std::initializer_list<Bracket> brackets,
                         const std::vector<std::string>& params = {}, std::vector<std::string> labels = {}) {
  if (labels.empty()) labels = default_labels(n);
  const LieAlgebra shell(StructureConstants(n), labels, params);
  StructureConstants c(n);
  for (const auto& b : brackets) c.set(b.i - 1, b.j - 1, shell.parse_element(b.value));
  return LieAlgebra(c, labels, params);
}

Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = Scalar(1);
  return m;
}

LieAlgebra sl2() { return from_brackets(3, {{1, 2, "e3"}, {1, 3, "-2*e1"}, {2, 3, "2*e2"}}); }
LieAlgebra r2() { return from_brackets(2, {{1, 2, "e2"}}); }
LieAlgebra n3() { return from_brackets(3, {{1, 2, "e3"}}); }

LieAlgebra sl3() {
  std::vector<Matrix> m{unit(3, 0, 1), unit(3, 0, 2), unit(3, 1, 2), unit(3, 1, 0),
                        unit(3, 2, 0), unit(3, 2, 1), unit(3, 0, 0) - unit(3, 1, 1), unit(3, 1, 1) - unit(3, 2, 2)};
  return from_matrices(m).algebra;
}

/// [[A, B], [C, -A^T]] with B, C symmetric 2x2.
LieAlgebra sp4() {
  auto a_block = [](std::size_t r, std::size_t c) { return unit(4, r, c) - unit(4, 2 + c, 2 + r); };
  std::vector<Matrix> m{a_block(0, 0), a_block(0, 1), a_block(1, 0), a_block(1, 1),
                        unit(4, 0, 2), unit(4, 1, 3), unit(4, 0, 3) + unit(4, 1, 2),
                        unit(4, 2, 0), unit(4, 3, 1), unit(4, 2, 1) + unit(4, 3, 0)};
  return from_matrices(m).algebra;
}

LieAlgebra gl2() { return from_matrices({unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)}).algebra; }

LieAlgebra g2_algebra() {
  const MapSpace der = derivations_of_bilinear(split_octonions());
  return from_matrices(der.basis).algebra;
}

std::size_t size_param(const Assignments& a, const std::string& name, std::size_t min) {
  const auto it = a.find(name);
  if (it == a.end()) throw Error(ErrorKind::Usage, "parameter '" + name + "' is required");
  const Rational& v = it->second;
  if (v.get_den() != 1 || v < static_cast<long>(min) || v > 64) {
    throw Error(ErrorKind::ExcludedParameterValue,
                "parameter '" + name + "' must be an integer in [" + std::to_string(min) + ", 64]");
  }
  return static_cast<std::size_t>(v.get_num().get_ui());
}

CatalogEntry fixed(std::string name, std::string summary, CatalogEntry::Recipe recipe, std::function<LieAlgebra()> f) {
  CatalogEntry e;
  e.name = std::move(name);
  e.summary = std::move(summary);
  e.recipe = recipe;
  e.build = [f = std::move(f)](const Assignments&) { return f(); };
  return e;
}

CatalogEntry family(std::string name, std::string summary, std::vector<std::string> params,
                    std::function<LieAlgebra()> f) {
  CatalogEntry e = fixed(std::move(name), std::move(summary), CatalogEntry::Recipe::ExplicitConstants, std::move(f));
  e.params = std::move(params);
  return e;
}

using R = CatalogEntry::Recipe;

}  // namespace

LieAlgebra filiform_algebra(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::ExcludedParameterValue, "filiform algebras need n >= 3");
  StructureConstants c(n);
  for (std::size_t i = 1; i + 1 < n; ++i) c.add(0, i, i + 1, Scalar(1));
  return LieAlgebra(c);
}

LieAlgebra abelian_algebra(std::size_t n) { return LieAlgebra(StructureConstants(n)); }

BilinearAlgebra quaternions() {
  BilinearAlgebra q{4, std::vector<Vector>(16, zero_vector(4))};
  // e_a e_b = sign * e_c over the basis 1, i, j, k
  const std::array<std::array<std::pair<int, std::size_t>, 4>, 4> table{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      q.products[a * 4 + b] = scale(Scalar(table[a][b].first), unit_vector(4, table[a][b].second));
    }
  }
  return q;
}

BilinearAlgebra split_octonions() {
  const BilinearAlgebra q = quaternions();
  auto mul = [&](const Vector& x, const Vector& y) {
    Vector out = zero_vector(4);
    for (std::size_t a = 0; a < 4; ++a) {
      if (x[a].is_zero()) continue;
      for (std::size_t b = 0; b < 4; ++b) {
        if (!y[b].is_zero()) out = out + scale(x[a] * y[b], q.product(a, b));
      }
    }
    return out;
  };
  auto conj = [](Vector x) {
    for (std::size_t a = 1; a < 4; ++a) x[a] = -x[a];
    return x;
  };
  // (a,b)(c,d) = (ac + conj(d) b, d a + b conj(c)) over the basis 1,i,j,k,l,il,jl,kl
  BilinearAlgebra o{8, std::vector<Vector>(64)};
  for (std::size_t s = 0; s < 8; ++s) {
    for (std::size_t t = 0; t < 8; ++t) {
      const Vector x = unit_vector(8, s);
      const Vector y = unit_vector(8, t);
      const Vector a(x.begin(), x.begin() + 4), b(x.begin() + 4, x.end());
      const Vector c(y.begin(), y.begin() + 4), d(y.begin() + 4, y.end());
      const Vector first = mul(a, c) + mul(conj(d), b);
      const Vector second = mul(d, a) + mul(b, conj(c));
      Vector out(first);
      out.insert(out.end(), second.begin(), second.end());
      o.products[s * 8 + t] = std::move(out);
    }
  }
  return o;
}

Catalog Catalog::builtin() {
  Catalog c;
  c.add(fixed("r2", "non-abelian, dim 2", R::ExplicitConstants, r2));
  c.add(fixed("n3", "Heisenberg, dim 3", R::ExplicitConstants, n3));
  c.add(family("r3_lambda", "solvable, dim 3", {"lambda"},
               [] { return from_brackets(3, {{1, 2, "e2"}, {1, 3, "lambda*e3"}}, {"lambda"}); }));
  c.add(fixed("sl2", "simple, dim 3", R::ExplicitConstants, sl2));
  c.add(fixed("n3_plus_Q", "n3 + abelian line, dim 4", R::DirectSum, [] { return direct_sum(n3(), abelian_algebra(1)); }));
  c.add(fixed("n4", "filiform, dim 4", R::ExplicitConstants, [] { return from_brackets(4, {{1, 2, "e3"}, {1, 3, "e4"}}); }));
  c.add(fixed("r2_plus_Q2", "r2 + abelian plane, dim 4", R::DirectSum, [] { return direct_sum(r2(), abelian_algebra(2)); }));
  c.add(fixed("r2_plus_r2", "r2 + r2, dim 4", R::DirectSum, [] { return direct_sum(r2(), r2()); }));
  c.add(fixed("sl2_plus_Q", "sl2 + abelian line, dim 4", R::DirectSum, [] { return direct_sum(sl2(), abelian_algebra(1)); }));
  c.add(fixed("g1", "solvable, dim 4", R::ExplicitConstants,
              [] { return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e3"}, {1, 4, "e4"}}); }));
  c.add(family("g2_alpha", "solvable, dim 4", {"alpha"},
               [] { return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e3"}, {1, 4, "e3 + alpha*e4"}}, {"alpha"}); }));
  c.add(fixed("g3", "solvable, dim 4", R::ExplicitConstants, [] {
    return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e3"}, {1, 4, "2*e4"}, {2, 3, "e4"}});
  }));
  c.add(family("g4_alpha_beta", "solvable, dim 4", {"alpha", "beta"}, [] {
    return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e2 + alpha*e3"}, {1, 4, "e3 + beta*e4"}}, {"alpha", "beta"});
  }));
  {
    CatalogEntry e = family("g5_alpha", "solvable, dim 4", {"alpha"}, [] {
      return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e2 + alpha*e3"}, {1, 4, "(alpha + 1)*e4"}, {2, 3, "e4"}},
                           {"alpha"});
    });
    e.special_values["alpha"] = {Rational(0), Rational(-1)};
    c.add(std::move(e));
  }
  c.add(fixed("gl2", "2x2 matrices, dim 4", R::MatrixRealization, gl2));
  {
    CatalogEntry e;
    e.name = "filiform";
    e.summary = "standard graded filiform f_n";
    e.recipe = R::Filiform;
    e.integer_params = {"n"};
    e.build = [](const Assignments& a) { return filiform_algebra(size_param(a, "n", 3)); };
    c.add(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "abelian";
    e.summary = "abelian of dimension n";
    e.recipe = R::ExplicitConstants;
    e.integer_params = {"n"};
    e.build = [](const Assignments& a) { return abelian_algebra(size_param(a, "n", 1)); };
    c.add(std::move(e));
  }
  {
    CatalogEntry e = fixed("ex44", "g5(0) with its outer derivation diag(0,1,1,2)", R::ExplicitConstants, [] {
      return from_brackets(4, {{1, 2, "e2"}, {1, 3, "e2"}, {1, 4, "e4"}, {2, 3, "e4"}});
    });
    c.add(std::move(e));
  }
  {
    CatalogEntry e = fixed("ex413", "characteristically nilpotent, dim 8", R::ExplicitConstants, [] {
      return from_brackets(8,
                           {{1, 2, "x3"}, {1, 3, "x4"}, {1, 4, "x5"}, {1, 5, "x6"}, {1, 6, "x7"}, {1, 7, "x8"},
                            {2, 3, "x5 + x6"}, {2, 4, "x6 + x7"}, {2, 5, "2*x7 + x8"}, {2, 6, "3*x8"},
                            {3, 4, "-x7"}, {3, 5, "-x8"}},
                           {}, default_labels(8, "x"));
    });
    c.add(std::move(e));
  }
  {
    CatalogEntry e = family("glambda", "nilpotent family, dim 7", {"lambda"}, [] {
      return from_brackets(7,
                           {{1, 2, "x4"}, {1, 3, "x6"}, {1, 4, "x5"}, {1, 5, "x7"}, {2, 3, "lambda*x5"},
                            {2, 4, "x6"}, {2, 6, "x7"}, {3, 4, "(1 - lambda)*x7"}},
                           {"lambda"}, default_labels(7, "x"));
    });
    e.special_values["lambda"] = {Rational(1)};
    c.add(std::move(e));
  }
  {
    CatalogEntry e = fixed("sl3", "simple, dim 8, from 3x3 matrices", R::MatrixRealization, sl3);
    e.elements["highest_root"] = "e2";
    c.add(std::move(e));
  }
  {
    CatalogEntry e = fixed("sp4", "simple, dim 10, from 4x4 symplectic matrices", R::MatrixRealization, sp4);
    e.elements["highest_root"] = "e5";
    c.add(std::move(e));
  }
  c.add(fixed("g2", "simple, dim 14, derivations of the split octonions", R::DerivationsOfBilinear, g2_algebra));
  return c;
}

void Catalog::add(CatalogEntry entry) {
  if (contains(entry.name)) throw Error(ErrorKind::DuplicateName, "duplicate catalog name '" + entry.name + "'");
  entries_.push_back(std::move(entry));
}

bool Catalog::contains(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const CatalogEntry& e) { return e.name == name; });
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  throw Error(ErrorKind::UnknownName, "unknown algebra '" + name + "'");
}

LieAlgebra Catalog::get(const std::string& name, const Assignments& assignments) const {
  const CatalogEntry& e = entry(name);
  Assignments scalars;
  for (const auto& [k, v] : assignments) {
    const bool scalar = std::find(e.params.begin(), e.params.end(), k) != e.params.end();
    const bool size = std::find(e.integer_params.begin(), e.integer_params.end(), k) != e.integer_params.end();
    if (!scalar && !size) throw Error(ErrorKind::UnknownName, "algebra '" + name + "' has no parameter '" + k + "'");
    if (scalar) scalars[k] = v;
  }
  LieAlgebra g = e.build(assignments);
  g.set_name(name);
  if (!scalars.empty()) {
    g = specialize(g, scalars);
    g.set_name(name);
  }
  return g;
}

void Catalog::merge_file(const std::string& path) {
  for (auto& g : load_file(path)) {
    CatalogEntry e;
    e.name = g.name();
    e.summary = "loaded from " + path;
    e.recipe = R::Loaded;
    e.params = g.params();
    e.build = [g](const Assignments&) { return g; };
    add(std::move(e));
  }
}

// ------------------------------------------------------------------ files

namespace {

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void schema_error(std::size_t entry, const std::string& message) {
  throw Error(ErrorKind::Parse, "entry " + std::to_string(entry + 1) + ": " + message);
}

std::size_t index_field(const json& obj, const char* key, std::size_t dim, std::size_t entry) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) schema_error(entry, std::string("'") + key + "' must be an integer");
  const auto v = obj[key].get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > dim) schema_error(entry, std::string("'") + key + "' out of range");
  return static_cast<std::size_t>(v - 1);
}

}  // namespace

std::vector<LieAlgebra> parse_catalog_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " +
                                      "malformed JSON");
  }
  if (!doc.is_array()) throw Error(ErrorKind::Parse, "line 1: top level must be a list of algebras");
  std::vector<LieAlgebra> out;
  for (std::size_t idx = 0; idx < doc.size(); ++idx) {
    const json& obj = doc[idx];
    if (!obj.is_object()) schema_error(idx, "must be an object");
    if (!obj.contains("name") || !obj["name"].is_string()) schema_error(idx, "'name' must be a string");
    const std::string name = obj["name"].get<std::string>();
    if (!obj.contains("dim") || !obj["dim"].is_number_integer() || obj["dim"].get<long long>() < 0) {
      schema_error(idx, "'dim' must be a non-negative integer");
    }
    const auto dim = static_cast<std::size_t>(obj["dim"].get<long long>());
    std::vector<std::string> params;
    if (obj.contains("params")) {
      if (!obj["params"].is_array()) schema_error(idx, "'params' must be a list of strings");
      for (const auto& p : obj["params"]) {
        if (!p.is_string()) schema_error(idx, "'params' must be a list of strings");
        params.push_back(p.get<std::string>());
      }
    }
    std::vector<std::string> labels;
    if (obj.contains("labels")) {
      if (!obj["labels"].is_array() || obj["labels"].size() != dim) schema_error(idx, "'labels' must list dim names");
      for (const auto& l : obj["labels"]) {
        if (!l.is_string()) schema_error(idx, "'labels' must be strings");
        labels.push_back(l.get<std::string>());
      }
    }
    if (!obj.contains("brackets") || !obj["brackets"].is_array()) schema_error(idx, "'brackets' must be a list");
    StructureConstants c(dim);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : obj["brackets"]) {
      if (!b.is_object()) schema_error(idx, "bracket must be an object");
      const std::size_t i = index_field(b, "i", dim, idx);
      const std::size_t j = index_field(b, "j", dim, idx);
      if (i >= j) schema_error(idx, "bracket needs i < j");
      if (!seen.insert({i, j}).second) schema_error(idx, "bracket [" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] given twice");
      if (!b.contains("value") || !b["value"].is_object()) schema_error(idx, "'value' must be an object");
      Vector v = zero_vector(dim);
      for (const auto& [key, lit] : b["value"].items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long kk = std::stol(key, &used);
          if (used != key.size() || kk < 1 || static_cast<std::size_t>(kk) > dim) throw std::out_of_range("k");
          k = static_cast<std::size_t>(kk - 1);
        } catch (const std::exception&) {
          schema_error(idx, "basis index '" + key + "' out of range");
        }
        if (!lit.is_string()) schema_error(idx, "coefficient must be a scalar literal string");
        try {
          v[k] = parse_scalar(lit.get<std::string>(), {params});
        } catch (const Error& e) {
          schema_error(idx, e.what());
        }
      }
      c.set(i, j, std::move(v));
    }
    for (const auto& g : out) {
      if (g.name() == name) throw Error(ErrorKind::DuplicateName, "duplicate catalog name '" + name + "'");
    }
    if (auto failure = find_jacobi_failure(c)) {
      const auto& lab = labels.empty() ? default_labels(dim) : labels;
      throw JacobiViolation(*failure, "entry '" + name + "' violates the Jacobi identity at (" + lab[failure->i] + ", " +
                                          lab[failure->j] + ", " + lab[failure->k] + ")");
    }
    LieAlgebra g(c, labels, params);
    g.set_name(name);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<LieAlgebra> load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog_json(ss.str());
}

std::string save_catalog_json(const std::vector<LieAlgebra>& algebras) {
  json doc = json::array();
  for (const auto& g : algebras) {
    json obj;
    obj["name"] = g.name();
    obj["dim"] = g.dim();
    if (!g.params().empty()) obj["params"] = g.params();
    if (g.labels() != default_labels(g.dim())) obj["labels"] = g.labels();
    json brackets = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
      for (std::size_t j = i + 1; j < g.dim(); ++j) {
        const Vector& v = g.bracket_basis(i, j);
        if (is_zero(v)) continue;
        json value = json::object();
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (!v[k].is_zero()) value[std::to_string(k + 1)] = v[k].to_string();
        }
        brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"value", value}});
      }
    }
    obj["brackets"] = brackets;
    doc.push_back(obj);
  }
  return doc.dump(2) + "\n";
}

std::pair<std::string, Rational> parse_assignment(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::Usage, "expected k=v, got '" + text + "'");
  const std::string key = text.substr(0, eq);
  const Scalar v = parse_scalar(text.substr(eq + 1));
  if (!v.is_rational()) throw Error(ErrorKind::Usage, "value of '" + key + "' must be rational");
  return {key, v.rational()};
}

}  // namespace liedd
