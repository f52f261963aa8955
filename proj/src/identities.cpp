#include "liedd/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace liedd {

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Id1: return "1";
    case IdentityId::Id2: return "2";
    case IdentityId::Id3: return "3";
    case IdentityId::Id4: return "4";
    case IdentityId::Id6: return "6";
    case IdentityId::Std5: return "s5";
    case IdentityId::Meta: return "meta";
  }
  return "?";
}

IdentityId parse_identity_id(const std::string& text) {
  if (text == "1") return IdentityId::Id1;
  if (text == "2") return IdentityId::Id2;
  if (text == "3") return IdentityId::Id3;
  if (text == "4") return IdentityId::Id4;
  if (text == "6") return IdentityId::Id6;
  if (text == "s5") return IdentityId::Std5;
  if (text == "meta") return IdentityId::Meta;
  throw Error(ErrorKind::Usage, "unknown identity '" + text + "' (expected 1, 2, 3, 4, 6, s5 or meta)");
}

Arity arity(IdentityId id) {
  switch (id) {
    case IdentityId::Id1:
    case IdentityId::Id2: return {1, 3};
    case IdentityId::Id3: return {0, 4};
    case IdentityId::Id4: return {0, 3};
    case IdentityId::Id6: return {0, 4};
    case IdentityId::Std5: return {0, 5};
    case IdentityId::Meta: return {0, 3};
  }
  return {0, 0};
}

std::string to_string(Quantifier::Kind k) {
  switch (k) {
    case Quantifier::Kind::Fixed: return "fixed";
    case Quantifier::Kind::AllDerivations: return "all-der";
    case Quantifier::Kind::AllInnerDerivations: return "all-inner";
    case Quantifier::Kind::AllElements: return "all-elem";
  }
  return "?";
}

Quantifier::Kind parse_quantifier_kind(const std::string& text) {
  if (text == "fixed") return Quantifier::Kind::Fixed;
  if (text == "all-der") return Quantifier::Kind::AllDerivations;
  if (text == "all-inner") return Quantifier::Kind::AllInnerDerivations;
  if (text == "all-elem") return Quantifier::Kind::AllElements;
  throw Error(ErrorKind::Usage, "unknown quantifier '" + text + "' (expected fixed, all-der, all-inner or all-elem)");
}

Quantifier default_quantifier(IdentityId id) {
  if (id == IdentityId::Id1 || id == IdentityId::Id2) return Quantifier::all_derivations();
  return Quantifier::all_elements();
}

namespace {

// ------------------------------------------------------------ raw forms

Vector hom_jacobi(const LieAlgebra& g, const LinearMap& d, const Vector& x, const Vector& y, const Vector& w) {
  return g.bracket(d * x, g.bracket(y, w)) + g.bracket(d * y, g.bracket(w, x)) + g.bracket(d * w, g.bracket(x, y));
}

Vector id3_form(const LieAlgebra& g, const Vector& za, const Vector& zb, const Vector& x, const Vector& y,
                const Vector& w) {
  return g.bracket(za, g.bracket(g.bracket(zb, x), g.bracket(y, w))) +
         g.bracket(za, g.bracket(g.bracket(zb, y), g.bracket(w, x))) +
         g.bracket(za, g.bracket(g.bracket(zb, w), g.bracket(x, y)));
}

Vector id4_form(const LieAlgebra& g, const Vector& a, const Vector& b, const Vector& c, const Vector& x,
                const Vector& y) {
  return g.bracket(a, g.bracket(g.bracket(b, x), g.bracket(c, y)));
}

Vector id6_form(const LieAlgebra& g, const Vector& z, const Vector& w1, const Vector& w2, const Vector& x,
                const Vector& y) {
  return g.bracket(z, g.bracket(g.bracket(w1, x), g.bracket(w2, y))) -
         g.bracket(w1, g.bracket(g.bracket(z, w2), g.bracket(x, y)));
}

Vector meta_form(const LieAlgebra& g, const Vector& a, const Vector& b, const Vector& x, const Vector& y) {
  return g.bracket(g.bracket(a, x), g.bracket(b, y));
}

const std::vector<std::pair<std::array<std::size_t, 4>, int>>& signed_s4() {
  static const auto perms = [] {
    std::vector<std::pair<std::array<std::size_t, 4>, int>> out;
    std::array<std::size_t, 4> p{0, 1, 2, 3};
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) inversions += p[i] > p[j] ? 1 : 0;
      }
      out.push_back({p, inversions % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

Vector std5_form(const LieAlgebra& g, const std::vector<Vector>& x) {
  Vector out = g.zero();
  for (const auto& [p, sign] : signed_s4()) {
    Vector v = g.bracket(x[1 + p[3]], x[0]);
    v = g.bracket(x[1 + p[2]], v);
    v = g.bracket(x[1 + p[1]], v);
    v = g.bracket(x[1 + p[0]], v);
    out = sign > 0 ? out + v : out - v;
  }
  return out;
}

Vector average(const Vector& v, long count) { return scale(Scalar(Rational(1, count)), v); }

// ------------------------------------------------------------ sweeping

std::vector<std::vector<std::size_t>> increasing(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Records evaluations in sweep order; the first nonzero one is the witness.
class Sweep {
 public:
  explicit Sweep(bool parametric) : parametric_(parametric) {}

  /// Returns false when the sweep may stop.
  bool record(const Vector& value, const std::vector<std::size_t>& maps, const std::vector<std::size_t>& elements) {
    if (is_zero(value)) return true;
    if (!witness_) {
      witness_ = Witness{maps, elements};
      value_ = value;
    }
    if (!parametric_) return false;
    conditions_.add(value);
    return true;
  }

  void finish(IdentityReport& r) const {
    if (!witness_) {
      r.status = Status::Holds;
      return;
    }
    r.witness = witness_;
    r.value = value_;
    if (!parametric_) {
      r.status = Status::Fails;
      return;
    }
    r.status = conditions_.status();
    if (r.status == Status::Conditional) r.conditions = conditions_.conditions();
  }

 private:
  bool parametric_;
  std::optional<Witness> witness_;
  Vector value_;
  ConditionCollector conditions_;
};

bool vector_has_parameters(const Vector& v) { return !variables_of(v).empty(); }

[[noreturn]] void incompatible(IdentityId id, Quantifier::Kind k) {
  throw Error(ErrorKind::IncompatibleQuantifier,
              "identity " + to_string(id) + " cannot be checked with quantifier " + to_string(k));
}

void sweep_hom_jacobi(const LieAlgebra& g, IdentityId id, const std::vector<LinearMap>& maps, Sweep& sweep) {
  const auto triples = increasing(g.dim(), 3);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (const auto& t : triples) {
      Vector v = hom_jacobi(g, maps[a], g.basis(t[0]), g.basis(t[1]), g.basis(t[2]));
      if (id == IdentityId::Id1) v = maps[a] * v;
      if (!sweep.record(v, {a}, t)) return;
    }
  }
}

/// Id1 is quadratic in D: the symmetric form (E(a,b) + E(b,a))/2 with
/// E(a,b) = D_a(S_b) must vanish for all a <= b.
void sweep_id1_space(const LieAlgebra& g, const std::vector<LinearMap>& maps, Sweep& sweep) {
  const auto triples = increasing(g.dim(), 3);
  std::vector<std::vector<Vector>> s(maps.size());
  for (std::size_t b = 0; b < maps.size(); ++b) {
    for (const auto& t : triples) s[b].push_back(hom_jacobi(g, maps[b], g.basis(t[0]), g.basis(t[1]), g.basis(t[2])));
  }
  for (std::size_t a = 0; a < maps.size(); ++a) {
    for (std::size_t b = a; b < maps.size(); ++b) {
      for (std::size_t t = 0; t < triples.size(); ++t) {
        const Vector v = average(maps[a] * s[b][t] + maps[b] * s[a][t], 2);
        if (!sweep.record(v, {a, b}, triples[t])) return;
      }
    }
  }
}

std::vector<std::size_t> concat(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void sweep_fixed_element(const LieAlgebra& g, IdentityId id, const Vector& z, Sweep& sweep) {
  const std::size_t block = id == IdentityId::Id3 ? 3 : 2;
  for (const auto& t : increasing(g.dim(), block)) {
    Vector v;
    if (id == IdentityId::Id3) {
      v = id3_form(g, z, z, g.basis(t[0]), g.basis(t[1]), g.basis(t[2]));
    } else if (id == IdentityId::Id4) {
      v = id4_form(g, z, z, z, g.basis(t[0]), g.basis(t[1]));
    } else {
      v = meta_form(g, z, z, g.basis(t[0]), g.basis(t[1]));
    }
    if (!sweep.record(v, {}, t)) return;
  }
}

void sweep_all_elements(const LieAlgebra& g, IdentityId id, Sweep& sweep) {
  const std::size_t n = g.dim();
  auto e = [&](std::size_t i) { return g.basis(i); };
  switch (id) {
    case IdentityId::Id3: {
      const auto triples = increasing(n, 3);
      for (const auto& m : multisets(n, 2)) {
        for (const auto& t : triples) {
          const Vector v = average(id3_form(g, e(m[0]), e(m[1]), e(t[0]), e(t[1]), e(t[2])) +
                                       id3_form(g, e(m[1]), e(m[0]), e(t[0]), e(t[1]), e(t[2])),
                                   2);
          if (!sweep.record(v, {}, concat(m, t))) return;
        }
      }
      return;
    }
    case IdentityId::Id4: {
      const auto pairs = increasing(n, 2);
      for (const auto& m : multisets(n, 3)) {
        for (const auto& p : pairs) {
          std::array<std::size_t, 3> s{m[0], m[1], m[2]};
          Vector sum = g.zero();
          do {
            sum = sum + id4_form(g, e(s[0]), e(s[1]), e(s[2]), e(p[0]), e(p[1]));
          } while (std::next_permutation(s.begin(), s.end()));
          // mean over the distinct orderings of the multiset
          long orderings = 6;
          if (m[0] == m[1] && m[1] == m[2]) {
            orderings = 1;
          } else if (m[0] == m[1] || m[1] == m[2]) {
            orderings = 3;
          }
          if (!sweep.record(average(sum, orderings), {}, concat(m, p))) return;
        }
      }
      return;
    }
    case IdentityId::Id6: {
      const auto pairs = increasing(n, 2);
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& m : multisets(n, 2)) {
          for (const auto& p : pairs) {
            const Vector v = average(id6_form(g, e(z), e(m[0]), e(m[1]), e(p[0]), e(p[1])) +
                                         id6_form(g, e(z), e(m[1]), e(m[0]), e(p[0]), e(p[1])),
                                     2);
            if (!sweep.record(v, {}, concat(concat({z}, m), p))) return;
          }
        }
      }
      return;
    }
    case IdentityId::Meta: {
      const auto pairs = increasing(n, 2);
      for (const auto& m : multisets(n, 2)) {
        for (const auto& p : pairs) {
          const Vector v = average(meta_form(g, e(m[0]), e(m[1]), e(p[0]), e(p[1])) +
                                       meta_form(g, e(m[1]), e(m[0]), e(p[0]), e(p[1])),
                                   2);
          if (!sweep.record(v, {}, concat(m, p))) return;
        }
      }
      return;
    }
    case IdentityId::Std5: {
      const auto quads = increasing(n, 4);
      for (std::size_t x0 = 0; x0 < n; ++x0) {
        for (const auto& q : quads) {
          const Vector v = std5_form(g, {e(x0), e(q[0]), e(q[1]), e(q[2]), e(q[3])});
          if (!sweep.record(v, {}, concat({x0}, q))) return;
        }
      }
      return;
    }
    default: incompatible(id, Quantifier::Kind::AllElements);
  }
}

bool maps_have_parameters(const std::vector<LinearMap>& maps) {
  return std::any_of(maps.begin(), maps.end(), [](const LinearMap& m) { return m.has_parameters(); });
}

}  // namespace

Vector eval_identity(const LieAlgebra& g, IdentityId id, const std::vector<LinearMap>& maps,
                     const std::vector<Vector>& elements) {
  const Arity a = arity(id);
  if (maps.size() != a.maps || elements.size() != a.elements) {
    throw Error(ErrorKind::ArityMismatch, "identity " + to_string(id) + " expects " + std::to_string(a.maps) +
                                              " map(s) and " + std::to_string(a.elements) + " element(s)");
  }
  for (const auto& m : maps) {
    if (m.rows() != g.dim() || m.cols() != g.dim()) throw Error(ErrorKind::ArityMismatch, "map size does not match the algebra");
  }
  for (const auto& v : elements) {
    if (v.size() != g.dim()) throw Error(ErrorKind::ArityMismatch, "element length does not match the algebra");
  }
  const auto& x = elements;
  switch (id) {
    case IdentityId::Id1: return maps[0] * hom_jacobi(g, maps[0], x[0], x[1], x[2]);
    case IdentityId::Id2: return hom_jacobi(g, maps[0], x[0], x[1], x[2]);
    case IdentityId::Id3: return id3_form(g, x[0], x[0], x[1], x[2], x[3]);
    case IdentityId::Id4: return id4_form(g, x[0], x[0], x[0], x[1], x[2]);
    case IdentityId::Id6: return id6_form(g, x[0], x[1], x[1], x[2], x[3]);
    case IdentityId::Std5: return std5_form(g, x);
    case IdentityId::Meta: return meta_form(g, x[0], x[0], x[1], x[2]);
  }
  return g.zero();
}

IdentityReport check_quantified(const LieAlgebra& g, IdentityId id, const Quantifier& q) {
  IdentityReport r;
  r.identity = id;
  r.quantifier = q.kind;
  const bool takes_map = id == IdentityId::Id1 || id == IdentityId::Id2;
  switch (q.kind) {
    case Quantifier::Kind::Fixed: {
      if (takes_map) {
        if (!q.map) incompatible(id, q.kind);
        if (q.map->rows() != g.dim() || q.map->cols() != g.dim()) {
          throw Error(ErrorKind::AlgebraMismatch, "map size does not match the algebra");
        }
        Sweep sweep(g.is_parametric() || q.map->has_parameters());
        sweep_hom_jacobi(g, id, {*q.map}, sweep);
        sweep.finish(r);
        r.map_basis = {*q.map};
      } else {
        if (id == IdentityId::Id6 || id == IdentityId::Std5 || !q.element) incompatible(id, q.kind);
        if (q.element->size() != g.dim()) throw Error(ErrorKind::AlgebraMismatch, "element length does not match the algebra");
        Sweep sweep(g.is_parametric() || vector_has_parameters(*q.element));
        sweep_fixed_element(g, id, *q.element, sweep);
        sweep.finish(r);
      }
      return r;
    }
    case Quantifier::Kind::AllDerivations:
    case Quantifier::Kind::AllInnerDerivations: {
      if (!takes_map) incompatible(id, q.kind);
      const DerivationSpace ds =
          q.kind == Quantifier::Kind::AllDerivations ? derivation_space(g) : inner_derivations(g);
      Sweep sweep(g.is_parametric() || maps_have_parameters(ds.basis));
      if (id == IdentityId::Id1) {
        sweep_id1_space(g, ds.basis, sweep);
      } else {
        sweep_hom_jacobi(g, id, ds.basis, sweep);
      }
      sweep.finish(r);
      r.exceptional = ds.exceptional;
      r.swept_maps = ds.basis.size();
      r.map_basis = ds.basis;
      return r;
    }
    case Quantifier::Kind::AllElements: {
      if (takes_map) incompatible(id, q.kind);
      Sweep sweep(g.is_parametric());
      sweep_all_elements(g, id, sweep);
      sweep.finish(r);
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------- audits

namespace {

void require_parameter_free(const LieAlgebra& g, const std::string& what) {
  if (g.is_parametric()) throw Error(ErrorKind::Usage, what + " needs a parameter-free algebra");
}

bool holds(const LieAlgebra& g, IdentityId id, const Quantifier& q) {
  return check_quantified(g, id, q).status == Status::Holds;
}

[[noreturn]] void violated(const std::string& audit, const LieAlgebra& g, const std::string& what) {
  throw Error(ErrorKind::Internal, audit + " violated for " + (g.name().empty() ? "algebra" : g.name()) + ": " + what);
}

}  // namespace

AuditReport implication_audit(const LieAlgebra& g) {
  require_parameter_free(g, "implication audit");
  const bool h2 = holds(g, IdentityId::Id2, Quantifier::all_derivations());
  const bool h1 = holds(g, IdentityId::Id1, Quantifier::all_derivations());
  const bool h3 = holds(g, IdentityId::Id3, Quantifier::all_elements());
  const bool h4 = holds(g, IdentityId::Id4, Quantifier::all_elements());
  AuditReport r{"implications", {{"(1) all derivations", h1}, {"(2) all derivations", h2},
                                 {"(3) all elements", h3}, {"(4) all elements", h4}}};
  if (h2 && !h1) violated("(2) => (1)", g, "(2) holds but (1) fails");
  if (h1 && !h3) violated("(1) => (3)", g, "(1) holds but (3) fails");
  if (h3 && !h4) violated("(3) => (4)", g, "(3) holds but (4) fails");
  return r;
}

AuditReport metabelian_equivalences(const LieAlgebra& g) {
  require_parameter_free(g, "metabelian audit");
  const bool m = is_metabelian(g);
  const bool polarized = holds(g, IdentityId::Meta, Quantifier::all_elements());
  const bool inner = holds(g, IdentityId::Id2, Quantifier::all_inner());
  const bool all = holds(g, IdentityId::Id2, Quantifier::all_derivations());
  AuditReport r{"metabelian",
                {{"metabelian", m}, {"[[z,x],[z,y]] = 0", polarized}, {"(2) inner derivations", inner},
                 {"(2) all derivations", all}}};
  if (m != polarized) violated("metabelian <=> [[z,x],[z,y]] = 0", g, "sides differ");
  if (m != inner) violated("metabelian <=> (2) for inner derivations", g, "sides differ");
  return r;
}

AuditReport id6_from_id3_audit(const LieAlgebra& g) {
  require_parameter_free(g, "(3) => (6) audit");
  const bool h3 = holds(g, IdentityId::Id3, Quantifier::all_elements());
  const bool h6 = holds(g, IdentityId::Id6, Quantifier::all_elements());
  AuditReport r{"(3) => (6)", {{"(3) all elements", h3}, {"(6) all elements", h6}}};
  if (h3 && !h6) violated("(3) => (6)", g, "(3) holds but (6) fails");
  return r;
}

AuditReport cbm_implies_id34_audit(const LieAlgebra& g) {
  require_parameter_free(g, "center-by-metabelian audit");
  const bool cbm = is_center_by_metabelian(g);
  const bool h3 = holds(g, IdentityId::Id3, Quantifier::all_elements());
  const bool h4 = holds(g, IdentityId::Id4, Quantifier::all_elements());
  AuditReport r{"center-by-metabelian", {{"center-by-metabelian", cbm}, {"(3) all elements", h3}, {"(4) all elements", h4}}};
  if (cbm && !(h3 && h4)) violated("center-by-metabelian => (3) and (4)", g, "an identity fails");
  return r;
}

LinearMap nilpotent_witness_derivation(const LieAlgebra& g) {
  require_parameter_free(g, "nilpotent witness derivation");
  const auto series = lower_central_series(g);
  if (!series.length) throw Error(ErrorKind::NotNilpotent, "algebra is not nilpotent");
  const std::size_t k = *series.length;
  if (k <= 2) {
    const DerivationSpace ds = derivation_space(g);
    for (const auto& d : ds.basis) {
      if (!d.is_zero()) return d;
    }
    throw Error(ErrorKind::Internal, "no nonzero derivation found");
  }
  const Subspace z = center(g);
  for (const auto& w : series.terms.at(k - 2).basis()) {
    if (!z.contains(w)) return g.ad(w);
  }
  throw Error(ErrorKind::Internal, "g^{k-2} lies in the center");
}

}  // namespace liedd
