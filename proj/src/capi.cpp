#include "liedd/liedd.h"

#include <cstring>
#include <fstream>
#include <sstream>

#include "liedd/rmatrix.hpp"
#include "report.hpp"

struct liedd_context {
  liedd::Catalog catalog = liedd::Catalog::builtin();
  std::string last_error;
};

struct liedd_algebra {
  liedd::LieAlgebra g;
};

namespace {

using liedd::Error;
using liedd::ErrorKind;
namespace report = liedd::report;

liedd_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return LIEDD_PARSE;
    case ErrorKind::UnknownName: return LIEDD_UNKNOWN_NAME;
    case ErrorKind::Internal: return LIEDD_INTERNAL;
    case ErrorKind::JacobiViolation:
    case ErrorKind::DuplicateName:
    case ErrorKind::DenominatorVanishes:
    case ErrorKind::ExcludedParameterValue:
    case ErrorKind::NotADerivation:
    case ErrorKind::NotClosed:
    case ErrorKind::NotIndependent:
    case ErrorKind::NotNilpotent:
    case ErrorKind::AlgebraMismatch:
    case ErrorKind::DivisionByZero: return LIEDD_VALIDATION;
    default: return LIEDD_USAGE;
  }
}

template <class F>
liedd_status guarded(liedd_context* ctx, F&& f) {
  if (!ctx) return LIEDD_USAGE;
  ctx->last_error.clear();
  try {
    f();
    return LIEDD_OK;
  } catch (const Error& e) {
    ctx->last_error = std::string(liedd::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    ctx->last_error = std::string("Internal: ") + e.what();
    return LIEDD_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

report::Format format_of(liedd_format f) {
  switch (f) {
    case LIEDD_FORMAT_TEXT: return report::Format::Text;
    case LIEDD_FORMAT_JSON: return report::Format::Json;
    case LIEDD_FORMAT_CSV: return report::Format::Csv;
  }
  throw Error(ErrorKind::Usage, "unknown output format");
}

void emit(const report::Json& j, liedd_format fmt, char** out) {
  if (!out) throw Error(ErrorKind::Usage, "output pointer is null");
  *out = dup(report::render(j, format_of(fmt)));
}

const liedd::LieAlgebra& algebra_of(const liedd_algebra* alg) {
  if (!alg) throw Error(ErrorKind::Usage, "algebra handle is null");
  return alg->g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

extern "C" {

const char* liedd_version(void) { return LIEDD_VERSION; }

liedd_status liedd_context_create(liedd_context** out) {
  if (!out) return LIEDD_USAGE;
  *out = nullptr;
  try {
    *out = new liedd_context();
    return LIEDD_OK;
  } catch (...) {
    return LIEDD_INTERNAL;
  }
}

void liedd_context_destroy(liedd_context* ctx) { delete ctx; }

const char* liedd_last_error(const liedd_context* ctx) { return ctx ? ctx->last_error.c_str() : ""; }

liedd_status liedd_load_catalog(liedd_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) throw Error(ErrorKind::Usage, "catalog path is null");
    ctx->catalog.merge_file(path);
  });
}

liedd_status liedd_algebra_get(liedd_context* ctx, const char* name, const char* const* assignments,
                               size_t n_assignments, liedd_algebra** out) {
  return guarded(ctx, [&] {
    if (!name || !out) throw Error(ErrorKind::Usage, "name and output pointer are required");
    *out = nullptr;
    liedd::Assignments at;
    for (size_t i = 0; i < n_assignments; ++i) {
      auto [k, v] = liedd::parse_assignment(assignments[i]);
      if (!at.emplace(k, v).second) throw Error(ErrorKind::Usage, "parameter '" + k + "' assigned twice");
    }
    *out = new liedd_algebra{ctx->catalog.get(name, at)};
  });
}

void liedd_algebra_destroy(liedd_algebra* alg) { delete alg; }

size_t liedd_algebra_dim(const liedd_algebra* alg) { return alg ? alg->g.dim() : 0; }

liedd_status liedd_catalog_list(liedd_context* ctx, liedd_format fmt, char** out) {
  return guarded(ctx, [&] { emit(report::catalog_list(ctx->catalog), fmt, out); });
}

liedd_status liedd_report_show(liedd_context* ctx, const liedd_algebra* alg, liedd_format fmt, char** out) {
  return guarded(ctx, [&] { emit(report::show(algebra_of(alg)), fmt, out); });
}

liedd_status liedd_report_invariants(liedd_context* ctx, const liedd_algebra* alg, liedd_format fmt, char** out) {
  return guarded(ctx, [&] { emit(report::invariants(algebra_of(alg)), fmt, out); });
}

liedd_status liedd_report_derivations(liedd_context* ctx, const liedd_algebra* alg, const char* t, liedd_format fmt,
                                      char** out) {
  return guarded(ctx, [&] {
    liedd::LieAlgebra g = algebra_of(alg);
    std::optional<liedd::Scalar> tv;
    if (t) {
      std::vector<std::string> extra;
      tv = liedd::parse_scalar(t, {g.params(), &extra});
      g.declare_params(extra);
    }
    emit(report::derivations(g, tv), fmt, out);
  });
}

liedd_status liedd_report_identity(liedd_context* ctx, const liedd_algebra* alg, const char* id,
                                   const char* quantifier, const char* z, const char* map_json, liedd_format fmt,
                                   char** out) {
  return guarded(ctx, [&] {
    if (!id) throw Error(ErrorKind::Usage, "identity id is required");
    if (z && map_json) throw Error(ErrorKind::Usage, "give at most one of z and map");
    liedd::LieAlgebra g = algebra_of(alg);
    const liedd::IdentityId ident = liedd::parse_identity_id(id);
    liedd::Quantifier q = liedd::default_quantifier(ident);
    const bool payload = z || map_json;
    if (quantifier) {
      q.kind = liedd::parse_quantifier_kind(quantifier);
    } else if (payload) {
      q.kind = liedd::Quantifier::Kind::Fixed;
    }
    if (payload && q.kind != liedd::Quantifier::Kind::Fixed) {
      throw Error(ErrorKind::Usage, "z and map require the fixed quantifier");
    }
    if (!payload && q.kind == liedd::Quantifier::Kind::Fixed) {
      throw Error(ErrorKind::Usage, "the fixed quantifier needs z or map");
    }
    std::vector<std::string> extra;
    if (z) q.element = g.parse_element(z, &extra);
    if (map_json) q.map = report::parse_map(map_json, g, &extra);
    g.declare_params(extra);
    emit(report::identity(g, liedd::check_quantified(g, ident, q)), fmt, out);
  });
}

liedd_status liedd_report_rmatrix(liedd_context* ctx, const liedd_algebra* alg, const char* z, const char* matrix_json,
                                  int build_double, liedd_format fmt, char** out) {
  return guarded(ctx, [&] {
    if ((z == nullptr) == (matrix_json == nullptr)) throw Error(ErrorKind::Usage, "give exactly one of z and matrix");
    liedd::LieAlgebra g = algebra_of(alg);
    std::vector<std::string> extra;
    std::optional<liedd::Vector> zv;
    liedd::LinearMap r;
    if (z) {
      zv = g.parse_element(z, &extra);
      r = g.ad(*zv);
    } else {
      r = report::parse_map(matrix_json, g, &extra);
    }
    g.declare_params(extra);
    emit(report::rmatrix(g, r, zv, build_double != 0), fmt, out);
  });
}

liedd_status liedd_report_table1(liedd_context* ctx, liedd_format fmt, char** out) {
  return guarded(ctx, [&] { emit(report::table1(liedd::table1(ctx->catalog)), fmt, out); });
}

liedd_status liedd_report_check(liedd_context* ctx, const char* table2_file, liedd_format fmt, char** out,
                                int* all_passed) {
  return guarded(ctx, [&] {
    liedd::AcceptanceOptions options;
    if (table2_file) {
      (void)read_file(table2_file);
      options.table2_file = table2_file;
    }
    const auto results = liedd::run_acceptance(ctx->catalog, options);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (all_passed) *all_passed = ok ? 1 : 0;
    emit(report::check_paper(results), fmt, out);
  });
}

void liedd_string_free(char* s) { std::free(s); }

}  // extern "C"
