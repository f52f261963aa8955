// Command-line front end over the C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liedd/liedd.h"

namespace {

constexpr int kExitError = 2;
constexpr int kExitInternal = 1;

struct Options {
  std::string format = "text";
  std::vector<std::string> catalogs;
  std::string name;
  std::vector<std::string> params;
  std::string general;
  std::string id;
  std::string quantifier;
  std::string z;
  std::string map_file;
  std::string matrix_file;
  bool build_double = false;
  std::string table2_file;
};

class Session {
 public:
  Session() {
    if (liedd_context_create(&ctx_) != LIEDD_OK) throw std::runtime_error("cannot create context");
  }
  ~Session() {
    liedd_algebra_destroy(alg_);
    liedd_context_destroy(ctx_);
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  liedd_context* ctx() { return ctx_; }
  const liedd_algebra* algebra() const { return alg_; }

  liedd_status load(const std::vector<std::string>& files) {
    for (const auto& f : files) {
      const liedd_status s = liedd_load_catalog(ctx_, f.c_str());
      if (s != LIEDD_OK) return s;
    }
    return LIEDD_OK;
  }

  liedd_status get(const std::string& name, const std::vector<std::string>& params) {
    std::vector<const char*> ptrs;
    for (const auto& p : params) ptrs.push_back(p.c_str());
    return liedd_algebra_get(ctx_, name.c_str(), ptrs.data(), ptrs.size(), &alg_);
  }

 private:
  liedd_context* ctx_ = nullptr;
  liedd_algebra* alg_ = nullptr;
};

liedd_format format_of(const std::string& s) {
  if (s == "json") return LIEDD_FORMAT_JSON;
  if (s == "csv") return LIEDD_FORMAT_CSV;
  return LIEDD_FORMAT_TEXT;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::ostringstream s;
  s << in.rdbuf();
  out = s.str();
  return true;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

int fail(Session& session, liedd_status s) {
  std::cerr << "liedd: " << liedd_last_error(session.ctx()) << "\n";
  return s == LIEDD_INTERNAL ? kExitInternal : kExitError;
}

int run(const std::string& command, const Options& o) {
  Session session;
  const liedd_format fmt = format_of(o.format);
  if (const liedd_status s = session.load(o.catalogs); s != LIEDD_OK) return fail(session, s);

  const bool needs_algebra =
      command == "show" || command == "invariants" || command == "derivations" || command == "identity" ||
      command == "rmatrix";
  if (needs_algebra) {
    if (const liedd_status s = session.get(o.name, o.params); s != LIEDD_OK) return fail(session, s);
  }

  std::string map_text;
  const std::string& map_path = command == "identity" ? o.map_file : o.matrix_file;
  if (!map_path.empty() && !read_file(map_path, map_text)) {
    std::cerr << "liedd: cannot read '" << map_path << "'\n";
    return kExitError;
  }

  char* out = nullptr;
  liedd_status s = LIEDD_OK;
  liedd_context* ctx = session.ctx();
  const liedd_algebra* alg = session.algebra();
  if (command == "catalog-list") {
    s = liedd_catalog_list(ctx, fmt, &out);
  } else if (command == "show") {
    s = liedd_report_show(ctx, alg, fmt, &out);
  } else if (command == "invariants") {
    s = liedd_report_invariants(ctx, alg, fmt, &out);
  } else if (command == "derivations") {
    s = liedd_report_derivations(ctx, alg, opt(o.general), fmt, &out);
  } else if (command == "identity") {
    s = liedd_report_identity(ctx, alg, o.id.c_str(), opt(o.quantifier), opt(o.z), opt(map_text), fmt, &out);
  } else if (command == "rmatrix") {
    s = liedd_report_rmatrix(ctx, alg, opt(o.z), opt(map_text), o.build_double ? 1 : 0, fmt, &out);
  } else if (command == "table1") {
    s = liedd_report_table1(ctx, fmt, &out);
  } else if (command == "check-paper") {
    int all_passed = 0;
    s = liedd_report_check(ctx, opt(o.table2_file), fmt, &out, &all_passed);
  }
  if (s != LIEDD_OK) return fail(session, s);
  std::fputs(out, stdout);
  liedd_string_free(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant computations for Lie algebras"};
  app.set_version_flag("--version", std::string(liedd_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--catalog", o.catalogs, "Structure-constant file to merge (repeatable)")->check(CLI::ExistingFile);

  auto algebra_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("NAME", o.name, "Catalog entry")->required();
    sub->add_option("--param", o.params, "Parameter assignment k=v (repeatable)");
    return sub;
  };

  app.add_subcommand("catalog-list", "List catalog entries");
  algebra_command("show", "Print the bracket table");
  algebra_command("invariants", "Series, classes, center, derivation dimension");
  CLI::App* der = algebra_command("derivations", "Derivation basis");
  der->add_option("--general", o.general, "Scalar t for (t,1,1)-derivations");
  CLI::App* ident = algebra_command("identity", "Check an identity under a quantifier");
  ident->add_option("--id", o.id, "Identity")->required()->check(CLI::IsMember({"1", "2", "3", "4", "6", "s5"}));
  ident->add_option("--quantifier", o.quantifier, "Quantifier")
      ->check(CLI::IsMember({"all-der", "all-inner", "all-elem", "fixed"}));
  CLI::Option* z = ident->add_option("--z", o.z, "Fixed element, e.g. \"2*e1 - a*e3\"");
  ident->add_option("--map", o.map_file, "JSON file with the rows of a fixed map")
      ->check(CLI::ExistingFile)
      ->excludes(z);
  CLI::App* rm = algebra_command("rmatrix", "R-matrix checks for ad(z) or a given map");
  CLI::Option* rz = rm->add_option("--z", o.z, "Element z, the map is ad(z)");
  CLI::Option* rmat = rm->add_option("--matrix", o.matrix_file, "JSON file with the rows of the map")
                          ->check(CLI::ExistingFile)
                          ->excludes(rz);
  rm->add_flag("--build-double", o.build_double, "Print the bracket table of the double");
  (void)rmat;
  app.add_subcommand("table1", "Identity verdicts for the low-dimensional table");
  CLI::App* check = app.add_subcommand("check-paper", "Run the acceptance criteria");
  check->add_option("--table2", o.table2_file, "Structure-constant file with the glambda family")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
    if (rm->parsed() && o.z.empty() && o.matrix_file.empty()) {
      throw CLI::ValidationError("rmatrix", "one of --z and --matrix is required");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kExitError;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const std::exception& e) {
    std::cerr << "liedd: " << e.what() << "\n";
    return kExitInternal;
  }
}
