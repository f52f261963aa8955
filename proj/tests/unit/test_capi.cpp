#include "doctest.h"

#include <string>

#include "json.hpp"
#include "liedd/liedd.h"

namespace {

class Ctx {
 public:
  Ctx() { REQUIRE(liedd_context_create(&ctx_) == LIEDD_OK); }
  ~Ctx() { liedd_context_destroy(ctx_); }
  liedd_context* get() { return ctx_; }

 private:
  liedd_context* ctx_ = nullptr;
};

std::string take(char* s) {
  std::string out = s ? s : "";
  liedd_string_free(s);
  return out;
}

nlohmann::json json_of(char* s) { return nlohmann::json::parse(take(s)); }

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and null handles") {
    CHECK(std::string(liedd_version()).size() > 0);
    CHECK(liedd_context_create(nullptr) == LIEDD_USAGE);
    char* out = nullptr;
    CHECK(liedd_catalog_list(nullptr, LIEDD_FORMAT_TEXT, &out) == LIEDD_USAGE);
    CHECK(std::string(liedd_last_error(nullptr)).empty());
    liedd_context_destroy(nullptr);
    liedd_algebra_destroy(nullptr);
    liedd_string_free(nullptr);
    Ctx ctx;
    CHECK(liedd_report_show(ctx.get(), nullptr, LIEDD_FORMAT_TEXT, &out) == LIEDD_USAGE);
    CHECK(std::string(liedd_last_error(ctx.get())).find("null") != std::string::npos);
  }

  TEST_CASE("catalog listing") {
    Ctx ctx;
    char* out = nullptr;
    REQUIRE(liedd_catalog_list(ctx.get(), LIEDD_FORMAT_JSON, &out) == LIEDD_OK);
    const auto j = json_of(out);
    CHECK(j["schema"] == 1);
    CHECK(j["rows"].size() >= 23);
  }

  TEST_CASE("algebra lookup and errors") {
    Ctx ctx;
    liedd_algebra* alg = nullptr;
    CHECK(liedd_algebra_get(ctx.get(), "nope", nullptr, 0, &alg) == LIEDD_UNKNOWN_NAME);
    CHECK(alg == nullptr);
    CHECK(std::string(liedd_last_error(ctx.get())).find("nope") != std::string::npos);
    const char* bad[] = {"n"};
    CHECK(liedd_algebra_get(ctx.get(), "filiform", bad, 1, &alg) == LIEDD_USAGE);
    const char* excluded[] = {"n=1"};
    CHECK(liedd_algebra_get(ctx.get(), "filiform", excluded, 1, &alg) == LIEDD_VALIDATION);
    const char* ok[] = {"n=6"};
    REQUIRE(liedd_algebra_get(ctx.get(), "filiform", ok, 1, &alg) == LIEDD_OK);
    CHECK(liedd_algebra_dim(alg) == 6);
    CHECK(std::string(liedd_last_error(ctx.get())).empty());
    liedd_algebra_destroy(alg);
  }

  TEST_CASE("loading catalogs") {
    Ctx ctx;
    CHECK(liedd_load_catalog(ctx.get(), "/nonexistent.json") != LIEDD_OK);
    REQUIRE(liedd_load_catalog(ctx.get(), LIEDD_SOURCE_DIR "/tests/data/glambda.json") == LIEDD_OK);
    CHECK(liedd_load_catalog(ctx.get(), LIEDD_SOURCE_DIR "/tests/data/glambda.json") == LIEDD_VALIDATION);
    CHECK(liedd_load_catalog(ctx.get(), LIEDD_SOURCE_DIR "/tests/data/broken_jacobi.json") == LIEDD_VALIDATION);
    CHECK(std::string(liedd_last_error(ctx.get())).find("JacobiViolation") == 0);
    CHECK(liedd_load_catalog(ctx.get(), LIEDD_SOURCE_DIR "/tests/data/malformed.json") == LIEDD_PARSE);
    CHECK(std::string(liedd_last_error(ctx.get())).find("line") != std::string::npos);
  }

  TEST_CASE("identity reports") {
    Ctx ctx;
    liedd_algebra* sl2 = nullptr;
    REQUIRE(liedd_algebra_get(ctx.get(), "sl2", nullptr, 0, &sl2) == LIEDD_OK);
    char* out = nullptr;
    REQUIRE(liedd_report_identity(ctx.get(), sl2, "1", "all-der", nullptr, nullptr, LIEDD_FORMAT_JSON, &out) ==
            LIEDD_OK);
    CHECK(json_of(out)["status"] == "Holds");
    REQUIRE(liedd_report_identity(ctx.get(), sl2, "2", nullptr, nullptr, nullptr, LIEDD_FORMAT_JSON, &out) ==
            LIEDD_OK);
    CHECK(json_of(out)["status"] == "Fails");
    REQUIRE(liedd_report_identity(ctx.get(), sl2, "4", nullptr, "a*e1 + e2", nullptr, LIEDD_FORMAT_JSON, &out) ==
            LIEDD_OK);
    const auto fixed = json_of(out);
    CHECK(fixed["quantifier"] == "fixed");
    CHECK(fixed["status"] == "Holds");
    CHECK(liedd_report_identity(ctx.get(), sl2, "4", "all-elem", "e1", nullptr, LIEDD_FORMAT_JSON, &out) ==
          LIEDD_USAGE);
    CHECK(liedd_report_identity(ctx.get(), sl2, "4", "fixed", nullptr, nullptr, LIEDD_FORMAT_JSON, &out) ==
          LIEDD_USAGE);
    CHECK(liedd_report_identity(ctx.get(), sl2, "2", nullptr, "e1", nullptr, LIEDD_FORMAT_JSON, &out) ==
          LIEDD_USAGE);
    CHECK(liedd_report_identity(ctx.get(), sl2, "9", nullptr, nullptr, nullptr, LIEDD_FORMAT_JSON, &out) ==
          LIEDD_USAGE);
    CHECK(liedd_report_identity(ctx.get(), sl2, "4", nullptr, "e1 +", nullptr, LIEDD_FORMAT_JSON, &out) ==
          LIEDD_PARSE);
    CHECK(liedd_report_identity(ctx.get(), sl2, "2", nullptr, nullptr, "[[1]]", LIEDD_FORMAT_JSON, &out) ==
          LIEDD_PARSE);
    liedd_algebra_destroy(sl2);
  }

  TEST_CASE("rmatrix and derivation reports") {
    Ctx ctx;
    liedd_algebra* sl2 = nullptr;
    REQUIRE(liedd_algebra_get(ctx.get(), "sl2", nullptr, 0, &sl2) == LIEDD_OK);
    char* out = nullptr;
    REQUIRE(liedd_report_rmatrix(ctx.get(), sl2, "z1*e1+z2*e2+z3*e3", nullptr, 0, LIEDD_FORMAT_JSON, &out) ==
            LIEDD_OK);
    const auto j = json_of(out);
    CHECK(j["classical"]["status"] == "Holds");
    CHECK(j["mybe"]["lambda"] == "4*z1*z2 + 4*z3^2");
    CHECK(liedd_report_rmatrix(ctx.get(), sl2, nullptr, nullptr, 0, LIEDD_FORMAT_JSON, &out) == LIEDD_USAGE);
    REQUIRE(liedd_report_rmatrix(ctx.get(), sl2, nullptr, "[[1,0,0],[0,1,0],[0,0,1]]", 1, LIEDD_FORMAT_JSON, &out) ==
            LIEDD_OK);
    CHECK(json_of(out)["classical"]["status"] == "Holds");
    REQUIRE(liedd_report_derivations(ctx.get(), sl2, nullptr, LIEDD_FORMAT_JSON, &out) == LIEDD_OK);
    CHECK(json_of(out)["dim"] == 3);
    REQUIRE(liedd_report_derivations(ctx.get(), sl2, "3", LIEDD_FORMAT_JSON, &out) == LIEDD_OK);
    CHECK(json_of(out)["kind"] == "generalized");
    liedd_algebra_destroy(sl2);
  }

  TEST_CASE("table and deterministic output") {
    Ctx ctx;
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(liedd_report_table1(ctx.get(), LIEDD_FORMAT_CSV, &a) == LIEDD_OK);
    REQUIRE(liedd_report_table1(ctx.get(), LIEDD_FORMAT_CSV, &b) == LIEDD_OK);
    const std::string sa = take(a);
    CHECK(sa == take(b));
    CHECK(sa.rfind("algebra,(1),(2),(3),(4)\n", 0) == 0);
    liedd_algebra* g = nullptr;
    const char* at[] = {"lambda=3"};
    REQUIRE(liedd_algebra_get(ctx.get(), "glambda", at, 1, &g) == LIEDD_OK);
    REQUIRE(liedd_report_invariants(ctx.get(), g, LIEDD_FORMAT_TEXT, &a) == LIEDD_OK);
    REQUIRE(liedd_report_invariants(ctx.get(), g, LIEDD_FORMAT_TEXT, &b) == LIEDD_OK);
    CHECK(take(a) == take(b));
    liedd_algebra_destroy(g);
  }
}
