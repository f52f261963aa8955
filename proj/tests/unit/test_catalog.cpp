#include "doctest.h"

#include <fstream>

#include "liedd/catalog.hpp"
#include "liedd/tables.hpp"

using namespace liedd;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::builtin();
  return c;
}

ErrorKind error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

std::string error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

std::vector<std::size_t> fingerprint(const LieAlgebra& g) {
  std::vector<std::size_t> out{g.dim(), center(g).dim()};
  for (const auto& t : lower_central_series(g).terms) out.push_back(t.dim());
  for (const auto& t : derived_series(g).terms) out.push_back(t.dim());
  return out;
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("sl2 brackets") {
    const LieAlgebra g = cat().get("sl2");
    CHECK(g.element_to_string(g.bracket_basis(0, 1)) == "e3");
    CHECK(g.element_to_string(g.bracket_basis(0, 2)) == "-2*e1");
    CHECK(g.element_to_string(g.bracket_basis(1, 2)) == "2*e2");
  }

  TEST_CASE("every entry materializes") {
    for (const auto& e : cat().entries()) {
      INFO(e.name);
      Assignments at;
      for (const auto& p : e.integer_params) at[p] = Rational(5);
      const LieAlgebra g = cat().get(e.name, at);
      CHECK(g.dim() > 0);
      CHECK(g.is_parametric() == !e.params.empty());
    }
  }

  TEST_CASE("sizes and centers") {
    const LieAlgebra g2 = cat().get("g2");
    CHECK(g2.dim() == 14);
    CHECK(center(g2).dim() == 0);
    CHECK(cat().get("sl3").dim() == 8);
    CHECK(cat().get("sp4").dim() == 10);
    const LieAlgebra f5 = cat().get("filiform", {{"n", Rational(5)}});
    CHECK(f5.dim() == 5);
    CHECK(nilpotency_class(f5) == 4u);
  }

  TEST_CASE("glambda at lambda = 1") {
    const LieAlgebra g = cat().get("glambda", {{"lambda", Rational(1)}});
    CHECK(is_zero(g.bracket_basis(2, 3)));
    CHECK(g.element_to_string(g.bracket_basis(1, 2)) == "x5");
  }

  TEST_CASE("g5(0) matches the 4-dimensional metabelian example") {
    const LieAlgebra a = cat().get("g5_alpha", {{"alpha", Rational(0)}});
    const LieAlgebra b = cat().get("ex44");
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(derivation_space(a).dim() == derivation_space(b).dim());
    const auto ra = natural_reports(a);
    const auto rb = natural_reports(b);
    for (std::size_t c = 0; c < 4; ++c) CHECK(ra[c].status == rb[c].status);
  }

  TEST_CASE("gl2 and sl2 + Q give identical verdicts") {
    const auto a = natural_reports(cat().get("gl2"));
    const auto b = natural_reports(cat().get("sl2_plus_Q"));
    for (std::size_t c = 0; c < 4; ++c) CHECK(a[c].status == b[c].status);
    CHECK(fingerprint(cat().get("gl2")) == fingerprint(cat().get("sl2_plus_Q")));
  }

  TEST_CASE("lookup errors") {
    CHECK(error_of([] { (void)cat().get("nope"); }) == ErrorKind::UnknownName);
    CHECK(error_of([] { (void)cat().get("sl2", {{"alpha", Rational(1)}}); }) == ErrorKind::UnknownName);
    CHECK(error_of([] { (void)cat().get("filiform"); }) == ErrorKind::Usage);
    CHECK(error_of([] { (void)cat().get("filiform", {{"n", Rational(2)}}); }) == ErrorKind::ExcludedParameterValue);
    CHECK(error_of([] { (void)cat().get("filiform", {{"n", Rational(65)}}); }) == ErrorKind::ExcludedParameterValue);
    CHECK(error_of([] { (void)cat().get("abelian", {{"n", Rational(1, 2)}}); }) == ErrorKind::ExcludedParameterValue);
    Catalog c = Catalog::builtin();
    CatalogEntry dup = c.entry("sl2");
    CHECK(error_of([&] { c.add(dup); }) == ErrorKind::DuplicateName);
  }

  TEST_CASE("partial specialization") {
    const LieAlgebra g = cat().get("g4_alpha_beta", {{"alpha", Rational(2)}});
    CHECK(g.is_parametric());
    CHECK(g.params() == std::vector<std::string>{"beta"});
  }

  TEST_CASE("loader accepts valid files") {
    const auto n3 = load_file(LIEDD_SOURCE_DIR "/catalog/examples/n3.json");
    REQUIRE(n3.size() == 1);
    CHECK(n3[0].name() == "heisenberg3");
    CHECK(n3[0].element_to_string(n3[0].bracket_basis(0, 1)) == "e3");
    const auto so3 = parse_catalog_json(R"([{"name": "so3", "dim": 3, "brackets": [
      {"i": 1, "j": 2, "value": {"3": "1"}}, {"i": 1, "j": 3, "value": {"2": "1"}},
      {"i": 2, "j": 3, "value": {"1": "1"}}]}])");
    CHECK(so3.size() == 1);
  }

  TEST_CASE("loader errors") {
    const std::string broken = R"([{"name": "bad", "dim": 3, "brackets": [
      {"i": 1, "j": 2, "value": {"3": "1"}}, {"i": 1, "j": 3, "value": {"1": "1"}}]}])";
    CHECK(error_of([&] { (void)parse_catalog_json(broken); }) == ErrorKind::JacobiViolation);
    CHECK(error_message([&] { (void)parse_catalog_json(broken); }).find("'bad'") != std::string::npos);
    CHECK(error_message([&] { (void)parse_catalog_json(broken); }).find("(e1, e2, e3)") != std::string::npos);

    const std::string malformed = "[\n  {\"name\": \"x\",\n   \"dim\": 2,,\n}]";
    CHECK(error_of([&] { (void)parse_catalog_json(malformed); }) == ErrorKind::Parse);
    CHECK(error_message([&] { (void)parse_catalog_json(malformed); }).rfind("line 3", 0) == 0);

    auto schema = [](const std::string& bracket) {
      return R"([{"name": "x", "dim": 2, "brackets": [)" + bracket + "]}]";
    };
    CHECK(error_of([&] { (void)parse_catalog_json(schema(R"({"i": 2, "j": 1, "value": {}})")); }) == ErrorKind::Parse);
    CHECK(error_of([&] { (void)parse_catalog_json(schema(R"({"i": 1, "j": 2, "value": {"3": "1"}})")); }) ==
          ErrorKind::Parse);
    CHECK(error_of([&] { (void)parse_catalog_json(schema(R"({"i": 1, "j": 2, "value": {"2": 1}})")); }) ==
          ErrorKind::Parse);
    CHECK(error_of([&] { (void)parse_catalog_json(schema(R"({"i": 1, "j": 2, "value": {"2": "1/0"}})")); }) !=
          ErrorKind::Internal);
    CHECK(error_of([&] {
            (void)parse_catalog_json(schema(R"({"i": 1, "j": 2, "value": {}}, {"i": 1, "j": 2, "value": {}})"));
          }) == ErrorKind::Parse);
    CHECK(error_of([] { (void)parse_catalog_json(R"({"name": "x"})"); }) == ErrorKind::Parse);
    const std::string twice = R"([{"name": "a", "dim": 1, "brackets": []}, {"name": "a", "dim": 1, "brackets": []}])";
    CHECK(error_of([&] { (void)parse_catalog_json(twice); }) == ErrorKind::DuplicateName);
    CHECK(error_of([] { (void)load_file("/nonexistent/file.json"); }) != ErrorKind::Internal);
  }

  TEST_CASE("save and load round-trip") {
    for (const auto& e : cat().entries()) {
      Assignments at;
      for (const auto& p : e.integer_params) at[p] = Rational(6);
      LieAlgebra g = cat().get(e.name, at);
      g.set_name(e.name);
      const std::string once = save_catalog_json({g});
      const auto back = parse_catalog_json(once);
      REQUIRE(back.size() == 1);
      INFO(e.name);
      CHECK(save_catalog_json(back) == once);
      CHECK(back[0].params() == g.params());
      CHECK(back[0].labels() == g.labels());
    }
  }

  TEST_CASE("merging a file") {
    Catalog c = Catalog::builtin();
    c.merge_file(LIEDD_SOURCE_DIR "/tests/data/glambda.json");
    CHECK(c.contains("g7_1_2_i_lambda"));
    CHECK(c.get("g7_1_2_i_lambda", {{"lambda", Rational(2)}}).dim() == 7);
    CHECK(error_of([&] { c.merge_file(LIEDD_SOURCE_DIR "/tests/data/glambda.json"); }) == ErrorKind::DuplicateName);
  }

  TEST_CASE("assignments") {
    CHECK(parse_assignment("alpha=1/2") == std::pair<std::string, Rational>{"alpha", Rational(1, 2)});
    CHECK(parse_assignment("n = 5").second == Rational(5));
    CHECK(error_of([] { (void)parse_assignment("alpha"); }) == ErrorKind::Usage);
    CHECK(error_of([] { (void)parse_assignment("alpha=beta"); }) != ErrorKind::Internal);
  }

  TEST_CASE("table rows") {
    const auto rows = table1(cat());
    CHECK(rows.size() == 15);
    CHECK(rows.back().label == "g5_alpha (alpha = 0, -1)");
    CHECK(rows.back().specializations.size() == 2);
  }
}
