#include "doctest.h"

#include <fstream>
#include <sstream>

#include "liedd/catalog.hpp"
#include "report.hpp"

using namespace liedd;
using report::Json;

namespace {

const Catalog& cat() {
  static const Catalog c = Catalog::builtin();
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_round_trip(const LieAlgebra& g, const IdentityReport& r) {
  const Json once = report::identity(g, r);
  const Json parsed = Json::parse(report::render(once, report::Format::Json));
  CHECK(parsed == once);
  const IdentityReport back = report::identity_from_json(g, parsed);
  CHECK(report::identity(g, back) == once);
  CHECK(back.status == r.status);
  CHECK(back.value == r.value);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("identity reports round-trip through JSON") {
    const LieAlgebra sl2 = cat().get("sl2");
    check_round_trip(sl2, check_quantified(sl2, IdentityId::Id2, Quantifier::all_derivations()));
    check_round_trip(sl2, check_quantified(sl2, IdentityId::Id1, Quantifier::all_derivations()));
    const LieAlgebra gl = cat().get("glambda");
    check_round_trip(gl, check_quantified(gl, IdentityId::Id2, Quantifier::all_derivations()));
    const LieAlgebra g5 = cat().get("g5_alpha");
    check_round_trip(g5, check_quantified(g5, IdentityId::Id4, Quantifier::all_elements()));
    const LieAlgebra ex413 = cat().get("ex413");
    check_round_trip(ex413, check_quantified(ex413, IdentityId::Id4, Quantifier::all_elements()));

    LieAlgebra ex44 = cat().get("ex44");
    std::vector<std::string> extra;
    const Matrix d = report::parse_map(R"([[0,0,0,0],[0,"mu",0,0],[0,0,"mu",0],[0,0,0,"2*mu"]])", ex44, &extra);
    CHECK(extra == std::vector<std::string>{"mu"});
    ex44.declare_params(extra);
    const auto r = check_quantified(ex44, IdentityId::Id1, Quantifier::fixed_map(d));
    CHECK(r.status == Status::Conditional);
    check_round_trip(ex44, r);
  }

  TEST_CASE("schema and version checks") {
    const LieAlgebra sl2 = cat().get("sl2");
    Json j = report::identity(sl2, check_quantified(sl2, IdentityId::Id3, Quantifier::all_elements()));
    CHECK(j["schema"] == report::kSchema);
    j["schema"] = 2;
    CHECK_THROWS_AS(report::identity_from_json(sl2, j), Error);
  }

  TEST_CASE("table1 csv matches the golden file") {
    const Json t = report::table1(table1(cat()));
    CHECK(report::render(t, report::Format::Csv) == slurp(LIEDD_SOURCE_DIR "/tests/data/table1.csv"));
  }

  TEST_CASE("text and csv render the same report") {
    const Json j = report::invariants(cat().get("n4"));
    const std::string text = report::render(j, report::Format::Text);
    const std::string csv = report::render(j, report::Format::Csv);
    CHECK(text.find("nilpotency_class: 3") != std::string::npos);
    CHECK(csv.find("nilpotency_class,3\n") != std::string::npos);
    CHECK(text.find("der_dim: 7") != std::string::npos);
    CHECK(csv.find("der_dim,7\n") != std::string::npos);
    CHECK(report::render(j, report::Format::Text) == text);
  }

  TEST_CASE("rmatrix report") {
    const LieAlgebra sl2 = cat().get("sl2");
    const Json j = report::rmatrix(sl2, sl2.ad(sl2.basis(0)), sl2.basis(0), true);
    CHECK(j["classical"]["status"] == "Holds");
    CHECK(j["mybe"]["verdict"] == "Unique");
    CHECK(j["mybe"]["lambda"] == "0");
    CHECK(j["double"]["r31"] == true);
    CHECK(j["double"]["brackets"].size() == 2);
  }

  TEST_CASE("csv quoting") {
    const std::string csv = report::render(report::table1(table1(cat())), report::Format::Csv);
    CHECK(csv.find("\"g5_alpha (alpha = 0, -1)\",-,-,+,+") != std::string::npos);
  }

  TEST_CASE("map parsing errors") {
    const LieAlgebra sl2 = cat().get("sl2");
    CHECK_THROWS_AS(report::parse_map("[[1,0],[0,1]]", sl2), Error);
    CHECK_THROWS_AS(report::parse_map("not json", sl2), Error);
    CHECK_THROWS_AS(report::parse_map(R"([[1,0,0],[0,1,0],[0,0,"zeta"]])", sl2), Error);
    CHECK(report::parse_map(R"([[1,0,0],[0,"1/2",0],[0,0,-3]])", sl2) ==
          Matrix::diagonal({Scalar(1), Scalar(Rational(1, 2)), Scalar(-3)}));
  }

  TEST_CASE("formats") {
    CHECK(report::parse_format("csv") == report::Format::Csv);
    CHECK_THROWS_AS(report::parse_format("xml"), Error);
  }
}
