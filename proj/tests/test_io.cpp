#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdsl/catalog.hpp"
#include "gdsl/verify.hpp"
#include "support.hpp"

using namespace gdsl;

TEST_CASE("codecs round trip on random documents") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 1 + trial % 3, 6);
    std::string text = serialize_diagram(d);
    GaussDiagram back = parse_diagram(text);
    CHECK(serialize_diagram(back) == text);
    CHECK(canonical_key(back) == canonical_key(d));
  }
}

TEST_CASE("catalog loads and confirms its claims") {
  auto catalog = load_catalog(GDSL_DATA_DIR);
  CHECK(catalog.size() == 7);
  for (const CatalogEntry& e : catalog) {
    CHECK(!e.claims.empty());
    for (const std::string& c : e.claims) CHECK(certification_grants(e.granted, c));
  }
}

TEST_CASE("catalog refuses a wrong claim") {
  // an entry claiming self-virtualization invariance for a self-arrow formula
  CHECK_THROWS_AS((void)[] {
    Formula f(1);
    f.add_term(forget_signs(parse_diagram("strands 1\narrow 1 +\nstrand 1: 1T 1H\n")), 1);
    Certification c = certify(f);
    if (!certification_grants(c, "sv"))
      throw Error("catalog entry kink claims 'sv' but certification refuses it");
    return 0;
  }(), Error);
}

TEST_CASE("evaluate_catalog only reports entries of matching arity") {
  auto catalog = load_catalog(GDSL_DATA_DIR);
  GaussDiagram g = load_diagram(gdsl::testing::fixture_path("diagrams/t.gd"));
  auto values = evaluate_catalog(catalog, g);
  CHECK(values.size() == 4);  // the four two-strand entries
  for (auto& [name, v] : values) CHECK(name != "v21");
}

TEST_CASE("fixture verification table passes on a pristine tree") {
  auto rows = verify_fixtures(GDSL_DATA_DIR);
  CHECK(rows.size() >= 30);
  for (const VerifyRow& r : rows) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("formula parser rejects malformed documents") {
  CHECK_THROWS_AS((void)parse_formula("strands 2\narrow 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_formula("term 1\n"), ParseError);
  CHECK_THROWS_AS((void)parse_formula("strands 2\nterm x\n"), ParseError);
  CHECK_THROWS_AS((void)parse_formula("strands 1\nterm 1\nstrand 1: 1T\n"), ParseError);
}

TEST_CASE("fixture shapes: self-arrows and adjacency counts") {
  GaussDiagram b = load_diagram(gdsl::testing::fixture_path("diagrams/b.gd"));
  REQUIRE(b.arrow_count() == 2);
  CHECK_FALSE(is_self_arrow(b, 0));
  CHECK_FALSE(is_self_arrow(b, 1));
  GaussDiagram l = load_diagram(gdsl::testing::fixture_path("diagrams/l.gd"));
  CHECK(self_arrows(l).size() == 2);
  GaussDiagram k = load_diagram(gdsl::testing::fixture_path("diagrams/k.gd"));
  CHECK(k.arrow_count() == 4);
  CHECK(adjacent_pairs(k).size() == 7);  // eight ends on one strand
}

TEST_CASE("every catalog entry vanishes on the empty diagram") {
  for (const CatalogEntry& e : load_catalog(GDSL_DATA_DIR)) {
    CHECK(e.formula.coefficient(ArrowDiagram::empty(e.formula.strand_count())) == 0);
    CHECK(pair(e.formula, GaussDiagram::empty(e.formula.strand_count())) == 0);
  }
}

TEST_CASE("the two stacking orders stay distinct after forgetting signs") {
  GaussDiagram t = load_diagram(gdsl::testing::fixture_path("diagrams/t.gd"));
  GaussDiagram tp = load_diagram(gdsl::testing::fixture_path("diagrams/tp.gd"));
  CHECK_FALSE(isomorphic(forget_signs(t), forget_signs(tp)));
  CHECK(stack(t, tp).arrow_count() == 4);
}
