#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdsl/diagram.hpp"
#include "gdsl/text.hpp"
#include "support.hpp"

using namespace gdsl;

namespace {

GaussDiagram gd(const char* text) { return parse_diagram(text); }

}  // namespace

TEST_CASE("canonicalize: identity on empty diagram") {
  GaussDiagram d = GaussDiagram::empty(2);
  CHECK(canonicalize(d).strands == d.strands);
  CHECK(encode(canonicalize(d)) == encode(d));
}

TEST_CASE("canonicalize: relabels by first-occurrence traversal and is idempotent") {
  GaussDiagram d = gd(
      "strands 1\n"
      "arrow 7 +\n"
      "arrow 3 -\n"
      "strand 1: 3T 7T 3H 7H\n");  // ids 3,7 renamed 1,2 in traversal order
  GaussDiagram c = canonicalize(d);
  CHECK(c.strands[0][0].arrow == 0);
  CHECK(c.strands[0][1].arrow == 1);
  CHECK(c.signs[0] == -1);
  CHECK(c.signs[1] == 1);
  CHECK(encode(canonicalize(c)) == encode(c));
}

TEST_CASE("canonical-form soundness: random relabelings collapse to one key") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 1 + trial % 3, 6);
    std::string key = canonical_key(d);
    // random relabeling
    int k = d.arrow_count();
    std::vector<std::int32_t> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    GaussDiagram r = d;
    r.signs.assign(k, 0);
    for (int a = 0; a < k; ++a) r.signs[perm[a]] = d.signs[a];
    for (auto& word : r.strands)
      for (EndRef& e : word) e.arrow = perm[e.arrow];
    CHECK(canonical_key(r) == key);
    REQUIRE(!validate(canonicalize(r)).has_value());
  }
}

TEST_CASE("is_self_arrow") {
  GaussDiagram one = gd("strands 1\narrow a +\nstrand 1: aT aH\n");
  CHECK(is_self_arrow(one, 0));
  GaussDiagram two = gd(
      "strands 2\narrow a +\narrow b +\n"
      "strand 1: aT bH\nstrand 2: aH bT\n");
  CHECK_FALSE(is_self_arrow(two, 0));
  CHECK_FALSE(is_self_arrow(two, 1));
  CHECK_THROWS_AS((void)is_self_arrow(two, 5), Error);
}

TEST_CASE("stack: unit laws and associativity up to canonical form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 3;
    GaussDiagram d = gdsl::testing::random_diagram(rng, n, 5);
    GaussDiagram e = GaussDiagram::empty(n);
    CHECK(encode(stack(d, e)) == canonical_key(d));
    CHECK(encode(stack(e, d)) == canonical_key(d));
    GaussDiagram a = gdsl::testing::random_diagram(rng, n, 4);
    GaussDiagram b = gdsl::testing::random_diagram(rng, n, 4);
    CHECK(encode(stack(stack(d, a), b)) == encode(stack(d, stack(a, b))));
  }
}

TEST_CASE("stack: strand-count mismatch is an error") {
  CHECK_THROWS_AS((void)stack(GaussDiagram::empty(1), GaussDiagram::empty(2)), Error);
}

TEST_CASE("stack: arrow count is additive") {
  GaussDiagram a = gd("strands 2\narrow x +\narrow y +\nstrand 1: xT yH\nstrand 2: xH yT\n");
  GaussDiagram b = gd("strands 2\narrow x -\nstrand 1: xT\nstrand 2: xH\n");
  CHECK(stack(a, b).arrow_count() == 3);
}

TEST_CASE("forget_signs: sign-blind and canonical") {
  GaussDiagram a = gd("strands 1\narrow p +\narrow q -\nstrand 1: pT qT pH qH\n");
  GaussDiagram b = gd("strands 1\narrow p -\narrow q +\nstrand 1: pT qT pH qH\n");
  CHECK(encode(forget_signs(a)) == encode(forget_signs(b)));
  CHECK(forget_signs(GaussDiagram::empty(3)).arrows == 0);
}

TEST_CASE("adjacent_pairs: empty, single self-arrow, and k-1 rule") {
  CHECK(adjacent_pairs(GaussDiagram::empty(2)).empty());
  GaussDiagram kink = gd("strands 1\narrow a +\nstrand 1: aT aH\n");
  auto pairs = adjacent_pairs(kink);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first.arrow == pairs[0].second.arrow);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 2, 6);
    std::size_t expected = 0;
    for (const auto& w : d.strands) expected += w.empty() ? 0 : w.size() - 1;
    CHECK(adjacent_pairs(d).size() == expected);
  }
}

TEST_CASE("internal_edges: nested self-arrows give a non-crossing middle edge") {
  // nested pair: outer arrow 1, inner arrow 2
  ArrowDiagram nested = forget_signs(gd(
      "strands 1\narrow o +\narrow i +\nstrand 1: oT iT iH oH\n"));
  auto edges = internal_edges(nested);
  REQUIRE(edges.size() == 3);
  CHECK(edges[1].same_arrow);
  CHECK(edges[1].eta == -1);
  CHECK(edges[0].eta == -1);  // nested arrows do not cross
  CHECK(internal_edges(ArrowDiagram::empty(1)).empty());
}

TEST_CASE("internal_edges: interleaved arrows cross") {
  ArrowDiagram x = forget_signs(gd(
      "strands 1\narrow a +\narrow b +\nstrand 1: aT bT aH bH\n"));
  for (const auto& e : internal_edges(x)) CHECK(e.eta == 1);
}

TEST_CASE("end conservation under stack and restriction") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 2, 6);
    std::vector<char> keep(d.arrow_count());
    for (auto& c : keep) c = rng() & 1;
    GaussDiagram r = restrict_to(d, keep);
    CHECK(!validate(r).has_value());
  }
}

TEST_CASE("parse/serialize: bit-exact round trip on canonical documents") {
  const char* doc =
      "strands 2\n"
      "arrow 1 +\n"
      "arrow 2 -\n"
      "strand 1: 1T 2H\n"
      "strand 2: 1H 2T\n";
  GaussDiagram d = parse_diagram(doc);
  CHECK(serialize_diagram(d) == doc);
  CHECK(serialize_diagram(parse_diagram(serialize_diagram(d))) == serialize_diagram(d));
}

TEST_CASE("parse: empty one-strand document") {
  GaussDiagram d = parse_diagram("strands 1\n");
  CHECK(d.strand_count == 1);
  CHECK(d.arrow_count() == 0);
}

TEST_CASE("parse: errors carry position and name the violated invariant") {
  CHECK_THROWS_AS((void)parse_diagram("strands 1\narrow a +\nstrand 1: aH aH\n"), ParseError);
  try {
    (void)parse_diagram("strands 1\narrow a +\nstrand 1: aH aH\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("'a'") != std::string::npos);
    CHECK(std::string(e.what()).find("head") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_diagram("strands 1\nstrand 1: zT\n"), ParseError);
  CHECK_THROWS_AS((void)parse_diagram("strands 1\narrow a +\narrow a -\n"), ParseError);
  CHECK_THROWS_AS((void)parse_diagram("strands 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_diagram("strand 1:\n"), ParseError);
}

TEST_CASE("round trip on random diagrams") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 1 + trial % 3, 7);
    GaussDiagram back = parse_diagram(serialize_diagram(d));
    CHECK(canonical_key(back) == canonical_key(d));
  }
}
