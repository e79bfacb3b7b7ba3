#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "gdsl/catalog.hpp"
#include "gdsl/moves.hpp"
#include "support.hpp"

using namespace gdsl;

TEST_CASE("move set: tails-commute is welded-only") {
  CHECK(MoveSet::reidemeister(true).allows(MoveKind::tc));
  CHECK_FALSE(MoveSet::reidemeister(false).allows(MoveKind::tc));
  MoveSet bad = MoveSet::reidemeister(false);
  bad.kinds.insert(MoveKind::tc);
  CHECK_THROWS_AS(bad.require_valid(), Error);
}

TEST_CASE("kink deletion reaches the empty diagram") {
  GaussDiagram kink = parse_diagram("strands 1\narrow 1 +\nstrand 1: 1T 1H\n");
  MoveInstance m;
  m.kind = MoveKind::r1_del;
  m.arrow = 0;
  CHECK(apply(kink, m).arrow_count() == 0);
  auto ns = neighbors(kink, MoveSet::reidemeister(false), 1);
  bool found = false;
  for (auto& [mi, d] : ns)
    if (mi.kind == MoveKind::r1_del && d.arrow_count() == 0) found = true;
  CHECK(found);
}

TEST_CASE("tails-commute on the 3-strand braid fixture") {
  GaussDiagram c = load_diagram(gdsl::testing::fixture_path("diagrams/c.gd"));
  GaussDiagram cp = load_diagram(gdsl::testing::fixture_path("diagrams/cp.gd"));
  MoveInstance m;
  m.kind = MoveKind::tc;
  m.strand = 1;
  m.pos = 0;
  CHECK(canonical_key(apply(c, m)) == canonical_key(cp));
}

TEST_CASE("tails-commute refuses a tail-head pair") {
  GaussDiagram d = parse_diagram("strands 1\narrow 1 +\nstrand 1: 1T 1H\n");
  MoveInstance m;
  m.kind = MoveKind::tc;
  m.strand = 0;
  m.pos = 0;
  CHECK_THROWS_WITH_AS((void)apply(d, m), "tc: both ends must be tails", MoveError);
}

TEST_CASE("self-crossing change flips sign and orientation") {
  GaussDiagram d = parse_diagram("strands 1\narrow 1 +\nstrand 1: 1T 1H\n");
  MoveInstance m;
  m.kind = MoveKind::sc;
  m.arrow = 0;
  GaussDiagram out = apply(d, m);
  CHECK(out.signs[0] == -1);
  CHECK(out.strands[0][0].kind == EndKind::head);
  CHECK(canonical_key(apply(out, m)) == canonical_key(d));
  GaussDiagram two = parse_diagram("strands 2\narrow 1 +\nstrand 1: 1T\nstrand 2: 1H\n");
  CHECK_THROWS_AS((void)apply(two, m), MoveError);
}

TEST_CASE("self-virtualization deletes the named self-arrow") {
  GaussDiagram d = parse_diagram(
      "strands 1\narrow 1 +\narrow 2 -\nstrand 1: 1T 2T 1H 2H\n");
  MoveInstance m;
  m.kind = MoveKind::sv_del;
  m.arrow = 1;
  GaussDiagram out = apply(d, m);
  CHECK(out.arrow_count() == 1);
  CHECK(out.signs[0] == 1);
}

TEST_CASE("bigon deletion needs opposite signs") {
  GaussDiagram same = parse_diagram(
      "strands 2\narrow 1 +\narrow 2 +\nstrand 1: 1T 2T\nstrand 2: 1H 2H\n");
  MoveInstance m;
  m.kind = MoveKind::r2_del;
  m.arrow = 0;
  m.arrow2 = 1;
  CHECK_THROWS_AS((void)apply(same, m), MoveError);
  GaussDiagram ok = parse_diagram(
      "strands 2\narrow 1 +\narrow 2 -\nstrand 1: 1T 2T\nstrand 2: 1H 2H\n");
  CHECK(apply(ok, m).arrow_count() == 0);
}

TEST_CASE("soundness: every enumerated neighbor is valid and reproducible") {
  std::mt19937 rng(57);
  MoveSet ms = MoveSet::reidemeister(true).with_sv().with_sc();
  for (int trial = 0; trial < 60; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 1 + trial % 3, 5);
    for (const auto& [m, next] : neighbors(d, ms, 7)) {
      REQUIRE(!validate(next).has_value());
      CHECK(encode(apply(canonicalize(d), m)) == encode(next));
    }
  }
}

TEST_CASE("tails-commute preserves the multiset of arrow data") {
  std::mt19937 rng(59);
  MoveSet ms = MoveSet::reidemeister(true);
  auto arrow_data = [](const GaussDiagram& d) {
    std::multiset<std::string> out;
    for (int a = 0; a < d.arrow_count(); ++a) {
      auto [t, h] = arrow_ends(d, a);
      out.insert(std::to_string(t.strand) + ">" + std::to_string(h.strand) +
                 (d.signs[a] > 0 ? "+" : "-"));
    }
    return out;
  };
  for (int trial = 0; trial < 80; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 2, 6);
    for (const auto& [m, next] : neighbors(d, ms, 6))
      if (m.kind == MoveKind::tc) CHECK(arrow_data(next) == arrow_data(d));
  }
}

TEST_CASE("triangle move on the braid-relation configuration") {
  GaussDiagram lhs = parse_diagram(
      "strands 3\n"
      "arrow 1 +\narrow 2 +\narrow 3 +\n"
      "strand 1: 1T 2T\nstrand 2: 1H 3T\nstrand 3: 2H 3H\n");
  bool found = false;
  for (const auto& [m, next] : neighbors(lhs, MoveSet::reidemeister(false), 3))
    if (m.kind == MoveKind::r3) {
      found = true;
      CHECK(canonical_key(apply(next, m)) == canonical_key(lhs));
    }
  CHECK(found);
}

TEST_CASE("variant table file matches the derivation") {
  std::string file = read_file(gdsl::testing::fixture_path("tables/move_variants.tsv"));
  CHECK(file == serialize_move_tables());
}

TEST_CASE("move text form round trips through the parser") {
  std::mt19937 rng(61);
  MoveSet ms = MoveSet::reidemeister(true).with_sv().with_sc();
  int seen = 0;
  for (int trial = 0; trial < 10; ++trial) {
    GaussDiagram d = gdsl::testing::random_diagram(rng, 2, 4);
    for (const auto& [m, next] : neighbors(d, ms, 6)) {
      auto lines = detail::tokenize_lines(serialize_move(m));
      REQUIRE(lines.size() == 1);
      MoveInstance back = parse_move(lines[0]);
      CHECK(back == m);
      ++seen;
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("insertion moves respect the arrow bound") {
  GaussDiagram d = parse_diagram("strands 1\narrow 1 +\nstrand 1: 1T 1H\n");
  MoveSet ms = MoveSet::reidemeister(true).with_sv();
  for (const auto& [m, next] : neighbors(d, ms, 2)) CHECK(next.arrow_count() <= 2);
  bool any_r2add = false;
  for (const auto& [m, next] : neighbors(d, ms, 2))
    any_r2add |= m.kind == MoveKind::r2_add;
  CHECK_FALSE(any_r2add);  // a pair insertion would exceed the two-arrow bound
  for (const auto& [m, next] : neighbors(d, ms, 3))
    if (m.kind == MoveKind::r2_add) any_r2add = true;
  CHECK(any_r2add);
}
