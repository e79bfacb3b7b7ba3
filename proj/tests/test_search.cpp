#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdsl/catalog.hpp"
#include "gdsl/search.hpp"
#include "support.hpp"

using namespace gdsl;

namespace {

GaussDiagram fixture(const char* rel) {
  return load_diagram(gdsl::testing::fixture_path(rel));
}

}  // namespace

TEST_CASE("search: equal endpoints give the empty certificate") {
  GaussDiagram d = fixture("diagrams/t.gd");
  auto res = search_equivalent(d, d, MoveSet::reidemeister(true), SearchLimits{2, 3, 1000});
  REQUIRE(res.status == SearchStatus::found);
  CHECK(res.certificate->steps.empty());
  CHECK(replay(*res.certificate));
}

TEST_CASE("search: one tails-commute step joins the 3-strand fixtures") {
  auto res = search_equivalent(fixture("diagrams/c.gd"), fixture("diagrams/cp.gd"),
                               MoveSet::reidemeister(true), SearchLimits{2, 4, 50000});
  REQUIRE(res.status == SearchStatus::found);
  CHECK(res.certificate->steps.size() == 1);
  CHECK(res.certificate->steps[0].kind == MoveKind::tc);
  CHECK(replay(*res.certificate));
}

TEST_CASE("search: the two stacking orders are sv-equivalent") {
  auto res = search_equivalent(fixture("diagrams/t.gd"), fixture("diagrams/tp.gd"),
                               MoveSet::reidemeister(true).with_sv(),
                               SearchLimits{8, 4, 400000});
  REQUIRE(res.status == SearchStatus::found);
  CHECK(replay(*res.certificate));
  CHECK(res.certificate->steps.size() <= 8);
}

TEST_CASE("search: l.gd reduces to the braid b.gd under self-virtualization") {
  auto res = search_equivalent(fixture("diagrams/l.gd"), fixture("diagrams/b.gd"),
                               MoveSet::reidemeister(true).with_sv(),
                               SearchLimits{6, 6, 400000});
  REQUIRE(res.status == SearchStatus::found);
  CHECK(replay(*res.certificate));
}

TEST_CASE("search: resource exhaustion is reported distinctly") {
  auto res = search_equivalent(fixture("diagrams/t.gd"), fixture("diagrams/tp.gd"),
                               MoveSet::reidemeister(true).with_sv(), SearchLimits{8, 4, 5});
  CHECK(res.status == SearchStatus::resource_exhausted);
  auto res2 = search_equivalent(fixture("diagrams/t.gd"), fixture("diagrams/tp.gd"),
                                MoveSet::reidemeister(true), SearchLimits{2, 2, 100000});
  CHECK(res2.status == SearchStatus::not_found_within_bounds);
}

TEST_CASE("search: k0.gd does not reduce to trivial without tails-commute") {
  auto res = search_equivalent(fixture("diagrams/k0.gd"), GaussDiagram::empty(1),
                               MoveSet::reidemeister(false).with_sc(),
                               SearchLimits{4, 5, 100000});
  // bounded absence proves nothing, but the engine must not claim a certificate
  CHECK(res.status == SearchStatus::not_found_within_bounds);
}

TEST_CASE("unknot: empty input, welded-trivial fixture, and both clasps") {
  CHECK(unknot_welded_long(GaussDiagram::empty(1), true).steps.empty());
  for (const char* rel : {"diagrams/k.gd", "diagrams/k0.gd"}) {
    GaussDiagram d = fixture(rel);
    Certificate cert = unknot_welded_long(d, true);
    CHECK(cert.target.arrow_count() == 0);
    CHECK(replay(cert));
    Certificate sv = unknot_welded_long(d, false);
    CHECK(static_cast<int>(sv.steps.size()) == d.arrow_count());
    CHECK(replay(sv));
  }
  CHECK_THROWS_AS((void)unknot_welded_long(GaussDiagram::empty(2), true), Error);
}

TEST_CASE("unknot: terminates on random long diagrams with a quadratic bound") {
  std::mt19937 rng(71);
  std::size_t worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int arrows = 1 + trial % 12;
    GaussDiagram d = gdsl::testing::random_long_diagram(rng, arrows);
    Certificate cert = unknot_welded_long(d, true);
    CHECK(replay(cert));
    CHECK(cert.target.arrow_count() == 0);
    // observed: at most 3 moves per unit of end-gap plus one deletion per arrow
    std::size_t bound = 3u * arrows * (2u * arrows) + arrows;
    CHECK(cert.steps.size() <= bound);
    worst = std::max(worst, cert.steps.size());
    Certificate sv = unknot_welded_long(d, false);
    CHECK(static_cast<int>(sv.steps.size()) == arrows);
    CHECK(replay(sv));
  }
  CHECK(worst > 0);
}

TEST_CASE("certificate text form round trips and replays") {
  auto res = search_equivalent(fixture("diagrams/c.gd"), fixture("diagrams/cp.gd"),
                               MoveSet::reidemeister(true), SearchLimits{2, 4, 50000});
  REQUIRE(res.status == SearchStatus::found);
  std::string text = serialize_certificate(*res.certificate);
  Certificate back = parse_certificate(text);
  CHECK(replay(back));
  CHECK(serialize_certificate(back) == text);
}

TEST_CASE("stored certificate fixture replays") {
  Certificate c = parse_certificate(
      read_file(gdsl::testing::fixture_path("certs/k_welded_trivial.cert")));
  CHECK(replay(c));
  CHECK(canonical_key(c.source) == canonical_key(fixture("diagrams/k.gd")));
  CHECK(c.target.arrow_count() == 0);
}

TEST_CASE("search: strand-count mismatch is an error") {
  CHECK_THROWS_AS((void)search_equivalent(GaussDiagram::empty(1), GaussDiagram::empty(2),
                                          MoveSet::reidemeister(true), SearchLimits{1, 1, 10}),
                  Error);
}

TEST_CASE("search: certificates are deterministic for fixed bounds") {
  MoveSet ms = MoveSet::reidemeister(true).with_sv();
  SearchLimits lim{8, 4, 400000};
  auto a = search_equivalent(fixture("diagrams/t.gd"), fixture("diagrams/tp.gd"), ms, lim);
  auto b = search_equivalent(fixture("diagrams/t.gd"), fixture("diagrams/tp.gd"), ms, lim);
  REQUIRE(a.status == SearchStatus::found);
  REQUIRE(b.status == SearchStatus::found);
  CHECK(serialize_certificate(*a.certificate) == serialize_certificate(*b.certificate));
  CHECK(a.nodes_expanded == b.nodes_expanded);
}
