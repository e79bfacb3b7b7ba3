#pragma once

#include <random>
#include <string>
#include <vector>

#include "gdsl/diagram.hpp"

namespace gdsl::testing {

/// Random valid Gauss diagram: arrow ends are inserted at random positions on
/// random strands, so every diagram invariant holds by construction.
inline GaussDiagram random_diagram(std::mt19937& rng, int strand_count, int max_arrows) {
  GaussDiagram d = GaussDiagram::empty(strand_count);
  std::uniform_int_distribution<int> arrow_count_dist(0, max_arrows);
  std::uniform_int_distribution<int> strand_dist(0, strand_count - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  int k = arrow_count_dist(rng);
  for (int a = 0; a < k; ++a) {
    d.signs.push_back(coin(rng) ? 1 : -1);
    for (EndKind kind : {EndKind::tail, EndKind::head}) {
      int s = strand_dist(rng);
      std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(d.strands[s].size()));
      d.strands[s].insert(d.strands[s].begin() + pos_dist(rng), EndRef{a, kind});
    }
  }
  return canonicalize(d);
}

/// Random 1-strand diagram with exactly `arrows` arrows.
inline GaussDiagram random_long_diagram(std::mt19937& rng, int arrows) {
  GaussDiagram d = GaussDiagram::empty(1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int a = 0; a < arrows; ++a) {
    d.signs.push_back(coin(rng) ? 1 : -1);
    for (EndKind kind : {EndKind::tail, EndKind::head}) {
      std::uniform_int_distribution<int> pos_dist(0, static_cast<int>(d.strands[0].size()));
      d.strands[0].insert(d.strands[0].begin() + pos_dist(rng), EndRef{a, kind});
    }
  }
  return canonicalize(d);
}

inline std::string fixture_path(const std::string& rel) {
  return std::string(GDSL_DATA_DIR) + "/" + rel;
}

}  // namespace gdsl::testing
