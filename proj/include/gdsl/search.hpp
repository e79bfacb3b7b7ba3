#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdsl/moves.hpp"

namespace gdsl {

struct SearchLimits {
  int max_depth = 6;
  int max_arrows = 6;
  long long max_nodes = 200000;
};

enum class SearchStatus { found, not_found_within_bounds, resource_exhausted };

struct SearchResult {
  SearchStatus status = SearchStatus::not_found_within_bounds;
  std::optional<Certificate> certificate;
  long long nodes_expanded = 0;
};

namespace detail {

struct Parent {
  std::string key;
  MoveInstance move;  // move applied at `key` leading here
  int depth = 0;
};

/// Move instance from `from` to `to`, found by scanning the neighbor list.
inline MoveInstance connecting_move(const GaussDiagram& from, const std::string& to_key,
                                    const MoveSet& ms, int max_arrows) {
  for (const auto& [m, result] : neighbors(from, ms, max_arrows))
    if (encode(result) == to_key) return m;
  throw Error("search: no connecting move (move set is not inverse-closed?)");
}

}  // namespace detail

/// Bounded breadth-first search over canonical forms, expanded from both
/// endpoints (the move sets in use are closed under inverses). A returned
/// certificate replays from canonicalize(d1) to canonicalize(d2); absence
/// within bounds proves nothing.
inline SearchResult search_equivalent(const GaussDiagram& d1, const GaussDiagram& d2,
                                      const MoveSet& ms, const SearchLimits& limits) {
  ms.require_valid();
  if (d1.strand_count != d2.strand_count)
    throw Error("search_equivalent: strand counts differ");
  GaussDiagram start = canonicalize(d1), goal = canonicalize(d2);
  std::string start_key = encode(start), goal_key = encode(goal);

  SearchResult res;
  auto build = [&](const std::map<std::string, detail::Parent>& from_start,
                   const std::map<std::string, detail::Parent>& from_goal,
                   const std::string& meet) {
    std::vector<MoveInstance> steps;
    // walk back from the meet to the start
    {
      std::vector<MoveInstance> back;
      std::string cur = meet;
      while (cur != start_key) {
        const detail::Parent& p = from_start.at(cur);
        back.push_back(p.move);
        cur = p.key;
      }
      steps.assign(back.rbegin(), back.rend());
    }
    // walk from the meet to the goal, inverting the goal-side tree edges
    {
      std::string cur = meet;
      GaussDiagram cur_d = start;  // replay the start side up to the meet
      for (const MoveInstance& m : steps) cur_d = apply(cur_d, m);
      while (cur != goal_key) {
        const detail::Parent& p = from_goal.at(cur);
        MoveInstance m = detail::connecting_move(cur_d, p.key, ms, limits.max_arrows);
        steps.push_back(m);
        cur_d = apply(cur_d, m);
        cur = p.key;
      }
    }
    Certificate cert{start, steps, goal};
    if (auto err = replay_error(cert)) throw Error("search: produced bad certificate: " + *err);
    res.status = SearchStatus::found;
    res.certificate = cert;
  };

  if (start_key == goal_key) {
    build({}, {}, start_key);
    return res;
  }

  std::map<std::string, detail::Parent> seen_start, seen_goal;
  std::map<std::string, GaussDiagram> diagrams;
  diagrams[start_key] = start;
  diagrams[goal_key] = goal;
  seen_start[start_key] = {};
  seen_goal[goal_key] = {};
  std::deque<std::pair<std::string, int>> q_start{{start_key, 0}}, q_goal{{goal_key, 0}};

  while (!q_start.empty() || !q_goal.empty()) {
    bool from_start_side;
    if (q_start.empty())
      from_start_side = false;
    else if (q_goal.empty())
      from_start_side = true;
    else
      from_start_side = q_start.size() <= q_goal.size();
    auto& queue = from_start_side ? q_start : q_goal;
    auto& mine = from_start_side ? seen_start : seen_goal;
    auto& other = from_start_side ? seen_goal : seen_start;

    auto [key, depth] = queue.front();
    queue.pop_front();
    if (depth >= limits.max_depth) continue;
    if (++res.nodes_expanded > limits.max_nodes) {
      res.status = SearchStatus::resource_exhausted;
      return res;
    }
    const GaussDiagram& d = diagrams.at(key);
    for (const auto& [m, next] : neighbors(d, ms, limits.max_arrows)) {
      std::string nkey = encode(next);
      if (mine.count(nkey)) continue;
      mine[nkey] = detail::Parent{key, m, depth + 1};
      diagrams.emplace(nkey, next);
      if (other.count(nkey)) {
        build(seen_start, seen_goal, nkey);
        return res;
      }
      queue.emplace_back(nkey, depth + 1);
    }
  }
  res.status = SearchStatus::not_found_within_bounds;
  return res;
}

/// Unknots a welded long diagram (one strand).
/// With allow_sc: repeatedly pick the arrow whose ends are closest; make the
/// blocking pair of ends tails by self-crossing changes, commute them, and
/// delete the arrow once its ends are adjacent. Terminates for every input
/// with at most a quadratic number of moves. Without allow_sc: one
/// self-virtualization deletion per arrow.
inline Certificate unknot_welded_long(const GaussDiagram& diagram, bool allow_sc) {
  if (diagram.strand_count != 1)
    throw Error("unknot_welded_long: the diagram must have exactly one strand");
  GaussDiagram start = canonicalize(diagram);
  GaussDiagram d = start;
  std::vector<MoveInstance> steps;
  auto step = [&](MoveInstance m) {
    steps.push_back(m);
    d = apply(d, m);
  };

  if (!allow_sc) {
    while (d.arrow_count() > 0) {
      MoveInstance m;
      m.kind = MoveKind::sv_del;
      m.arrow = 0;
      step(m);
    }
  } else {
    while (d.arrow_count() > 0) {
      // arrow with the smallest gap between its two ends
      int best = -1, best_gap = -1, best_lo = -1;
      for (int a = 0; a < d.arrow_count(); ++a) {
        auto [t, h] = arrow_ends(d, a);
        int lo = std::min(t.index, h.index), hi = std::max(t.index, h.index);
        int gap = hi - lo - 1;
        if (best < 0 || gap < best_gap) {
          best = a;
          best_gap = gap;
          best_lo = lo;
        }
      }
      if (best_gap == 0) {
        MoveInstance m;
        m.kind = MoveKind::r1_del;
        m.arrow = best;
        step(m);
        continue;
      }
      // move the lower end of `best` one slot to the right: make the pair at
      // (lo, lo+1) two tails, then commute them
      const auto& word = d.strands[0];
      EndRef e1 = word[best_lo], e2 = word[best_lo + 1];
      if (e1.kind == EndKind::head) {
        MoveInstance m;
        m.kind = MoveKind::sc;
        m.arrow = e1.arrow;
        step(m);
      }
      e2 = d.strands[0][best_lo + 1];
      if (e2.kind == EndKind::head) {
        MoveInstance m;
        m.kind = MoveKind::sc;
        m.arrow = e2.arrow;
        step(m);
      }
      MoveInstance m;
      m.kind = MoveKind::tc;
      m.strand = 0;
      m.pos = best_lo;
      step(m);
    }
  }
  Certificate cert{start, steps, GaussDiagram::empty(1)};
  if (auto err = replay_error(cert))
    throw Error("unknot_welded_long: bad certificate: " + *err);
  return cert;
}

}  // namespace gdsl
