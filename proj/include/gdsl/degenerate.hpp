#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/embed.hpp"

namespace gdsl {

/// Arrow diagram in which exactly one position holds two coincident ends.
/// The coincident pair is unordered and its two ends belong to distinct
/// arrows. Slots hold one end each, except the single merged slot.
struct DegenerateDiagram {
  int strand_count = 1;
  int arrows = 0;
  std::vector<std::vector<std::vector<EndRef>>> strands;  // slot = 1 or 2 ends

  static DegenerateDiagram empty(int strand_count) {
    DegenerateDiagram d;
    d.strand_count = strand_count;
    d.strands.assign(static_cast<std::size_t>(strand_count), {});
    return d;
  }
};

inline std::optional<std::string> validate(const DegenerateDiagram& d) {
  if (d.strand_count < 1) return "strand_count must be at least 1";
  if (static_cast<int>(d.strands.size()) != d.strand_count)
    return "wrong number of strand words";
  int merged = 0;
  std::vector<int> heads(static_cast<std::size_t>(d.arrows), 0);
  std::vector<int> tails(static_cast<std::size_t>(d.arrows), 0);
  for (const auto& word : d.strands)
    for (const auto& slot : word) {
      if (slot.size() != 1 && slot.size() != 2) return "slot must hold 1 or 2 ends";
      if (slot.size() == 2) {
        ++merged;
        if (slot[0].arrow == slot[1].arrow)
          return "coincident ends must belong to distinct arrows";
      }
      for (const EndRef& e : slot) {
        if (e.arrow < 0 || e.arrow >= d.arrows) return "end names undeclared arrow";
        (e.kind == EndKind::head ? heads : tails)[e.arrow]++;
      }
    }
  if (merged != 1) return "expected exactly one coincident slot, found " + std::to_string(merged);
  for (int a = 0; a < d.arrows; ++a)
    if (heads[a] != 1 || tails[a] != 1)
      return "arrow " + std::to_string(a + 1) + " must have exactly one head and one tail";
  return std::nullopt;
}

namespace detail {

inline std::string encode_degenerate_with(const DegenerateDiagram& d, bool flip_merged) {
  std::vector<std::int32_t> perm(static_cast<std::size_t>(d.arrows), -1);
  std::int32_t next = 0;
  auto visit = [&](const EndRef& e) {
    if (perm[e.arrow] < 0) perm[e.arrow] = next++;
  };
  for (const auto& word : d.strands)
    for (const auto& slot : word) {
      if (slot.size() == 2 && flip_merged) {
        visit(slot[1]);
        visit(slot[0]);
      } else {
        for (const EndRef& e : slot) visit(e);
      }
    }
  std::string s = "d" + std::to_string(d.strand_count) + ";" + std::to_string(d.arrows);
  auto put = [&](const EndRef& e) {
    s += std::to_string(perm[e.arrow]);
    s += kind_char(e.kind);
  };
  for (const auto& word : d.strands) {
    s += '/';
    for (const auto& slot : word) {
      if (slot.size() == 1) {
        put(slot[0]);
      } else {
        // emit the unordered pair with the smaller relabeled id first
        const EndRef& x = slot[flip_merged ? 1 : 0];
        const EndRef& y = slot[flip_merged ? 0 : 1];
        s += '[';
        if (perm[x.arrow] <= perm[y.arrow]) {
          put(x);
          put(y);
        } else {
          put(y);
          put(x);
        }
        s += ']';
      }
    }
  }
  return s;
}

}  // namespace detail

/// Canonical key; the coincident pair is unordered, so the key is the smaller
/// of the two scan orders through the merged slot.
inline std::string canonical_key(const DegenerateDiagram& d) {
  std::string a = detail::encode_degenerate_with(d, false);
  std::string b = detail::encode_degenerate_with(d, true);
  return a <= b ? a : b;
}

/// Shrinks the internal edge between word[index] and word[index+1] to a point.
inline DegenerateDiagram shrink_edge(const ArrowDiagram& a, int strand, int index) {
  DegenerateDiagram out;
  out.strand_count = a.strand_count;
  out.arrows = a.arrows;
  out.strands.resize(a.strands.size());
  for (int s = 0; s < static_cast<int>(a.strands.size()); ++s) {
    const auto& word = a.strands[s];
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
      if (s == strand && i == index) {
        out.strands[s].push_back({word[i], word[i + 1]});
        ++i;
      } else {
        out.strands[s].push_back({word[i]});
      }
    }
  }
  if (auto err = validate(out)) throw Error("shrink_edge: " + *err);
  return out;
}

/// Integer combination of degenerate diagrams, keyed by canonical form.
class DFormula {
 public:
  void add_term(const DegenerateDiagram& d, long long coeff) {
    if (coeff == 0) return;
    std::string key = canonical_key(d);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::make_pair(d, coeff));
    } else {
      it->second.second = checked_add(it->second.second, coeff);
      if (it->second.second == 0) terms_.erase(it);
    }
  }

  long long coefficient(const std::string& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second.second;
  }

  long long coefficient(const DegenerateDiagram& d) const {
    return coefficient(canonical_key(d));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  std::vector<std::pair<DegenerateDiagram, long long>> terms() const {
    std::vector<std::pair<DegenerateDiagram, long long>> out;
    out.reserve(terms_.size());
    for (const auto& [key, value] : terms_) out.push_back(value);
    return out;
  }

  DFormula& operator+=(const DFormula& other) {
    for (const auto& [key, value] : other.terms_) add_term(value.first, value.second);
    return *this;
  }

 private:
  std::map<std::string, std::pair<DegenerateDiagram, long long>> terms_;
};

/// The boundary map d: sends an arrow diagram to the signed sum of its
/// shrunken internal edges. Edges cobounded by the two ends of a single
/// arrow are excluded (the crossing convention needs two distinct arrows;
/// such diagrams are filtered by the kink-freeness condition in practice).
inline DFormula boundary(const ArrowDiagram& a) {
  require_valid(a);
  DFormula out;
  for (const InternalEdge& e : internal_edges(a)) {
    if (e.same_arrow) continue;
    long long coeff = (e.heads % 2 ? -1 : 1) * e.eta;
    out.add_term(shrink_edge(a, e.strand, e.index), coeff);
  }
  return out;
}

}  // namespace gdsl
