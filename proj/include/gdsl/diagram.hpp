#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gdsl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EndKind : std::uint8_t { head, tail };

inline char kind_char(EndKind k) { return k == EndKind::head ? 'H' : 'T'; }

inline EndKind flipped(EndKind k) {
  return k == EndKind::head ? EndKind::tail : EndKind::head;
}

struct EndRef {
  std::int32_t arrow = 0;
  EndKind kind = EndKind::head;
  friend bool operator==(const EndRef&, const EndRef&) = default;
  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

/// A position along the diagram: strand index and slot within the strand word.
struct StrandPos {
  int strand = 0;
  int index = 0;
  friend bool operator==(const StrandPos&, const StrandPos&) = default;
  friend auto operator<=>(const StrandPos&, const StrandPos&) = default;
};

/// Gauss diagram on n labeled, ordered strands. Each strand word lists the
/// arrow ends met when running from the bottom endpoint of the strand to the
/// top one. Every arrow occurs exactly once as a head and once as a tail.
/// Values are immutable after construction; all operations below are pure.
struct GaussDiagram {
  int strand_count = 1;
  std::vector<std::int8_t> signs;            // arrow id -> +1 or -1
  std::vector<std::vector<EndRef>> strands;  // one word per strand, bottom to top

  int arrow_count() const { return static_cast<int>(signs.size()); }

  int end_count() const {
    int n = 0;
    for (const auto& w : strands) n += static_cast<int>(w.size());
    return n;
  }

  static GaussDiagram empty(int strand_count) {
    GaussDiagram d;
    d.strand_count = strand_count;
    d.strands.assign(static_cast<std::size_t>(strand_count), {});
    return d;
  }
};

/// Unsigned Gauss diagram: the basis objects of invariant formulas.
struct ArrowDiagram {
  int strand_count = 1;
  int arrows = 0;
  std::vector<std::vector<EndRef>> strands;

  int arrow_count() const { return arrows; }

  int end_count() const {
    int n = 0;
    for (const auto& w : strands) n += static_cast<int>(w.size());
    return n;
  }

  static ArrowDiagram empty(int strand_count) {
    ArrowDiagram d;
    d.strand_count = strand_count;
    d.strands.assign(static_cast<std::size_t>(strand_count), {});
    return d;
  }
};

namespace detail {

template <typename Diagram>
std::optional<std::string> validate_ends(const Diagram& d, int arrow_count) {
  if (d.strand_count < 1) return "strand_count must be at least 1";
  if (static_cast<int>(d.strands.size()) != d.strand_count)
    return "wrong number of strand words";
  std::vector<int> heads(static_cast<std::size_t>(arrow_count), 0);
  std::vector<int> tails(static_cast<std::size_t>(arrow_count), 0);
  for (const auto& word : d.strands)
    for (const EndRef& e : word) {
      if (e.arrow < 0 || e.arrow >= arrow_count)
        return "end names undeclared arrow " + std::to_string(e.arrow + 1);
      (e.kind == EndKind::head ? heads : tails)[e.arrow]++;
    }
  for (int a = 0; a < arrow_count; ++a) {
    if (heads[a] != 1)
      return "arrow " + std::to_string(a + 1) + " has " + std::to_string(heads[a]) +
             " heads (expected 1)";
    if (tails[a] != 1)
      return "arrow " + std::to_string(a + 1) + " has " + std::to_string(tails[a]) +
             " tails (expected 1)";
  }
  return std::nullopt;
}

inline std::vector<std::int32_t> first_occurrence_relabel(
    const std::vector<std::vector<EndRef>>& strands, int arrow_count) {
  std::vector<std::int32_t> perm(static_cast<std::size_t>(arrow_count), -1);
  std::int32_t next = 0;
  for (const auto& word : strands)
    for (const EndRef& e : word)
      if (perm[e.arrow] < 0) perm[e.arrow] = next++;
  if (next != arrow_count) throw Error("diagram declares arrows that never occur");
  return perm;
}

}  // namespace detail

inline std::optional<std::string> validate(const GaussDiagram& d) {
  for (std::int8_t s : d.signs)
    if (s != 1 && s != -1) return "arrow sign must be +1 or -1";
  return detail::validate_ends(d, d.arrow_count());
}

inline std::optional<std::string> validate(const ArrowDiagram& d) {
  return detail::validate_ends(d, d.arrows);
}

inline void require_valid(const GaussDiagram& d) {
  if (auto err = validate(d)) throw Error("invalid Gauss diagram: " + *err);
}

inline void require_valid(const ArrowDiagram& d) {
  if (auto err = validate(d)) throw Error("invalid arrow diagram: " + *err);
}

/// Relabels arrows 1..k in order of first end met when reading strand 1, then
/// strand 2, and so on. Two diagrams are isomorphic iff their canonical forms
/// are equal. Idempotent.
inline GaussDiagram canonicalize(const GaussDiagram& d) {
  auto perm = detail::first_occurrence_relabel(d.strands, d.arrow_count());
  GaussDiagram out;
  out.strand_count = d.strand_count;
  out.signs.assign(d.signs.size(), 0);
  for (std::size_t a = 0; a < d.signs.size(); ++a) out.signs[perm[a]] = d.signs[a];
  out.strands.resize(d.strands.size());
  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    out.strands[s].reserve(d.strands[s].size());
    for (const EndRef& e : d.strands[s])
      out.strands[s].push_back(EndRef{perm[e.arrow], e.kind});
  }
  return out;
}

inline ArrowDiagram canonicalize(const ArrowDiagram& d) {
  auto perm = detail::first_occurrence_relabel(d.strands, d.arrows);
  ArrowDiagram out;
  out.strand_count = d.strand_count;
  out.arrows = d.arrows;
  out.strands.resize(d.strands.size());
  for (std::size_t s = 0; s < d.strands.size(); ++s) {
    out.strands[s].reserve(d.strands[s].size());
    for (const EndRef& e : d.strands[s])
      out.strands[s].push_back(EndRef{perm[e.arrow], e.kind});
  }
  return out;
}

/// Compact structural key of the diagram as labeled. Canonical keys (the key
/// of the canonical form) decide isomorphism.
inline std::string encode(const GaussDiagram& d) {
  std::string s = "g" + std::to_string(d.strand_count) + ";";
  for (std::int8_t sg : d.signs) s += sg > 0 ? '+' : '-';
  for (const auto& word : d.strands) {
    s += '/';
    for (const EndRef& e : word) {
      s += std::to_string(e.arrow);
      s += kind_char(e.kind);
    }
  }
  return s;
}

inline std::string encode(const ArrowDiagram& d) {
  std::string s = "a" + std::to_string(d.strand_count) + ";" + std::to_string(d.arrows);
  for (const auto& word : d.strands) {
    s += '/';
    for (const EndRef& e : word) {
      s += std::to_string(e.arrow);
      s += kind_char(e.kind);
    }
  }
  return s;
}

inline std::string canonical_key(const GaussDiagram& d) { return encode(canonicalize(d)); }
inline std::string canonical_key(const ArrowDiagram& d) { return encode(canonicalize(d)); }

inline bool isomorphic(const GaussDiagram& a, const GaussDiagram& b) {
  return canonical_key(a) == canonical_key(b);
}

inline bool isomorphic(const ArrowDiagram& a, const ArrowDiagram& b) {
  return canonical_key(a) == canonical_key(b);
}

/// Strand of each end of the given arrow, (tail strand, head strand).
template <typename Diagram>
std::pair<StrandPos, StrandPos> arrow_ends(const Diagram& d, int arrow) {
  StrandPos tail{-1, -1}, head{-1, -1};
  for (int s = 0; s < static_cast<int>(d.strands.size()); ++s)
    for (int i = 0; i < static_cast<int>(d.strands[s].size()); ++i) {
      const EndRef& e = d.strands[s][i];
      if (e.arrow == arrow) (e.kind == EndKind::tail ? tail : head) = StrandPos{s, i};
    }
  if (tail.strand < 0 || head.strand < 0)
    throw Error("unknown arrow identifier " + std::to_string(arrow + 1));
  return {tail, head};
}

template <typename Diagram>
bool is_self_arrow(const Diagram& d, int arrow) {
  auto [tail, head] = arrow_ends(d, arrow);
  return tail.strand == head.strand;
}

/// Stacking product: strand words of `bottom` followed by those of `top`.
inline GaussDiagram stack(const GaussDiagram& bottom, const GaussDiagram& top) {
  if (bottom.strand_count != top.strand_count)
    throw Error("stack: strand counts differ (" + std::to_string(bottom.strand_count) +
                " vs " + std::to_string(top.strand_count) + ")");
  GaussDiagram out = bottom;
  const std::int32_t offset = bottom.arrow_count();
  out.signs.insert(out.signs.end(), top.signs.begin(), top.signs.end());
  for (std::size_t s = 0; s < out.strands.size(); ++s)
    for (const EndRef& e : top.strands[s])
      out.strands[s].push_back(EndRef{e.arrow + offset, e.kind});
  return canonicalize(out);
}

inline ArrowDiagram forget_signs(const GaussDiagram& d) {
  ArrowDiagram out;
  out.strand_count = d.strand_count;
  out.arrows = d.arrow_count();
  out.strands = d.strands;
  return canonicalize(out);
}

/// Restriction of a Gauss diagram to a subset of its arrows (a subdiagram).
inline GaussDiagram restrict_to(const GaussDiagram& d, const std::vector<char>& keep) {
  GaussDiagram out;
  out.strand_count = d.strand_count;
  std::vector<std::int32_t> remap(d.signs.size(), -1);
  for (std::size_t a = 0; a < d.signs.size(); ++a)
    if (keep[a]) {
      remap[a] = static_cast<std::int32_t>(out.signs.size());
      out.signs.push_back(d.signs[a]);
    }
  out.strands.resize(d.strands.size());
  for (std::size_t s = 0; s < d.strands.size(); ++s)
    for (const EndRef& e : d.strands[s])
      if (remap[e.arrow] >= 0) out.strands[s].push_back(EndRef{remap[e.arrow], e.kind});
  return out;
}

/// All unordered pairs of ends that are met consecutively along some strand.
/// Strand endpoints are boundaries: the last end of a strand is never adjacent
/// to the first end of the next strand, nor to anything across the endpoint.
template <typename Diagram>
std::vector<std::pair<EndRef, EndRef>> adjacent_pairs(const Diagram& d) {
  std::vector<std::pair<EndRef, EndRef>> out;
  for (const auto& word : d.strands)
    for (std::size_t i = 0; i + 1 < word.size(); ++i) out.emplace_back(word[i], word[i + 1]);
  return out;
}

/// True iff the two (distinct) arrows cross: running along the strands in
/// order, the four ends alternate between the two arrows. If one arrow's two
/// ends are met consecutively among the four, the arrows do not cross.
template <typename Diagram>
bool arrows_cross(const Diagram& d, int x, int y) {
  if (x == y) throw Error("arrows_cross needs two distinct arrows");
  std::vector<int> owners;
  owners.reserve(4);
  for (const auto& word : d.strands)
    for (const EndRef& e : word)
      if (e.arrow == x || e.arrow == y) owners.push_back(e.arrow);
  if (owners.size() != 4) throw Error("arrows_cross: arrows not found");
  return owners[0] != owners[1] && owners[1] != owners[2];
}

/// A portion of strand between two adjacent ends.
struct InternalEdge {
  int strand = 0;
  int index = 0;  // edge lies between word[index] and word[index + 1]
  EndRef a, b;
  bool same_arrow = false;
  int heads = 0;  // number of arrow heads among the two cobounding ends
  int eta = 0;    // -1 when the cobounding arrows do not cross, +1 otherwise
};

/// Internal edges of an arrow diagram, with head count and crossing flag.
/// An edge cobounded by the two ends of a single arrow has eta = -1 (the
/// arrow's ends are met consecutively, so nothing crosses).
inline std::vector<InternalEdge> internal_edges(const ArrowDiagram& d) {
  std::vector<InternalEdge> out;
  for (int s = 0; s < static_cast<int>(d.strands.size()); ++s) {
    const auto& word = d.strands[s];
    for (int i = 0; i + 1 < static_cast<int>(word.size()); ++i) {
      InternalEdge e;
      e.strand = s;
      e.index = i;
      e.a = word[i];
      e.b = word[i + 1];
      e.same_arrow = e.a.arrow == e.b.arrow;
      e.heads = (e.a.kind == EndKind::head ? 1 : 0) + (e.b.kind == EndKind::head ? 1 : 0);
      e.eta = e.same_arrow ? -1 : (arrows_cross(d, e.a.arrow, e.b.arrow) ? 1 : -1);
      out.push_back(e);
    }
  }
  return out;
}

/// Reverses the orientation of one arrow (its head and tail swap roles).
inline ArrowDiagram reverse_arrow(const ArrowDiagram& d, int arrow) {
  ArrowDiagram out = d;
  for (auto& word : out.strands)
    for (EndRef& e : word)
      if (e.arrow == arrow) e.kind = flipped(e.kind);
  return out;
}

inline std::vector<int> self_arrows(const GaussDiagram& d) {
  std::vector<int> out;
  for (int a = 0; a < d.arrow_count(); ++a)
    if (is_self_arrow(d, a)) out.push_back(a);
  return out;
}

}  // namespace gdsl
