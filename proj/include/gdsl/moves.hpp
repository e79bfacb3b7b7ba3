#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/tables.hpp"
#include "gdsl/text.hpp"

namespace gdsl {

enum class MoveKind { r1_add, r1_del, r2_add, r2_del, r3, tc, sv_add, sv_del, sc };

inline const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_add: return "r1-add";
    case MoveKind::r1_del: return "r1-del";
    case MoveKind::r2_add: return "r2-add";
    case MoveKind::r2_del: return "r2-del";
    case MoveKind::r3: return "r3";
    case MoveKind::tc: return "tc";
    case MoveKind::sv_add: return "sv-add";
    case MoveKind::sv_del: return "sv-del";
    case MoveKind::sc: return "sc";
  }
  return "?";
}

/// One applied rewriting step. Sites and arrow identifiers refer to the
/// canonical labeling of the diagram the move is applied to; apply()
/// canonicalizes its result, so certificates replay step by step.
struct MoveInstance {
  MoveKind kind = MoveKind::tc;
  int arrow = -1;   // r1_del, r2_del, sc, sv_del
  int arrow2 = -1;  // r2_del
  int strand = -1, pos = -1;    // tc, r1_add, sv_add, r2_add first gap, r3 site A
  int strand2 = -1, pos2 = -1;  // r2_add second gap, sv_add second slot, r3 site B
  int strand3 = -1, pos3 = -1;  // r3 site C
  std::int8_t sign = 1;         // insertions
  bool tail_first = true;       // r1_add, sv_add
  bool heads_same_order = true; // r2_add

  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

struct MoveError : Error {
  using Error::Error;
};

/// A subset of move kinds plus the welded/virtual mode. Tails Commute is only
/// available in welded mode; the Undercrossings-Commute analogue never is.
struct MoveSet {
  bool welded = false;
  std::set<MoveKind> kinds;

  static MoveSet reidemeister(bool welded_mode) {
    MoveSet ms;
    ms.welded = welded_mode;
    ms.kinds = {MoveKind::r1_add, MoveKind::r1_del, MoveKind::r2_add, MoveKind::r2_del,
                MoveKind::r3};
    if (welded_mode) ms.kinds.insert(MoveKind::tc);
    return ms;
  }

  MoveSet with_sv() const {
    MoveSet ms = *this;
    ms.kinds.insert(MoveKind::sv_add);
    ms.kinds.insert(MoveKind::sv_del);
    return ms;
  }

  MoveSet with_sc() const {
    MoveSet ms = *this;
    ms.kinds.insert(MoveKind::sc);
    return ms;
  }

  bool allows(MoveKind k) const { return kinds.count(k) > 0; }

  void require_valid() const {
    if (!welded && kinds.count(MoveKind::tc))
      throw Error("tails-commute is only legal in welded mode");
  }
};

namespace detail {

inline GaussDiagram remove_arrows(const GaussDiagram& d, int a, int b = -1) {
  std::vector<char> keep(d.signs.size(), 1);
  keep[a] = 0;
  if (b >= 0) keep[b] = 0;
  return canonicalize(restrict_to(d, keep));
}

inline void check_bounds(const GaussDiagram& d, int strand, int pos, int width,
                         const char* what) {
  if (strand < 0 || strand >= d.strand_count)
    throw MoveError(std::string(what) + ": strand out of range");
  if (pos < 0 || pos + width > static_cast<int>(d.strands[strand].size()))
    throw MoveError(std::string(what) + ": position out of range");
}

/// The three sites of a triangle move, located in a diagram, with roles
/// assigned: u meets v at site A, u meets w at B, v meets w at C.
struct TriangleSites {
  int u, v, w;
  StrandPos a, b, c;  // position of the first end of each adjacent pair
};

inline std::optional<R3Variant> match_r3(const GaussDiagram& d, const TriangleSites& t) {
  auto site_ends = [&](StrandPos p) {
    return std::pair<EndRef, EndRef>{d.strands[p.strand][p.index],
                                     d.strands[p.strand][p.index + 1]};
  };
  auto [a1, a2] = site_ends(t.a);
  auto [b1, b2] = site_ends(t.b);
  auto [c1, c2] = site_ends(t.c);
  // site contents must be exactly {u,v}, {u,w}, {v,w}
  auto is_pair = [](EndRef x, EndRef y, int p, int q) {
    return (x.arrow == p && y.arrow == q) || (x.arrow == q && y.arrow == p);
  };
  if (!is_pair(a1, a2, t.u, t.v) || !is_pair(b1, b2, t.u, t.w) || !is_pair(c1, c2, t.v, t.w))
    return std::nullopt;
  R3Variant want;
  want.a_uv = a1.arrow == t.u;
  want.b_uw = b1.arrow == t.u;
  want.c_vw = c1.arrow == t.v;
  want.ua = (want.a_uv ? a1 : a2).kind;
  want.va = (want.a_uv ? a2 : a1).kind;
  want.ub = (want.b_uw ? b1 : b2).kind;
  want.wb = (want.b_uw ? b2 : b1).kind;
  want.vc = (want.c_vw ? c1 : c2).kind;
  want.wc = (want.c_vw ? c2 : c1).kind;
  want.eu = d.signs[t.u];
  want.ev = d.signs[t.v];
  want.ew = d.signs[t.w];
  std::string key = want.key();
  for (const R3Variant& row : r3_variants())
    if (row.key() == key) return row;
  return std::nullopt;
}

}  // namespace detail

/// Applies one move; the result is canonicalized. Throws MoveError naming the
/// violated legality condition.
inline GaussDiagram apply(const GaussDiagram& d, const MoveInstance& m) {
  switch (m.kind) {
    case MoveKind::r1_del: {
      if (m.arrow < 0 || m.arrow >= d.arrow_count())
        throw MoveError("r1-del: unknown arrow");
      auto [t, h] = arrow_ends(d, m.arrow);
      if (t.strand != h.strand || std::abs(t.index - h.index) != 1)
        throw MoveError("r1-del: the two ends of the arrow are not adjacent");
      return detail::remove_arrows(d, m.arrow);
    }
    case MoveKind::r1_add: {
      detail::check_bounds(d, m.strand, m.pos, 0, "r1-add");
      GaussDiagram out = d;
      std::int32_t a = out.arrow_count();
      out.signs.push_back(m.sign);
      EndKind first = m.tail_first ? EndKind::tail : EndKind::head;
      auto& word = out.strands[m.strand];
      word.insert(word.begin() + m.pos, {EndRef{a, first}, EndRef{a, flipped(first)}});
      return canonicalize(out);
    }
    case MoveKind::r2_del: {
      if (m.arrow < 0 || m.arrow >= d.arrow_count() || m.arrow2 < 0 ||
          m.arrow2 >= d.arrow_count() || m.arrow == m.arrow2)
        throw MoveError("r2-del: need two distinct arrows");
      if (d.signs[m.arrow] == d.signs[m.arrow2])
        throw MoveError("r2-del: the two arrows must have opposite signs");
      bool tails_adj = false, heads_adj = false;
      for (const auto& [e1, e2] : adjacent_pairs(d)) {
        if (e1.arrow != m.arrow && e1.arrow != m.arrow2) continue;
        if (e2.arrow != m.arrow && e2.arrow != m.arrow2) continue;
        if (e1.arrow == e2.arrow) continue;
        if (e1.kind == EndKind::tail && e2.kind == EndKind::tail) tails_adj = true;
        if (e1.kind == EndKind::head && e2.kind == EndKind::head) heads_adj = true;
      }
      if (!tails_adj) throw MoveError("r2-del: tails are not adjacent");
      if (!heads_adj) throw MoveError("r2-del: heads are not adjacent");
      return detail::remove_arrows(d, m.arrow, m.arrow2);
    }
    case MoveKind::r2_add: {
      detail::check_bounds(d, m.strand, m.pos, 0, "r2-add");
      GaussDiagram out = d;
      std::int32_t a = out.arrow_count(), b = a + 1;
      out.signs.push_back(m.sign);
      out.signs.push_back(static_cast<std::int8_t>(-m.sign));
      auto& w1 = out.strands[m.strand];
      w1.insert(w1.begin() + m.pos, {EndRef{a, EndKind::tail}, EndRef{b, EndKind::tail}});
      detail::check_bounds(out, m.strand2, m.pos2, 0, "r2-add");
      auto& w2 = out.strands[m.strand2];
      EndRef h1{m.heads_same_order ? a : b, EndKind::head};
      EndRef h2{m.heads_same_order ? b : a, EndKind::head};
      w2.insert(w2.begin() + m.pos2, {h1, h2});
      // the head block must not split the tail block
      bool tails_adj = false;
      for (const auto& [e1, e2] : adjacent_pairs(out))
        if (e1 == EndRef{a, EndKind::tail} && e2 == EndRef{b, EndKind::tail}) tails_adj = true;
      if (!tails_adj) throw MoveError("r2-add: head block would split the tail pair");
      return canonicalize(out);
    }
    case MoveKind::r3: {
      detail::check_bounds(d, m.strand, m.pos, 2, "r3");
      detail::check_bounds(d, m.strand2, m.pos2, 2, "r3");
      detail::check_bounds(d, m.strand3, m.pos3, 2, "r3");
      auto overlap = [](int s1, int p1, int s2, int p2) {
        return s1 == s2 && std::abs(p1 - p2) <= 1;
      };
      if (overlap(m.strand, m.pos, m.strand2, m.pos2) ||
          overlap(m.strand, m.pos, m.strand3, m.pos3) ||
          overlap(m.strand2, m.pos2, m.strand3, m.pos3))
        throw MoveError("r3: sites overlap");
      auto end_at = [&](int s, int p) { return d.strands[s][p]; };
      // identify the three arrows from the site contents
      std::set<int> arrows;
      for (auto [s, p] : {std::pair{m.strand, m.pos}, {m.strand2, m.pos2}, {m.strand3, m.pos3}})
        for (int i = 0; i < 2; ++i) arrows.insert(end_at(s, p + i).arrow);
      if (arrows.size() != 3) throw MoveError("r3: sites do not involve exactly three arrows");
      std::vector<int> abc(arrows.begin(), arrows.end());
      std::optional<R3Variant> matched;
      detail::TriangleSites sites;
      for (int i = 0; i < 3 && !matched; ++i)
        for (int j = 0; j < 3 && !matched; ++j) {
          if (j == i) continue;
          int k = 3 - i - j;
          sites = detail::TriangleSites{abc[i], abc[j], abc[k],
                                        StrandPos{m.strand, m.pos},
                                        StrandPos{m.strand2, m.pos2},
                                        StrandPos{m.strand3, m.pos3}};
          matched = detail::match_r3(d, sites);
        }
      if (!matched)
        throw MoveError("r3: sites do not match any legal triangle variant");
      GaussDiagram out = d;
      for (auto [s, p] : {std::pair{m.strand, m.pos}, {m.strand2, m.pos2}, {m.strand3, m.pos3}})
        std::swap(out.strands[s][p], out.strands[s][p + 1]);
      return canonicalize(out);
    }
    case MoveKind::tc: {
      detail::check_bounds(d, m.strand, m.pos, 2, "tc");
      EndRef e1 = d.strands[m.strand][m.pos], e2 = d.strands[m.strand][m.pos + 1];
      if (e1.kind != EndKind::tail || e2.kind != EndKind::tail)
        throw MoveError("tc: both ends must be tails");
      GaussDiagram out = d;
      std::swap(out.strands[m.strand][m.pos], out.strands[m.strand][m.pos + 1]);
      return canonicalize(out);
    }
    case MoveKind::sc: {
      if (m.arrow < 0 || m.arrow >= d.arrow_count()) throw MoveError("sc: unknown arrow");
      if (!is_self_arrow(d, m.arrow))
        throw MoveError("sc: self-crossing change needs a self-arrow");
      GaussDiagram out = d;
      out.signs[m.arrow] = static_cast<std::int8_t>(-out.signs[m.arrow]);
      for (auto& word : out.strands)
        for (EndRef& e : word)
          if (e.arrow == m.arrow) e.kind = flipped(e.kind);
      return canonicalize(out);
    }
    case MoveKind::sv_del: {
      if (m.arrow < 0 || m.arrow >= d.arrow_count()) throw MoveError("sv-del: unknown arrow");
      if (!is_self_arrow(d, m.arrow))
        throw MoveError("sv-del: self-virtualization needs a self-arrow");
      return detail::remove_arrows(d, m.arrow);
    }
    case MoveKind::sv_add: {
      detail::check_bounds(d, m.strand, m.pos, 0, "sv-add");
      GaussDiagram out = d;
      std::int32_t a = out.arrow_count();
      out.signs.push_back(m.sign);
      EndKind first = m.tail_first ? EndKind::tail : EndKind::head;
      auto& word = out.strands[m.strand];
      word.insert(word.begin() + m.pos, EndRef{a, first});
      if (m.pos2 < 0 || m.pos2 > static_cast<int>(word.size()))
        throw MoveError("sv-add: second position out of range");
      word.insert(word.begin() + m.pos2, EndRef{a, flipped(first)});
      return canonicalize(out);
    }
  }
  throw MoveError("unknown move kind");
}

/// Every legal single move from d under the move set, insertions bounded by
/// max_arrows. Deterministic order; each result is valid and canonical.
inline std::vector<std::pair<MoveInstance, GaussDiagram>> neighbors(const GaussDiagram& dd,
                                                                    const MoveSet& ms,
                                                                    int max_arrows) {
  ms.require_valid();
  GaussDiagram d = canonicalize(dd);
  std::vector<std::pair<MoveInstance, GaussDiagram>> out;
  auto emit = [&](const MoveInstance& m) { out.emplace_back(m, apply(d, m)); };

  if (ms.allows(MoveKind::r1_del))
    for (int a = 0; a < d.arrow_count(); ++a) {
      auto [t, h] = arrow_ends(d, a);
      if (t.strand == h.strand && std::abs(t.index - h.index) == 1) {
        MoveInstance m;
        m.kind = MoveKind::r1_del;
        m.arrow = a;
        emit(m);
      }
    }

  if (ms.allows(MoveKind::r2_del))
    for (int a = 0; a < d.arrow_count(); ++a)
      for (int b = a + 1; b < d.arrow_count(); ++b) {
        if (d.signs[a] == d.signs[b]) continue;
        bool tails = false, heads = false;
        for (const auto& [e1, e2] : adjacent_pairs(d)) {
          if (!((e1.arrow == a && e2.arrow == b) || (e1.arrow == b && e2.arrow == a))) continue;
          if (e1.kind == EndKind::tail && e2.kind == EndKind::tail) tails = true;
          if (e1.kind == EndKind::head && e2.kind == EndKind::head) heads = true;
        }
        if (tails && heads) {
          MoveInstance m;
          m.kind = MoveKind::r2_del;
          m.arrow = a;
          m.arrow2 = b;
          emit(m);
        }
      }

  if (ms.allows(MoveKind::r3)) {
    // candidate sites: adjacent pairs of distinct arrows
    std::vector<StrandPos> sites;
    for (int s = 0; s < d.strand_count; ++s)
      for (int i = 0; i + 1 < static_cast<int>(d.strands[s].size()); ++i)
        if (d.strands[s][i].arrow != d.strands[s][i + 1].arrow)
          sites.push_back(StrandPos{s, i});
    for (std::size_t i = 0; i < sites.size(); ++i)
      for (std::size_t j = i + 1; j < sites.size(); ++j)
        for (std::size_t k = j + 1; k < sites.size(); ++k) {
          // sites must be disjoint position pairs
          auto overlap = [&](StrandPos p, StrandPos q) {
            return p.strand == q.strand && std::abs(p.index - q.index) <= 1;
          };
          if (overlap(sites[i], sites[j]) || overlap(sites[i], sites[k]) ||
              overlap(sites[j], sites[k]))
            continue;
          MoveInstance m;
          m.kind = MoveKind::r3;
          m.strand = sites[i].strand;
          m.pos = sites[i].index;
          m.strand2 = sites[j].strand;
          m.pos2 = sites[j].index;
          m.strand3 = sites[k].strand;
          m.pos3 = sites[k].index;
          try {
            out.emplace_back(m, apply(d, m));
          } catch (const MoveError&) {
          }
        }
  }

  if (ms.allows(MoveKind::tc))
    for (int s = 0; s < d.strand_count; ++s)
      for (int i = 0; i + 1 < static_cast<int>(d.strands[s].size()); ++i)
        if (d.strands[s][i].kind == EndKind::tail &&
            d.strands[s][i + 1].kind == EndKind::tail) {
          MoveInstance m;
          m.kind = MoveKind::tc;
          m.strand = s;
          m.pos = i;
          emit(m);
        }

  if (ms.allows(MoveKind::sc))
    for (int a : self_arrows(d)) {
      MoveInstance m;
      m.kind = MoveKind::sc;
      m.arrow = a;
      emit(m);
    }

  if (ms.allows(MoveKind::sv_del))
    for (int a : self_arrows(d)) {
      MoveInstance m;
      m.kind = MoveKind::sv_del;
      m.arrow = a;
      emit(m);
    }

  if (ms.allows(MoveKind::r1_add) && d.arrow_count() + 1 <= max_arrows)
    for (int s = 0; s < d.strand_count; ++s)
      for (int p = 0; p <= static_cast<int>(d.strands[s].size()); ++p)
        for (int sign : {1, -1})
          for (bool tf : {true, false}) {
            MoveInstance m;
            m.kind = MoveKind::r1_add;
            m.strand = s;
            m.pos = p;
            m.sign = static_cast<std::int8_t>(sign);
            m.tail_first = tf;
            emit(m);
          }

  if (ms.allows(MoveKind::sv_add) && d.arrow_count() + 1 <= max_arrows)
    for (int s = 0; s < d.strand_count; ++s)
      for (int p = 0; p <= static_cast<int>(d.strands[s].size()); ++p)
        for (int p2 = 0; p2 <= static_cast<int>(d.strands[s].size()) + 1; ++p2)
          for (int sign : {1, -1})
            for (bool tf : {true, false}) {
              MoveInstance m;
              m.kind = MoveKind::sv_add;
              m.strand = s;
              m.pos = p;
              m.pos2 = p2;
              m.sign = static_cast<std::int8_t>(sign);
              m.tail_first = tf;
              emit(m);
            }

  if (ms.allows(MoveKind::r2_add) && d.arrow_count() + 2 <= max_arrows)
    for (int s1 = 0; s1 < d.strand_count; ++s1)
      for (int p1 = 0; p1 <= static_cast<int>(d.strands[s1].size()); ++p1)
        for (int s2 = 0; s2 < d.strand_count; ++s2) {
          int len2 = static_cast<int>(d.strands[s2].size()) + (s2 == s1 ? 2 : 0);
          for (int p2 = 0; p2 <= len2; ++p2) {
            if (s2 == s1 && p2 == p1 + 1) continue;  // would split the tail pair
            for (int sign : {1, -1})
              for (bool same : {true, false}) {
                MoveInstance m;
                m.kind = MoveKind::r2_add;
                m.strand = s1;
                m.pos = p1;
                m.strand2 = s2;
                m.pos2 = p2;
                m.sign = static_cast<std::int8_t>(sign);
                m.heads_same_order = same;
                emit(m);
              }
          }
        }

  return out;
}

// ---- move and certificate text forms ----

inline std::string serialize_move(const MoveInstance& m) {
  std::string s = move_kind_name(m.kind);
  auto site = [](int strand, int pos) {
    return std::to_string(strand + 1) + "," + std::to_string(pos + 1);
  };
  switch (m.kind) {
    case MoveKind::r1_del:
    case MoveKind::sc:
    case MoveKind::sv_del:
      s += " a=" + std::to_string(m.arrow + 1);
      break;
    case MoveKind::r2_del:
      s += " a=" + std::to_string(m.arrow + 1) + " b=" + std::to_string(m.arrow2 + 1);
      break;
    case MoveKind::tc:
      s += " at=" + site(m.strand, m.pos);
      break;
    case MoveKind::r1_add:
      s += " at=" + site(m.strand, m.pos) + " sign=" + (m.sign > 0 ? "+" : "-") +
           " first=" + (m.tail_first ? "T" : "H");
      break;
    case MoveKind::sv_add:
      s += " at=" + site(m.strand, m.pos) + " other=" + std::to_string(m.pos2 + 1) +
           " sign=" + (m.sign > 0 ? "+" : "-") + " first=" + (m.tail_first ? "T" : "H");
      break;
    case MoveKind::r2_add:
      s += " tails=" + site(m.strand, m.pos) + " heads=" + site(m.strand2, m.pos2) +
           " order=" + (m.heads_same_order ? "same" : "cross") +
           " sign=" + (m.sign > 0 ? "+" : "-");
      break;
    case MoveKind::r3:
      s += " sites=" + site(m.strand, m.pos) + ";" + site(m.strand2, m.pos2) + ";" +
           site(m.strand3, m.pos3);
      break;
  }
  return s;
}

namespace detail {

inline std::pair<int, int> parse_site(const Token& t, const std::string& v) {
  auto comma = v.find(',');
  if (comma == std::string::npos) throw ParseError(t.line, t.column, "expected <strand>,<pos>");
  int s = parse_int({v.substr(0, comma), t.line, t.column}, "strand");
  int p = parse_int({v.substr(comma + 1), t.line, t.column}, "position");
  return {s - 1, p - 1};
}

inline std::string field(const std::vector<Token>& toks, const std::string& key) {
  for (std::size_t i = 1; i < toks.size(); ++i)
    if (toks[i].text.rfind(key + "=", 0) == 0) return toks[i].text.substr(key.size() + 1);
  throw ParseError(toks[0].line, toks[0].column, "missing field '" + key + "='");
}

}  // namespace detail

inline MoveInstance parse_move(const std::vector<detail::Token>& toks) {
  const auto& t0 = toks[0];
  MoveInstance m;
  auto arrow_field = [&](const char* k) {
    return detail::parse_int({detail::field(toks, k), t0.line, t0.column}, "arrow id") - 1;
  };
  std::string name = t0.text;
  if (name == "r1-del" || name == "sc" || name == "sv-del") {
    m.kind = name == "r1-del" ? MoveKind::r1_del
                              : (name == "sc" ? MoveKind::sc : MoveKind::sv_del);
    m.arrow = arrow_field("a");
  } else if (name == "r2-del") {
    m.kind = MoveKind::r2_del;
    m.arrow = arrow_field("a");
    m.arrow2 = arrow_field("b");
  } else if (name == "tc") {
    m.kind = MoveKind::tc;
    auto [s, p] = detail::parse_site(t0, detail::field(toks, "at"));
    m.strand = s;
    m.pos = p;
  } else if (name == "r1-add" || name == "sv-add") {
    m.kind = name == "r1-add" ? MoveKind::r1_add : MoveKind::sv_add;
    auto [s, p] = detail::parse_site(t0, detail::field(toks, "at"));
    m.strand = s;
    m.pos = p;
    if (name == "sv-add")
      m.pos2 = detail::parse_int({detail::field(toks, "other"), t0.line, t0.column}, "slot") - 1;
    m.sign = detail::field(toks, "sign") == "+" ? 1 : -1;
    m.tail_first = detail::field(toks, "first") == "T";
  } else if (name == "r2-add") {
    m.kind = MoveKind::r2_add;
    auto [s1, p1] = detail::parse_site(t0, detail::field(toks, "tails"));
    auto [s2, p2] = detail::parse_site(t0, detail::field(toks, "heads"));
    m.strand = s1;
    m.pos = p1;
    m.strand2 = s2;
    m.pos2 = p2;
    m.heads_same_order = detail::field(toks, "order") == "same";
    m.sign = detail::field(toks, "sign") == "+" ? 1 : -1;
  } else if (name == "r3") {
    m.kind = MoveKind::r3;
    std::string v = detail::field(toks, "sites");
    auto semi1 = v.find(';');
    auto semi2 = v.find(';', semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
      throw ParseError(t0.line, t0.column, "r3 needs three sites");
    auto [s1, p1] = detail::parse_site(t0, v.substr(0, semi1));
    auto [s2, p2] = detail::parse_site(t0, v.substr(semi1 + 1, semi2 - semi1 - 1));
    auto [s3, p3] = detail::parse_site(t0, v.substr(semi2 + 1));
    m.strand = s1; m.pos = p1;
    m.strand2 = s2; m.pos2 = p2;
    m.strand3 = s3; m.pos3 = p3;
  } else {
    throw ParseError(t0.line, t0.column, "unknown move '" + name + "'");
  }
  return m;
}

/// A replayable witness: applying the steps to the source diagram, in order,
/// produces the target diagram.
struct Certificate {
  GaussDiagram source;
  std::vector<MoveInstance> steps;
  GaussDiagram target;
};

inline std::string serialize_certificate(const Certificate& c) {
  std::string out = "source {\n" + serialize_diagram(c.source) + "}\nmoves {\n";
  for (const MoveInstance& m : c.steps) out += serialize_move(m) + "\n";
  out += "}\ntarget {\n" + serialize_diagram(c.target) + "}\n";
  return out;
}

inline Certificate parse_certificate(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  Certificate cert;
  std::size_t i = 0;
  auto expect = [&](const char* a, const char* b) {
    if (i >= lines.size() || lines[i].size() != 2 || lines[i][0].text != a ||
        lines[i][1].text != b)
      throw ParseError(i < lines.size() ? lines[i][0].line : 0, 1,
                       std::string("expected '") + a + " " + b + "'");
    ++i;
  };
  auto block = [&]() {
    std::string body;
    while (i < lines.size() && lines[i][0].text != "}") {
      for (const auto& t : lines[i]) body += t.text + " ";
      body += "\n";
      ++i;
    }
    if (i == lines.size()) throw ParseError(0, 0, "unterminated block");
    ++i;  // consume '}'
    return body;
  };
  expect("source", "{");
  cert.source = parse_diagram(block());
  expect("moves", "{");
  while (i < lines.size() && lines[i][0].text != "}") {
    cert.steps.push_back(parse_move(lines[i]));
    ++i;
  }
  if (i == lines.size()) throw ParseError(0, 0, "unterminated moves block");
  ++i;
  expect("target", "{");
  cert.target = parse_diagram(block());
  return cert;
}

/// Replays a certificate; returns an error description on failure.
inline std::optional<std::string> replay_error(const Certificate& c) {
  GaussDiagram d = canonicalize(c.source);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    try {
      d = apply(d, c.steps[i]);
    } catch (const Error& e) {
      return "step " + std::to_string(i + 1) + " (" + serialize_move(c.steps[i]) +
             "): " + e.what();
    }
  }
  if (canonical_key(d) != canonical_key(c.target))
    return "replay ends at a diagram different from the target";
  return std::nullopt;
}

inline bool replay(const Certificate& c) { return !replay_error(c).has_value(); }

}  // namespace gdsl
