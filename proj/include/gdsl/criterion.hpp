#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdsl/degenerate.hpp"
#include "gdsl/diagram.hpp"
#include "gdsl/formula.hpp"
#include "gdsl/tables.hpp"

namespace gdsl {

/// Outcome of the six sufficient invariance conditions for a formula.
struct Certification {
  bool r1 = false;  // no term contains an arrow with adjacent ends
  bool r2 = false;  // no term contains two arrows with adjacent heads and adjacent tails
  bool r3 = false;  // r2 holds and d(F) is zero in the quotient of degenerate diagrams
  bool oc = false;  // no term contains a pair of adjacent arrow tails
  bool sc = false;  // self-arrow terms pair up, orientation-reversed, with opposite signs
  bool sv = false;  // no term contains a self-arrow

  bool operator==(const Certification&) const = default;
};

inline DFormula boundary(const Formula& f) {
  DFormula out;
  for (const auto& [diagram, coeff] : f.terms())
    for (const auto& [degenerate, c] : boundary(diagram).terms())
      out.add_term(degenerate, checked_mul(c, coeff));
  return out;
}

namespace detail {

// ---- surgery helpers for triangle scenes (unsigned diagrams) ----

inline StrandPos find_end(const std::vector<std::vector<EndRef>>& strands, EndRef e) {
  for (int s = 0; s < static_cast<int>(strands.size()); ++s)
    for (int i = 0; i < static_cast<int>(strands[s].size()); ++i)
      if (strands[s][i] == e) return StrandPos{s, i};
  throw Error("scene surgery: end not found");
}

inline ArrowDiagram swapped_pair(const ArrowDiagram& d, EndRef e1, EndRef e2) {
  ArrowDiagram out = d;
  StrandPos p = find_end(out.strands, e1);
  StrandPos q = find_end(out.strands, e2);
  if (p.strand != q.strand || std::abs(p.index - q.index) != 1)
    throw Error("scene surgery: ends not adjacent");
  std::swap(out.strands[p.strand][p.index], out.strands[q.strand][q.index]);
  return out;
}

/// Expand the coincident slot, putting `first` in front.
inline ArrowDiagram resolve(const DegenerateDiagram& e, EndRef first) {
  ArrowDiagram out;
  out.strand_count = e.strand_count;
  out.arrows = e.arrows;
  out.strands.resize(e.strands.size());
  bool placed = false;
  for (std::size_t s = 0; s < e.strands.size(); ++s)
    for (const auto& slot : e.strands[s]) {
      if (slot.size() == 1) {
        out.strands[s].push_back(slot[0]);
      } else {
        EndRef other = slot[0] == first ? slot[1] : slot[0];
        if (!(slot[0] == first) && !(slot[1] == first))
          throw Error("resolve: named end not in the coincident slot");
        out.strands[s].push_back(first);
        out.strands[s].push_back(other);
        placed = true;
      }
    }
  if (!placed) throw Error("resolve: no coincident slot");
  return out;
}

inline void insert_next_to(ArrowDiagram& d, EndRef anchor, bool after, EndRef added) {
  StrandPos p = find_end(d.strands, anchor);
  d.strands[p.strand].insert(d.strands[p.strand].begin() + p.index + (after ? 1 : 0), added);
}

inline std::optional<EndRef> neighbor_of(const ArrowDiagram& d, EndRef anchor, bool after) {
  StrandPos p = find_end(d.strands, anchor);
  int j = p.index + (after ? 1 : -1);
  if (j < 0 || j >= static_cast<int>(d.strands[p.strand].size())) return std::nullopt;
  return d.strands[p.strand][j];
}

/// Wall of a triangle scene: optionally drop one arrow, then shrink the given
/// adjacent pair to a coincident slot. Arrow ids are compacted.
inline DegenerateDiagram pinch_wall(const ArrowDiagram& scene, int removed, EndRef e1,
                                    EndRef e2) {
  std::vector<std::vector<EndRef>> words = scene.strands;
  if (removed >= 0)
    for (auto& w : words) {
      std::vector<EndRef> kept;
      kept.reserve(w.size());
      for (const EndRef& e : w)
        if (e.arrow != removed) kept.push_back(e);
      w = std::move(kept);
    }
  StrandPos p = find_end(words, e1);
  StrandPos q = find_end(words, e2);
  if (p.strand != q.strand || std::abs(p.index - q.index) != 1)
    throw Error("pinch_wall: pinch pair is not adjacent");
  // compact arrow ids
  std::vector<std::int32_t> remap(static_cast<std::size_t>(scene.arrows), -1);
  std::int32_t next = 0;
  for (const auto& w : words)
    for (const EndRef& e : w)
      if (remap[e.arrow] < 0) remap[e.arrow] = next++;
  DegenerateDiagram out;
  out.strand_count = scene.strand_count;
  out.arrows = next;
  out.strands.resize(words.size());
  int first = std::min(p.index, q.index);
  for (int s = 0; s < static_cast<int>(words.size()); ++s)
    for (int i = 0; i < static_cast<int>(words[s].size()); ++i) {
      EndRef e{remap[words[s][i].arrow], words[s][i].kind};
      if (s == p.strand && i == first) {
        EndRef f{remap[words[s][i + 1].arrow], words[s][i + 1].kind};
        out.strands[s].push_back({e, f});
        ++i;
      } else {
        out.strands[s].push_back({e});
      }
    }
  if (auto err = validate(out)) throw Error("pinch_wall: " + *err);
  return out;
}

/// A reconstructed triangle-move instance: the full diagram before the move
/// (context included), the three arrow roles, and the matched variant row.
struct TriangleScene {
  ArrowDiagram d;
  int u = -1, v = -1, w = -1;
  const R3Variant* row = nullptr;

  EndRef ua() const { return {u, row->ua}; }
  EndRef ub() const { return {u, row->ub}; }
  EndRef va() const { return {v, row->va}; }
  EndRef vc() const { return {v, row->vc}; }
  EndRef wb() const { return {w, row->wb}; }
  EndRef wc() const { return {w, row->wc}; }
};

enum class WallRole { a_pair, b_pair, c_pair, a_triple, b_triple, c_triple };

inline const std::vector<WallRole>& wall_roles() {
  static const std::vector<WallRole> roles = {WallRole::a_pair,   WallRole::b_pair,
                                              WallRole::c_pair,   WallRole::a_triple,
                                              WallRole::b_triple, WallRole::c_triple};
  return roles;
}

/// Rebuild the scene for which the given degenerate diagram is the named
/// wall, with merged end `m[pick]` playing the first of the two site roles.
inline std::optional<TriangleScene> reconstruct_scene(const DegenerateDiagram& e,
                                                      WallRole role, int pick,
                                                      const R3Variant& row) {
  std::pair<EndRef, EndRef> merged;
  for (const auto& word : e.strands)
    for (const auto& slot : word)
      if (slot.size() == 2) merged = {slot[0], slot[1]};
  EndRef m0 = pick == 0 ? merged.first : merged.second;
  EndRef m1 = pick == 0 ? merged.second : merged.first;

  TriangleScene sc;
  sc.row = &row;
  switch (role) {
    case WallRole::a_pair: {
      if (m0.kind != row.ua || m1.kind != row.va) return std::nullopt;
      sc.u = m0.arrow;
      sc.v = m1.arrow;
      ArrowDiagram res = resolve(e, row.a_uv ? m0 : m1);
      sc.w = res.arrows;
      res.arrows += 1;
      insert_next_to(res, {sc.u, row.ub}, row.b_uw, {sc.w, row.wb});
      insert_next_to(res, {sc.v, row.vc}, row.c_vw, {sc.w, row.wc});
      sc.d = std::move(res);
      return sc;
    }
    case WallRole::b_pair: {
      if (m0.kind != row.ub || m1.kind != row.wb) return std::nullopt;
      sc.u = m0.arrow;
      sc.w = m1.arrow;
      ArrowDiagram res = resolve(e, row.b_uw ? m0 : m1);
      sc.v = res.arrows;
      res.arrows += 1;
      insert_next_to(res, {sc.u, row.ua}, row.a_uv, {sc.v, row.va});
      insert_next_to(res, {sc.w, row.wc}, !row.c_vw, {sc.v, row.vc});
      sc.d = std::move(res);
      return sc;
    }
    case WallRole::c_pair: {
      if (m0.kind != row.vc || m1.kind != row.wc) return std::nullopt;
      sc.v = m0.arrow;
      sc.w = m1.arrow;
      ArrowDiagram res = resolve(e, row.c_vw ? m0 : m1);
      sc.u = res.arrows;
      res.arrows += 1;
      insert_next_to(res, {sc.v, row.va}, !row.a_uv, {sc.u, row.ua});
      insert_next_to(res, {sc.w, row.wb}, !row.b_uw, {sc.u, row.ub});
      sc.d = std::move(res);
      return sc;
    }
    case WallRole::a_triple: {
      if (m0.kind != row.ua || m1.kind != row.va) return std::nullopt;
      sc.u = m0.arrow;
      sc.v = m1.arrow;
      ArrowDiagram res = resolve(e, row.a_uv ? m0 : m1);
      auto nb = neighbor_of(res, {sc.u, row.ub}, row.b_uw);
      if (!nb || nb->kind != row.wb || nb->arrow == sc.u || nb->arrow == sc.v)
        return std::nullopt;
      sc.w = nb->arrow;
      auto nc = neighbor_of(res, {sc.v, row.vc}, row.c_vw);
      if (!nc || !(*nc == EndRef{sc.w, row.wc})) return std::nullopt;
      sc.d = std::move(res);
      return sc;
    }
    case WallRole::b_triple: {
      if (m0.kind != row.ub || m1.kind != row.wb) return std::nullopt;
      sc.u = m0.arrow;
      sc.w = m1.arrow;
      ArrowDiagram res = resolve(e, row.b_uw ? m0 : m1);  // this is swapA(scene)
      // site A appears swapped here: v_a sits on the far side of u_a
      auto na = neighbor_of(res, {sc.u, row.ua}, !row.a_uv);
      if (!na || na->kind != row.va || na->arrow == sc.u || na->arrow == sc.w)
        return std::nullopt;
      sc.v = na->arrow;
      auto nc = neighbor_of(res, {sc.v, row.vc}, row.c_vw);
      if (!nc || !(*nc == EndRef{sc.w, row.wc})) return std::nullopt;
      sc.d = swapped_pair(res, {sc.u, row.ua}, {sc.v, row.va});
      return sc;
    }
    case WallRole::c_triple: {
      if (m0.kind != row.vc || m1.kind != row.wc) return std::nullopt;
      sc.v = m0.arrow;
      sc.w = m1.arrow;
      ArrowDiagram res = resolve(e, row.c_vw ? m0 : m1);  // swapB(swapA(scene))
      auto nb = neighbor_of(res, {sc.w, row.wb}, !row.b_uw);  // site B swapped
      if (!nb || nb->kind != row.ub || nb->arrow == sc.v || nb->arrow == sc.w)
        return std::nullopt;
      sc.u = nb->arrow;
      auto na = neighbor_of(res, {sc.u, row.ua}, !row.a_uv);  // site A swapped
      if (!na || !(*na == EndRef{sc.v, row.va})) return std::nullopt;
      ArrowDiagram s1 = swapped_pair(res, {sc.u, row.ub}, {sc.w, row.wb});
      sc.d = swapped_pair(s1, {sc.u, row.ua}, {sc.v, row.va});
      return sc;
    }
  }
  return std::nullopt;
}

/// Evaluate the linear constraint that one triangle instance imposes on a
/// boundary combination. Zero for every instance is exactly invariance of the
/// pairing under the triangle move family, given bigon invariance.
inline long long triangle_constraint(const DFormula& z, const TriangleScene& sc) {
  const R3Variant& r = *sc.row;
  ArrowDiagram after_a = swapped_pair(sc.d, sc.ua(), sc.va());
  ArrowDiagram after_ab = swapped_pair(after_a, sc.ub(), sc.wb());
  ArrowDiagram after_abc = swapped_pair(after_ab, sc.vc(), sc.wc());
  auto parity = [](EndKind a, EndKind b) {
    int heads = (a == EndKind::head) + (b == EndKind::head);
    return heads % 2 ? -1 : 1;
  };
  const long long chi_a = arrows_cross(after_a, sc.u, sc.v) ? 1 : -1;
  const long long chi_b = arrows_cross(after_ab, sc.u, sc.w) ? 1 : -1;
  const long long chi_c = arrows_cross(after_abc, sc.v, sc.w) ? 1 : -1;
  const long long lam_a = r.eu * r.ev * chi_a * parity(r.ua, r.va);
  const long long lam_b = r.eu * r.ew * chi_b * parity(r.ub, r.wb);
  const long long lam_c = r.ev * r.ew * chi_c * parity(r.vc, r.wc);

  auto zval = [&](const DegenerateDiagram& d) { return z.coefficient(d); };
  long long total = 0;
  total += lam_a * (zval(pinch_wall(sc.d, sc.w, sc.ua(), sc.va())) +
                    r.ew * zval(pinch_wall(sc.d, -1, sc.ua(), sc.va())));
  total += lam_b * (zval(pinch_wall(sc.d, sc.v, sc.ub(), sc.wb())) +
                    r.ev * zval(pinch_wall(after_a, -1, sc.ub(), sc.wb())));
  total += lam_c * (zval(pinch_wall(sc.d, sc.u, sc.vc(), sc.wc())) +
                    r.eu * zval(pinch_wall(after_ab, -1, sc.vc(), sc.wc())));
  return total;
}

}  // namespace detail

/// Result of the zero test in the quotient of degenerate diagrams.
struct DnReduction {
  bool zero = false;
  std::vector<std::string> violations;  // violated constraints / untouched terms
};

/// Tests whether a boundary combination vanishes in the quotient of
/// degenerate diagrams: every triangle-move constraint anchored at a term of
/// the combination must read zero. Terms that no constraint touches are
/// reported, never silently dropped.
inline DnReduction reduce_in_Dn(const DFormula& z) {
  DnReduction out;
  for (const auto& [diagram, coeff] : z.terms()) {
    bool touched = false;
    for (detail::WallRole role : detail::wall_roles())
      for (int pick : {0, 1})
        for (const R3Variant& row : r3_variants()) {
          auto scene = detail::reconstruct_scene(diagram, role, pick, row);
          if (!scene) continue;
          touched = true;
          long long value = detail::triangle_constraint(z, *scene);
          if (value != 0)
            out.violations.push_back("constraint " + std::to_string(value) + " != 0 at " +
                                     canonical_key(diagram) + " (variant " + row.key() + ")");
        }
    if (!touched)
      out.violations.push_back("degenerate term matches no relation pattern: " +
                               canonical_key(diagram));
  }
  out.zero = out.violations.empty();
  return out;
}

/// The six sufficient invariance conditions, reported independently.
inline Certification certify(const Formula& f) {
  Certification c;
  c.r1 = c.r2 = c.oc = c.sc = c.sv = true;
  for (const auto& [diagram, coeff] : f.terms()) {
    const int k = diagram.arrows;
    std::vector<char> head_adj(static_cast<std::size_t>(k) * k, 0);
    std::vector<char> tail_adj(static_cast<std::size_t>(k) * k, 0);
    for (const auto& [e1, e2] : adjacent_pairs(diagram)) {
      if (e1.arrow == e2.arrow) c.r1 = false;
      if (e1.kind == EndKind::tail && e2.kind == EndKind::tail) c.oc = false;
      if (e1.arrow != e2.arrow && e1.kind == e2.kind) {
        auto& table = e1.kind == EndKind::head ? head_adj : tail_adj;
        table[e1.arrow * k + e2.arrow] = 1;
        table[e2.arrow * k + e1.arrow] = 1;
      }
    }
    for (int x = 0; x < k && c.r2; ++x)
      for (int y = x + 1; y < k; ++y)
        if (head_adj[x * k + y] && tail_adj[x * k + y]) c.r2 = false;
    for (int a = 0; a < k; ++a) {
      if (!is_self_arrow(diagram, a)) continue;
      c.sv = false;
      if (f.coefficient(reverse_arrow(diagram, a)) != -coeff) c.sc = false;
    }
  }
  c.r3 = c.r2 && reduce_in_Dn(boundary(f)).zero;
  return c;
}

}  // namespace gdsl
