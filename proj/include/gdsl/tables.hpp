#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/text.hpp"

namespace gdsl {

/// One legal triangle-move pattern. Roles: arrow u joins strand lines a,b;
/// arrow v joins a,c; arrow w joins b,c. Each line carries one adjacent pair
/// of ends (the sites); the move swaps all three pairs at once.
struct R3Variant {
  EndKind ua, ub, va, vc, wb, wc;  // end kinds, named <arrow><line>
  bool a_uv, b_uw, c_vw;           // site orders before the move
  int eu, ev, ew;                  // crossing signs

  std::string key() const {
    std::string s;
    for (EndKind k : {ua, ub, va, vc, wb, wc}) s += kind_char(k);
    s += a_uv ? '<' : '>';
    s += b_uw ? '<' : '>';
    s += c_vw ? '<' : '>';
    for (int e : {eu, ev, ew}) s += e > 0 ? '+' : '-';
    return s;
  }
};

/// One legal bigon pattern: tails of the two arrows adjacent on one side,
/// heads adjacent on the other, signs opposite. `heads_same_order` tells
/// whether the head pair repeats the tail pair's arrow order.
struct R2Variant {
  bool heads_same_order;
};

/// Case analysis of the planar triangle, enumerated from explicit geometry:
/// three lines in general position, every non-cyclic over/under assignment,
/// every direction assignment, both mirror images. The sign of each crossing
/// is the orientation of the (over, under) direction frame; the end on the
/// over line is the tail. Meeting orders along a line follow its direction.
inline std::vector<R3Variant> derive_r3_variants() {
  // standard triangle: a = x-axis, b = diagonal up, c = diagonal down;
  // determinant signs between positive directions
  const int det_ab = 1, det_ac = -1, det_bc = -1;
  std::vector<R3Variant> rows;
  std::set<std::string> seen;
  std::array<std::array<int, 3>, 6> ranks = {
      {{2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}}};
  for (int chi : {1, -1})
    for (const auto& rank : ranks)
      for (int sa : {1, -1})
        for (int sb : {1, -1})
          for (int sc : {1, -1}) {
            const bool a_over_b = rank[0] > rank[1];
            const bool a_over_c = rank[0] > rank[2];
            const bool b_over_c = rank[1] > rank[2];
            R3Variant r;
            r.ua = a_over_b ? EndKind::tail : EndKind::head;
            r.ub = a_over_b ? EndKind::head : EndKind::tail;
            r.va = a_over_c ? EndKind::tail : EndKind::head;
            r.vc = a_over_c ? EndKind::head : EndKind::tail;
            r.wb = b_over_c ? EndKind::tail : EndKind::head;
            r.wc = b_over_c ? EndKind::head : EndKind::tail;
            r.a_uv = sa == 1;  // along a: u then v
            r.b_uw = sb == 1;  // along b: u then w
            r.c_vw = sc == -1; // along c positively: w then v
            const int d_ab = sa * sb * det_ab * chi;
            const int d_ac = sa * sc * det_ac * chi;
            const int d_bc = sb * sc * det_bc * chi;
            r.eu = a_over_b ? d_ab : -d_ab;
            r.ev = a_over_c ? d_ac : -d_ac;
            r.ew = b_over_c ? d_bc : -d_bc;
            if (seen.insert(r.key()).second) rows.push_back(r);
          }
  std::sort(rows.begin(), rows.end(),
            [](const R3Variant& x, const R3Variant& y) { return x.key() < y.key(); });
  return rows;
}

inline std::vector<R2Variant> derive_r2_variants() {
  // both relative orders of the head pair are realizable (parallel and
  // antiparallel bigons); the tail order is fixed by arrow naming
  return {R2Variant{true}, R2Variant{false}};
}

inline const std::vector<R3Variant>& r3_variants() {
  static const std::vector<R3Variant> rows = derive_r3_variants();
  return rows;
}

inline const std::vector<R2Variant>& r2_variants() {
  static const std::vector<R2Variant> rows = derive_r2_variants();
  return rows;
}

/// Move variant table file: one line per variant.
///   R1 [<T|H><T|H>] [*]
///   R2 [1T 2T][<head order>] [+-]
///   R3 [<uA> <vA>][<uB> <wB>][<vC or wC pair>] [<3 signs>]
///   TC [1T 2T] [**]
///   SC self-arrow: flip sign and orientation
///   SV self-arrow: delete / insert
inline std::string serialize_move_tables() {
  std::string out;
  out += "# gdsl move variant table\n";
  out += "# R3 rows: arrows 1,2,3; sites [1? 2?][1? 3?][2? 3?]; tokens give the\n";
  out += "# pre-move order and end kinds; signs are the three crossing signs.\n";
  out += "R1 [1T 1H] [*]\n";
  out += "R1 [1H 1T] [*]\n";
  for (const R2Variant& v : r2_variants())
    out += std::string("R2 [1T 2T][") + (v.heads_same_order ? "1H 2H" : "2H 1H") + "] [+-]\n";
  out += "TC [1T 2T] [**]\n";
  out += "SC [1] [*]\n";
  out += "SV [1] [*]\n";
  for (const R3Variant& r : r3_variants()) {
    auto tok = [](int arrow, EndKind k) {
      return std::to_string(arrow) + std::string(1, kind_char(k));
    };
    std::string sa = r.a_uv ? tok(1, r.ua) + " " + tok(2, r.va)
                            : tok(2, r.va) + " " + tok(1, r.ua);
    std::string sb = r.b_uw ? tok(1, r.ub) + " " + tok(3, r.wb)
                            : tok(3, r.wb) + " " + tok(1, r.ub);
    std::string sc = r.c_vw ? tok(2, r.vc) + " " + tok(3, r.wc)
                            : tok(3, r.wc) + " " + tok(2, r.vc);
    std::string signs;
    for (int e : {r.eu, r.ev, r.ew}) signs += e > 0 ? '+' : '-';
    out += "R3 [" + sa + "][" + sb + "][" + sc + "] [" + signs + "]\n";
  }
  return out;
}

}  // namespace gdsl
