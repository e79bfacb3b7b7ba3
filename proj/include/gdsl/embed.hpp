#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdsl/diagram.hpp"

namespace gdsl {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in pairing count");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in pairing count");
  return r;
}

struct EmbeddingCount {
  long long count = 0;         // subdiagrams of g isomorphic to the pattern
  long long signed_count = 0;  // same, each weighted by the product of its signs
};

namespace detail {

struct EndSite {
  int strand = -1;
  int index = -1;
};

template <typename Diagram>
std::vector<std::pair<EndSite, EndSite>> end_sites(const Diagram& d, int arrow_count) {
  std::vector<std::pair<EndSite, EndSite>> sites(static_cast<std::size_t>(arrow_count));
  for (int s = 0; s < static_cast<int>(d.strands.size()); ++s)
    for (int i = 0; i < static_cast<int>(d.strands[s].size()); ++i) {
      const EndRef& e = d.strands[s][i];
      EndSite& slot = e.kind == EndKind::tail ? sites[e.arrow].first : sites[e.arrow].second;
      slot = EndSite{s, i};
    }
  return sites;
}

///  Counts order- and kind-preserving arrow maps pattern -> host by
///  backtracking. Strands are labeled, so strand indices must match exactly;
///  relative end order along each strand must be preserved.
struct EmbeddingSearch {
  const std::vector<std::pair<EndSite, EndSite>>& pat;   // tail, head per pattern arrow
  const std::vector<std::pair<EndSite, EndSite>>& host;  // tail, head per host arrow
  const std::vector<std::int8_t>* host_signs;            // null for unsigned hosts
  std::vector<int> assign;                               // pattern arrow -> host arrow
  std::vector<char> used;
  long long maps = 0;
  long long signed_maps = 0;

  EmbeddingSearch(const std::vector<std::pair<EndSite, EndSite>>& p,
                  const std::vector<std::pair<EndSite, EndSite>>& h,
                  const std::vector<std::int8_t>* hs)
      : pat(p), host(h), host_signs(hs), assign(p.size(), -1), used(h.size(), 0) {}

  static bool compatible(const EndSite& pa, const EndSite& pb, const EndSite& ha,
                         const EndSite& hb) {
    if ((pa.strand == pb.strand) != (ha.strand == hb.strand)) return false;
    if (pa.strand == pb.strand && (pa.index < pb.index) != (ha.index < hb.index)) return false;
    return true;
  }

  bool consistent(std::size_t x, int hx) const {
    const auto& px = pat[x];
    const auto& gx = host[hx];
    if (px.first.strand != gx.first.strand) return false;
    if (px.second.strand != gx.second.strand) return false;
    if (!compatible(px.first, px.second, gx.first, gx.second)) return false;
    for (std::size_t y = 0; y < x; ++y) {
      const auto& py = pat[y];
      const auto& gy = host[assign[y]];
      if (!compatible(px.first, py.first, gx.first, gy.first)) return false;
      if (!compatible(px.first, py.second, gx.first, gy.second)) return false;
      if (!compatible(px.second, py.first, gx.second, gy.first)) return false;
      if (!compatible(px.second, py.second, gx.second, gy.second)) return false;
    }
    return true;
  }

  void run(std::size_t x, long long sign_so_far) {
    if (x == pat.size()) {
      maps = checked_add(maps, 1);
      signed_maps = checked_add(signed_maps, sign_so_far);
      return;
    }
    for (int hx = 0; hx < static_cast<int>(host.size()); ++hx) {
      if (used[hx]) continue;
      if (!consistent(x, hx)) continue;
      used[hx] = 1;
      assign[x] = hx;
      run(x + 1, host_signs ? sign_so_far * (*host_signs)[hx] : sign_so_far);
      used[hx] = 0;
      assign[x] = -1;
    }
  }
};

}  // namespace detail

/// Number of automorphisms of an arrow diagram (arrow relabelings preserving
/// the labeled-strand structure).
inline long long automorphism_count(const ArrowDiagram& a) {
  auto sites = detail::end_sites(a, a.arrows);
  detail::EmbeddingSearch search(sites, sites, nullptr);
  search.run(0, 1);
  return search.maps;
}

/// Counts subdiagrams of g whose unsigned canonical form equals the pattern,
/// both plainly and weighted by the product of signs in the subdiagram.
/// Backtracking on per-strand order-preserving assignments; the exhaustive
/// subset enumeration is kept as a test oracle.
inline EmbeddingCount count_embeddings(const ArrowDiagram& pattern, const GaussDiagram& g) {
  if (pattern.strand_count != g.strand_count)
    throw Error("count_embeddings: strand counts differ (" +
                std::to_string(pattern.strand_count) + " vs " +
                std::to_string(g.strand_count) + ")");
  auto pat_sites = detail::end_sites(pattern, pattern.arrows);
  auto host_sites = detail::end_sites(g, g.arrow_count());
  detail::EmbeddingSearch search(pat_sites, host_sites, &g.signs);
  search.run(0, 1);
  long long aut = automorphism_count(pattern);
  if (search.maps % aut != 0 || search.signed_maps % aut != 0)
    throw Error("count_embeddings: automorphism count does not divide map count");
  return EmbeddingCount{search.maps / aut, search.signed_maps / aut};
}

}  // namespace gdsl
