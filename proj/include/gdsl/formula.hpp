#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/embed.hpp"
#include "gdsl/text.hpp"

namespace gdsl {

/// Integer linear combination of arrow diagrams, keyed by canonical form.
/// No zero coefficients are stored; all diagrams share the strand count.
class Formula {
 public:
  explicit Formula(int strand_count = 1) : strand_count_(strand_count) {}

  int strand_count() const { return strand_count_; }

  void add_term(const ArrowDiagram& diagram, long long coeff) {
    if (coeff == 0) return;
    if (diagram.strand_count != strand_count_)
      throw Error("formula term has wrong strand count");
    require_valid(diagram);
    ArrowDiagram c = canonicalize(diagram);
    std::string key = encode(c);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::make_pair(std::move(c), coeff));
    } else {
      it->second.second = checked_add(it->second.second, coeff);
      if (it->second.second == 0) terms_.erase(it);
    }
  }

  long long coefficient(const ArrowDiagram& diagram) const {
    auto it = terms_.find(canonical_key(diagram));
    return it == terms_.end() ? 0 : it->second.second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms in canonical key order (deterministic).
  std::vector<std::pair<ArrowDiagram, long long>> terms() const {
    std::vector<std::pair<ArrowDiagram, long long>> out;
    out.reserve(terms_.size());
    for (const auto& [key, value] : terms_) out.push_back(value);
    return out;
  }

  Formula& operator+=(const Formula& other) {
    if (other.strand_count_ != strand_count_) throw Error("formula strand counts differ");
    for (const auto& [key, value] : other.terms_) add_term(value.first, value.second);
    return *this;
  }

  Formula scaled(long long c) const {
    Formula out(strand_count_);
    for (const auto& [key, value] : terms_) out.add_term(value.first, checked_mul(value.second, c));
    return out;
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.strand_count_ != b.strand_count_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.second != ib->second.second) return false;
    return true;
  }

 private:
  int strand_count_;
  std::map<std::string, std::pair<ArrowDiagram, long long>> terms_;
};

/// i(G): the signed sum of all subdiagrams of g, collected over canonical
/// unsigned forms. Exponential in the arrow count; guarded accordingly.
inline Formula expand_i(const GaussDiagram& g, int max_arrows_for_expansion = 20) {
  require_valid(g);
  const int k = g.arrow_count();
  if (k > max_arrows_for_expansion)
    throw Error("expand_i: diagram has too many arrows for subset expansion");
  Formula out(g.strand_count);
  std::vector<char> keep(static_cast<std::size_t>(k), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    long long sign = 1;
    for (int a = 0; a < k; ++a) {
      keep[a] = (mask >> a) & 1;
      if (keep[a]) sign *= g.signs[a];
    }
    out.add_term(forget_signs(restrict_to(g, keep)), sign);
  }
  return out;
}

/// The pairing <F; G>. Diagrams on a different number of strands never embed,
/// so the pairing against a formula of mismatched arity is zero.
inline long long pair(const Formula& f, const GaussDiagram& g) {
  require_valid(g);
  if (f.strand_count() != g.strand_count) return 0;
  long long total = 0;
  for (const auto& [diagram, coeff] : f.terms())
    total = checked_add(total, checked_mul(coeff, count_embeddings(diagram, g).signed_count));
  return total;
}

/// Scalar product of two formulas (canonical diagrams are orthonormal).
inline long long scalar_product(const Formula& a, const Formula& b) {
  long long total = 0;
  for (const auto& [diagram, coeff] : a.terms())
    total = checked_add(total, checked_mul(coeff, b.coefficient(diagram)));
  return total;
}

/// Formula text format:
///   strands <n>
///   term <coeff>
///   arrow <id>            (unsigned declarations)
///   strand <i>: <id><H|T> ...
/// Each `term` opens a new arrow-diagram block.
inline Formula parse_formula(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document, expected 'strands <n>'");
  const auto& first = lines[0];
  if (first[0].text != "strands" || first.size() != 2)
    throw ParseError(first[0].line, first[0].column, "expected: strands <n>");
  int n = detail::parse_int(first[1], "strand count");
  Formula out(n);
  std::size_t li = 1;
  while (li < lines.size()) {
    const auto& toks = lines[li];
    if (toks[0].text != "term" || toks.size() != 2)
      throw ParseError(toks[0].line, toks[0].column, "expected: term <coeff>");
    long long coeff = detail::parse_int64(toks[1], "integer coefficient");
    detail::DiagramBuilder b;
    b.signed_arrows = false;
    b.begin(n, toks[0]);
    ++li;
    while (li < lines.size() && lines[li][0].text != "term") {
      const auto& t = lines[li];
      if (t[0].text == "arrow")
        b.declare_arrow(t);
      else if (t[0].text == "strand" && t.size() >= 2)
        b.strand_line(t);
      else
        throw ParseError(t[0].line, t[0].column, "expected 'arrow', 'strand' or 'term' line");
      ++li;
    }
    b.finish(toks[0]);
    ArrowDiagram d;
    d.strand_count = n;
    d.arrows = static_cast<int>(b.signs.size());
    d.strands = b.strands;
    out.add_term(d, coeff);
  }
  return out;
}

inline std::string serialize_formula(const Formula& f) {
  std::string out = "strands " + std::to_string(f.strand_count()) + "\n";
  for (const auto& [diagram, coeff] : f.terms()) {
    out += "term " + std::to_string(coeff) + "\n";
    std::string block = serialize_arrow_diagram(diagram);
    out += block.substr(block.find('\n') + 1);  // drop the inner strands header
  }
  return out;
}

}  // namespace gdsl
