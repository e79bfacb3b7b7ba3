#pragma once

#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "gdsl/diagram.hpp"
#include "gdsl/text.hpp"

namespace gdsl {

/// One letter of a braid word: sigma(index, sign) is a classical crossing of
/// the strands at positions index, index+1 (sign 0 encodes the virtual
/// crossing tau(index)).
struct BraidLetter {
  int index = 1;  // 1-based position
  int sign = 0;   // +1, -1 classical; 0 virtual
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strand_count = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Word text format: `n=<k>; s+1 s-2 v1 ...`
inline BraidWord parse_braid(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  std::vector<detail::Token> toks;
  for (auto& l : lines) toks.insert(toks.end(), l.begin(), l.end());
  if (toks.empty()) throw ParseError(1, 1, "empty document, expected 'n=<k>;'");
  BraidWord w;
  std::string head = toks[0].text;
  if (head.size() < 3 || head.substr(0, 2) != "n=" || head.back() != ';')
    throw ParseError(toks[0].line, toks[0].column, "expected 'n=<k>;'");
  w.strand_count =
      detail::parse_int({head.substr(2, head.size() - 3), toks[0].line, toks[0].column},
                        "strand count");
  if (w.strand_count < 1)
    throw ParseError(toks[0].line, toks[0].column, "strand count must be at least 1");
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const auto& t = toks[i];
    BraidLetter letter;
    if (t.text.size() >= 3 && t.text[0] == 's' && (t.text[1] == '+' || t.text[1] == '-')) {
      letter.sign = t.text[1] == '+' ? 1 : -1;
      letter.index = detail::parse_int({t.text.substr(2), t.line, t.column}, "letter index");
    } else if (t.text.size() >= 2 && t.text[0] == 'v') {
      letter.sign = 0;
      letter.index = detail::parse_int({t.text.substr(1), t.line, t.column}, "letter index");
    } else {
      throw ParseError(t.line, t.column, "letter must be s+<i>, s-<i> or v<i>");
    }
    if (letter.index < 1 || letter.index >= w.strand_count)
      throw ParseError(t.line, t.column, "letter index out of range");
    w.letters.push_back(letter);
  }
  return w;
}

inline std::string serialize_braid(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strand_count) + ";";
  for (const BraidLetter& l : w.letters) {
    if (l.sign == 0)
      out += " v" + std::to_string(l.index);
    else
      out += std::string(" s") + (l.sign > 0 ? "+" : "-") + std::to_string(l.index);
  }
  out += "\n";
  return out;
}

/// Permutation induced by the word: strand at bottom position i ends at
/// position perm[i].
inline std::vector<int> braid_permutation(const BraidWord& w) {
  std::vector<int> at(static_cast<std::size_t>(w.strand_count));
  std::iota(at.begin(), at.end(), 0);  // position -> strand
  for (const BraidLetter& l : w.letters) std::swap(at[l.index - 1], at[l.index]);
  std::vector<int> perm(at.size());
  for (int pos = 0; pos < static_cast<int>(at.size()); ++pos) perm[at[pos]] = pos;
  return perm;
}

inline bool is_pure(const BraidWord& w) {
  auto p = braid_permutation(w);
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

/// Compiles a pure braid word to its Gauss diagram: one arrow per classical
/// letter, tail on the over-strand, head on the under-strand, sign copied
/// from the letter; virtual letters only permute the strand tracking.
/// For a positive letter the strand at position index passes over.
inline GaussDiagram compile_braid(const BraidWord& w) {
  if (!is_pure(w)) throw Error("compile_braid: word does not induce the identity permutation");
  std::vector<int> at(static_cast<std::size_t>(w.strand_count));
  std::iota(at.begin(), at.end(), 0);
  GaussDiagram d = GaussDiagram::empty(w.strand_count);
  for (const BraidLetter& l : w.letters) {
    int lo = at[l.index - 1], hi = at[l.index];
    if (l.sign != 0) {
      int over = l.sign > 0 ? lo : hi;
      int under = l.sign > 0 ? hi : lo;
      std::int32_t arrow = d.arrow_count();
      d.signs.push_back(static_cast<std::int8_t>(l.sign));
      d.strands[over].push_back(EndRef{arrow, EndKind::tail});
      d.strands[under].push_back(EndRef{arrow, EndKind::head});
    }
    std::swap(at[l.index - 1], at[l.index]);
  }
  return canonicalize(d);
}

}  // namespace gdsl
