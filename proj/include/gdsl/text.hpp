#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gdsl/diagram.hpp"

namespace gdsl {

/// Parse failure with position information and the violated rule.
struct ParseError : Error {
  int line = 0;
  int column = 0;
  ParseError(int line_, int col_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " +
              what_),
        line(line_),
        column(col_) {}
};

namespace detail {

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

/// Splits into lines, strips '#' comments, tokenizes on blanks.
/// Keeps a ':' attached to the preceding word (strand headers).
inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t eol = text.find('\n', i);
    std::string_view line = text.substr(i, eol == std::string_view::npos ? std::string_view::npos
                                                                         : eol - i);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t j = 0;
    while (j < line.size()) {
      while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      std::size_t start = j;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > start)
        toks.push_back(Token{std::string(line.substr(start, j - start)), line_no,
                             static_cast<int>(start) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == std::string_view::npos) break;
    i = eol + 1;
    ++line_no;
  }
  return lines;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

inline int parse_int(const Token& t, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
  }
}

inline long long parse_int64(const Token& t, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(t.text, &pos);
    if (pos != t.text.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
  }
}

/// Shared reader for the diagram body: `arrow` declarations and `strand` lines.
/// Signs are required for Gauss diagrams and forbidden for arrow diagrams.
struct DiagramBuilder {
  bool signed_arrows = true;
  int strand_count = 0;
  std::map<std::string, std::int32_t> ids;
  std::vector<std::string> names;
  std::vector<std::int8_t> signs;
  std::vector<std::vector<EndRef>> strands;
  std::vector<char> seen_strand;
  int declared_strands = 0;

  void begin(int n, const Token& at) {
    if (n < 1) throw ParseError(at.line, at.column, "strand count must be at least 1");
    strand_count = n;
    strands.assign(static_cast<std::size_t>(n), {});
    seen_strand.assign(static_cast<std::size_t>(n), 0);
  }

  void declare_arrow(const std::vector<Token>& toks) {
    std::size_t want = signed_arrows ? 3 : 2;
    if (toks.size() != want)
      throw ParseError(toks[0].line, toks[0].column,
                       signed_arrows ? "expected: arrow <id> <+|->" : "expected: arrow <id>");
    const Token& id = toks[1];
    if (!is_identifier(id.text))
      throw ParseError(id.line, id.column, "arrow identifier must be alphanumeric");
    if (ids.count(id.text))
      throw ParseError(id.line, id.column, "duplicate arrow identifier '" + id.text + "'");
    std::int8_t sign = 1;
    if (signed_arrows) {
      const Token& st = toks[2];
      if (st.text == "+")
        sign = 1;
      else if (st.text == "-")
        sign = -1;
      else
        throw ParseError(st.line, st.column, "arrow sign must be + or -");
    }
    ids[id.text] = static_cast<std::int32_t>(names.size());
    names.push_back(id.text);
    signs.push_back(sign);
  }

  void strand_line(const std::vector<Token>& toks) {
    const Token& hdr = toks[1];
    std::string num = hdr.text;
    if (num.empty() || num.back() != ':')
      throw ParseError(hdr.line, hdr.column, "expected: strand <i>: ...");
    num.pop_back();
    Token numtok{num, hdr.line, hdr.column};
    int s = parse_int(numtok, "strand number");
    if (s < 1 || s > strand_count)
      throw ParseError(hdr.line, hdr.column, "strand number out of range");
    if (seen_strand[s - 1])
      throw ParseError(hdr.line, hdr.column, "duplicate strand line " + std::to_string(s));
    seen_strand[s - 1] = 1;
    ++declared_strands;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const Token& t = toks[i];
      if (t.text.size() < 2)
        throw ParseError(t.line, t.column, "end token must be <id><H|T>");
      char k = t.text.back();
      std::string id = t.text.substr(0, t.text.size() - 1);
      if ((k != 'H' && k != 'T') || !is_identifier(id))
        throw ParseError(t.line, t.column, "end token must be <id><H|T>");
      auto it = ids.find(id);
      if (it == ids.end())
        throw ParseError(t.line, t.column, "end names undeclared arrow '" + id + "'");
      strands[s - 1].push_back(
          EndRef{it->second, k == 'H' ? EndKind::head : EndKind::tail});
    }
  }

  void finish(const Token& at) const {
    std::vector<int> heads(names.size(), 0), tails(names.size(), 0);
    for (const auto& w : strands)
      for (const EndRef& e : w) (e.kind == EndKind::head ? heads : tails)[e.arrow]++;
    for (std::size_t a = 0; a < names.size(); ++a) {
      if (heads[a] != 1)
        throw ParseError(at.line, at.column, "arrow '" + names[a] + "' has " +
                                                 std::to_string(heads[a]) +
                                                 " heads (expected exactly 1)");
      if (tails[a] != 1)
        throw ParseError(at.line, at.column, "arrow '" + names[a] + "' has " +
                                                 std::to_string(tails[a]) +
                                                 " tails (expected exactly 1)");
    }
  }
};

}  // namespace detail

/// Diagram document grammar:
///   strands <n>
///   arrow <id> <+|->          (zero or more)
///   strand <i>: <id><H|T> ... (one line per strand, i = 1..n)
/// '#' starts a comment; identifiers are nonempty alphanumeric.
inline GaussDiagram parse_diagram(std::string_view text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty document, expected 'strands <n>'");
  detail::DiagramBuilder b;
  b.signed_arrows = true;
  std::size_t li = 0;
  const auto& first = lines[0];
  if (first[0].text != "strands" || first.size() != 2)
    throw ParseError(first[0].line, first[0].column, "expected: strands <n>");
  b.begin(detail::parse_int(first[1], "strand count"), first[0]);
  ++li;
  for (; li < lines.size(); ++li) {
    const auto& toks = lines[li];
    if (toks[0].text == "arrow")
      b.declare_arrow(toks);
    else if (toks[0].text == "strand" && toks.size() >= 2)
      b.strand_line(toks);
    else
      throw ParseError(toks[0].line, toks[0].column, "expected 'arrow' or 'strand' line");
  }
  b.finish(first[0]);
  GaussDiagram d;
  d.strand_count = b.strand_count;
  d.signs = b.signs;
  d.strands = b.strands;
  return d;
}

/// Serializer emits the canonical form, LF line endings, stable field layout.
inline std::string serialize_diagram(const GaussDiagram& diagram) {
  require_valid(diagram);
  GaussDiagram d = canonicalize(diagram);
  std::string out = "strands " + std::to_string(d.strand_count) + "\n";
  for (int a = 0; a < d.arrow_count(); ++a)
    out += "arrow " + std::to_string(a + 1) + (d.signs[a] > 0 ? " +\n" : " -\n");
  for (int s = 0; s < d.strand_count; ++s) {
    out += "strand " + std::to_string(s + 1) + ":";
    for (const EndRef& e : d.strands[s])
      out += " " + std::to_string(e.arrow + 1) + std::string(1, kind_char(e.kind));
    out += "\n";
  }
  return out;
}

inline std::string serialize_arrow_diagram(const ArrowDiagram& diagram) {
  require_valid(diagram);
  ArrowDiagram d = canonicalize(diagram);
  std::string out = "strands " + std::to_string(d.strand_count) + "\n";
  for (int a = 0; a < d.arrows; ++a) out += "arrow " + std::to_string(a + 1) + "\n";
  for (int s = 0; s < d.strand_count; ++s) {
    out += "strand " + std::to_string(s + 1) + ":";
    for (const EndRef& e : d.strands[s])
      out += " " + std::to_string(e.arrow + 1) + std::string(1, kind_char(e.kind));
    out += "\n";
  }
  return out;
}

}  // namespace gdsl
