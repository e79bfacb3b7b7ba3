#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdsl/criterion.hpp"
#include "gdsl/formula.hpp"

namespace gdsl {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GaussDiagram load_diagram(const std::string& path) {
  return parse_diagram(read_file(path));
}

/// One bundled invariant: its defining combination, the conditions it claims,
/// and the conditions actually granted by certification.
struct CatalogEntry {
  std::string name;
  Formula formula{1};
  std::set<std::string> claims;
  Certification granted;
};

inline bool certification_grants(const Certification& c, const std::string& cond) {
  if (cond == "r1") return c.r1;
  if (cond == "r2") return c.r2;
  if (cond == "r3") return c.r3;
  if (cond == "oc") return c.oc;
  if (cond == "sc") return c.sc;
  if (cond == "sv") return c.sv;
  throw Error("unknown condition name '" + cond + "'");
}

/// Loads the bundled catalog and re-certifies every entry; a claimed
/// invariance that certification does not grant is a fatal data error.
inline std::vector<CatalogEntry> load_catalog(const std::string& data_dir) {
  std::vector<CatalogEntry> out;
  auto lines = detail::tokenize_lines(read_file(data_dir + "/catalog/claims.tsv"));
  for (const auto& toks : lines) {
    if (toks.size() != 4)
      throw Error("claims.tsv: expected 4 fields per line, got " +
                  std::to_string(toks.size()));
    CatalogEntry e;
    e.name = toks[0].text;
    e.formula = parse_formula(read_file(data_dir + "/" + toks[1].text));
    int arity = detail::parse_int(toks[2], "strand count");
    if (e.formula.strand_count() != arity)
      throw Error("catalog entry " + e.name + ": strand count mismatch");
    std::stringstream claims(toks[3].text);
    std::string c;
    while (std::getline(claims, c, ',')) e.claims.insert(c);
    e.granted = certify(e.formula);
    for (const std::string& cond : e.claims)
      if (!certification_grants(e.granted, cond))
        throw Error("catalog entry " + e.name + " claims '" + cond +
                    "' but certification refuses it");
    out.push_back(std::move(e));
  }
  return out;
}

/// Evaluates every catalog entry of matching strand count on the diagram.
inline std::vector<std::pair<std::string, long long>> evaluate_catalog(
    const std::vector<CatalogEntry>& catalog, const GaussDiagram& g) {
  std::vector<std::pair<std::string, long long>> out;
  for (const CatalogEntry& e : catalog)
    if (e.formula.strand_count() == g.strand_count)
      out.emplace_back(e.name, pair(e.formula, g));
  return out;
}

}  // namespace gdsl
