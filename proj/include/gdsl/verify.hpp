#pragma once

#include <string>
#include <vector>

#include "gdsl/braid.hpp"
#include "gdsl/catalog.hpp"
#include "gdsl/search.hpp"

namespace gdsl {

/// One row of the fixture-reproduction table.
struct VerifyRow {
  std::string name;
  bool pass = false;
  std::string detail;  // what was computed vs expected, shown on failure
};

inline MoveSet parse_move_set(const std::string& spec) {
  MoveSet ms = MoveSet::reidemeister(spec.rfind("welded", 0) == 0);
  if (spec.find("+sv") != std::string::npos) ms = ms.with_sv();
  if (spec.find("+sc") != std::string::npos) ms = ms.with_sc();
  return ms;
}

/// Runs every bundled expectation: catalog claims, the certification table,
/// the value table, braid-word/diagram cross-transcriptions, stored
/// certificates, and the recorded equivalence searches. Deterministic order.
inline std::vector<VerifyRow> verify_fixtures(const std::string& data_dir) {
  std::vector<VerifyRow> rows;
  auto push = [&](const std::string& name, bool pass, const std::string& detail) {
    rows.push_back(VerifyRow{name, pass, detail});
  };

  std::vector<CatalogEntry> catalog;
  try {
    catalog = load_catalog(data_dir);
    push("catalog: claimed invariances confirmed", true, "");
  } catch (const Error& e) {
    push("catalog: claimed invariances confirmed", false, e.what());
    return rows;
  }
  auto entry = [&](const std::string& name) -> const CatalogEntry& {
    for (const CatalogEntry& e : catalog)
      if (e.name == name) return e;
    throw Error("no catalog entry named " + name);
  };

  // certification table
  for (const auto& toks :
       detail::tokenize_lines(read_file(data_dir + "/expected/certifications.tsv"))) {
    const std::string& name = toks[0].text;
    try {
      const Certification& got = entry(name).granted;
      Certification want;
      bool* fields[6] = {&want.r1, &want.r2, &want.r3, &want.oc, &want.sc, &want.sv};
      for (int i = 0; i < 6; ++i) *fields[i] = toks[i + 1].text == "1";
      std::string got_s, want_s;
      const bool gv[6] = {got.r1, got.r2, got.r3, got.oc, got.sc, got.sv};
      const bool wv[6] = {want.r1, want.r2, want.r3, want.oc, want.sc, want.sv};
      for (int i = 0; i < 6; ++i) {
        got_s += gv[i] ? '1' : '0';
        want_s += wv[i] ? '1' : '0';
      }
      push("certification table: " + name, got == want, "got " + got_s + ", expected " + want_s);
    } catch (const Error& e) {
      push("certification table: " + name, false, e.what());
    }
  }

  // value table
  for (const auto& toks : detail::tokenize_lines(read_file(data_dir + "/expected/values.tsv"))) {
    const std::string name = toks[0].text + "(" + toks[1].text + ")";
    try {
      long long want = detail::parse_int64(toks[2], "expected value");
      GaussDiagram g = load_diagram(data_dir + "/" + toks[1].text);
      long long got = pair(entry(toks[0].text).formula, g);
      std::string note;
      for (std::size_t i = 3; i < toks.size(); ++i) note += (i > 3 ? " " : "") + toks[i].text;
      push("value: " + name, got == want,
           "got " + std::to_string(got) + ", expected " + std::to_string(want) +
               (note.empty() ? "" : " [" + note + "]"));
    } catch (const Error& e) {
      push("value: " + name, false, e.what());
    }
  }

  // braid-word transcriptions against diagram transcriptions
  for (const char* stem : {"t", "tp", "b", "bp", "c", "cp", "g", "gp"}) {
    std::string name = std::string("braid/diagram cross-check: ") + stem;
    try {
      GaussDiagram from_word =
          compile_braid(parse_braid(read_file(data_dir + "/braids/" + stem + ".bw")));
      GaussDiagram from_figure = load_diagram(data_dir + "/diagrams/" + stem + ".gd");
      push(name, canonical_key(from_word) == canonical_key(from_figure),
           "compiled word and transcribed diagram disagree");
    } catch (const Error& e) {
      push(name, false, e.what());
    }
  }

  // stored certificates
  try {
    Certificate c = parse_certificate(read_file(data_dir + "/certs/k_welded_trivial.cert"));
    auto err = replay_error(c);
    bool src_ok = canonical_key(c.source) ==
                  canonical_key(load_diagram(data_dir + "/diagrams/k.gd"));
    push("certificate: k.gd is welded-trivial", !err && src_ok && c.target.arrow_count() == 0,
         err ? *err : (src_ok ? "" : "certificate source is not k.gd"));
  } catch (const Error& e) {
    push("certificate: k.gd is welded-trivial", false, e.what());
  }

  // recorded equivalence searches
  for (const auto& toks :
       detail::tokenize_lines(read_file(data_dir + "/expected/search_bounds.tsv"))) {
    const std::string& name = toks[0].text;
    try {
      GaussDiagram d1 = load_diagram(data_dir + "/" + toks[1].text);
      GaussDiagram d2 = load_diagram(data_dir + "/" + toks[2].text);
      MoveSet ms = parse_move_set(toks[3].text);
      SearchLimits lim;
      lim.max_depth = detail::parse_int(toks[4], "depth");
      lim.max_arrows = detail::parse_int(toks[5], "max arrows");
      lim.max_nodes = detail::parse_int64(toks[6], "max nodes");
      bool expect_found = toks[7].text == "found";
      SearchResult res = search_equivalent(d1, d2, ms, lim);
      if (expect_found) {
        bool ok = res.status == SearchStatus::found && res.certificate &&
                  replay(*res.certificate);
        push("search: " + name, ok,
             ok ? "" : "no certificate within the recorded bounds");
      } else {
        push("search: " + name, res.status == SearchStatus::not_found_within_bounds,
             "expected exhaustion of the bounded search space without a certificate");
      }
    } catch (const Error& e) {
      push("search: " + name, false, e.what());
    }
  }

  // unknotting rows
  for (const char* stem : {"k", "k0"}) {
    std::string name = std::string("unknot: ") + stem + ".gd";
    try {
      GaussDiagram d = load_diagram(data_dir + "/diagrams/" + std::string(stem) + ".gd");
      Certificate with_sc = unknot_welded_long(d, true);
      Certificate sv_only = unknot_welded_long(d, false);
      bool ok = with_sc.target.arrow_count() == 0 && replay(with_sc) && replay(sv_only) &&
                static_cast<int>(sv_only.steps.size()) == d.arrow_count();
      push(name, ok, "unknotting certificates must replay to the empty diagram");
    } catch (const Error& e) {
      push(name, false, e.what());
    }
  }

  return rows;
}

}  // namespace gdsl
