// command-line surface for the Gauss-diagram string-link calculus
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

#include "gdsl/automorphism.hpp"
#include "gdsl/braid.hpp"
#include "gdsl/catalog.hpp"
#include "gdsl/criterion.hpp"
#include "gdsl/search.hpp"
#include "gdsl/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gdsl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

bool color_enabled() { return std::getenv("NO_COLOR") == nullptr; }

std::string pass_str(bool pass) {
  if (!color_enabled()) return pass ? "PASS" : "FAIL";
  return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

json certification_json(const Certification& c) {
  return json{{"r1", c.r1}, {"r2", c.r2}, {"r3", c.r3},
              {"oc", c.oc}, {"sc", c.sc}, {"sv", c.sv}};
}

void print_certification_table(const std::string& name, const Certification& c) {
  std::printf("%-8s %-4s %-4s %-4s %-4s %-4s %-4s\n", "formula", "r1", "r2", "r3", "oc", "sc",
              "sv");
  std::printf("%-8s %-4s %-4s %-4s %-4s %-4s %-4s\n", name.c_str(), c.r1 ? "yes" : "no",
              c.r2 ? "yes" : "no", c.r3 ? "yes" : "no", c.oc ? "yes" : "no",
              c.sc ? "yes" : "no", c.sv ? "yes" : "no");
}

MoveSet move_set_from_flags(const std::string& set, bool sv, bool sc) {
  if (set != "virtual" && set != "welded") throw Error("--set must be virtual or welded");
  MoveSet ms = MoveSet::reidemeister(set == "welded");
  if (sv) ms = ms.with_sv();
  if (sc) ms = ms.with_sc();
  return ms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagram calculus for virtual and welded string links"};
  app.require_subcommand(1);
  std::string data_dir = GDSL_DATA_DIR;
  bool as_json = false;
  app.add_option("--data-dir", data_dir, "fixture/catalog directory");
  app.add_flag("--json", as_json, "machine-readable output");

  auto* eval = app.add_subcommand("eval", "evaluate invariants on a diagram");
  std::string eval_file, eval_formula;
  eval->add_option("diagram", eval_file)->required();
  eval->add_option("--formula", eval_formula, "catalog entry name or formula file");

  auto* cert = app.add_subcommand("certify", "print the six-condition table for a formula");
  std::string cert_arg;
  cert->add_option("formula", cert_arg, "catalog entry name or formula file")->required();

  auto* movescmd = app.add_subcommand("moves", "list all one-move neighbors");
  std::string moves_file, moves_set = "welded";
  bool moves_sv = false, moves_sc = false;
  int moves_max_arrows = 6;
  movescmd->add_option("diagram", moves_file)->required();
  movescmd->add_option("--set", moves_set, "virtual or welded");
  movescmd->add_flag("--sv", moves_sv, "allow self-virtualization");
  movescmd->add_flag("--sc", moves_sc, "allow self-crossing change");
  movescmd->add_option("--max-arrows", moves_max_arrows, "size bound for insertions");

  auto* searchcmd = app.add_subcommand("search", "bounded equivalence search");
  std::string s_d1, s_d2, s_set = "welded";
  bool s_sv = false, s_sc = false;
  int s_depth = 6, s_max_arrows = 6;
  long long s_max_nodes = 400000;
  searchcmd->add_option("from", s_d1)->required();
  searchcmd->add_option("to", s_d2)->required();
  searchcmd->add_option("--set", s_set, "virtual or welded");
  searchcmd->add_flag("--sv", s_sv);
  searchcmd->add_flag("--sc", s_sc);
  searchcmd->add_option("--depth", s_depth, "depth bound");
  searchcmd->add_option("--max-arrows", s_max_arrows, "size bound");
  searchcmd->add_option("--max-nodes", s_max_nodes, "node budget");

  auto* unknot = app.add_subcommand("unknot", "unknot a welded long diagram");
  std::string u_file;
  bool u_sv_only = false;
  unknot->add_option("diagram", u_file)->required();
  unknot->add_flag("--sv-only", u_sv_only, "delete self-arrows only");

  auto* braid = app.add_subcommand("braid", "braid word operations");
  braid->require_subcommand(1);
  auto* braid_compile = braid->add_subcommand("compile", "compile a pure word");
  auto* braid_sv = braid->add_subcommand("sv-invariant", "normal-form action tuple");
  std::string bc_file, bs_file;
  braid_compile->add_option("word", bc_file)->required();
  braid_sv->add_option("word", bs_file)->required();

  auto* replaycmd = app.add_subcommand("replay", "validate a certificate");
  std::string r_file;
  replaycmd->add_option("certificate", r_file)->required();

  auto* fixtures = app.add_subcommand("fixtures", "bundled reproduction table");
  fixtures->require_subcommand(1);
  auto* fx_verify = fixtures->add_subcommand("verify", "run every bundled expectation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) {
      GaussDiagram g = load_diagram(eval_file);
      json out{{"diagram", eval_file}, {"values", json::array()}};
      std::vector<std::pair<std::string, long long>> values;
      if (eval_formula.empty()) {
        values = evaluate_catalog(load_catalog(data_dir), g);
      } else {
        bool is_file = eval_formula.find('.') != std::string::npos ||
                       eval_formula.find('/') != std::string::npos;
        if (is_file) {
          values.emplace_back(eval_formula, pair(parse_formula(read_file(eval_formula)), g));
        } else {
          for (const CatalogEntry& e : load_catalog(data_dir))
            if (e.name == eval_formula) values.emplace_back(e.name, pair(e.formula, g));
          if (values.empty()) throw Error("no catalog entry named " + eval_formula);
        }
      }
      for (auto& [name, v] : values) {
        out["values"].push_back({{"name", name}, {"value", v}});
        if (!as_json) std::printf("%s = %lld\n", name.c_str(), v);
      }
      if (as_json) std::printf("%s\n", out.dump(2).c_str());
      return kExitOk;
    }

    if (*cert) {
      bool is_file =
          cert_arg.find('.') != std::string::npos || cert_arg.find('/') != std::string::npos;
      Formula f(1);
      bool found = is_file;
      if (is_file) {
        f = parse_formula(read_file(cert_arg));
      } else {
        for (const CatalogEntry& e : load_catalog(data_dir))
          if (e.name == cert_arg) {
            f = e.formula;
            found = true;
          }
      }
      if (!found) throw Error("no catalog entry named " + cert_arg);
      Certification c = certify(f);
      if (as_json)
        std::printf("%s\n", json{{"formula", cert_arg}, {"conditions", certification_json(c)}}
                                .dump(2)
                                .c_str());
      else
        print_certification_table(cert_arg, c);
      return kExitOk;
    }

    if (*movescmd) {
      GaussDiagram g = load_diagram(moves_file);
      MoveSet ms = move_set_from_flags(moves_set, moves_sv, moves_sc);
      auto ns = neighbors(g, ms, moves_max_arrows);
      if (as_json) {
        json out{{"diagram", moves_file}, {"count", ns.size()}, {"moves", json::array()}};
        for (auto& [m, d] : ns)
          out["moves"].push_back(
              {{"move", serialize_move(m)}, {"result", serialize_diagram(d)}});
        std::printf("%s\n", out.dump(2).c_str());
      } else {
        for (auto& [m, d] : ns) std::printf("%s\n", serialize_move(m).c_str());
        std::printf("# %zu moves\n", ns.size());
      }
      return kExitOk;
    }

    if (*searchcmd) {
      GaussDiagram d1 = load_diagram(s_d1), d2 = load_diagram(s_d2);
      MoveSet ms = move_set_from_flags(s_set, s_sv, s_sc);
      SearchResult res =
          search_equivalent(d1, d2, ms, SearchLimits{s_depth, s_max_arrows, s_max_nodes});
      const char* status = res.status == SearchStatus::found
                               ? "found"
                               : (res.status == SearchStatus::not_found_within_bounds
                                      ? "not found within bounds"
                                      : "resource exhausted");
      if (as_json) {
        json out{{"status", status}, {"nodes", res.nodes_expanded}};
        if (res.certificate) out["certificate"] = serialize_certificate(*res.certificate);
        std::printf("%s\n", out.dump(2).c_str());
      } else if (res.certificate) {
        std::printf("%s", serialize_certificate(*res.certificate).c_str());
      } else {
        std::printf("%s (expanded %lld nodes)\n", status, res.nodes_expanded);
      }
      return res.status == SearchStatus::found ? kExitOk : kExitVerificationFailure;
    }

    if (*unknot) {
      GaussDiagram g = load_diagram(u_file);
      Certificate c = unknot_welded_long(g, !u_sv_only);
      if (as_json)
        std::printf("%s\n", json{{"steps", c.steps.size()},
                                 {"certificate", serialize_certificate(c)}}
                                .dump(2)
                                .c_str());
      else
        std::printf("%s", serialize_certificate(c).c_str());
      return kExitOk;
    }

    if (*braid_compile) {
      GaussDiagram g = compile_braid(parse_braid(read_file(bc_file)));
      if (as_json)
        std::printf("%s\n", json{{"diagram", serialize_diagram(g)}}.dump(2).c_str());
      else
        std::printf("%s", serialize_diagram(g).c_str());
      return kExitOk;
    }

    if (*braid_sv) {
      BraidWord w = parse_braid(read_file(bs_file));
      std::string inv = sv_invariant(w);
      if (as_json)
        std::printf("%s\n", json{{"invariant", inv}}.dump(2).c_str());
      else
        std::printf("%s\n", inv.c_str());
      return kExitOk;
    }

    if (*replaycmd) {
      Certificate c = parse_certificate(read_file(r_file));
      auto err = replay_error(c);
      if (as_json)
        std::printf("%s\n", json{{"ok", !err.has_value()}, {"error", err ? *err : std::string()}}
                                .dump(2)
                                .c_str());
      else
        std::printf("%s\n", err ? ("invalid: " + *err).c_str() : "valid");
      return err ? kExitVerificationFailure : kExitOk;
    }

    if (*fx_verify) {
      auto rows = verify_fixtures(data_dir);
      bool all = true;
      json out{{"rows", json::array()}};
      for (const VerifyRow& r : rows) {
        all = all && r.pass;
        if (as_json)
          out["rows"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        else
          std::printf("[%s] %s%s\n", pass_str(r.pass).c_str(), r.name.c_str(),
                      r.pass ? "" : ("  -- " + r.detail).c_str());
      }
      if (as_json) {
        out["pass"] = all;
        std::printf("%s\n", out.dump(2).c_str());
      } else {
        std::printf("# %zu rows, %s\n", rows.size(), all ? "all passed" : "failures present");
      }
      return all ? kExitOk : kExitVerificationFailure;
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
