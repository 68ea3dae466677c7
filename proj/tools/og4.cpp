// Command-line front end: construct the family pairs, analyze normal
// quotients and basicness, run lemma checks, and sweep a parameter grid
// against the classification predicate.
//
// Exit codes: 0 success, 1 sweep found mismatches, 2 usage / parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "og4/classifier.hpp"
#include "og4/graph6.hpp"
#include "og4/parallel.hpp"
#include "og4/report.hpp"

namespace {

using og4::Family;
using og4::Json;
using og4::Mode;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + path);
  out << text;
}

std::string dumped(const Json& j) { return j.dump(2) + "\n"; }

Family parse_family_or_throw(const std::string& name) {
  std::optional<Family> f = og4::parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected row1..row5)");
  return *f;
}

Mode parse_mode(const std::string& name) {
  if (name == "fast") return Mode::Fast;
  if (name == "exhaustive") return Mode::Exhaustive;
  if (name == "auto") return Mode::Auto;
  throw UsageError("unknown mode '" + name + "' (expected fast, exhaustive or auto)");
}

/// Row 3 with r even and s odd is the same pair with parameters swapped;
/// accept it and record the swap in the report.
bool maybe_swap_row3(Family f, int& r, int& s) {
  if (f == Family::Row3 && r % 2 == 0 && s % 2 == 1) {
    std::swap(r, s);
    return true;
  }
  return false;
}

struct FamilyArgs {
  std::string family;
  int r = 0;
  int s = 0;
};

void add_family_args(CLI::App* cmd, FamilyArgs& args) {
  cmd->fallthrough();  // let the global -o / --max-group-order follow the subcommand
  cmd->add_option("family", args.family, "family name (row1..row5)")->required();
  cmd->add_option("r", args.r, "first parameter (>= 3)")->required();
  cmd->add_option("s", args.s, "second parameter (>= 3)")->required();
}

int cmd_construct(const FamilyArgs& args, const std::string& format, const std::string& out,
                  std::size_t cap) {
  Family f = parse_family_or_throw(args.family);
  int r = args.r, s = args.s;
  maybe_swap_row3(f, r, s);
  og4::FamilyPair pair = og4::make_family_pair(f, r, s, cap);
  if (format == "graph6") {
    write_output(og4::to_graph6(pair.lab.graph) + "\n", out);
  } else if (format == "json") {
    write_output(dumped(og4::construct_json(pair)), out);
  } else {
    throw UsageError("unknown format '" + format + "' (expected json or graph6)");
  }
  return 0;
}

int cmd_analyze(const FamilyArgs& args, const std::string& mode_str, const std::string& out,
                std::size_t cap) {
  Family f = parse_family_or_throw(args.family);
  Mode mode = parse_mode(mode_str);
  int r = args.r, s = args.s;
  bool swapped = maybe_swap_row3(f, r, s);
  og4::FamilyPair pair = og4::make_family_pair(f, r, s, cap);
  og4::PairOG4 og = og4::verify_og4(pair.lab.graph, pair.group);
  og4::BasicReport rep = og4::analyze_basic(og, f, r, s, mode);
  write_output(dumped(og4::analyze_json(pair, og, rep, swapped)), out);
  return 0;
}

int cmd_lemmas(const FamilyArgs& args, const std::string& out) {
  Family f = parse_family_or_throw(args.family);
  int r = args.r, s = args.s;
  maybe_swap_row3(f, r, s);
  std::vector<og4::LemmaCheck> checks = og4::lemma_profiles(f, r, s);
  write_output(dumped(og4::lemmas_json(f, r, s, checks)), out);
  return 0;
}

int cmd_sweep(int max_r, int max_s, const std::string& mode_str, bool serial, bool table,
              const std::string& out) {
  Mode mode = parse_mode(mode_str);
  og4::SweepReport rep = og4::run_sweep(max_r, max_s, mode, !serial);
  if (table) write_output(og4::sweep_table(rep), out);
  else write_output(dumped(og4::sweep_json(rep)), out);
  return rep.mismatch_count == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"half-arc-transitive 4-valent family toolkit"};
  app.require_subcommand(1);

  std::string out;
  std::size_t cap = og4::kDefaultElementCap;
  bool serial = false;
  app.add_option("-o,--output", out, "write output to a file instead of stdout");
  app.add_option("--max-group-order", cap, "element enumeration cap")->capture_default_str();
  app.add_flag("--serial", serial, "disable the parallel kernels");

  FamilyArgs cargs, aargs, largs, eargs;
  std::string cformat = "json", eformat = "graph6", amode = "auto", smode = "auto";
  int max_r = 16, max_s = 16;
  bool table = false;

  CLI::App* construct = app.add_subcommand("construct", "build a family pair");
  add_family_args(construct, cargs);
  construct->add_option("--format", cformat, "json or graph6")->capture_default_str();

  CLI::App* exp = app.add_subcommand("export", "write a family graph in graph6 or json");
  add_family_args(exp, eargs);
  exp->add_option("--format", eformat, "graph6 or json")->capture_default_str();

  CLI::App* analyze = app.add_subcommand("analyze", "normal quotients and basicness");
  add_family_args(analyze, aargs);
  analyze->add_option("--mode", amode, "fast, exhaustive or auto")->capture_default_str();

  CLI::App* lemmas = app.add_subcommand("lemmas", "structural lemma checks");
  add_family_args(lemmas, largs);

  CLI::App* sweep = app.add_subcommand("sweep", "grid comparison against the predicate");
  sweep->fallthrough();
  sweep->add_option("max_r", max_r, "grid bound for r")->capture_default_str();
  sweep->add_option("max_s", max_s, "grid bound for s")->capture_default_str();
  sweep->add_option("--mode", smode, "fast, exhaustive or auto")->capture_default_str();
  sweep->add_flag("--table", table, "human-readable summary instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  og4::set_parallel_kernels(!serial);
  try {
    if (construct->parsed()) return cmd_construct(cargs, cformat, out, cap);
    if (exp->parsed()) return cmd_construct(eargs, eformat, out, cap);
    if (analyze->parsed()) return cmd_analyze(aargs, amode, out, cap);
    if (lemmas->parsed()) return cmd_lemmas(largs, out);
    if (sweep->parsed()) return cmd_sweep(max_r, max_s, smode, serial, table, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const og4::ElementCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
