#include "og4/report.hpp"

#include <map>
#include <sstream>

namespace og4 {

std::string degeneracy_name(const DegeneracyClass& d) {
  switch (d.kind) {
    case DegKind::K1: return "K1";
    case DegKind::K2: return "K2";
    case DegKind::Cycle: return "cycle";
    case DegKind::NonDegenerate: return "non-degenerate";
  }
  return "?";
}

Json subgroup_json(const Subgroup& sub) {
  Json j;
  j["order"] = sub.order();
  j["iso"] = iso_tag(sub).name();
  Json gens = Json::array();
  for (const Perm& p : sub.generating_set()) gens.push_back(p.images());
  j["generators"] = gens;
  return j;
}

Json facts_json(const OG4Facts& facts) {
  Json j;
  j["connected"] = facts.connected;
  j["regular4"] = facts.regular4;
  j["vertex_transitive"] = facts.vertex_transitive;
  j["edge_transitive"] = facts.edge_transitive;
  j["arc_orbits"] = facts.arc_orbit_count;
  j["stabilizer_order"] = facts.stabilizer_order;
  return j;
}

Json quotient_json(const QuotientReport& rep) {
  Json j;
  j["subgroup"] = subgroup_json(rep.acting);
  j["cells"] = rep.partition.cells;
  j["degeneracy"] = degeneracy_name(rep.degeneracy);
  if (rep.degeneracy.kind == DegKind::Cycle) j["cycle_length"] = rep.degeneracy.cycle_length;
  j["orientation"] = orientation_name(rep.orientation);
  j["kernel_order"] = rep.kernel.order();
  j["induced_group_order"] = rep.induced_group_order;
  j["had_intra_cell_edges"] = rep.had_intra_cell_edges;
  if (rep.degeneracy.kind == DegKind::NonDegenerate) j["quotient_in_og4"] = rep.quotient_in_og4;
  return j;
}

Json analyze_json(const FamilyPair& pair, const PairOG4& og4, const BasicReport& rep,
                  bool swapped) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "analyze";
  j["family"] = family_name(pair.family);
  j["r"] = pair.r;
  j["s"] = pair.s;
  j["swapped"] = swapped;
  j["vertex_count"] = pair.lab.graph.vertex_count();
  j["edge_count"] = pair.lab.graph.edge_count();
  j["group_order"] = pair.group.order();
  j["og4"] = facts_json(og4.facts);
  j["mode"] = mode_name(rep.mode_used);
  j["is_basic"] = rep.is_basic;
  j["basic_type"] = basic_type_name(rep.type);
  j["predicted_basic_independent_cycle"] = theorem_predicate(pair.family, pair.r, pair.s);
  j["has_independent_cycle_pair"] = rep.has_independent_cycle_pair;
  if (rep.has_independent_cycle_pair)
    j["independent_pair"] = {rep.independent_pair.first, rep.independent_pair.second};
  Json quotients = Json::array();
  for (const QuotientReport& q : rep.witnesses) quotients.push_back(quotient_json(q));
  j["quotients"] = quotients;
  return j;
}

Json sweep_json(const SweepReport& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "sweep";
  j["max_r"] = rep.max_r;
  j["max_s"] = rep.max_s;
  j["mode"] = mode_name(rep.mode);
  j["cell_count"] = rep.cells.size();
  j["mismatch_count"] = rep.mismatch_count;
  j["skipped_count"] = rep.skipped_count;
  Json cells = Json::array();
  Json mismatches = Json::array();
  for (const SweepCell& c : rep.cells) {
    Json cj;
    cj["family"] = family_name(c.family);
    cj["r"] = c.r;
    cj["s"] = c.s;
    cj["swapped"] = c.swapped;
    if (c.skipped) {
      cj["skipped"] = c.skip_reason;
    } else {
      cj["predicted"] = c.predicted;
      cj["computed"] = c.computed;
      cj["agree"] = c.agree;
      cj["group_order"] = c.group_order;
      cj["basic_type"] = basic_type_name(c.type);
    }
    cells.push_back(cj);
    if (!c.skipped && !c.agree) mismatches.push_back(cj);
  }
  j["cells"] = cells;
  j["mismatches"] = mismatches;
  return j;
}

Json lemmas_json(Family f, int r, int s, const std::vector<LemmaCheck>& checks) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "lemmas";
  j["family"] = family_name(f);
  j["r"] = r;
  j["s"] = s;
  Json arr = Json::array();
  for (const LemmaCheck& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j;
}

Json construct_json(const FamilyPair& pair) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "construct";
  j["family"] = family_name(pair.family);
  j["r"] = pair.r;
  j["s"] = pair.s;
  j["vertex_count"] = pair.lab.graph.vertex_count();
  j["edge_count"] = pair.lab.graph.edge_count();
  Json labels = Json::array();
  for (const Coord& c : pair.lab.coord_of) {
    if (pair.lab.doubled) labels.push_back({c.i, c.j, c.delta});
    else labels.push_back({c.i, c.j});
  }
  j["vertex_labels"] = labels;
  Json edges = Json::array();
  for (auto [u, v] : pair.lab.graph.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  j["group_order"] = pair.group.order();
  Json gens = Json::array();
  for (const Perm& p : pair.group.generators()) gens.push_back(p.images());
  j["group_generators"] = gens;
  Json named = Json::object();
  for (const auto& [name, sub] : pair.named) named[name] = subgroup_json(sub);
  j["named_subgroups"] = named;
  return j;
}

std::string sweep_table(const SweepReport& rep) {
  std::ostringstream out;
  out << "family  graph           group           basic (r,s) cells within grid\n";
  const std::map<Family, std::pair<std::string, std::string>> names{
      {Family::Row1, {"Gamma(r,s)", "G(r,s)"}},
      {Family::Row2, {"Gamma+(r,s)", "G+(r,s)"}},
      {Family::Row3, {"Gamma(r,s)", "H(r,s)"}},
      {Family::Row4, {"Gamma+(r,s)", "H+(r,s)"}},
      {Family::Row5, {"Gamma2(r,s)", "G2(r,s)"}},
  };
  for (Family f : all_families()) {
    std::ostringstream cells;
    for (const SweepCell& c : rep.cells)
      if (c.family == f && !c.skipped && c.computed && !c.swapped)
        cells << " (" << c.r << "," << c.s << ")";
    const auto& [gname, grpname] = names.at(f);
    out << family_name(f) << "    " << gname << "  \t" << grpname << "  \t" << cells.str()
        << "\n";
  }
  out << "cells: " << rep.cells.size() << ", mismatches: " << rep.mismatch_count
      << ", skipped: " << rep.skipped_count << "\n";
  return out.str();
}

}  // namespace og4
