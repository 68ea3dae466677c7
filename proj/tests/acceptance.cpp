// Acceptance run: eight pass/fail criteria over the full 3..16 parameter
// grid, printed one line each. Exit status is the number of failed criteria.

#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "og4/classifier.hpp"
#include "og4/graph6.hpp"
#include "oracles.hpp"

using namespace og4;
using namespace og4::testing;

namespace {

constexpr int kGridMax = 16;

struct Criterion {
  bool ok = true;
  std::ostringstream log;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (log.tellp() > 0) log << "; ";
      log << what;
    }
  }
};

std::vector<std::tuple<Family, int, int>> grid_cells() {
  std::vector<std::tuple<Family, int, int>> cells;
  for (Family f : all_families())
    for (int r = 3; r <= kGridMax; ++r)
      for (int s = 3; s <= kGridMax; ++s)
        if (valid_params(f, r, s)) cells.emplace_back(f, r, s);
  return cells;
}

std::string cell_tag(Family f, int r, int s) {
  return family_name(f) + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

const SweepCell* find_cell(const SweepReport& rep, Family f, int r, int s) {
  for (const SweepCell& c : rep.cells)
    if (c.family == f && c.r == r && c.s == s && !c.swapped) return &c;
  return nullptr;
}

void criterion1(Criterion& c) {
  SweepReport rep = sweep_parallel(kGridMax, kGridMax);
  c.require(rep.mismatch_count == 0, "sweep reported mismatches");
  c.require(rep.skipped_count == 0, "sweep skipped cells");
  const std::vector<std::tuple<Family, int, int, bool>> spots{
      {Family::Row1, 3, 5, true},   {Family::Row1, 4, 7, true},
      {Family::Row2, 4, 4, true},   {Family::Row4, 6, 10, true},
      {Family::Row5, 3, 3, true},   {Family::Row1, 9, 5, false},
      {Family::Row2, 6, 10, false}, {Family::Row5, 15, 7, false}};
  for (auto [f, r, s, expect] : spots) {
    const SweepCell* cell = find_cell(rep, f, r, s);
    c.require(cell != nullptr, "missing cell " + cell_tag(f, r, s));
    if (cell) {
      c.require(cell->computed == expect, "wrong status at " + cell_tag(f, r, s));
      c.require(cell->agree, "cell disagrees at " + cell_tag(f, r, s));
    }
  }
}

void criterion3(Criterion& c) {
  for (int r = 3; r <= 12; ++r)
    for (int s = 3; s <= 12; ++s)
      for (bool k_dihedral : {false, true}) {
        PermGroup h = dihedral_group(r);
        PermGroup k = k_dihedral ? dihedral_group(s) : cyclic_group(s);
        PermGroup g = product_group(h, k);
        std::string tag = "D" + std::to_string(r) + (k_dihedral ? " x D" : " x C") +
                          std::to_string(s);

        std::vector<std::vector<int>> fast;
        for (const Subgroup& m : minimal_normal_subgroups(g)) fast.push_back(m.indices());
        std::sort(fast.begin(), fast.end());
        std::vector<std::vector<int>> oracle = oracle_minimal_normals(g);
        std::sort(oracle.begin(), oracle.end());
        c.require(fast == oracle, tag + ": fast path differs from brute force");

        for (const std::vector<int>& idx : fast) {
          Subgroup m(g, idx);
          // Which factor does M live in? The factors act on disjoint points.
          bool in_h = true, in_k = true;
          for (const Perm& p : m.element_perms()) {
            for (int x = r; x < r + s; ++x)
              if (p(x) != x) in_h = false;
            for (int x = 0; x < r; ++x)
              if (p(x) != x) in_k = false;
          }
          IsoTag iso = iso_tag(m);
          const int ord = static_cast<int>(iso.order);
          const bool prime_order = ord == 2 || is_odd_prime(ord);
          bool case_a = in_h && iso.cyclic && prime_order && r % ord == 0;
          bool case_b = in_k && iso.cyclic && prime_order && s % ord == 0;
          bool case_c = !in_h && !in_k && r % 2 == 0 && s % 2 == 0 && m.order() == 2 &&
                        m.subset_of(center(g));
          c.require(case_a || case_b || case_c, tag + ": trichotomy violated");
        }
      }
}

void criterion4(Criterion& c) {
  for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 4}, {3, 10}, {6, 10}, {6, 4}, {4, 6}}) {
    LemmaCheck check = h_minimal_normal_profile(r, s);
    c.require(check.ok, check.name + " failed: " + check.detail);
  }
  c.require(minimal_normal_subgroups(h_group(6, 4).group).size() == 4,
            "H(6,4) should have exactly 4 minimal normal subgroups");
}

void criterion6(Criterion& c) {
  FamilyPair pair = make_family_pair(Family::Row2, 4, 4);
  const UGraph& g = pair.lab.graph;
  std::vector<int> color;
  c.require(is_bipartite(g, &color), "gamma+(4,4) is not bipartite");
  if (color.size() == 8) {
    int part = 0;
    for (int v = 0; v < 8; ++v) part += color[static_cast<std::size_t>(v)];
    c.require(part == 4, "parts are not of size 4");
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        c.require(g.adjacent(u, v) ==
                      (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]),
                  "adjacency is not complete-across-parts");
  }
}

/// Per-cell work shared by criteria 2, 5, 7 and 8.
struct CellChecks {
  Criterion c2, c5, c7, c8;

  void run(Family f, int r, int s) {
    const std::string tag = cell_tag(f, r, s);
    FamilyPair fp = make_family_pair(f, r, s);
    Og4Check check = check_og4(fp.lab.graph, fp.group);

    // Criterion 2: OG(4) membership with order-2 stabilizers.
    c2.require(check.action_ok && check.member, tag + ": not in OG(4): " + check.reason);
    c2.require(check.facts.stabilizer_order == 2, tag + ": stabilizer order != 2");
    if (!check.member) return;
    PairOG4 pair{fp.lab.graph, fp.group, check.facts};

    // Criterion 5: orientation tags of the named quotients.
    std::vector<std::pair<std::string, Orientation>> expect;
    switch (f) {
      case Family::Row1:
        expect = {{"M", Orientation::Oriented}, {"N", Orientation::Unoriented}};
        break;
      case Family::Row2: break;  // not part of the criterion
      case Family::Row3:
        expect = {{"M", Orientation::Unoriented}, {"N#", Orientation::Unoriented}};
        break;
      case Family::Row4:
        expect = {{"M+", Orientation::Unoriented}, {"N+", Orientation::Unoriented}};
        break;
      case Family::Row5:
        expect = {{"M^", Orientation::Unoriented}, {"N^", Orientation::Unoriented}};
        break;
    }
    for (const auto& [name, orient] : expect) {
      QuotientReport q = normal_quotient(pair, fp.named_subgroup(name));
      c5.require(q.degeneracy.kind == DegKind::Cycle,
                 tag + ": quotient by " + name + " is not a cycle");
      c5.require(q.orientation == orient, tag + ": wrong orientation for " + name);
    }

    // Criterion 7: property suites (exhaustive witnesses).
    BasicReport full = analyze_basic(pair, f, r, s, Mode::Exhaustive);
    BasicReport fast = analyze_basic(pair, f, r, s, Mode::Fast);
    c7.require(fast.is_basic == full.is_basic, tag + ": fast/exhaustive basicness differ");
    c7.require((fast.is_basic && fast.has_independent_cycle_pair) ==
                   (full.is_basic && full.has_independent_cycle_pair),
               tag + ": fast/exhaustive status differ");

    for (const QuotientReport& w : full.witnesses) {
      if (w.degeneracy.kind == DegKind::NonDegenerate)
        c7.require(w.quotient_in_og4, tag + ": non-degenerate quotient left OG(4): " +
                                          w.og4_failure);
      if (w.degeneracy.kind == DegKind::Cycle) {
        CheckRecord rec = stabilizer_kernel_relation(pair, w);
        c7.require(rec.ok, tag + ": stabilizer-kernel dichotomy: " + rec.detail);
      }
    }
    // Monotonicity: a quotient by a larger normal subgroup is coarser, so
    // degeneracy can only be preserved going up.
    for (const QuotientReport& a : full.witnesses)
      for (const QuotientReport& b : full.witnesses) {
        if (!(a.acting.proper_subset_of(b.acting))) continue;
        c7.require(b.partition.cell_count() <= a.partition.cell_count(),
                   tag + ": quotient got finer under a larger subgroup");
        if (a.degeneracy.kind != DegKind::NonDegenerate)
          c7.require(b.degeneracy.kind != DegKind::NonDegenerate,
                     tag + ": degenerate quotient became non-degenerate");
      }

    // Criterion 7: generator relations under the composition convention.
    {
      // Single letters do not preserve X+, so rows 2 and 4 are checked on
      // the full lattice carrying the same relations.
      const bool plus = (f == Family::Row2 || f == Family::Row4);
      const LabeledGraph lab = plus ? gamma(r, s) : fp.lab;
      const bool doubled = (f == Family::Row5);
      Perm mu = realize_map(lab, map_mu()), nu = realize_map(lab, map_nu());
      Perm tau = realize_map(lab, map_tau());
      c7.require(mu * nu == nu * mu, tag + ": mu and nu do not commute");
      c7.require(mu.conjugate_by(tau) == mu.inverse(), tag + ": mu^tau != mu^-1");
      c7.require(nu.conjugate_by(tau) == nu.inverse(), tag + ": nu^tau != nu^-1");
      {
        Perm sg = realize_map(lab, map_sigma(doubled));
        if (doubled) {
          c7.require(mu.conjugate_by(sg) == mu, tag + ": mu^sigma != mu");
          c7.require(nu.conjugate_by(sg) == nu.inverse(), tag + ": nu^sigma != nu^-1");
        } else {
          c7.require(mu.conjugate_by(sg) == mu.inverse(), tag + ": mu^sigma != mu^-1");
          c7.require(nu.conjugate_by(sg) == nu, tag + ": nu^sigma != nu");
        }
      }
    }

    // Criterion 8: order-2 normal subgroups of basic pairs in rows 1-4.
    if (f != Family::Row5 && full.is_basic) {
      std::vector<Subgroup> normals;
      for (const QuotientReport& w : full.witnesses) normals.push_back(w.acting);
      LemmaCheck swap = length2_orbit_check(fp, normals);
      c8.require(swap.ok, tag + ": " + swap.detail);
    }
  }
};

void report(int id, const std::string& name, Criterion& c, int& failures) {
  std::string log = c.log.str();
  if (log.size() > 300) log = log.substr(0, 300) + "...";
  std::cout << "criterion " << id << " (" << name << "): " << (c.ok ? "PASS" : "FAIL");
  if (!c.ok) std::cout << " — " << log;
  std::cout << "\n";
  if (!c.ok) ++failures;
}

}  // namespace

int main() {
  Criterion c1, c3, c4, c6;
  CellChecks cells;

  criterion1(c1);
  for (auto [f, r, s] : grid_cells()) cells.run(f, r, s);
  criterion3(c3);
  criterion4(c4);
  criterion6(c6);

  int failures = 0;
  report(1, "theorem sweep 3..16", c1, failures);
  report(2, "OG(4) membership and stabilizers", cells.c2, failures);
  report(3, "minimal normal subgroups of D_r x C_s / D_r x D_s", c3, failures);
  report(4, "H(r,s) minimal normal profiles", c4, failures);
  report(5, "orientation of the named quotients", cells.c5, failures);
  report(6, "gamma+(4,4) is K_{4,4}", c6, failures);
  report(7, "quotient property suites", cells.c7, failures);
  report(8, "order-2 normal subgroup swap condition", cells.c8, failures);
  return failures;
}
