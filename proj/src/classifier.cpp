#include "og4/classifier.hpp"

#include <algorithm>
#include <cstdint>

namespace og4 {

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Fast: return "fast";
    case Mode::Exhaustive: return "exhaustive";
    case Mode::Auto: return "auto";
  }
  return "?";
}

Mode resolve_mode(Mode m, std::size_t group_order) {
  if (m != Mode::Auto) return m;
  return group_order <= kAutoExhaustiveLimit ? Mode::Exhaustive : Mode::Fast;
}

std::string basic_type_name(BasicType t) {
  switch (t) {
    case BasicType::NotBasic: return "not-basic";
    case BasicType::Quasiprimitive: return "quasiprimitive";
    case BasicType::Biquasiprimitive: return "biquasiprimitive";
    case BasicType::CycleOriented: return "oriented-cycle";
    case BasicType::CycleUnoriented: return "unoriented-cycle";
    case BasicType::CycleIndependent: return "independent-cycle";
  }
  return "?";
}

BasicReport analyze_basic(const PairOG4& pair, Family family, int r, int s, Mode mode) {
  BasicReport rep;
  rep.family = family;
  rep.r = r;
  rep.s = s;
  rep.mode_used = resolve_mode(mode, pair.group.order());

  std::vector<Subgroup> normals;
  if (rep.mode_used == Mode::Exhaustive) {
    for (Subgroup& n : all_normal_subgroups(pair.group))
      if (!n.is_trivial()) normals.push_back(std::move(n));
  } else {
    normals = minimal_normal_subgroups(pair.group);
  }

  rep.witnesses.reserve(normals.size());
  for (const Subgroup& n : normals) rep.witnesses.push_back(normal_quotient(pair, n));

  rep.is_basic = true;
  for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
    if (rep.witnesses[i].degeneracy.kind == DegKind::NonDegenerate) {
      rep.is_basic = false;
      rep.not_basic_witness = static_cast<int>(i);
      break;
    }

  std::vector<int> cycles;
  bool any_k2 = false;
  for (std::size_t i = 0; i < rep.witnesses.size(); ++i) {
    if (rep.witnesses[i].degeneracy.kind == DegKind::Cycle) cycles.push_back(static_cast<int>(i));
    if (rep.witnesses[i].degeneracy.kind == DegKind::K2) any_k2 = true;
  }

  for (std::size_t a = 0; a < cycles.size() && !rep.has_independent_cycle_pair; ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      IndependenceResult ind =
          are_independent(pair, rep.witnesses[static_cast<std::size_t>(cycles[a])],
                          rep.witnesses[static_cast<std::size_t>(cycles[b])]);
      if (ind.independent) {
        rep.has_independent_cycle_pair = true;
        rep.independent_pair = {cycles[a], cycles[b]};
        break;
      }
    }

  if (!rep.is_basic) {
    rep.type = BasicType::NotBasic;
  } else if (cycles.empty() && !any_k2) {
    rep.type = BasicType::Quasiprimitive;
  } else if (cycles.empty()) {
    rep.type = BasicType::Biquasiprimitive;
  } else if (rep.has_independent_cycle_pair) {
    rep.type = BasicType::CycleIndependent;
  } else {
    bool any_oriented = false, any_unoriented = false;
    for (int c : cycles) {
      if (rep.witnesses[static_cast<std::size_t>(c)].orientation == Orientation::Oriented)
        any_oriented = true;
      else
        any_unoriented = true;
    }
    rep.orientation_mix_violation = any_oriented && any_unoriented;
    rep.type = any_oriented ? BasicType::CycleOriented : BasicType::CycleUnoriented;
  }
  return rep;
}

bool is_odd_prime(int n) {
  if (n < 3 || n % 2 == 0) return false;
  for (int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

namespace {
bool twice_odd_prime(int n) { return n % 2 == 0 && is_odd_prime(n / 2); }
}  // namespace

bool theorem_predicate(Family f, int r, int s) {
  if (!valid_params(f, r, s))
    throw std::invalid_argument("theorem_predicate: " + family_name(f) + " requires " +
                                param_requirement(f));
  switch (f) {
    case Family::Row1:
      return (r == 4 && is_odd_prime(s)) || (is_odd_prime(r) && s == 4) ||
             (is_odd_prime(r) && is_odd_prime(s));
    case Family::Row2:
      return (r == 4 && s == 4) || (r == 4 && twice_odd_prime(s)) ||
             (twice_odd_prime(r) && s == 4);
    case Family::Row3:
      return is_odd_prime(r) && (s == 4 || twice_odd_prime(s));
    case Family::Row4:
      return (r == 4 && s == 4) || (r == 4 && twice_odd_prime(s)) ||
             (twice_odd_prime(r) && s == 4) || (twice_odd_prime(r) && twice_odd_prime(s));
    case Family::Row5:
      return is_odd_prime(r) && is_odd_prime(s);
  }
  return false;
}

namespace {

SweepCell run_cell(Family f, int r, int s, bool swapped, Mode mode) {
  SweepCell cell;
  cell.family = f;
  cell.r = r;
  cell.s = s;
  cell.swapped = swapped;
  try {
    cell.predicted = theorem_predicate(f, r, s);
    FamilyPair fp = make_family_pair(f, r, s);
    cell.group_order = fp.group.order();
    PairOG4 pair = verify_og4(fp.lab.graph, fp.group);
    BasicReport rep = analyze_basic(pair, f, r, s, mode);
    cell.computed = rep.is_basic && rep.has_independent_cycle_pair;
    cell.type = rep.type;
    cell.orientation_mix_violation = rep.orientation_mix_violation;
    cell.agree = cell.computed == cell.predicted && !cell.orientation_mix_violation;
  } catch (const ElementCapExceeded& e) {
    cell.skipped = true;
    cell.skip_reason = e.what();
  }
  return cell;
}

}  // namespace

SweepReport run_sweep(int max_r, int max_s, Mode mode, bool parallel) {
  if (max_r < 3 || max_s < 3) throw std::invalid_argument("run_sweep: bounds must be >= 3");
  SweepReport rep;
  rep.max_r = max_r;
  rep.max_s = max_s;
  rep.mode = mode;

  struct CellSpec {
    Family f;
    int r, s;
    bool swapped;
  };
  std::vector<CellSpec> specs;
  for (Family f : all_families())
    for (int r = 3; r <= max_r; ++r)
      for (int s = 3; s <= max_s; ++s) {
        if (valid_params(f, r, s)) specs.push_back({f, r, s, false});
        // Row3 with r even / s odd is the same family with parameters swapped.
        if (f == Family::Row3 && r % 2 == 0 && s % 2 == 1 && s <= max_r && r <= max_s)
          specs.push_back({f, s, r, true});
      }

  rep.cells.resize(specs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(specs.size()); ++i) {
    const CellSpec& c = specs[static_cast<std::size_t>(i)];
    rep.cells[static_cast<std::size_t>(i)] = run_cell(c.f, c.r, c.s, c.swapped, mode);
  }

  for (const SweepCell& c : rep.cells) {
    if (c.skipped) ++rep.skipped_count;
    else if (!c.agree) ++rep.mismatch_count;
  }
  return rep;
}

LemmaCheck h_minimal_normal_profile(int r, int s) {
  LemmaCheck check;
  check.name = "H(" + std::to_string(r) + "," + std::to_string(s) + ") minimal normal profile";

  std::string label;
  std::vector<CoordMap> expected_words;
  const bool r_odd_prime = is_odd_prime(r);
  const bool r_2p = twice_odd_prime(r);
  if (r_odd_prime && s == 4) {
    label = "(p,4)";
    expected_words = {map_mu(), map_nu(2)};
  } else if (r_odd_prime && twice_odd_prime(s)) {
    label = "(p,2q)";
    expected_words = {map_mu(), map_nu(2)};
  } else if (r_2p && twice_odd_prime(s)) {
    label = "(2p,2q)";
    expected_words = {map_mu(2), map_mu(r / 2), map_nu(2)};
  } else if (r_2p && s == 4) {
    label = "(2p,4)";
    expected_words = {map_mu(2), map_mu(r / 2), map_nu(2),
                      compose_maps({map_mu(r / 2), map_nu(2)})};
  } else if (r == 4 && twice_odd_prime(s)) {
    label = "(4,2p)";
    expected_words = {map_mu(2), map_nu(2)};
  } else {
    check.detail = "no stated case for these parameters";
    return check;
  }

  HGroupInstance inst = h_group(r, s);
  std::vector<Subgroup> expected;
  for (const CoordMap& w : expected_words)
    expected.push_back(subgroup_from_perms(inst.group, {realize_map(inst.lab, w)}));
  std::sort(expected.begin(), expected.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.indices() < b.indices();
  });

  std::vector<Subgroup> actual = minimal_normal_subgroups(inst.group);
  check.ok = actual.size() == expected.size() &&
             std::equal(actual.begin(), actual.end(), expected.begin());
  check.detail = "case " + label + ": expected " + std::to_string(expected.size()) +
                 " minimal normal subgroups, found " + std::to_string(actual.size()) +
                 (check.ok ? ", sets match" : ", sets differ");
  return check;
}

LemmaCheck length2_orbit_check(const FamilyPair& pair, const std::vector<Subgroup>& normals) {
  LemmaCheck check;
  check.name = "order-2 normal subgroup swap condition";
  check.ok = true;
  check.detail = "no order-2 normal subgroup";
  if (pair.family == Family::Row5) {
    check.detail = "not applicable to Row 5";
    return check;
  }
  const int v0 = pair.lab.index_of({0, 0, 0});
  const std::vector<int> targets{pair.lab.index_of({2, 0, 0}), pair.lab.index_of({2, 2, 0}),
                                 pair.lab.index_of({0, 2, 0})};
  for (const Subgroup& n : normals) {
    if (n.order() != 2) continue;
    const Perm& swap = pair.group.elements()[static_cast<std::size_t>(
        n.indices()[0] == pair.group.identity_index() ? n.indices()[1] : n.indices()[0])];
    bool swaps_ok = std::find(targets.begin(), targets.end(), swap(v0)) != targets.end();
    bool param_ok = pair.r == 4 || pair.s == 4;
    if (!swaps_ok || !param_ok) {
      check.ok = false;
      check.detail = "violated by an order-2 normal subgroup";
      return check;
    }
    check.detail = "all order-2 normal subgroups swap (0,0) into {(2,0),(2,2),(0,2)}";
  }
  return check;
}

std::vector<LemmaCheck> lemma_profiles(Family f, int r, int s) {
  std::vector<LemmaCheck> out;
  if (f == Family::Row3) out.push_back(h_minimal_normal_profile(r, s));
  if (f != Family::Row5 && valid_params(f, r, s)) {
    FamilyPair pair = make_family_pair(f, r, s);
    PairOG4 p4 = verify_og4(pair.lab.graph, pair.group);
    BasicReport rep = analyze_basic(p4, f, r, s, Mode::Exhaustive);
    if (rep.is_basic) {
      std::vector<Subgroup> normals;
      for (const QuotientReport& w : rep.witnesses) normals.push_back(w.acting);
      out.push_back(length2_orbit_check(pair, normals));
    } else {
      LemmaCheck c;
      c.name = "order-2 normal subgroup swap condition";
      c.ok = true;
      c.detail = "not applicable (pair is not basic)";
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace og4
