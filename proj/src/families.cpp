#include "og4/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace og4 {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

std::vector<std::pair<int, int>> lattice_edges(int r, int s,
                                               const std::function<int(int, int)>& idx) {
  // (i,j) ~ (i+1, j+-1); every edge appears from its lower-i endpoint.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      int u = idx(i, j);
      if (u < 0) continue;
      for (int dj : {1, -1}) {
        int v = idx(mod(i + 1, r), mod(j + dj, s));
        if (v >= 0) edges.emplace_back(u, v);
      }
    }
  return edges;
}

void check_params(int r, int s) {
  if (r < 3 || s < 3) throw std::invalid_argument("family parameters must satisfy r, s >= 3");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Row1: return "row1";
    case Family::Row2: return "row2";
    case Family::Row3: return "row3";
    case Family::Row4: return "row4";
    case Family::Row5: return "row5";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams{Family::Row1, Family::Row2, Family::Row3, Family::Row4,
                                        Family::Row5};
  return fams;
}

bool valid_params(Family f, int r, int s) {
  if (r < 3 || s < 3) return false;
  switch (f) {
    case Family::Row1: return r % 2 == 1 || s % 2 == 1;
    case Family::Row2:
    case Family::Row4: return r % 2 == 0 && s % 2 == 0;
    case Family::Row3: return r % 2 == 1 && s % 2 == 0;
    case Family::Row5: return r % 2 == 1 && s % 2 == 1;
  }
  return false;
}

std::string param_requirement(Family f) {
  switch (f) {
    case Family::Row1: return "at least one of r, s odd";
    case Family::Row2:
    case Family::Row4: return "r and s both even";
    case Family::Row3: return "r odd, s even";
    case Family::Row5: return "r and s both odd";
  }
  return "?";
}

int LabeledGraph::index_of(Coord c) const {
  int i = mod(c.i, r), j = mod(c.j, s), d = doubled ? mod(c.delta, 2) : 0;
  int full = d * r * s + i * s + j;
  if (plus) return sub_of_full[static_cast<std::size_t>(full)];
  return full;
}

LabeledGraph gamma(int r, int s) {
  check_params(r, s);
  LabeledGraph lab;
  lab.r = r;
  lab.s = s;
  auto idx = [s](int i, int j) { return i * s + j; };
  lab.graph = UGraph::build(r * s, lattice_edges(r, s, idx));
  lab.coord_of.resize(static_cast<std::size_t>(r * s));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) lab.coord_of[static_cast<std::size_t>(idx(i, j))] = {i, j, 0};
  return lab;
}

LabeledGraph gamma_plus(int r, int s) {
  check_params(r, s);
  if (r % 2 != 0 || s % 2 != 0)
    throw std::invalid_argument("gamma_plus: r and s must both be even");
  LabeledGraph full = gamma(r, s);
  std::vector<int> keep;
  for (int v = 0; v < full.graph.vertex_count(); ++v) {
    Coord c = full.coord_of[static_cast<std::size_t>(v)];
    if (c.i % 2 == c.j % 2) keep.push_back(v);
  }
  InducedSubgraph ind = induced_subgraph(full.graph, keep);
  LabeledGraph lab;
  lab.r = r;
  lab.s = s;
  lab.plus = true;
  lab.graph = std::move(ind.graph);
  lab.sub_of_full = std::move(ind.new_of_old);
  lab.coord_of.reserve(ind.old_of_new.size());
  for (int old : ind.old_of_new) lab.coord_of.push_back(full.coord_of[static_cast<std::size_t>(old)]);
  return lab;
}

LabeledGraph gamma_2(int r, int s) {
  check_params(r, s);
  LabeledGraph base = gamma(r, s);
  LabeledGraph lab;
  lab.r = r;
  lab.s = s;
  lab.doubled = true;
  lab.graph = standard_double_cover(base.graph);
  lab.coord_of.resize(static_cast<std::size_t>(2 * r * s));
  for (int d = 0; d < 2; ++d)
    for (int v = 0; v < r * s; ++v) {
      Coord c = base.coord_of[static_cast<std::size_t>(v)];
      c.delta = d;
      lab.coord_of[static_cast<std::size_t>(d * r * s + v)] = c;
    }
  return lab;
}

CoordMap map_mu(int power) {
  return [power](Coord c) { return Coord{c.i + power, c.j, c.delta}; };
}

CoordMap map_nu(int power) {
  return [power](Coord c) { return Coord{c.i, c.j + power, c.delta}; };
}

CoordMap map_sigma(bool doubled) {
  if (doubled) return [](Coord c) { return Coord{c.i, -c.j, c.delta + 1}; };
  return [](Coord c) { return Coord{-c.i, c.j, c.delta}; };
}

CoordMap map_tau() {
  return [](Coord c) { return Coord{-c.i, -c.j, c.delta}; };
}

CoordMap compose_maps(std::vector<CoordMap> maps) {
  return [maps = std::move(maps)](Coord c) {
    for (const CoordMap& f : maps) c = f(c);
    return c;
  };
}

Perm realize_map(const LabeledGraph& lab, const CoordMap& f) {
  std::vector<int> img(lab.coord_of.size());
  for (std::size_t v = 0; v < lab.coord_of.size(); ++v) {
    int w = lab.index_of(f(lab.coord_of[v]));
    if (w < 0)
      throw std::invalid_argument("realize_map: map does not preserve the vertex set");
    img[v] = w;
  }
  return Perm(std::move(img));
}

namespace {

bool is_automorphism(const UGraph& g, const Perm& p) {
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

struct GeneratorWords {
  std::vector<std::pair<std::string, CoordMap>> gens;
  std::vector<std::pair<std::string, std::vector<CoordMap>>> named;
};

GeneratorWords family_words(Family f) {
  const CoordMap mu = map_mu(), nu = map_nu(), tau = map_tau();
  const CoordMap sg = map_sigma(false), sg2 = map_sigma(true);
  const CoordMap mu2 = map_mu(2), nu2 = map_nu(2);
  GeneratorWords w;
  switch (f) {
    case Family::Row1:
      w.gens = {{"mu", mu}, {"nu", nu}, {"sigma", sg}};
      w.named = {{"M~", {mu, sg}}, {"M", {mu}}, {"N", {nu}}};
      break;
    case Family::Row2:
      w.gens = {{"mu^2", mu2}, {"mu nu", compose_maps({mu, nu})}, {"sigma", sg}};
      w.named = {{"M~+", {mu2, sg}}, {"M+", {mu2}}, {"N+", {nu2}}};
      break;
    case Family::Row3:
      w.gens = {{"mu", mu}, {"sigma nu", compose_maps({sg, nu})}, {"tau", tau}};
      w.named = {{"M", {mu}},
                 {"N#", {nu2, compose_maps({tau, sg, nu})}},
                 {"N2", {nu2}}};
      break;
    case Family::Row4:
      w.gens = {{"mu^2", mu2}, {"sigma mu nu", compose_maps({sg, mu, nu})}, {"tau", tau}};
      w.named = {{"M+", {mu2}}, {"N+", {nu2}}};
      break;
    case Family::Row5:
      w.gens = {{"mu", mu}, {"nu", nu}, {"sigma", sg2}, {"tau", tau}};
      w.named = {{"M^", {mu, compose_maps({sg2, tau})}},
                 {"N^", {nu, sg2}},
                 {"M", {mu}},
                 {"N", {nu}}};
      break;
  }
  return w;
}

}  // namespace

const Subgroup& FamilyPair::named_subgroup(const std::string& name) const {
  for (const auto& [n, sub] : named)
    if (n == name) return sub;
  throw std::invalid_argument("named_subgroup: '" + name + "' is not defined for family " +
                              family_name(family));
}

bool FamilyPair::has_named(const std::string& name) const {
  return std::any_of(named.begin(), named.end(),
                     [&](const auto& kv) { return kv.first == name; });
}

FamilyPair make_family_pair(Family f, int r, int s, std::size_t element_cap) {
  if (!valid_params(f, r, s))
    throw std::invalid_argument("make_family_pair: " + family_name(f) + " requires " +
                                param_requirement(f));
  LabeledGraph lab;
  switch (f) {
    case Family::Row1:
    case Family::Row3: lab = gamma(r, s); break;
    case Family::Row2:
    case Family::Row4: lab = gamma_plus(r, s); break;
    case Family::Row5: lab = gamma_2(r, s); break;
  }

  GeneratorWords words = family_words(f);
  std::vector<Perm> gens;
  for (const auto& [name, cmap] : words.gens) {
    Perm p = realize_map(lab, cmap);
    if (!is_automorphism(lab.graph, p))
      throw std::logic_error("make_family_pair: generator " + name +
                             " is not a graph automorphism (construction bug)");
    gens.push_back(std::move(p));
  }

  if (!is_regular(lab.graph, 4))
    throw std::logic_error("make_family_pair: graph is not 4-regular");
  if (!is_connected(lab.graph))
    throw std::logic_error("make_family_pair: graph is not connected");

  const int nverts = lab.graph.vertex_count();
  FamilyPair pair{f, r, s, std::move(lab), PermGroup(nverts, gens, element_cap), {}};
  for (const auto& [name, maps] : words.named) {
    std::vector<Perm> sub_gens;
    for (const CoordMap& m : maps) sub_gens.push_back(realize_map(pair.lab, m));
    pair.named.emplace_back(name, subgroup_from_perms(pair.group, sub_gens));
  }
  return pair;
}

Subgroup mu_power_subgroup(const FamilyPair& pair, int t) {
  if (t < 1 || pair.r % t != 0) throw std::invalid_argument("mu_power_subgroup: t must divide r");
  return subgroup_from_perms(pair.group, {realize_map(pair.lab, map_mu(t))});
}

Subgroup nu_power_subgroup(const FamilyPair& pair, int t) {
  if (t < 1 || pair.s % t != 0) throw std::invalid_argument("nu_power_subgroup: t must divide s");
  return subgroup_from_perms(pair.group, {realize_map(pair.lab, map_nu(t))});
}

HGroupInstance h_group(int r, int s) {
  check_params(r, s);
  if (s % 2 != 0) throw std::invalid_argument("h_group: s must be even");
  HGroupInstance inst{gamma(r, s), PermGroup(1, {Perm::identity(1)})};
  std::vector<Perm> gens{realize_map(inst.lab, map_mu()),
                         realize_map(inst.lab, compose_maps({map_sigma(false), map_nu()})),
                         realize_map(inst.lab, map_tau())};
  inst.group = PermGroup(inst.lab.graph.vertex_count(), std::move(gens));
  return inst;
}

}  // namespace og4
