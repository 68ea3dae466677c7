#include "og4/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace og4 {

namespace {

// Union-find orbit count for the generator action on an indexed point set.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(b)] = a;
  }
  std::size_t count() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++c;
    return c;
  }
};

}  // namespace

Og4Check check_og4(const UGraph& graph, const PermGroup& group) {
  Og4Check out;
  if (group.degree() != graph.vertex_count()) {
    out.reason = "group degree does not match vertex count";
    return out;
  }
  const auto edges = graph.edges();
  for (const Perm& g : group.generators())
    for (auto [u, v] : edges)
      if (!graph.adjacent(g(u), g(v))) {
        out.reason = "generator breaks an edge (not an action on the graph)";
        return out;
      }
  out.action_ok = true;

  out.facts.connected = is_connected(graph);
  out.facts.regular4 = is_regular(graph, 4);

  const int n = graph.vertex_count();
  out.facts.vertex_transitive =
      orbit_of(group.generators(), n, 0).size() == static_cast<std::size_t>(n);

  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t e = 0; e < edges.size(); ++e) edge_index[edges[e]] = static_cast<int>(e);
  UnionFind euf(edges.size());
  UnionFind auf(2 * edges.size());  // arc 2e = (u,v), 2e+1 = (v,u)
  for (const Perm& g : group.generators())
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      int iu = g(u), iv = g(v);
      bool flipped = iu > iv;
      if (flipped) std::swap(iu, iv);
      int f = edge_index.at({iu, iv});
      euf.unite(static_cast<int>(e), f);
      auf.unite(static_cast<int>(2 * e), static_cast<int>(2 * static_cast<std::size_t>(f)) + (flipped ? 1 : 0));
      auf.unite(static_cast<int>(2 * e) + 1, static_cast<int>(2 * static_cast<std::size_t>(f)) + (flipped ? 0 : 1));
    }
  out.facts.edge_transitive = euf.count() == 1;
  out.facts.arc_orbit_count = auf.count();
  if (out.facts.vertex_transitive)
    out.facts.stabilizer_order = group.order() / static_cast<std::size_t>(n);
  else
    out.facts.stabilizer_order = point_stabilizer(group, 0).order();

  if (!out.facts.connected) out.reason = "graph not connected";
  else if (!out.facts.regular4) out.reason = "graph not 4-regular (valency)";
  else if (!out.facts.vertex_transitive) out.reason = "not vertex-transitive";
  else if (!out.facts.edge_transitive) out.reason = "not edge-transitive";
  else if (out.facts.arc_orbit_count == 1) out.reason = "arc-transitive (1 arc orbit)";
  else if (out.facts.arc_orbit_count != 2)
    out.reason = std::to_string(out.facts.arc_orbit_count) + " arc orbits";
  else out.member = true;
  return out;
}

PairOG4 verify_og4(const UGraph& graph, const PermGroup& group) {
  Og4Check c = check_og4(graph, group);
  if (!c.action_ok) throw NotAnAction(c.reason);
  if (!c.member) throw NotOG4(c.reason);
  return PairOG4{graph, group, c.facts};
}

std::string orientation_name(Orientation o) {
  switch (o) {
    case Orientation::Oriented: return "oriented";
    case Orientation::Unoriented: return "unoriented";
    case Orientation::NotApplicable: return "n/a";
  }
  return "?";
}

VertexPartition orbit_partition(const Subgroup& n, int domain_size) {
  return VertexPartition::from_cells(domain_size, orbits(n.generating_set(), domain_size));
}

Subgroup kernel_of_partition_action(const PermGroup& group, const VertexPartition& p) {
  if (static_cast<int>(p.cell_of.size()) != group.degree())
    throw std::invalid_argument("kernel_of_partition_action: partition domain mismatch");
  for (const Perm& g : group.generators())
    for (const auto& cell : p.cells) {
      int target = p.cell_of[static_cast<std::size_t>(g(cell.front()))];
      for (int v : cell)
        if (p.cell_of[static_cast<std::size_t>(g(v))] != target)
          throw PartitionNotInvariant("partition is not group-invariant");
    }
  std::vector<int> members;
  const auto& elems = group.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    bool fixes_all = true;
    for (int v = 0; v < group.degree() && fixes_all; ++v)
      fixes_all = p.cell_of[static_cast<std::size_t>(elems[i](v))] ==
                  p.cell_of[static_cast<std::size_t>(v)];
    if (fixes_all) members.push_back(static_cast<int>(i));
  }
  return Subgroup(group, std::move(members));
}

namespace {

PermGroup induced_cell_group(const PermGroup& group, const VertexPartition& p) {
  std::vector<Perm> cell_gens;
  for (const Perm& g : group.generators()) {
    std::vector<int> img(p.cell_count());
    for (std::size_t c = 0; c < p.cell_count(); ++c)
      img[c] = p.cell_of[static_cast<std::size_t>(g(p.cells[c].front()))];
    cell_gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<int>(p.cell_count()), std::move(cell_gens));
}

}  // namespace

QuotientReport normal_quotient(const PairOG4& pair, const Subgroup& n) {
  if (n.is_trivial()) throw std::invalid_argument("normal_quotient: subgroup is trivial");
  if (!is_normal(pair.group, n)) throw std::invalid_argument("normal_quotient: subgroup not normal");

  VertexPartition p = orbit_partition(n, pair.graph.vertex_count());
  bool intra = false;
  UGraph q = quotient_graph(pair.graph, p, &intra);
  Subgroup kernel = kernel_of_partition_action(pair.group, p);

  QuotientReport rep{n,       std::move(p), std::move(q), std::move(kernel), DegeneracyClass{},
                     Orientation::NotApplicable, 0,       intra,        false,        {}};
  rep.degeneracy = classify_degenerate(rep.quotient);
  rep.induced_group_order = pair.group.order() / rep.kernel.order();

  if (rep.degeneracy.kind == DegKind::Cycle) {
    const auto len = static_cast<std::size_t>(rep.degeneracy.cycle_length);
    if (rep.induced_group_order == len) rep.orientation = Orientation::Oriented;
    else if (rep.induced_group_order == 2 * len) rep.orientation = Orientation::Unoriented;
    else
      throw std::logic_error("normal_quotient: induced group order is neither r nor 2r");
  } else if (rep.degeneracy.kind == DegKind::NonDegenerate) {
    Og4Check c = check_og4(rep.quotient, induced_cell_group(pair.group, rep.partition));
    rep.quotient_in_og4 = c.member;
    rep.og4_failure = c.reason;
  }
  return rep;
}

IndependenceResult are_independent(const PairOG4& pair, const QuotientReport& a,
                                   const QuotientReport& b) {
  if (a.degeneracy.kind != DegKind::Cycle || b.degeneracy.kind != DegKind::Cycle)
    throw std::invalid_argument("are_independent: both quotients must be cycles");
  Subgroup k = intersection(a.kernel, b.kernel);
  IndependenceResult out;
  out.kernel_intersection_trivial = k.is_trivial();
  DegeneracyClass deg;
  if (k.is_trivial()) {
    deg = classify_degenerate(pair.graph);
  } else {
    VertexPartition p = orbit_partition(k, pair.graph.vertex_count());
    deg = classify_degenerate(quotient_graph(pair.graph, p));
  }
  out.independent = deg.kind != DegKind::Cycle;
  return out;
}

CheckRecord stabilizer_kernel_relation(const PairOG4& pair, const QuotientReport& report) {
  if (report.degeneracy.kind != DegKind::Cycle)
    throw std::invalid_argument("stabilizer_kernel_relation: quotient is not a cycle");
  CheckRecord rec;
  const auto& elems = pair.group.elements();
  const int id = pair.group.identity_index();
  for (std::size_t e = 0; e < elems.size(); ++e) {
    if (static_cast<int>(e) == id) continue;
    bool in_kernel = report.kernel.contains(static_cast<int>(e));
    for (int v = 0; v < pair.group.degree(); ++v) {
      if (elems[e](v) != v) continue;
      if (report.orientation == Orientation::Oriented && !in_kernel) {
        rec.ok = false;
        rec.detail = "oriented quotient: stabilizer element escapes the kernel at vertex " +
                     std::to_string(v);
        return rec;
      }
      if (report.orientation == Orientation::Unoriented && in_kernel) {
        rec.ok = false;
        rec.detail = "unoriented quotient: stabilizer meets the kernel at vertex " +
                     std::to_string(v);
        return rec;
      }
    }
  }
  return rec;
}

}  // namespace og4
