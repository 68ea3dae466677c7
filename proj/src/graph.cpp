#include "og4/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace og4 {

UGraph UGraph::build(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 1) throw std::invalid_argument("UGraph: vertex count must be positive");
  UGraph g;
  g.adj_.resize(static_cast<std::size_t>(vertex_count));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw std::invalid_argument("UGraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("UGraph: loop edge");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::size_t UGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj_) total += nbrs.size();
  return total / 2;
}

std::vector<std::pair<int, int>> UGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool UGraph::adjacent(int u, int v) const {
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexPartition VertexPartition::from_cells(int n, std::vector<std::vector<int>> cells) {
  VertexPartition p;
  p.cell_of.assign(static_cast<std::size_t>(n), -1);
  for (auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("VertexPartition: empty cell");
    std::sort(cell.begin(), cell.end());
  }
  std::sort(cells.begin(), cells.end());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (int v : cells[c]) {
      if (v < 0 || v >= n || p.cell_of[static_cast<std::size_t>(v)] != -1)
        throw std::invalid_argument("VertexPartition: cells not disjoint / out of range");
      p.cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  for (int c : p.cell_of)
    if (c == -1) throw std::invalid_argument("VertexPartition: cells do not cover the domain");
  p.cells = std::move(cells);
  return p;
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cells.push_back({v});
  return from_cells(n, std::move(cells));
}

DegeneracyClass classify_degenerate(const UGraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {DegKind::K1, 0};
  if (n == 2) return g.adjacent(0, 1) ? DegeneracyClass{DegKind::K2, 0}
                                      : DegeneracyClass{DegKind::NonDegenerate, 0};
  if (is_regular(g, 2) && is_connected(g)) return {DegKind::Cycle, n};
  return {DegKind::NonDegenerate, 0};
}

UGraph quotient_graph(const UGraph& g, const VertexPartition& p, bool* had_intra_cell_edges) {
  if (static_cast<int>(p.cell_of.size()) != g.vertex_count())
    throw std::invalid_argument("quotient_graph: partition does not match graph");
  bool intra = false;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int cu = p.cell_of[static_cast<std::size_t>(u)];
    int cv = p.cell_of[static_cast<std::size_t>(v)];
    if (cu == cv) {
      intra = true;
      continue;
    }
    edges.emplace_back(cu, cv);
  }
  if (had_intra_cell_edges) *had_intra_cell_edges = intra;
  return UGraph::build(static_cast<int>(p.cell_count()), edges);
}

UGraph standard_double_cover(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  return UGraph::build(2 * n, edges);
}

InducedSubgraph induced_subgraph(const UGraph& g, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  InducedSubgraph out;
  out.new_of_old.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  out.old_of_new = keep;
  std::sort(out.old_of_new.begin(), out.old_of_new.end());
  out.old_of_new.erase(std::unique(out.old_of_new.begin(), out.old_of_new.end()),
                       out.old_of_new.end());
  for (std::size_t i = 0; i < out.old_of_new.size(); ++i) {
    int v = out.old_of_new[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    out.new_of_old[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int nu = out.new_of_old[static_cast<std::size_t>(u)];
    int nv = out.new_of_old[static_cast<std::size_t>(v)];
    if (nu != -1 && nv != -1) edges.emplace_back(nu, nv);
  }
  out.graph = UGraph::build(static_cast<int>(out.old_of_new.size()), edges);
  return out;
}

bool is_connected(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> work{0};
  seen[0] = 1;
  int count = 1;
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        work.push_back(w);
      }
  }
  return count == n;
}

bool is_regular(const UGraph& g, int k) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

bool is_bipartite(const UGraph& g, std::vector<int>* coloring) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (color[static_cast<std::size_t>(start)] != -1) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::deque<int> work{start};
    while (!work.empty()) {
      int v = work.front();
      work.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          work.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = std::move(color);
  return true;
}

}  // namespace og4
