#ifndef OG4_GRAPH_HPP
#define OG4_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

namespace og4 {

/// Finite simple undirected graph; neighbor lists kept sorted.
class UGraph {
public:
  static UGraph build(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  std::size_t edge_count() const;
  /// Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  bool adjacent(int u, int v) const;

  bool operator==(const UGraph&) const = default;

private:
  std::vector<std::vector<int>> adj_;
};

/// Partition of a vertex set into nonempty disjoint covering cells.
struct VertexPartition {
  std::vector<int> cell_of;
  std::vector<std::vector<int>> cells;

  static VertexPartition from_cells(int n, std::vector<std::vector<int>> cells);
  static VertexPartition singletons(int n);
  std::size_t cell_count() const { return cells.size(); }
};

enum class DegKind { K1, K2, Cycle, NonDegenerate };

struct DegeneracyClass {
  DegKind kind = DegKind::NonDegenerate;
  int cycle_length = 0;  // set only for Cycle
  bool operator==(const DegeneracyClass&) const = default;
};

/// K1 / K2 / C_r (connected 2-regular, r >= 3) / everything else.
DegeneracyClass classify_degenerate(const UGraph& g);

/// Simple quotient graph on the cells; intra-cell edges never become loops.
/// Optionally reports whether any intra-cell edge was discarded.
UGraph quotient_graph(const UGraph& g, const VertexPartition& p,
                      bool* had_intra_cell_edges = nullptr);

/// Standard (canonical) double cover: vertex x_d at index d*n + x.
UGraph standard_double_cover(const UGraph& g);

struct InducedSubgraph {
  UGraph graph;
  std::vector<int> new_of_old;  // -1 for dropped vertices
  std::vector<int> old_of_new;
};

InducedSubgraph induced_subgraph(const UGraph& g, const std::vector<int>& keep);

bool is_connected(const UGraph& g);
bool is_regular(const UGraph& g, int k);
/// Two-coloring witness returned when bipartite.
bool is_bipartite(const UGraph& g, std::vector<int>* coloring = nullptr);

}  // namespace og4

#endif
