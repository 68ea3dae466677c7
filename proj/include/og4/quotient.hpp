#ifndef OG4_QUOTIENT_HPP
#define OG4_QUOTIENT_HPP

#include <stdexcept>
#include <string>

#include "og4/graph.hpp"
#include "og4/group.hpp"

namespace og4 {

struct NotAnAction : std::runtime_error {
  explicit NotAnAction(const std::string& what) : std::runtime_error(what) {}
};

struct NotOG4 : std::runtime_error {
  explicit NotOG4(const std::string& what) : std::runtime_error(what) {}
};

struct PartitionNotInvariant : std::runtime_error {
  explicit PartitionNotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct OG4Facts {
  bool connected = false;
  bool regular4 = false;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  std::size_t arc_orbit_count = 0;
  std::size_t stabilizer_order = 0;
};

struct Og4Check {
  bool action_ok = false;
  bool member = false;
  std::string reason;  // first failed condition, empty when member
  OG4Facts facts;
};

/// Validates the action edge-by-edge and tests OG(4) membership:
/// connected, 4-regular, vertex- and edge-transitive, exactly 2 arc orbits.
Og4Check check_og4(const UGraph& graph, const PermGroup& group);

struct PairOG4 {
  UGraph graph;
  PermGroup group;
  OG4Facts facts;
};

/// check_og4 that throws NotAnAction / NotOG4 instead of reporting.
PairOG4 verify_og4(const UGraph& graph, const PermGroup& group);

enum class Orientation { Oriented, Unoriented, NotApplicable };
std::string orientation_name(Orientation o);

struct QuotientReport {
  Subgroup acting;           // N
  VertexPartition partition; // N-orbits
  UGraph quotient;
  Subgroup kernel;           // kernel of the G-action on the N-orbits
  DegeneracyClass degeneracy;
  Orientation orientation = Orientation::NotApplicable;
  std::size_t induced_group_order = 0;  // |G| / |kernel|
  bool had_intra_cell_edges = false;
  bool quotient_in_og4 = false;   // checked when NonDegenerate
  std::string og4_failure;        // trichotomy diagnostic, empty normally
};

VertexPartition orbit_partition(const Subgroup& n, int domain_size);

/// All elements fixing every cell setwise. Throws PartitionNotInvariant.
Subgroup kernel_of_partition_action(const PermGroup& group, const VertexPartition& p);

/// Quotient of the pair by a nontrivial normal subgroup, with kernel,
/// degeneracy class and (for cycles) the oriented/unoriented tag decided by
/// the induced group order (r vs 2r).
QuotientReport normal_quotient(const PairOG4& pair, const Subgroup& n);

struct IndependenceResult {
  bool independent = false;
  bool kernel_intersection_trivial = false;
};

/// Two cyclic quotients are independent iff the quotient by the
/// intersection of their kernels is not a cycle.
IndependenceResult are_independent(const PairOG4& pair, const QuotientReport& a,
                                   const QuotientReport& b);

struct CheckRecord {
  bool ok = true;
  std::string detail;
};

/// Oriented cycle quotient: G_alpha <= kernel; unoriented: G_alpha
/// intersects the kernel trivially. Checked for every vertex.
CheckRecord stabilizer_kernel_relation(const PairOG4& pair, const QuotientReport& report);

}  // namespace og4

#endif
