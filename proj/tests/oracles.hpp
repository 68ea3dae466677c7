// Independent brute-force oracles used only by the tests. These deliberately
// avoid the library's normal-subgroup algorithms: subgroups are found by
// exhaustive closure and normality by elementwise conjugation.

#ifndef OG4_TEST_ORACLES_HPP
#define OG4_TEST_ORACLES_HPP

#include <vector>

#include "og4/graph.hpp"
#include "og4/group.hpp"

namespace og4::testing {

/// Every subgroup of g, as sorted element-index sets (closure lattice;
/// intended for |g| <= ~60).
std::vector<std::vector<int>> oracle_all_subgroups(const PermGroup& g);

/// Every normal subgroup of g, found as subgroup closures of unions of
/// conjugacy classes (trivial and full group included). Handles the
/// direct-product groups up to order ~600 used by the acceptance run.
std::vector<std::vector<int>> oracle_normal_subgroups(const PermGroup& g);

/// Minimal nontrivial members of oracle_normal_subgroups.
std::vector<std::vector<int>> oracle_minimal_normals(const PermGroup& g);

bool oracle_is_normal(const PermGroup& g, const std::vector<int>& sub);

/// Backtracking graph isomorphism (intended for <= ~20 vertices).
bool oracle_isomorphic(const UGraph& a, const UGraph& b);

/// Natural permutation representations on disjoint point sets.
PermGroup dihedral_group(int r);                          // D_r on r points
PermGroup cyclic_group(int s);                            // C_s on s points
PermGroup product_group(const PermGroup& a, const PermGroup& b);

UGraph cycle_graph(int n);

}  // namespace og4::testing

#endif
