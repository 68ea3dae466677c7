#ifndef OG4_GROUP_HPP
#define OG4_GROUP_HPP

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "og4/perm.hpp"

namespace og4 {

inline constexpr std::size_t kDefaultElementCap = 100000;

struct ElementCapExceeded : std::runtime_error {
  explicit ElementCapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeds element cap " + std::to_string(cap)) {}
};

/// Breadth-first closure of a generating set. Result is sorted
/// lexicographically by image table.
std::vector<Perm> generate_elements(const std::vector<Perm>& gens,
                                    std::size_t cap = kDefaultElementCap);

/// A finitely generated permutation group with a cached, canonically sorted
/// element list. Cheap to copy (shared immutable state); the lazy caches are
/// built at most once and are safe to trigger concurrently.
class PermGroup {
public:
  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t cap = kDefaultElementCap);

  int degree() const;
  const std::vector<Perm>& generators() const;

  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }

  /// Index into elements(), or -1 if absent.
  int index_of(const Perm& p) const;
  int identity_index() const;
  const std::vector<int>& generator_indices() const;

  int mult(int a, int b) const;
  int inv(int a) const;

  bool shares_data(const PermGroup& other) const { return d_ == other.d_; }

private:
  struct Data;
  std::shared_ptr<Data> d_;
};

/// A subgroup held as a canonical sorted set of element indices into the
/// parent's element list. Equality is element-set equality.
class Subgroup {
public:
  Subgroup(PermGroup parent, std::vector<int> sorted_indices);

  const PermGroup& parent() const { return parent_; }
  const std::vector<int>& indices() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  bool is_trivial() const { return elems_.size() == 1; }

  bool contains(int index) const;
  bool subset_of(const Subgroup& other) const;
  bool proper_subset_of(const Subgroup& other) const;

  std::vector<Perm> element_perms() const;
  /// A small generating set (greedy), handy for reports.
  std::vector<Perm> generating_set() const;

  bool operator==(const Subgroup& other) const;
  bool operator!=(const Subgroup& other) const { return !(*this == other); }

private:
  PermGroup parent_;
  std::vector<int> elems_;
};

Subgroup trivial_subgroup(const PermGroup& g);
Subgroup full_subgroup(const PermGroup& g);

/// Subgroup generated by the given element indices.
Subgroup subgroup_generated(const PermGroup& g, const std::vector<int>& seed);
/// Same, seeding from explicit permutations (each must lie in g).
Subgroup subgroup_from_perms(const PermGroup& g, const std::vector<Perm>& gens);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& h, int g);

bool is_normal(const PermGroup& g, const Subgroup& h);

/// Smallest normal subgroup of g containing the seed elements.
Subgroup normal_closure(const PermGroup& g, const std::vector<int>& seed);

/// Exactly the minimal nontrivial normal subgroups, found as minimal
/// elements among normal closures of prime-order cyclic subgroups.
std::vector<Subgroup> minimal_normal_subgroups(const PermGroup& g);

/// Every normal subgroup (trivial and full included): join-closure of the
/// normal closures of cyclic subgroups.
std::vector<Subgroup> all_normal_subgroups(const PermGroup& g);

Subgroup centralizer(const PermGroup& g, const Subgroup& h);
Subgroup center(const PermGroup& g);

/// Orbits of the group generated by gens on {0,...,n-1}; cells and the cell
/// list are sorted.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int n);
std::vector<std::vector<int>> orbits(const PermGroup& g);
std::vector<int> orbit_of(const std::vector<Perm>& gens, int n, int x);

Subgroup point_stabilizer(const PermGroup& g, int x);

/// Cheap isomorphism-type label for cyclic / dihedral recognition.
struct IsoTag {
  std::size_t order = 1;
  bool cyclic = false;
  bool dihedral = false;
  std::string name() const;
};

IsoTag iso_tag(const Subgroup& h);

}  // namespace og4

#endif
