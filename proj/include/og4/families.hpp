#ifndef OG4_FAMILIES_HPP
#define OG4_FAMILIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"
#include "og4/group.hpp"

namespace og4 {

/// The five graph-group families (rows of the classification table).
enum class Family { Row1, Row2, Row3, Row4, Row5 };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);
const std::vector<Family>& all_families();

/// Parameter conditions: Row1 at least one of r,s odd; Row2/Row4 both even;
/// Row3 r odd, s even; Row5 both odd. Always r,s >= 3.
bool valid_params(Family f, int r, int s);
std::string param_requirement(Family f);

struct Coord {
  int i = 0;
  int j = 0;
  int delta = 0;
  bool operator==(const Coord&) const = default;
};

/// A family graph together with its vertex labelling over Z_r x Z_s
/// (optionally doubled by Z_2, optionally restricted to X+).
struct LabeledGraph {
  UGraph graph;
  int r = 0;
  int s = 0;
  bool doubled = false;
  bool plus = false;
  std::vector<Coord> coord_of;
  std::vector<int> sub_of_full;  // full-lattice index -> vertex index (-1 if dropped)

  int index_of(Coord c) const;  // -1 if not a vertex
};

LabeledGraph gamma(int r, int s);
LabeledGraph gamma_plus(int r, int s);
LabeledGraph gamma_2(int r, int s);

/// Coordinate self-maps, composed left to right; realized as permutations of
/// a labeled vertex set (coordinates reduced mod r, s, 2).
using CoordMap = std::function<Coord(Coord)>;

CoordMap map_mu(int power = 1);
CoordMap map_nu(int power = 1);
/// sigma acts as (i,j) -> (-i,j) on the flat lattice and as
/// (i,j)_d -> (i,-j)_{d+1} on the doubled one.
CoordMap map_sigma(bool doubled);
CoordMap map_tau();
CoordMap compose_maps(std::vector<CoordMap> maps);

/// Throws if the map does not preserve the labeled vertex set.
Perm realize_map(const LabeledGraph& lab, const CoordMap& f);

struct FamilyPair {
  Family family = Family::Row1;
  int r = 0;
  int s = 0;
  LabeledGraph lab;
  PermGroup group;
  std::vector<std::pair<std::string, Subgroup>> named;

  const Subgroup& named_subgroup(const std::string& name) const;
  bool has_named(const std::string& name) const;
};

/// Builds the graph, realizes the family's generators, validates every
/// generator as a graph automorphism and the graph as connected 4-regular,
/// and populates the named subgroups of the family.
FamilyPair make_family_pair(Family f, int r, int s,
                            std::size_t element_cap = kDefaultElementCap);

/// <mu^t> (t | r) and <nu^t> (t | s) as subgroups of the pair's group.
Subgroup mu_power_subgroup(const FamilyPair& pair, int t);
Subgroup nu_power_subgroup(const FamilyPair& pair, int t);

/// H(r,s) = <mu, sigma nu, tau> on Gamma(r,s), defined for any r >= 3 and
/// even s >= 4; unlike Row 3 pairs it does not require r odd.
struct HGroupInstance {
  LabeledGraph lab;
  PermGroup group;
};
HGroupInstance h_group(int r, int s);

}  // namespace og4

#endif
