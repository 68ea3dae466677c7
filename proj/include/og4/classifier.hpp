#ifndef OG4_CLASSIFIER_HPP
#define OG4_CLASSIFIER_HPP

#include <string>
#include <utility>
#include <vector>

#include "og4/families.hpp"
#include "og4/quotient.hpp"

namespace og4 {

enum class Mode { Fast, Exhaustive, Auto };
std::string mode_name(Mode m);

/// Auto resolves to Exhaustive up to this group order, Fast above.
inline constexpr std::size_t kAutoExhaustiveLimit = 500;
Mode resolve_mode(Mode m, std::size_t group_order);

enum class BasicType {
  NotBasic,
  Quasiprimitive,
  Biquasiprimitive,
  CycleOriented,
  CycleUnoriented,
  CycleIndependent,
};
std::string basic_type_name(BasicType t);

struct BasicReport {
  Family family = Family::Row1;
  int r = 0;
  int s = 0;
  Mode mode_used = Mode::Exhaustive;
  bool is_basic = false;
  BasicType type = BasicType::NotBasic;
  std::vector<QuotientReport> witnesses;  // one per examined normal subgroup
  int not_basic_witness = -1;             // index into witnesses
  bool has_independent_cycle_pair = false;
  std::pair<int, int> independent_pair{-1, -1};
  /// Set when cyclic quotients mix orientations without an independent
  /// pair; treated as a hard failure by the sweep.
  bool orientation_mix_violation = false;
};

/// Quotients by every nontrivial normal subgroup (Exhaustive) or by the
/// minimal ones only (Fast; sound by quotient monotonicity).
BasicReport analyze_basic(const PairOG4& pair, Family family, int r, int s, Mode mode = Mode::Auto);

/// The classification predicate: pure arithmetic on (family, r, s) with
/// p, q ranging over odd primes.
///   Row1: (4,p), (p,4), (p,q)      Row2: (4,4), (4,2p), (2p,4)
///   Row3: (p,4), (p,2q)            Row4: (4,4), (4,2p), (2p,4), (2p,2q)
///   Row5: (p,q)
bool theorem_predicate(Family f, int r, int s);

bool is_odd_prime(int n);

struct SweepCell {
  Family family = Family::Row1;
  int r = 0;
  int s = 0;
  bool swapped = false;  // Row3 with r even / s odd, realized as (s, r)
  bool predicted = false;
  bool computed = false;
  bool agree = false;
  bool skipped = false;
  std::string skip_reason;
  std::size_t group_order = 0;
  BasicType type = BasicType::NotBasic;
  bool orientation_mix_violation = false;
};

struct SweepReport {
  int max_r = 0;
  int max_s = 0;
  Mode mode = Mode::Auto;
  std::vector<SweepCell> cells;
  std::size_t mismatch_count = 0;
  std::size_t skipped_count = 0;
};

/// Every family cell with 3 <= r, s <= bounds (plus the swapped Row3
/// cells); compares computed basic-of-independent-cycle-type status with
/// theorem_predicate. Cells are independent; the parallel path runs them
/// under OpenMP, the serial path is the reference.
SweepReport run_sweep(int max_r, int max_s, Mode mode, bool parallel);
inline SweepReport sweep_serial(int max_r, int max_s, Mode mode = Mode::Auto) {
  return run_sweep(max_r, max_s, mode, false);
}
inline SweepReport sweep_parallel(int max_r, int max_s, Mode mode = Mode::Auto) {
  return run_sweep(max_r, max_s, mode, true);
}

struct LemmaCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Minimal-normal-subgroup profile of H(r,s) against the stated case list:
/// (p,4)/(p,2q): {mu, nu^2}; (2p,2q): {mu^2, mu^p, nu^2};
/// (2p,4): {mu^2, mu^p, nu^2, mu^p nu^2}; (4,2p): {mu^2, nu^2}.
LemmaCheck h_minimal_normal_profile(int r, int s);

/// Order-2 normal subgroups of a basic pair in Rows 1-4 must swap (0,0)
/// with one of (2,0), (2,2), (0,2), and one of r, s must equal 4.
LemmaCheck length2_orbit_check(const FamilyPair& pair, const std::vector<Subgroup>& normals);

/// All lemma checks applicable to (family, r, s).
std::vector<LemmaCheck> lemma_profiles(Family f, int r, int s);

}  // namespace og4

#endif
