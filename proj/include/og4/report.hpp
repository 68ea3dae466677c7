#ifndef OG4_REPORT_HPP
#define OG4_REPORT_HPP

#include <string>

#include "json.hpp"
#include "og4/classifier.hpp"

namespace og4 {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string degeneracy_name(const DegeneracyClass& d);

Json subgroup_json(const Subgroup& sub);
Json facts_json(const OG4Facts& facts);
Json quotient_json(const QuotientReport& rep);

/// `analyze` command payload; golden-tested, keep byte-stable.
Json analyze_json(const FamilyPair& pair, const PairOG4& og4, const BasicReport& rep,
                  bool swapped);
Json sweep_json(const SweepReport& rep);
Json lemmas_json(Family f, int r, int s, const std::vector<LemmaCheck>& checks);
Json construct_json(const FamilyPair& pair);

/// Human-readable sweep summary, one row per classification line.
std::string sweep_table(const SweepReport& rep);

}  // namespace og4

#endif
