#ifndef OG4_GRAPH6_HPP
#define OG4_GRAPH6_HPP

#include <string>

#include "og4/graph.hpp"

namespace og4 {

/// Standard graph6 byte format (short and 4-byte order forms, n <= 258047).
std::string to_graph6(const UGraph& g);
UGraph from_graph6(const std::string& s);

}  // namespace og4

#endif
