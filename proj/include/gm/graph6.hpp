#ifndef GM_GRAPH6_HPP
#define GM_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "gm/graph.hpp"

namespace gm {

struct Graph6Error : std::runtime_error {
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

// Standard graph6 encoding: order header (1, 4 or 8 bytes), then the upper
// triangle column by column — bit order (0,1),(0,2),(1,2),(0,3),... — packed
// big-endian into 6-bit groups, each offset by 63.  Bit-exact with the usual
// catalog tools.
std::string to_graph6(const Graph& g);

// Throws Graph6Error on malformed input (bad header, bytes outside 63..126,
// truncated or overlong payload).
Graph parse_graph6(std::string_view text);

}  // namespace gm

#endif
