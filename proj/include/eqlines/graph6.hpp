#ifndef EQLINES_GRAPH6_HPP
#define EQLINES_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "eqlines/graph.hpp"

namespace eqlines {

struct Graph6ParseError : std::runtime_error {
    Graph6ParseError(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

/// Decode one short-form graph6 record (n <= 62).
Graph parse_graph6(std::string_view text);

/// Encode in short-form graph6; requires g.order() <= 62.
std::string write_graph6(const Graph& g);

}  // namespace eqlines

#endif
