#ifndef EQLINES_ENUMERATE_HPP
#define EQLINES_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines {

struct EnumSpec {
    int max_vertices = 1;
    std::optional<int> max_degree;
    std::optional<int> max_diameter;
    std::optional<int> max_radius;
    bool connected_only = true;

    void validate() const;
};

struct EnumLimits {
    uint64_t max_extensions = 10'000'000;  // canonical-form evaluations
};

struct EnumResult {
    std::vector<Graph> graphs;     // one canonical representative per class
    bool complete = true;          // false when the extension budget ran out
    uint64_t extensions_used = 0;
};

/// Exactly one representative per isomorphism class meeting the requested
/// bounds, ordered by (order, certificate). Representative graphs carry
/// their canonical labeling.
EnumResult enumerate_graphs(const EnumSpec& spec, const EnumLimits& limits = {});

/// Convenience wrapper with connected_only forced on.
EnumResult enumerate_connected(EnumSpec spec, const EnumLimits& limits = {});

}  // namespace eqlines

#endif
