#ifndef EQLINES_SUBGRAPH_HPP
#define EQLINES_SUBGRAPH_HPP

#include "eqlines/graph.hpp"

namespace eqlines {

/// True iff host has a (not necessarily induced) subgraph isomorphic to
/// pattern. Backtracking over injective maps with degree pruning.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// Induced variant: mapped non-edges of pattern must be non-edges of host.
bool contains_induced_subgraph(const Graph& host, const Graph& pattern);

}  // namespace eqlines

#endif
