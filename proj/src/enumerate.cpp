#include "eqlines/enumerate.hpp"

#include <map>
#include <stdexcept>

#include "eqlines/canonical.hpp"

namespace eqlines {

void EnumSpec::validate() const {
    if (max_vertices < 1 || max_vertices > kMaxVertices)
        throw std::invalid_argument("EnumSpec: max_vertices must be in [1, 64]");
    for (auto b : {max_degree, max_diameter, max_radius})
        if (b && *b < 0) throw std::invalid_argument("EnumSpec: bounds must be >= 0");
}

namespace {

bool passes_post_filters(const Graph& g, const EnumSpec& spec) {
    if (spec.max_diameter && g.connected() && g.diameter() > *spec.max_diameter)
        return false;
    if (spec.max_radius && g.connected() && g.radius() > *spec.max_radius)
        return false;
    if ((spec.max_diameter || spec.max_radius) && !g.connected())
        return false;  // metric bounds only make sense on connected graphs
    return true;
}

}  // namespace

// Generation by vertex extension with canonical-certificate dedup per order.
// Every graph on k+1 vertices arises from deleting a non-cut vertex, which
// preserves connectivity and the (hereditary) degree bound, so extending
// representatives on k vertices reaches every class.
EnumResult enumerate_graphs(const EnumSpec& spec, const EnumLimits& limits) {
    spec.validate();
    EnumResult result;
    std::vector<Graph> layer;  // canonical representatives at current order
    layer.push_back(Graph(1));
    auto emit_layer = [&](const std::vector<Graph>& graphs) {
        for (const Graph& g : graphs)
            if (passes_post_filters(g, spec)) result.graphs.push_back(g);
    };
    emit_layer(layer);
    for (int k = 1; k < spec.max_vertices; ++k) {
        std::map<CanonicalForm, Graph> next;
        for (const Graph& parent : layer) {
            uint64_t eligible = 0;  // endpoints that can gain one more edge
            for (int v = 0; v < k; ++v)
                if (!spec.max_degree || parent.degree(v) < *spec.max_degree)
                    eligible |= uint64_t{1} << v;
            uint64_t full = (uint64_t{1} << k) - 1;
            uint64_t start = spec.connected_only ? 1 : 0;
            for (uint64_t subset = start; subset <= full; ++subset) {
                if (subset & ~eligible) continue;
                if (spec.max_degree &&
                    std::popcount(subset) > *spec.max_degree)
                    continue;
                Graph child(k + 1);
                for (int u = 0; u < k; ++u)
                    for_each_bit(parent.neighbors(u), [&](int v) {
                        if (u < v) child.add_edge(u, v);
                    });
                for_each_bit(subset, [&](int v) { child.add_edge(k, v); });
                if (spec.connected_only && !child.connected()) continue;
                if (++result.extensions_used > limits.max_extensions) {
                    result.complete = false;  // partial: layers so far are intact
                    return result;
                }
                auto [cf, canon] = canonicalize(child);
                if (!next.count(cf)) next.emplace(std::move(cf), std::move(canon));
            }
        }
        layer.clear();
        for (auto& [cf, g] : next) layer.push_back(g);  // already cert-sorted
        emit_layer(layer);
    }
    return result;
}

EnumResult enumerate_connected(EnumSpec spec, const EnumLimits& limits) {
    spec.connected_only = true;
    return enumerate_graphs(spec, limits);
}

}  // namespace eqlines
