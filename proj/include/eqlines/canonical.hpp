#ifndef EQLINES_CANONICAL_HPP
#define EQLINES_CANONICAL_HPP

#include <string>
#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines {

/// Isomorphism-invariant certificate: equal certs iff isomorphic.
struct CanonicalForm {
    std::string cert;
    int n = 0;

    bool operator==(const CanonicalForm& o) const { return n == o.n && cert == o.cert; }
    bool operator<(const CanonicalForm& o) const {
        if (n != o.n) return n < o.n;
        return cert < o.cert;
    }
};

CanonicalForm canonical_form(const Graph& g);

/// A labeling perm (perm[old] = new) such that g.relabeled(perm) realizes
/// the certificate. Deterministic for a given input.
std::vector<int> canonical_labeling(const Graph& g);

/// g relabeled into its canonical form.
Graph canonical_graph(const Graph& g);

/// Certificate and canonical representative from a single search.
std::pair<CanonicalForm, Graph> canonicalize(const Graph& g);

}  // namespace eqlines

#endif
