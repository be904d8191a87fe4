#ifndef EQLINES_REALSOLVE_HPP
#define EQLINES_REALSOLVE_HPP

#include <vector>

#include "eqlines/graph.hpp"

namespace eqlines {

/// All eigenvalues of a symmetric matrix (row-major), descending.
std::vector<double> sym_eigenvalues(const std::vector<double>& rowmajor, int n);

/// Descending eigenvalues of a symmetric long double matrix.
std::vector<long double> sym_eigenvalues_ld(const std::vector<long double>& rowmajor,
                                            int n);

/// Eigenvalues of the adjacency matrix of g, descending.
std::vector<double> adjacency_eigenvalues(const Graph& g);

/// Approximate Perron vector of a connected graph (componentwise positive,
/// max-normalized). Double precision.
std::vector<double> perron_vector(const Graph& g);

/// A few steps of Rayleigh-quotient inverse iteration in long double,
/// starting from v (size n). Improves the Perron-vector estimate.
std::vector<long double> rayleigh_refine(const Graph& g,
                                         const std::vector<long double>& v,
                                         int steps);

}  // namespace eqlines

#endif
