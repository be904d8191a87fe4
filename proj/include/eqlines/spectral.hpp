#ifndef EQLINES_SPECTRAL_HPP
#define EQLINES_SPECTRAL_HPP

#include "eqlines/algebraic.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/poly.hpp"

namespace eqlines {

/// Certified enclosure of the spectral radius: lo <= lambda1(G) <= hi with
/// exact rational endpoints.
struct SpectralBracket {
    Rational lo, hi;
    double value() const {
        Rational mid = (lo + hi) / 2;
        return mid.get_d();
    }
    Rational width() const { return hi - lo; }
};

/// Spectral radius with a certified two-sided error <= tol. Disconnected
/// input takes the maximum over components. Brackets come from exact
/// Collatz-Wielandt quotients of a rationalized Perron vector, with an
/// exact Sturm fallback when the vector is not accurate enough.
SpectralBracket spectral_radius(const Graph& g,
                                const Rational& tol = Rational(1, 1000000000));

/// lambda1(G) as an exact algebraic number: characteristic polynomial plus
/// an interval isolating its largest real root.
AlgebraicReal spectral_radius_exact(const Graph& g);

enum class Trichotomy { Less, Equal, Greater };
const char* to_string(Trichotomy t);

/// Exact trichotomy of lambda1(G) against an algebraic number.
Trichotomy compare_radius(const Graph& g, const AlgebraicReal& lam);
Trichotomy compare_radius(const Graph& g, const Rational& lam);

/// Multiplicity of lam as a root of char_poly(g); 0 when not a root.
int eigen_multiplicity(const Graph& g, const AlgebraicReal& lam);

/// Replace edge (u,v) by a path u - z - v through a new vertex z.
Graph subdivide_edge(const Graph& g, int u, int v);

/// True iff the edge lies on an end path: a pendant chain x1,...,xk with
/// degrees 1,2,...,2 whose last edge is (x_{k-1}, x_k).
bool is_end_path_edge(const Graph& g, int u, int v);

/// Graph obtained by appending a path of n vertices at v.
Graph append_path(const Graph& g, int v, int n);

/// Graphs joined by a path of n vertices between v1 (in g1) and v2 (in g2).
Graph join_by_path(const Graph& g1, int v1, int n, const Graph& g2, int v2);

/// Limit of lambda1(g, v, n) as n grows, assuming it exceeds 2: the largest
/// positive root of theta(x) p0(x) = p_{-1}(x) with theta = (x+sqrt(x^2-4))/2,
/// p0 = charpoly(g), p_{-1} = charpoly(g - v).
double hoffman_limit(const Graph& base, int v);

struct BallWitness {
    int vertex = -1;
    double value = 0;  // lambda1 of the best ball
    double bound = 0;  // 2 cos(pi/(k+2)) sqrt(d-1)
};

/// Vertex whose distance-k ball has the largest spectral radius; the value
/// is checked against the average-degree lower bound.
BallWitness ball_radius_witness(const Graph& g, int k);

}  // namespace eqlines

#endif
