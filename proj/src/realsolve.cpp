#include "eqlines/realsolve.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace eqlines {

namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
std::vector<Scalar> eig_desc(const std::vector<Scalar>& rowmajor, int n) {
    Mat<Scalar> m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rowmajor[static_cast<size_t>(i) * n + j];
    Eigen::SelfAdjointEigenSolver<Mat<Scalar>> es(m, Eigen::EigenvaluesOnly);
    std::vector<Scalar> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()(n - 1 - i);
    return out;
}

template <typename Scalar>
Mat<Scalar> adjacency_matrix(const Graph& g) {
    int n = g.order();
    Mat<Scalar> m = Mat<Scalar>::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for_each_bit(g.neighbors(i), [&](int j) { m(i, j) = Scalar(1); });
    return m;
}

}  // namespace

std::vector<double> sym_eigenvalues(const std::vector<double>& rowmajor, int n) {
    return eig_desc<double>(rowmajor, n);
}

std::vector<long double> sym_eigenvalues_ld(const std::vector<long double>& rowmajor,
                                            int n) {
    return eig_desc<long double>(rowmajor, n);
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
    int n = g.order();
    std::vector<double> m(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for_each_bit(g.neighbors(i), [&](int j) { m[static_cast<size_t>(i) * n + j] = 1.0; });
    return sym_eigenvalues(m, n);
}

std::vector<double> perron_vector(const Graph& g) {
    int n = g.order();
    Mat<double> a = adjacency_matrix<double>(g);
    Eigen::SelfAdjointEigenSolver<Mat<double>> es(a);
    Vec<double> v = es.eigenvectors().col(n - 1);
    // Perron vector of a connected graph is strictly positive up to sign.
    double mx = 0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(v(i)));
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = std::abs(v(i)) / mx;
    return out;
}

std::vector<long double> rayleigh_refine(const Graph& g,
                                         const std::vector<long double>& v0,
                                         int steps) {
    int n = g.order();
    Mat<long double> a = adjacency_matrix<long double>(g);
    Vec<long double> v(n);
    for (int i = 0; i < n; ++i) v(i) = v0[i];
    v.normalize();
    for (int s = 0; s < steps; ++s) {
        long double rho = v.dot(a * v);
        Mat<long double> shifted = a - rho * Mat<long double>::Identity(n, n);
        Eigen::FullPivLU<Mat<long double>> lu(shifted);
        if (!lu.isInvertible()) break;  // rho is (numerically) exact
        Vec<long double> w = lu.solve(v);
        long double norm = w.norm();
        if (!(norm > 0) || !std::isfinite(static_cast<double>(norm))) break;
        v = w / norm;
    }
    std::vector<long double> out(n);
    long double mx = 0;
    for (int i = 0; i < n; ++i) mx = std::max(mx, std::abs(v(i)));
    for (int i = 0; i < n; ++i) out[i] = std::abs(v(i)) / mx;
    return out;
}

}  // namespace eqlines
