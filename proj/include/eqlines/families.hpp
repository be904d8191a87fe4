#ifndef EQLINES_FAMILIES_HPP
#define EQLINES_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "eqlines/algebraic.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

enum class FamilyKind { A, B, C, D, E, F, P, S };

/// One of the named threshold families. Parameter arity by kind:
/// A_n, C_n, D_n, F_n, P_n, S_n take one parameter; E_{m,n} two;
/// B_{m1,n,m2} three.
struct FamilySpec {
    FamilyKind kind;
    std::vector<int> params;

    static FamilySpec A(int n) { return {FamilyKind::A, {n}}; }
    static FamilySpec B(int m1, int n, int m2) { return {FamilyKind::B, {m1, n, m2}}; }
    static FamilySpec C(int n) { return {FamilyKind::C, {n}}; }
    static FamilySpec D(int n) { return {FamilyKind::D, {n}}; }
    static FamilySpec E(int m, int n) { return {FamilyKind::E, {m, n}}; }
    static FamilySpec F(int n) { return {FamilyKind::F, {n}}; }
    static FamilySpec P(int n) { return {FamilyKind::P, {n}}; }
    static FamilySpec S(int n) { return {FamilyKind::S, {n}}; }

    std::string name() const;
};

/// Construct the family member:
///   A_n: star with 3 leaves plus an n-path at the hub (n+4 vertices)
///   B_{m1,n,m2}: two pendant-tipped junctions joined by an n-path
///                (m1+m2+n+4 vertices)
///   C_n: cycle; D_n: (n+1)-cycle with a pendant vertex (n+2 vertices)
///   E_{m,n}: junction with a leaf, an m-arm and an n-arm (m+n+2 vertices)
///   F_n: 5-path with an n-path at its middle vertex (n+5 vertices)
///   P_n: path; S_n: star with n leaves.
Graph make_family(const FamilySpec& spec);

struct ClosedFormRadius {
    double value = 0;
    std::optional<AlgebraicReal> exact;
};

/// Closed-form spectral radius where one exists: P_n -> 2cos(pi/(n+1)),
/// S_n -> sqrt(n), C_n -> 2, B_{1,n,1} -> 2. Others: nullopt.
std::optional<ClosedFormRadius> closed_form_radius(const FamilySpec& spec);

}  // namespace eqlines

#endif
