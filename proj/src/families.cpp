#include "eqlines/families.hpp"

#include <cmath>
#include <stdexcept>

#include "eqlines/spectral.hpp"

namespace eqlines {

namespace {

void need_params(const FamilySpec& s, size_t arity) {
    if (s.params.size() != arity)
        throw std::invalid_argument("FamilySpec: wrong parameter count for " + s.name());
}

}  // namespace

std::string FamilySpec::name() const {
    const char* k = "?";
    switch (kind) {
        case FamilyKind::A: k = "A"; break;
        case FamilyKind::B: k = "B"; break;
        case FamilyKind::C: k = "C"; break;
        case FamilyKind::D: k = "D"; break;
        case FamilyKind::E: k = "E"; break;
        case FamilyKind::F: k = "F"; break;
        case FamilyKind::P: k = "P"; break;
        case FamilyKind::S: k = "S"; break;
    }
    std::string out = k;
    out += "_{";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(params[i]);
    }
    out += "}";
    return out;
}

Graph make_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::A: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            return append_path(Graph::star(3), 3, n);  // hub of star(3) is 3
        }
        case FamilyKind::B: {
            need_params(spec, 3);
            int m1 = spec.params[0], n = spec.params[1], m2 = spec.params[2];
            if (m1 < 1 || m2 < 1 || n < 0)
                throw std::invalid_argument("B_{m1,n,m2} needs m1,m2 >= 1 and n >= 0");
            // Second vertex of P_{m+2} is the junction next to the leaf.
            return join_by_path(Graph::path(m1 + 2), 1, n, Graph::path(m2 + 2), 1);
        }
        case FamilyKind::C: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 3) throw std::invalid_argument("C_n needs n >= 3");
            return Graph::cycle(n);
        }
        case FamilyKind::D: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
            return append_path(Graph::cycle(n + 1), 0, 1);
        }
        case FamilyKind::E: {
            need_params(spec, 2);
            int m = spec.params[0], n = spec.params[1];
            if (m < 1 || n < 1) throw std::invalid_argument("E_{m,n} needs m,n >= 1");
            return append_path(Graph::path(m + 2), 1, n);
        }
        case FamilyKind::F: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw std::invalid_argument("F_n needs n >= 1");
            return append_path(Graph::path(5), 2, n);
        }
        case FamilyKind::P: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
            return Graph::path(n);
        }
        case FamilyKind::S: {
            need_params(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw std::invalid_argument("S_n needs n >= 1");
            return Graph::star(n);
        }
    }
    throw std::logic_error("make_family: unreachable");
}

std::optional<ClosedFormRadius> closed_form_radius(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::P: {
            need_params(spec, 1);
            int n = spec.params[0];
            ClosedFormRadius r;
            r.value = 2 * std::cos(M_PI / (n + 1));
            if (n >= 2) r.exact = spectral_radius_exact(Graph::path(n));
            else r.exact = AlgebraicReal::from_int(0);
            return r;
        }
        case FamilyKind::S: {
            need_params(spec, 1);
            int n = spec.params[0];
            ClosedFormRadius r;
            r.value = std::sqrt(static_cast<double>(n));
            r.exact = AlgebraicReal::from_int(n).sqrt();
            return r;
        }
        case FamilyKind::C: {
            need_params(spec, 1);
            ClosedFormRadius r;
            r.value = 2;
            r.exact = AlgebraicReal::from_int(2);
            return r;
        }
        case FamilyKind::B: {
            need_params(spec, 3);
            if (spec.params[0] == 1 && spec.params[2] == 1) {
                ClosedFormRadius r;
                r.value = 2;
                r.exact = AlgebraicReal::from_int(2);
                return r;
            }
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

}  // namespace eqlines
