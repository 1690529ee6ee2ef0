#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "reebfam/errors.hpp"
#include "reebfam/linalg.hpp"

namespace reebfam {

/// Affine function b(mu) = constant + <linear, mu>.
template <class S>
struct AffineFunction {
    S constant;
    Vec<S> linear;

    S operator()(const Vec<S>& mu) const { return constant + dot(linear, mu); }
    int dim() const { return (int)linear.size(); }

    static AffineFunction constant_one(int n) {
        return AffineFunction{scalar_traits<S>::one(), Vec<S>(n, scalar_traits<S>::zero())};
    }
};

/// Simple compact polytope with inward facet normals u_l and offsets lambda_l,
/// so that L_l = <.,u_l> + lambda_l vanishes on facet l and is positive inside.
template <class S>
struct LabeledPolytope {
    int dim = 0;
    std::vector<Vec<S>> vertices;
    std::vector<std::vector<int>> facets;  // per facet: sorted vertex indices
    std::vector<Vec<S>> normals;           // u_l
    std::vector<S> offsets;                // lambda_l

    int facet_count() const { return (int)normals.size(); }
    int vertex_count() const { return (int)vertices.size(); }

    AffineFunction<S> defining_function(int l) const {
        return AffineFunction<S>{offsets[l], normals[l]};
    }

    S eval_facet(int l, const Vec<S>& mu) const { return offsets[l] + dot(normals[l], mu); }

    Vec<S> barycenter() const {
        Vec<S> c(dim, scalar_traits<S>::zero());
        for (const auto& v : vertices) c = c + v;
        S inv = scalar_traits<S>::one() / S((long long)vertices.size());
        return inv * c;
    }
};

/// Affine map x -> M x + t together with the facet correspondence that realizes
/// an equivalence of labeled polytopes.
template <class S>
struct AffineMap {
    Mat<S> matrix;
    Vec<S> translation;
    std::vector<int> facet_map;  // facet i of P1 -> facet_map[i] of P2

    Vec<S> operator()(const Vec<S>& x) const { return mat_vec(matrix, x) + translation; }
};

/// Per-facet measure data for dsigma with u_l ^ dsigma = -dvarpi.
/// For an edge parametrized by t in [0,1] from p to q, dsigma = rho * dt.
/// For a point facet (n = 1), rho is the point mass.
/// In general rho = 1/|u_l| against (n-1)-dimensional Euclidean measure.
template <class S>
struct FacetMeasure {
    // n = 2: per facet (edge): vertex indices (p,q) and rho for the unit parametrization.
    // n = 1: per facet (point): vertex index in first slot, rho = mass.
    struct Chart {
        int p = -1, q = -1;
        S rho;
    };
    std::vector<Chart> charts;
};

namespace geo {

template <class S>
bool same_point(const Vec<S>& a, const Vec<S>& b, double tol_scale) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)tol_scale;
        return a == b;
    } else {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-9 * tol_scale) return false;
        return true;
    }
}

template <class S>
bool lex_less(const Vec<S>& a, const Vec<S>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

}  // namespace geo

/// Enumerate vertices of {L_i >= 0} and build a validated LabeledPolytope.
/// Facets keep the input order. Throws UnboundedRegion, NonSimpleVertex,
/// EmptyInterior, ValidationError.
template <class S>
LabeledPolytope<S> from_halfspaces(const std::vector<Vec<S>>& normals, const std::vector<S>& offsets);

/// Construct directly from known data and validate all invariants.
template <class S>
LabeledPolytope<S> make_polytope(int dim, std::vector<Vec<S>> vertices,
                                 std::vector<std::vector<int>> facets,
                                 std::vector<Vec<S>> normals, std::vector<S> offsets);

/// Validate the invariants of an assembled polytope (throws on violation).
template <class S>
void validate_polytope(const LabeledPolytope<S>& p);

/// Monotone test: a point mu with L_l(mu) = c > 0 for every l.
template <class S>
std::optional<std::pair<Vec<S>, S>> is_monotone(const LabeledPolytope<S>& p);

/// Affine equivalence in the labeled sense: A(P1) = P2 with normals matched
/// through the adjoint of the differential.
template <class S>
std::optional<AffineMap<S>> affine_equivalent(const LabeledPolytope<S>& p1,
                                              const LabeledPolytope<S>& p2);

/// Same normals, vertices and offsets scaled by c > 0.
template <class S>
LabeledPolytope<S> scale(const LabeledPolytope<S>& p, const S& c);

/// Translate so that mu0 becomes the origin (vertices shift by -mu0, offsets
/// become L_l(mu0)).
template <class S>
LabeledPolytope<S> translate_to_origin(const LabeledPolytope<S>& p, const Vec<S>& mu0);

/// Facet measures normalized by u_l ^ dsigma = -dvarpi (n <= 2 charts).
template <class S>
FacetMeasure<S> facet_measure(const LabeledPolytope<S>& p);

/// Vertices of a polygon in counterclockwise cyclic order (n = 2 only).
template <class S>
std::vector<int> polygon_cycle(const LabeledPolytope<S>& p);

template <class S>
LabeledPolytope<double> to_double_polytope(const LabeledPolytope<S>& p) {
    LabeledPolytope<double> q;
    q.dim = p.dim;
    q.facets = p.facets;
    for (const auto& v : p.vertices) {
        Vec<double> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = to_double(v[i]);
        q.vertices.push_back(w);
    }
    for (const auto& u : p.normals) {
        Vec<double> w(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) w[i] = to_double(u[i]);
        q.normals.push_back(w);
    }
    for (const auto& o : p.offsets) q.offsets.push_back(to_double(o));
    return q;
}

template <class S>
AffineFunction<double> to_double_affine(const AffineFunction<S>& b) {
    AffineFunction<double> r;
    r.constant = to_double(b.constant);
    r.linear.resize(b.linear.size());
    for (std::size_t i = 0; i < b.linear.size(); ++i) r.linear[i] = to_double(b.linear[i]);
    return r;
}

extern template LabeledPolytope<Rational> from_halfspaces(const std::vector<Vec<Rational>>&, const std::vector<Rational>&);
extern template LabeledPolytope<double> from_halfspaces(const std::vector<Vec<double>>&, const std::vector<double>&);
extern template LabeledPolytope<Rational> make_polytope(int, std::vector<Vec<Rational>>, std::vector<std::vector<int>>, std::vector<Vec<Rational>>, std::vector<Rational>);
extern template LabeledPolytope<double> make_polytope(int, std::vector<Vec<double>>, std::vector<std::vector<int>>, std::vector<Vec<double>>, std::vector<double>);
extern template void validate_polytope(const LabeledPolytope<Rational>&);
extern template void validate_polytope(const LabeledPolytope<double>&);
extern template std::optional<std::pair<Vec<Rational>, Rational>> is_monotone(const LabeledPolytope<Rational>&);
extern template std::optional<std::pair<Vec<double>, double>> is_monotone(const LabeledPolytope<double>&);
extern template std::optional<AffineMap<Rational>> affine_equivalent(const LabeledPolytope<Rational>&, const LabeledPolytope<Rational>&);
extern template std::optional<AffineMap<double>> affine_equivalent(const LabeledPolytope<double>&, const LabeledPolytope<double>&);
extern template LabeledPolytope<Rational> scale(const LabeledPolytope<Rational>&, const Rational&);
extern template LabeledPolytope<double> scale(const LabeledPolytope<double>&, const double&);
extern template LabeledPolytope<Rational> translate_to_origin(const LabeledPolytope<Rational>&, const Vec<Rational>&);
extern template LabeledPolytope<double> translate_to_origin(const LabeledPolytope<double>&, const Vec<double>&);
extern template FacetMeasure<Rational> facet_measure(const LabeledPolytope<Rational>&);
extern template FacetMeasure<double> facet_measure(const LabeledPolytope<double>&);
extern template std::vector<int> polygon_cycle(const LabeledPolytope<Rational>&);
extern template std::vector<int> polygon_cycle(const LabeledPolytope<double>&);

}  // namespace reebfam
