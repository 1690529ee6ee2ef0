#include "reebfam/geometry.hpp"

#include <functional>
#include <map>
#include <set>

namespace reebfam {

namespace {

// all k-subsets of {0..d-1}, lexicographic
void for_each_subset(int d, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) { fn(idx); return; }
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == d - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <class S>
S vec_scale(const std::vector<Vec<S>>& vs) {
    S m = scalar_traits<S>::one();
    for (const auto& v : vs)
        for (const auto& x : v) {
            S a = scalar_traits<S>::abs(x);
            if (a > m) m = a;
        }
    return m;
}

template <class S>
bool is_zero_rel(const S& x, const S& scale) {
    if constexpr (scalar_traits<S>::is_exact) {
        (void)scale;
        return x == 0;
    } else {
        return std::abs(x) <= 1e-9 * std::max(1.0, scale);
    }
}

// null space of an m x n matrix (rows), basis as columns of the result
template <class S>
std::vector<Vec<S>> null_space(Mat<S> a, int n) {
    if (a.empty()) {
        std::vector<Vec<S>> basis;
        for (int i = 0; i < n; ++i) {
            Vec<S> e(n, scalar_traits<S>::zero());
            e[i] = scalar_traits<S>::one();
            basis.push_back(e);
        }
        return basis;
    }
    auto piv = row_reduce(a);
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec<S>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<S> v(n, scalar_traits<S>::zero());
        v[c] = scalar_traits<S>::one();
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][c];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

template <class S>
void validate_polytope(const LabeledPolytope<S>& p) {
    const int n = p.dim;
    const int d = p.facet_count();
    if (n < 1 || d < n + 1) throw ValidationError("need dim >= 1 and at least dim+1 facets");
    if ((int)p.offsets.size() != d || (int)p.facets.size() != d)
        throw ValidationError("inconsistent facet data");
    if (p.vertex_count() < n + 1) throw EmptyInterior("fewer than dim+1 vertices");
    S scale = vec_scale(p.vertices);
    if constexpr (!scalar_traits<S>::is_exact) scale = std::max(scale, vec_scale(p.normals));

    // L_i(v) >= 0 with equality exactly on facet i's vertex list; every vertex
    // simple (on exactly n facets)
    std::vector<std::set<int>> facet_sets(d);
    for (int l = 0; l < d; ++l) facet_sets[l] = std::set<int>(p.facets[l].begin(), p.facets[l].end());
    for (int v = 0; v < p.vertex_count(); ++v) {
        int active = 0;
        for (int l = 0; l < d; ++l) {
            S val = p.eval_facet(l, p.vertices[v]);
            bool zero = is_zero_rel(val, scale);
            if (!zero && val < scalar_traits<S>::zero())
                throw ValidationError("vertex outside a halfspace");
            if (zero != (facet_sets[l].count(v) > 0))
                throw ValidationError("facet incidence does not match defining functions");
            if (zero) ++active;
        }
        if (active != n) throw NonSimpleVertex("vertex lies on " + std::to_string(active) + " facets");
    }
    // each facet is (n-1)-dimensional
    for (int l = 0; l < d; ++l) {
        if ((int)p.facets[l].size() < n) throw ValidationError("facet with too few vertices");
        Mat<S> diff;
        for (std::size_t k = 1; k < p.facets[l].size(); ++k)
            diff.push_back(p.vertices[p.facets[l][k]] - p.vertices[p.facets[l][0]]);
        if (!diff.empty() && rank(diff) != n - 1) throw ValidationError("degenerate facet");
    }
    // full-dimensional
    Mat<S> diff;
    for (int v = 1; v < p.vertex_count(); ++v) diff.push_back(p.vertices[v] - p.vertices[0]);
    if (rank(diff) != n) throw EmptyInterior("vertices do not affinely span");
    // normals point inward: positive at the barycenter
    Vec<S> bc = p.barycenter();
    for (int l = 0; l < d; ++l)
        if (!(p.eval_facet(l, bc) > scalar_traits<S>::zero()))
            throw ValidationError("normal not inward (defining function nonpositive at barycenter)");
}

template <class S>
LabeledPolytope<S> from_halfspaces(const std::vector<Vec<S>>& normals, const std::vector<S>& offsets) {
    const int d = (int)normals.size();
    if (d == 0 || normals.size() != offsets.size()) throw ValidationError("empty or mismatched input");
    const int n = (int)normals[0].size();
    if (n < 1 || n > 3) throw ValidationError("supported dimensions: 1..3");
    for (const auto& u : normals)
        if ((int)u.size() != n) throw ValidationError("mixed normal dimensions");
    if (d < n + 1) throw EmptyInterior("too few halfspaces to bound a region");

    S scale = vec_scale(normals);
    for (const auto& o : offsets) {
        S a = scalar_traits<S>::abs(o);
        if (a > scale) scale = a;
    }

    // reject duplicated facets (proportional with positive ratio, same offset ratio)
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            Mat<S> m{normals[i], normals[j]};
            if (rank(m) == 1) {
                // u_j = c u_i ; find c from a nonzero coordinate
                int k = 0;
                while (k < n && is_zero_rel(normals[i][k], scale)) ++k;
                if (k == n) throw ValidationError("zero normal");
                S c = normals[j][k] / normals[i][k];
                if (c > scalar_traits<S>::zero() && is_zero_rel(offsets[j] - c * offsets[i], scale))
                    throw ValidationError("duplicate parallel facet");
            }
        }
    }

    // a line in the recession cone (normals not spanning) means unbounded
    {
        Mat<S> m = normals;
        if (rank(m) < n) throw UnboundedRegion("normals do not span the space");
    }
    // extreme-ray test for the recession cone
    {
        bool unbounded = false;
        for_each_subset(d, n - 1, [&](const std::vector<int>& J) {
            if (unbounded) return;
            Mat<S> rows;
            for (int j : J) rows.push_back(normals[j]);
            auto basis = null_space(rows, n);
            if (basis.size() != 1) return;
            for (int sgn = 0; sgn < 2; ++sgn) {
                Vec<S> y = basis[0];
                if (sgn) y = S(-1) * y;
                bool feas = true, nontrivial = false;
                for (int i = 0; i < d; ++i) {
                    S v = dot(normals[i], y);
                    if (is_zero_rel(v, scale)) continue;
                    if (v < scalar_traits<S>::zero()) { feas = false; break; }
                    nontrivial = true;
                }
                if (feas && nontrivial) { unbounded = true; return; }
                if (feas && !nontrivial) { unbounded = true; return; }  // line direction
            }
        });
        if (unbounded) throw UnboundedRegion("recession cone is nontrivial");
    }

    // enumerate candidate vertices over n-subsets
    std::vector<Vec<S>> verts;
    std::vector<std::vector<int>> active_sets;
    std::string nonsimple;
    for_each_subset(d, n, [&](const std::vector<int>& I) {
        Mat<S> rows;
        Vec<S> rhs;
        for (int i : I) {
            rows.push_back(normals[i]);
            rhs.push_back(-offsets[i]);
        }
        auto x = solve_square(rows, rhs);
        if (!x) return;
        std::vector<int> active;
        for (int i = 0; i < d; ++i) {
            S v = offsets[i] + dot(normals[i], *x);
            if (is_zero_rel(v, scale)) active.push_back(i);
            else if (v < scalar_traits<S>::zero()) return;  // infeasible candidate
        }
        if ((int)active.size() > n) {
            nonsimple = "a vertex lies on " + std::to_string(active.size()) + " facets";
            return;
        }
        // the subset must be the full active set of a simple vertex
        for (std::size_t k = 0; k < verts.size(); ++k)
            if (geo::same_point(verts[k], *x, to_double(scale))) return;  // seen via its own active set
        verts.push_back(*x);
        active_sets.push_back(active);
    });
    if (!nonsimple.empty()) throw NonSimpleVertex(nonsimple);
    if (verts.empty()) throw EmptyInterior("no vertices");

    // deterministic vertex order
    std::vector<int> order(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return geo::lex_less(verts[a], verts[b]); });

    LabeledPolytope<S> p;
    p.dim = n;
    p.normals = normals;
    p.offsets = offsets;
    p.facets.assign(d, {});
    for (std::size_t k = 0; k < order.size(); ++k) {
        p.vertices.push_back(verts[order[k]]);
        for (int l : active_sets[order[k]]) p.facets[l].push_back((int)k);
    }
    for (auto& f : p.facets) std::sort(f.begin(), f.end());

    validate_polytope(p);
    return p;
}

template <class S>
LabeledPolytope<S> make_polytope(int dim, std::vector<Vec<S>> vertices,
                                 std::vector<std::vector<int>> facets,
                                 std::vector<Vec<S>> normals, std::vector<S> offsets) {
    LabeledPolytope<S> p;
    p.dim = dim;
    p.vertices = std::move(vertices);
    p.facets = std::move(facets);
    p.normals = std::move(normals);
    p.offsets = std::move(offsets);
    for (auto& f : p.facets) std::sort(f.begin(), f.end());
    validate_polytope(p);
    return p;
}

template <class S>
std::optional<std::pair<Vec<S>, S>> is_monotone(const LabeledPolytope<S>& p) {
    const int n = p.dim, d = p.facet_count();
    // unknowns (mu, c): <u_l, mu> - c = -lambda_l
    Mat<S> a(d, Vec<S>(n + 2, scalar_traits<S>::zero()));
    for (int l = 0; l < d; ++l) {
        for (int j = 0; j < n; ++j) a[l][j] = p.normals[l][j];
        a[l][n] = S(-1);
        a[l][n + 1] = -p.offsets[l];
    }
    Mat<S> red = a;
    auto piv = row_reduce(red);
    // inconsistent if a pivot lands in the rhs column
    if (!piv.empty() && piv.back() == n + 1) return std::nullopt;
    Vec<S> sol(n + 1, scalar_traits<S>::zero());
    for (std::size_t r = 0; r < piv.size(); ++r) sol[piv[r]] = red[r][n + 1];
    // verify every equation (also guards the floating path)
    S scale = vec_scale(p.normals);
    for (int l = 0; l < d; ++l) {
        S resid = -p.offsets[l] + sol[n];
        for (int j = 0; j < n; ++j) resid -= p.normals[l][j] * sol[j];
        // resid = -(u.mu - c + lambda)
        if (!is_zero_rel(resid, scale)) return std::nullopt;
    }
    if (!(sol[n] > scalar_traits<S>::zero())) return std::nullopt;
    Vec<S> mu(sol.begin(), sol.begin() + n);
    return std::make_pair(mu, sol[n]);
}

namespace {

template <class S>
bool facets_adjacent(const LabeledPolytope<S>& p, int i, int j) {
    int common = 0;
    std::set<int> fi(p.facets[i].begin(), p.facets[i].end());
    for (int v : p.facets[j]) common += fi.count(v);
    return common >= p.dim - 1 && common > 0;
}

template <class S>
bool vectors_equal(const Vec<S>& a, const Vec<S>& b, const S& scale) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_zero_rel(a[i] - b[i], scale)) return false;
    return true;
}

template <class S>
std::optional<AffineMap<S>> try_facet_bijection(const LabeledPolytope<S>& p1,
                                                const LabeledPolytope<S>& p2,
                                                const std::vector<int>& sigma,
                                                const std::vector<int>& indep) {
    const int n = p1.dim, d = p1.facet_count();
    S scale = vec_scale(p1.normals);
    if constexpr (!scalar_traits<S>::is_exact) scale = std::max(scale, vec_scale(p2.normals));
    // M^T U2s = U1 on n independent normals (as columns)
    Mat<S> u2s(n, Vec<S>(n)), u1(n, Vec<S>(n));
    for (int k = 0; k < n; ++k)
        for (int r = 0; r < n; ++r) {
            u2s[r][k] = p2.normals[sigma[indep[k]]][r];
            u1[r][k] = p1.normals[indep[k]][r];
        }
    auto u2inv = invert(u2s);
    if (!u2inv) return std::nullopt;
    Mat<S> mt = mat_mul(u1, *u2inv);
    for (int i = 0; i < d; ++i) {
        Vec<S> img = mat_vec(mt, p2.normals[sigma[i]]);
        if (!vectors_equal(img, p1.normals[i], scale)) return std::nullopt;
    }
    Mat<S> m = transpose(mt);
    // translation from offsets on the independent normals
    Mat<S> rows;
    Vec<S> rhs;
    for (int k = 0; k < n; ++k) {
        rows.push_back(p2.normals[sigma[indep[k]]]);
        rhs.push_back(p1.offsets[indep[k]] - p2.offsets[sigma[indep[k]]]);
    }
    auto t = solve_square(rows, rhs);
    if (!t) return std::nullopt;
    for (int i = 0; i < d; ++i) {
        S resid = dot(p2.normals[sigma[i]], *t) - (p1.offsets[i] - p2.offsets[sigma[i]]);
        if (!is_zero_rel(resid, scale)) return std::nullopt;
    }
    // vertices must map bijectively, facet by facet
    S vscale = vec_scale(p1.vertices);
    if constexpr (!scalar_traits<S>::is_exact) vscale = std::max(vscale, vec_scale(p2.vertices));
    std::vector<int> vmap(p1.vertex_count(), -1);
    for (int v = 0; v < p1.vertex_count(); ++v) {
        Vec<S> img = mat_vec(m, p1.vertices[v]) + *t;
        for (int w = 0; w < p2.vertex_count(); ++w)
            if (geo::same_point(img, p2.vertices[w], to_double(vscale))) { vmap[v] = w; break; }
        if (vmap[v] < 0) return std::nullopt;
    }
    std::set<int> image(vmap.begin(), vmap.end());
    if ((int)image.size() != p2.vertex_count()) return std::nullopt;
    for (int i = 0; i < d; ++i) {
        std::set<int> img;
        for (int v : p1.facets[i]) img.insert(vmap[v]);
        std::set<int> tgt(p2.facets[sigma[i]].begin(), p2.facets[sigma[i]].end());
        if (img != tgt) return std::nullopt;
    }
    return AffineMap<S>{m, *t, sigma};
}

template <class S>
bool extend_bijection(const LabeledPolytope<S>& p1, const LabeledPolytope<S>& p2,
                      std::vector<int>& sigma, std::vector<bool>& used, int i,
                      const std::vector<int>& indep, std::optional<AffineMap<S>>& out) {
    const int d = p1.facet_count();
    if (i == d) {
        auto res = try_facet_bijection(p1, p2, sigma, indep);
        if (res) { out = res; return true; }
        return false;
    }
    for (int j = 0; j < d; ++j) {
        if (used[j]) continue;
        if (p1.facets[i].size() != p2.facets[j].size()) continue;
        bool ok = true;
        for (int k = 0; k < i && ok; ++k)
            if (facets_adjacent(p1, i, k) != facets_adjacent(p2, j, sigma[k])) ok = false;
        if (!ok) continue;
        sigma[i] = j;
        used[j] = true;
        if (extend_bijection(p1, p2, sigma, used, i + 1, indep, out)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

template <class S>
std::optional<AffineMap<S>> affine_equivalent(const LabeledPolytope<S>& p1,
                                              const LabeledPolytope<S>& p2) {
    if (p1.dim != p2.dim) throw DimensionMismatch("polytopes of different dimension");
    if (p1.facet_count() != p2.facet_count() || p1.vertex_count() != p2.vertex_count())
        return std::nullopt;
    const int n = p1.dim;
    // n independent normals of p1, fixed once
    std::vector<int> indep;
    Mat<S> acc;
    for (int i = 0; i < p1.facet_count() && (int)indep.size() < n; ++i) {
        acc.push_back(p1.normals[i]);
        Mat<S> tmp = acc;
        if (rank(tmp) == (int)acc.size()) indep.push_back(i);
        else acc.pop_back();
    }
    if ((int)indep.size() < n) return std::nullopt;
    std::vector<int> sigma(p1.facet_count(), -1);
    std::vector<bool> used(p1.facet_count(), false);
    std::optional<AffineMap<S>> out;
    extend_bijection(p1, p2, sigma, used, 0, indep, out);
    return out;
}

template <class S>
LabeledPolytope<S> scale(const LabeledPolytope<S>& p, const S& c) {
    if (!(c > scalar_traits<S>::zero())) throw NonPositiveScale("scale factor must be positive");
    LabeledPolytope<S> q = p;
    for (auto& v : q.vertices) v = c * v;
    for (auto& o : q.offsets) o = c * o;
    return q;
}

template <class S>
LabeledPolytope<S> translate_to_origin(const LabeledPolytope<S>& p, const Vec<S>& mu0) {
    LabeledPolytope<S> q = p;
    for (auto& v : q.vertices) v = v - mu0;
    for (int l = 0; l < p.facet_count(); ++l) q.offsets[l] = p.eval_facet(l, mu0);
    return q;
}

template <class S>
FacetMeasure<S> facet_measure(const LabeledPolytope<S>& p) {
    FacetMeasure<S> fm;
    if (p.dim == 1) {
        for (int l = 0; l < p.facet_count(); ++l) {
            typename FacetMeasure<S>::Chart ch;
            ch.p = p.facets[l][0];
            ch.rho = scalar_traits<S>::one() / scalar_traits<S>::abs(p.normals[l][0]);
            fm.charts.push_back(ch);
        }
        return fm;
    }
    if (p.dim != 2) throw WrongDimension("facet charts provided for dim <= 2");
    for (int l = 0; l < p.facet_count(); ++l) {
        typename FacetMeasure<S>::Chart ch;
        ch.p = p.facets[l][0];
        ch.q = p.facets[l][1];
        Vec<S> delta = p.vertices[ch.q] - p.vertices[ch.p];
        const Vec<S>& u = p.normals[l];
        // dsigma(q - p) = -det[u^sharp, q-p] / <u,u>, sign fixed to a positive mass
        S det = u[0] * delta[1] - u[1] * delta[0];
        ch.rho = scalar_traits<S>::abs(det) / dot(u, u);
        fm.charts.push_back(ch);
    }
    return fm;
}

template <class S>
std::vector<int> polygon_cycle(const LabeledPolytope<S>& p) {
    if (p.dim != 2) throw WrongDimension("polygon cycle needs dim 2");
    Vec<S> c = p.barycenter();
    std::vector<int> order(p.vertex_count());
    for (int i = 0; i < p.vertex_count(); ++i) order[i] = i;
    auto half = [&](int i) {
        Vec<S> d = p.vertices[i] - c;
        // 0: upper half (dy > 0, or dy = 0 and dx > 0); 1: lower
        if (d[1] > scalar_traits<S>::zero()) return 0;
        if (d[1] < scalar_traits<S>::zero()) return 1;
        return d[0] > scalar_traits<S>::zero() ? 0 : 1;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Vec<S> da = p.vertices[a] - c, db = p.vertices[b] - c;
        S cross = da[0] * db[1] - da[1] * db[0];
        if (cross != scalar_traits<S>::zero()) return cross > scalar_traits<S>::zero();
        return geo::lex_less(p.vertices[a], p.vertices[b]);
    });
    return order;
}

template LabeledPolytope<Rational> from_halfspaces(const std::vector<Vec<Rational>>&, const std::vector<Rational>&);
template LabeledPolytope<double> from_halfspaces(const std::vector<Vec<double>>&, const std::vector<double>&);
template LabeledPolytope<Rational> make_polytope(int, std::vector<Vec<Rational>>, std::vector<std::vector<int>>, std::vector<Vec<Rational>>, std::vector<Rational>);
template LabeledPolytope<double> make_polytope(int, std::vector<Vec<double>>, std::vector<std::vector<int>>, std::vector<Vec<double>>, std::vector<double>);
template void validate_polytope(const LabeledPolytope<Rational>&);
template void validate_polytope(const LabeledPolytope<double>&);
template std::optional<std::pair<Vec<Rational>, Rational>> is_monotone(const LabeledPolytope<Rational>&);
template std::optional<std::pair<Vec<double>, double>> is_monotone(const LabeledPolytope<double>&);
template std::optional<AffineMap<Rational>> affine_equivalent(const LabeledPolytope<Rational>&, const LabeledPolytope<Rational>&);
template std::optional<AffineMap<double>> affine_equivalent(const LabeledPolytope<double>&, const LabeledPolytope<double>&);
template LabeledPolytope<Rational> scale(const LabeledPolytope<Rational>&, const Rational&);
template LabeledPolytope<double> scale(const LabeledPolytope<double>&, const double&);
template LabeledPolytope<Rational> translate_to_origin(const LabeledPolytope<Rational>&, const Vec<Rational>&);
template LabeledPolytope<double> translate_to_origin(const LabeledPolytope<double>&, const Vec<double>&);
template FacetMeasure<Rational> facet_measure(const LabeledPolytope<Rational>&);
template FacetMeasure<double> facet_measure(const LabeledPolytope<double>&);
template std::vector<int> polygon_cycle(const LabeledPolytope<Rational>&);
template std::vector<int> polygon_cycle(const LabeledPolytope<double>&);

}  // namespace reebfam
