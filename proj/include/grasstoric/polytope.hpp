#pragma once
// Exact rational lattice polytopes: double description, duality, reflexivity,
// vertex spanning, primitive duality, overlattice re-coordinatization.
#include <grasstoric/linalg.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>

namespace grasstoric {

// Extreme rays of the pointed cone {y : m y >= 0}. Requires full column rank.
// Rays come back primitive, deterministically ordered (sorted lexicographically).
inline std::vector<IntVec> dd_rays(const IntMat& m) {
    const std::size_t d = m.cols;
    // greedy choice of d independent rows for the initial simplicial cone
    std::vector<std::size_t> chosen;
    std::vector<IntVec> basis;
    for (std::size_t i = 0; i < m.rows && chosen.size() < d; ++i) {
        basis.push_back(m.row(i));
        if (rank_of(IntMat::from_rows(basis)) == basis.size()) chosen.push_back(i);
        else basis.pop_back();
    }
    if (chosen.size() != d) throw std::runtime_error("dd_rays: constraint matrix not full rank");
    std::vector<std::size_t> order = chosen;
    for (std::size_t i = 0; i < m.rows; ++i)
        if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) order.push_back(i);

    // initial rays: scaled columns of the basis inverse
    IntMat bt(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) bt(i, j) = basis[j][i];
    std::vector<IntVec> rays;
    for (std::size_t j = 0; j < d; ++j) {
        IntVec e(d);
        e[j] = 1;
        rays.push_back(content_normalized(solve_row(bt, e).num));
    }

    for (std::size_t oi = d; oi < order.size(); ++oi) {
        IntVec a = m.row(order[oi]);
        std::vector<Int> vals(rays.size());
        bool any_minus = false;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(a, rays[i]);
            if (vals[i] < 0) any_minus = true;
        }
        if (!any_minus) continue;
        // zero sets over the already-processed constraints
        std::vector<std::vector<bool>> zs(rays.size(), std::vector<bool>(oi));
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t c = 0; c < oi; ++c) zs[i][c] = dot(m.row(order[c]), rays[i]) == 0;
        std::vector<IntVec> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (vals[i] >= 0) next.push_back(rays[i]);
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] <= 0) continue;
            for (std::size_t j = 0; j < rays.size(); ++j) {
                if (vals[j] >= 0) continue;
                std::vector<bool> common(oi);
                std::size_t card = 0;
                for (std::size_t c = 0; c < oi; ++c) {
                    common[c] = zs[i][c] && zs[j][c];
                    if (common[c]) ++card;
                }
                if (card + 2 < d) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == i || k == j) continue;
                    bool contains = true;
                    for (std::size_t c = 0; c < oi && contains; ++c)
                        if (common[c] && !zs[k][c]) contains = false;
                    if (contains) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec nr(d);
                for (std::size_t c = 0; c < d; ++c) nr[c] = vals[i] * rays[j][c] - vals[j] * rays[i][c];
                next.push_back(content_normalized(nr));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

struct Facet {
    IntVec normal;  // primitive
    Int offset;     // facet inequality: <normal, x> >= -offset
    bool operator==(const Facet& o) const { return normal == o.normal && offset == o.offset; }
    bool operator<(const Facet& o) const {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

// H-representation of conv(verts), full dimensional.
inline std::vector<Facet> facet_enumeration(const std::vector<IntVec>& verts) {
    if (verts.empty()) throw std::runtime_error("facet_enumeration: no vertices");
    const std::size_t d = verts[0].size();
    IntMat m(verts.size(), d + 1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) m(i, j) = verts[i][j];
        m(i, d) = 1;
    }
    std::vector<Facet> out;
    for (IntVec& r : dd_rays(m)) {
        Facet f;
        f.offset = r[d];
        r.resize(d);
        f.normal = std::move(r);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct LatticePolytope {
    std::string lattice;
    std::size_t dim = 0;
    std::vector<IntVec> vertices;               // minimal V-representation
    mutable std::optional<std::vector<Facet>> facets;  // computed lazily

    const std::vector<Facet>& hrep() const {
        if (!facets) facets = facet_enumeration(vertices);
        return *facets;
    }
    void sort_vertices() { std::sort(vertices.begin(), vertices.end()); }
    IntMat vertex_matrix() const { return IntMat::from_rows(vertices); }
};

inline LatticePolytope make_polytope(std::string lattice, std::vector<IntVec> verts) {
    LatticePolytope p;
    p.lattice = std::move(lattice);
    p.dim = verts.empty() ? 0 : verts[0].size();
    p.vertices = std::move(verts);
    p.sort_vertices();
    p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
    return p;
}

inline bool origin_interior(const LatticePolytope& p) {
    for (const Facet& f : p.hrep())
        if (f.offset <= 0) return false;
    return true;
}

// {y : <y, v> >= -1 for all vertices v of p}; requires interior origin.
// Throws when the dual is not a lattice polytope (p not reflexive).
inline LatticePolytope dual_polytope(const LatticePolytope& p) {
    if (!origin_interior(p)) throw std::runtime_error("dual_polytope: origin not strictly interior");
    LatticePolytope d;
    d.lattice = p.lattice + "*";
    d.dim = p.dim;
    for (const Facet& f : p.hrep()) {
        IntVec v(p.dim);
        for (std::size_t j = 0; j < p.dim; ++j) {
            if (f.normal[j] % f.offset != 0)
                throw std::runtime_error("dual_polytope: dual vertex not integral (polytope not reflexive)");
            v[j] = f.normal[j] / f.offset;
        }
        d.vertices.push_back(std::move(v));
    }
    d.sort_vertices();
    // the dual's H-representation comes for free from p's vertices
    std::vector<Facet> fs;
    for (const IntVec& v : p.vertices) fs.push_back(Facet{v, 1});
    std::sort(fs.begin(), fs.end());
    d.facets = std::move(fs);
    return d;
}

inline bool is_reflexive(const LatticePolytope& p) {
    if (!origin_interior(p)) throw std::runtime_error("is_reflexive: origin not strictly interior");
    for (const Facet& f : p.hrep())
        if (f.offset != 1) return false;
    return true;
}

inline bool is_vertex_spanning(const LatticePolytope& p) {
    auto diag = snf_diagonal(p.vertex_matrix());
    if (diag.size() < p.dim) return false;
    for (std::size_t i = 0; i < p.dim; ++i)
        if (diag[i] != 1) return false;
    return true;
}

struct PrimitiveDualResult {
    LatticePolytope q;         // the dual re-read in the lattice its vertices span
    LatticeQuotient quotient;  // M / Mbar
    IntMat inclusion;          // rows: Mbar basis in M coordinates (HNF)
};

inline PrimitiveDualResult primitive_dual(const LatticePolytope& p) {
    LatticePolytope dual = dual_polytope(p);
    PrimitiveDualResult res;
    res.inclusion = IntMat::from_rows(hnf_basis(dual.vertex_matrix()));
    if (res.inclusion.rows != p.dim)
        throw std::runtime_error("primitive_dual: dual not full dimensional");
    res.quotient = quotient_invariants(p.dim, res.inclusion);
    res.q.lattice = p.lattice + "_bar";
    res.q.dim = p.dim;
    for (const IntVec& v : dual.vertices) {
        RatRowSolve s = solve_row(res.inclusion, v);
        if (s.den != 1) throw std::runtime_error("primitive_dual: vertex not in spanned sublattice");
        res.q.vertices.push_back(std::move(s.num));
    }
    res.q.sort_vertices();
    return res;
}

// Rewrite p's vertices in the coordinates of an overlattice whose basis rows,
// in ambient coordinates, are basis_num / basis_den.
inline LatticePolytope image_in_overlattice(const LatticePolytope& p, const IntMat& basis_num,
                                            const Int& basis_den) {
    LatticePolytope out;
    out.lattice = p.lattice + "'";
    out.dim = p.dim;
    for (const IntVec& v : p.vertices) {
        IntVec scaled(v);
        for (Int& x : scaled) x *= basis_den;
        RatRowSolve s = solve_row(basis_num, scaled);
        if (s.den != 1)
            throw std::runtime_error("image_in_overlattice: vertex not integral in overlattice basis");
        out.vertices.push_back(std::move(s.num));
    }
    out.sort_vertices();
    return out;
}

// Saturated relation lattice of the vertex matrix, rows in canonical HNF order.
inline std::vector<IntVec> relation_lattice(const std::vector<IntVec>& verts) {
    return hnf_basis(integer_kernel(IntMat::from_rows(verts)));
}

// Decide unimodular equivalence via a vertex bijection search constrained by
// facet-vertex pairing profiles; a candidate bijection is accepted when the
// saturated relation lattices agree and the induced linear map is unimodular.
inline bool unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.dim != q.dim || p.vertices.size() != q.vertices.size()) return false;
    auto profile = [](const LatticePolytope& pl) {
        std::vector<std::vector<Int>> prof(pl.vertices.size());
        for (std::size_t i = 0; i < pl.vertices.size(); ++i) {
            for (const Facet& f : pl.hrep()) prof[i].push_back(dot(f.normal, pl.vertices[i]));
            std::sort(prof[i].begin(), prof[i].end());
        }
        return prof;
    };
    auto pp = profile(p), qp = profile(q);
    {
        auto ps = pp, qs = qp;
        std::sort(ps.begin(), ps.end());
        std::sort(qs.begin(), qs.end());
        if (ps != qs) return false;
    }
    const std::size_t nv = p.vertices.size();
    std::vector<std::vector<std::size_t>> cand(nv);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            if (pp[i] == qp[j]) cand[i].push_back(j);
    std::vector<std::size_t> match(nv, nv);
    std::vector<bool> used(nv, false);
    auto relp = relation_lattice(p.vertices);
    // rows of p's vertex matrix spanning Q^dim, for solving out the linear map
    std::vector<std::size_t> pivot_rows;
    {
        std::vector<IntVec> acc;
        for (std::size_t i = 0; i < nv && acc.size() < p.dim; ++i) {
            acc.push_back(p.vertices[i]);
            if (rank_of(IntMat::from_rows(acc)) == acc.size()) pivot_rows.push_back(i);
            else acc.pop_back();
        }
        if (pivot_rows.size() != p.dim) return false;  // not full dimensional
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == nv) {
            std::vector<IntVec> permuted(nv);
            for (std::size_t t = 0; t < nv; ++t) permuted[t] = q.vertices[match[t]];
            if (relation_lattice(permuted) != relp) return false;
            // equal relation lattices give a well-defined linear map on the
            // span; accept iff it is integral and unimodular
            IntMat vp(p.dim, p.dim), vq(p.dim, p.dim);
            for (std::size_t t = 0; t < p.dim; ++t)
                for (std::size_t c = 0; c < p.dim; ++c) {
                    vp(t, c) = p.vertices[pivot_rows[t]][c];
                    vq(t, c) = permuted[pivot_rows[t]][c];
                }
            IntMat map(p.dim, p.dim);
            for (std::size_t c = 0; c < p.dim; ++c) {
                IntVec col(p.dim);
                for (std::size_t t = 0; t < p.dim; ++t) col[t] = vq(t, c);
                // solve vp * x = col, i.e. x^T vp^T = col^T
                IntMat vpt(p.dim, p.dim);
                for (std::size_t t = 0; t < p.dim; ++t)
                    for (std::size_t c2 = 0; c2 < p.dim; ++c2) vpt(t, c2) = vp(c2, t);
                RatRowSolve s = solve_row(vpt, col);
                if (s.den != 1) return false;
                for (std::size_t t = 0; t < p.dim; ++t) map(t, c) = s.num[t];
            }
            return abs(det(map)) == 1;
        }
        for (std::size_t j : cand[i]) {
            if (used[j]) continue;
            used[j] = true;
            match[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(0);
}

}  // namespace grasstoric
