#pragma once
// The Gelfand-Cetlin degeneration polytopes: P, its dual, the primitive dual
// Q, the weight matrix, covering relations, and the excess-deletion and
// covering-span checks.
#include <grasstoric/polytope.hpp>
#include <grasstoric/quiver.hpp>

namespace grasstoric {

struct WeightMatrix {
    std::vector<GridPt> row_vertices;  // non-source ladder vertices
    IntMat b;                          // 0/1, one column per ladder arrow
};

inline WeightMatrix weight_matrix(const LadderQuiver& q) {
    WeightMatrix out;
    for (const GridPt& v : q.vertices)
        if (v != GridPt{0, 0}) out.row_vertices.push_back(v);
    out.b = IntMat(out.row_vertices.size(), q.arrows.size());
    for (std::size_t vi = 0; vi < out.row_vertices.size(); ++vi) {
        auto [x, y] = out.row_vertices[vi];
        std::vector<Step> hooks;
        for (int j = y; j <= q.r; ++j) hooks.push_back(Step{{x - 1, j}, false});
        for (int i = x; i <= q.k; ++i) hooks.push_back(Step{{i, y - 1}, true});
        for (std::size_t a = 0; a < q.arrows.size(); ++a)
            for (const Step& s : hooks)
                if (path_contains_step(q.arrows[a], s)) {
                    out.b(vi, a) = 1;
                    break;
                }
    }
    return out;
}

struct GCPolytopeSet {
    int n, r;
    LadderQuiver quiver;
    std::vector<Partition> partitions;      // lexicographic
    std::vector<std::size_t> a_v;           // per cell: selected outgoing dual arrow
    std::size_t a_empty;                    // dual arrow pairing -1 with every m_lambda
    IntMat basis_change;                    // unimodular: e' coords -> b coords
    std::vector<IntVec> w;                  // per dual arrow: vertex of P in b coords
    std::vector<IntVec> m;                  // per partition: m_lambda in b-dual coords
    IntVec h;                               // all ones in b-dual coords
    std::vector<IntVec> pdual_verts;        // per partition: n*m_lambda - h
    std::vector<IntVec> q_verts;            // per partition: v_lambda in Mbar coords
    LatticePolytope p, p_dual, q;
    IntMat inclusion;                       // Mbar basis rows in M-dual coords
    LatticeQuotient quotient;               // M / Mbar

    GCPolytopeSet(int n_, int r_) : n(n_), r(r_), quiver(n_, r_) {
        const LadderQuiver& lq = quiver;
        const std::size_t d = static_cast<std::size_t>(lq.k) * lq.r;
        partitions = lq.partitions();
        a_v = lq.select_a_v();
        // columns of C are the w_{a_v} in e' coordinates; C is unimodular and
        // moves everything into the b basis
        IntMat c(d, d);
        for (std::size_t cell = 0; cell < d; ++cell) {
            IntVec col = lq.w_eprime(a_v[cell]);
            for (std::size_t i = 0; i < d; ++i) c(i, cell) = col[i];
        }
        if (abs(det(c)) != 1) throw std::runtime_error("a_v basis change is not unimodular");
        // w in b coords solves c * w_b = w_eprime, i.e. w_b^T c^T = w_e^T
        IntMat ct(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) ct(i, j) = c(j, i);
        basis_change = ct;
        for (std::size_t dai = 0; dai < lq.dual_arrows.size(); ++dai) {
            RatRowSolve s = solve_row(ct, lq.w_eprime(dai));
            if (s.den != 1) throw std::runtime_error("vertex not integral in b basis");
            w.push_back(std::move(s.num));
        }
        for (const Partition& lam : partitions) {
            IntVec ml(d);
            for (std::size_t cell = 0; cell < d; ++cell)
                if (lq.crosses(lam, a_v[cell])) ml[cell] = 1;
            m.push_back(std::move(ml));
        }
        h.assign(d, 1);
        for (const IntVec& ml : m) {
            IntVec v(d);
            for (std::size_t i = 0; i < d; ++i) v[i] = n * ml[i] - h[i];
            pdual_verts.push_back(std::move(v));
        }
        // locate a_empty among the external dual arrows
        bool found = false;
        for (std::size_t dai = 0; dai < lq.dual_arrows.size(); ++dai) {
            const DualArrow& da = lq.dual_arrows[dai];
            if (lq.is_cell(da.src) && lq.is_cell(da.tgt)) continue;
            bool all_minus_one = true;
            for (std::size_t li = 0; li < partitions.size(); ++li) {
                if (partitions[li].empty()) continue;
                if (dot(m[li], w[dai]) != -1) all_minus_one = false;
            }
            if (all_minus_one) {
                a_empty = dai;
                found = true;
            }
        }
        if (!found) throw std::runtime_error("no dual arrow pairs to -1 with every partition");
        p = make_polytope("N", w);
        p_dual = make_polytope("M", pdual_verts);
        inclusion = IntMat::from_rows(hnf_basis(IntMat::from_rows(pdual_verts)));
        quotient = quotient_invariants(d, inclusion);
        for (const IntVec& v : pdual_verts) {
            RatRowSolve s = solve_row(inclusion, v);
            if (s.den != 1) throw std::runtime_error("dual vertex outside spanned sublattice");
            q_verts.push_back(std::move(s.num));
        }
        q = make_polytope("M_bar", q_verts);
    }

    std::size_t partition_index(const Partition& lam) const {
        auto it = std::lower_bound(partitions.begin(), partitions.end(), lam);
        if (it == partitions.end() || *it != lam) throw std::runtime_error("unknown partition");
        return static_cast<std::size_t>(it - partitions.begin());
    }
};

// multiplicity vector over partitions; checks the m-covering property and
// that the relation annihilates Q's vertex matrix
inline IntVec covering_relation(const GCPolytopeSet& gc, const std::vector<Partition>& paths) {
    auto m = is_m_covering(gc.quiver, paths);
    if (!m) throw std::runtime_error("paths do not form an m-covering");
    IntVec rel(gc.partitions.size());
    for (const Partition& lam : paths) rel[gc.partition_index(lam)] += 1;
    IntVec sum = mul_vec(rel, IntMat::from_rows(gc.q_verts));
    for (const Int& x : sum)
        if (x != 0) throw std::runtime_error("covering relation does not annihilate Q vertices");
    return rel;
}

struct ExcessDeletionReport {
    bool vertex_count_ok = false;
    bool p_fano = false, y_fano = false;
    bool p_spanning = false, y_spanning = false;
    bool relation_lattices_equal = false;
    bool passed() const {
        return vertex_count_ok && p_fano && y_fano && p_spanning && y_spanning &&
               relation_lattices_equal;
    }
};

// conv{v_lambda : lambda arrow partition} against P, compared through the
// phi-bijection between dual arrows and arrow partitions
inline ExcessDeletionReport verify_excess_deletion(const GCPolytopeSet& gc) {
    ExcessDeletionReport rep;
    auto phi = phi_labeling(gc.quiver);
    std::vector<IntVec> arrow_verts;  // ordered by dual arrow index
    for (std::size_t dai = 0; dai < phi.size(); ++dai)
        arrow_verts.push_back(gc.q_verts[gc.partition_index(phi[dai])]);
    LatticePolytope y = make_polytope("M_bar", arrow_verts);
    rep.vertex_count_ok = y.vertices.size() == gc.p.vertices.size();
    auto fano = [](const LatticePolytope& pl, const std::vector<IntVec>& verts) {
        if (!origin_interior(pl)) return false;
        for (const IntVec& v : verts) {
            Int g = 0;
            for (const Int& x : v) g = gcd(g, x);
            if (g != 1) return false;
        }
        return true;
    };
    rep.p_fano = fano(gc.p, gc.w);
    rep.y_fano = fano(y, arrow_verts);
    rep.p_spanning = is_vertex_spanning(gc.p);
    rep.y_spanning = is_vertex_spanning(y);
    rep.relation_lattices_equal = relation_lattice(gc.w) == relation_lattice(arrow_verts);
    return rep;
}

struct CoveringSpanResult {
    std::size_t rank = 0;          // rational rank of the crossing-diagram relations
    std::size_t full_rank = 0;     // rank of the full relation lattice of Q's vertices
    Int sublattice_index = 0;      // index of the spanned sublattice when ranks agree
};

inline CoveringSpanResult covering_span(const GCPolytopeSet& gc) {
    std::vector<IntVec> rels;
    for (const CrossingDiagram& c : all_crossing_diagrams(gc.quiver))
        rels.push_back(covering_relation(gc, crossing_diagram_paths(gc.quiver, c)));
    CoveringSpanResult res;
    auto basis = hnf_basis(IntMat::from_rows(rels));
    res.rank = basis.size();
    auto full = relation_lattice(gc.q_verts);
    res.full_rank = full.size();
    if (res.rank == res.full_rank) {
        Int span_det = 1, full_det = 1;
        for (const IntVec& row : basis)
            for (const Int& x : row)
                if (x != 0) { span_det *= x; break; }
        for (const IntVec& row : full)
            for (const Int& x : row)
                if (x != 0) { full_det *= x; break; }
        res.sublattice_index = span_det / full_det;
    }
    return res;
}

}  // namespace grasstoric
