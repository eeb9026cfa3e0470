#pragma once
// Finite abelian groups acting on the degenerate toric variety: subgroups of
// (Z/n)^m as lattices, the torus intersection, G, the labeling morphism from
// the Greene-Plesser-type group, and homogeneity kernels.
#include <grasstoric/gc.hpp>

#include <numeric>

namespace grasstoric {

// Subgroup of (Z/n)^m represented by the lattice span(gens) + n Z^m in
// canonical HNF; two subgroups are equal iff their lattices are.
struct Subgroup {
    Int modulus;
    std::size_t ambient = 0;
    std::vector<IntVec> lattice_hnf;
    Int order = 0;

    bool operator==(const Subgroup& o) const {
        return modulus == o.modulus && ambient == o.ambient && lattice_hnf == o.lattice_hnf;
    }
    bool contains(const IntVec& g) const { return in_hnf_lattice(lattice_hnf, g); }
};

inline Subgroup make_subgroup(const Int& n, std::size_t m, const std::vector<IntVec>& gens) {
    Subgroup s;
    s.modulus = n;
    s.ambient = m;
    std::vector<IntVec> rows = gens;
    for (std::size_t i = 0; i < m; ++i) {
        IntVec e(m);
        e[i] = n;
        rows.push_back(e);
    }
    s.lattice_hnf = hnf_basis(IntMat::from_rows(rows));
    Int order = 1;
    for (std::size_t i = 0; i < m; ++i) order *= n;
    for (const IntVec& row : s.lattice_hnf)
        for (const Int& x : row)
            if (x != 0) {
                order /= x;
                break;
            }
    s.order = order;
    return s;
}

// T cap G-tilde: generated by the rows of the weight matrix mod n
inline Subgroup torus_intersection(const Int& n, const WeightMatrix& wm) {
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < wm.b.rows; ++i) gens.push_back(wm.b.row(i));
    return make_subgroup(n, wm.b.cols, gens);
}

struct GroupG {
    Int n;
    std::size_t arrows = 0;
    Subgroup torus;       // T cap G-tilde
    Int order = 0;        // |G| = n^{m-1} / |T cap G-tilde|
    LatticeQuotient coset_form;  // canonical representatives modulo the torus part

    // reduce a G-tilde element to its canonical coset representative
    IntVec reduce(const IntVec& g) const { return coset_form.reduce(g); }
};

inline GroupG group_G(const Int& n, const LadderQuiver& q) {
    GroupG g;
    g.n = n;
    g.arrows = q.arrows.size();
    g.torus = torus_intersection(n, weight_matrix(q));
    Int gt_order = 1;
    for (std::size_t i = 0; i + 1 < g.arrows; ++i) gt_order *= n;
    g.order = gt_order / g.torus.order;
    g.coset_form = quotient_invariants(g.arrows, IntMat::from_rows(g.torus.lattice_hnf));
    return g;
}

// weight of a monomial prod p_lambda^{e_lambda} under a G-tilde element
inline Int monomial_weight(const LadderQuiver& q, const IntVec& g,
                           const std::vector<std::pair<Partition, int>>& monomial) {
    Int total = 0;
    for (const auto& [lam, e] : monomial)
        for (std::size_t a : q.arrows_of_path(lam)) total += e * g[a];
    return total;  // caller reduces mod n
}

// lattice {g in Z^m : rows * g = 0 mod n}, as generator rows
inline std::vector<IntVec> mod_kernel(const IntMat& rows_mat, const Int& n) {
    SnfResult s = smith_normal_form(rows_mat);
    const std::size_t m = rows_mat.cols;
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < m; ++i) {
        Int di = i < std::min(rows_mat.rows, m) ? s.d(i, i) : Int(0);
        Int mult = di != 0 ? n / gcd(di, n) : Int(1);
        IntVec col(m);
        for (std::size_t j = 0; j < m; ++j) col[j] = s.v(j, i) * mult;
        gens.push_back(std::move(col));
    }
    for (std::size_t i = 0; i < m; ++i) {
        IntVec e(m);
        e[i] = n;
        gens.push_back(std::move(e));
    }
    return gens;
}

// The label matrix E[j][a] = number of vertical steps of arrow a labeled j+1;
// the morphism from the mirror-side group acts through it.
inline IntMat label_matrix(const LadderQuiver& q) {
    IntMat e(q.n, q.arrows.size());
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        for (int lab : q.vertical_labels(a)) e(lab - 1, a) += 1;
    return e;
}

// generators of the mirror-side group H-tilde as exponent vectors in Z^n:
// zeta_1 - zeta_i, (n/gcd(n,r)) zeta_1, and n Z^n
inline std::vector<IntVec> h_tilde_generators(int n, int r) {
    std::vector<IntVec> gens;
    for (int i = 1; i < n; ++i) {
        IntVec v(n);
        v[0] = 1;
        v[i] = -1;
        gens.push_back(std::move(v));
    }
    IntVec c(n);
    c[0] = n / std::gcd(n, r);
    gens.push_back(std::move(c));
    for (int i = 0; i < n; ++i) {
        IntVec v(n);
        v[i] = n;
        gens.push_back(std::move(v));
    }
    return gens;
}

// Image of H-tilde inside G via the labeling morphism, as a lattice that
// contains the torus part (elements of G are cosets modulo T cap G-tilde).
inline Subgroup psi_image(const LadderQuiver& q) {
    IntMat e = label_matrix(q);
    std::vector<IntVec> img;
    for (const IntVec& z : h_tilde_generators(q.n, q.r)) img.push_back(mul_vec(z, e));
    WeightMatrix wm = weight_matrix(q);
    for (std::size_t i = 0; i < wm.b.rows; ++i) img.push_back(wm.b.row(i));
    return make_subgroup(q.n, q.arrows.size(), img);
}

// Largest subgroup of G under which all supplied weight differences vanish:
// the homogeneity kernel joined with the torus part. weight_diffs are raw
// arrow-exponent differences between monomials of one relation.
inline Subgroup compute_G_h(const Int& n, const LadderQuiver& q,
                            const std::vector<IntVec>& weight_diffs) {
    const std::size_t m = q.arrows.size();
    std::vector<IntVec> rows;
    rows.push_back(IntVec(m, 1));  // G-tilde membership: exponent sum 0 mod n
    for (const IntVec& w : weight_diffs) rows.push_back(w);
    // the mod-n kernel only depends on the row span
    std::vector<IntVec> gens = mod_kernel(IntMat::from_rows(hnf_basis(IntMat::from_rows(rows))), n);
    WeightMatrix wm = weight_matrix(q);
    for (std::size_t i = 0; i < wm.b.rows; ++i) gens.push_back(wm.b.row(i));
    return make_subgroup(n, m, gens);
}

// |G_h| given the subgroup lattice (which contains the torus part)
inline Int subgroup_order_mod_torus(const Subgroup& s, const Subgroup& torus) {
    return s.order / torus.order;
}

struct BruteForceResult {
    Int tested = 0;    // size of G
    Int accepted = 0;  // homogeneous elements
    Subgroup subgroup;
};

// Exhaustive sweep over coset representatives of G testing homogeneity of
// every weight difference. Guarded by |G| <= 10^6.
inline BruteForceResult brute_force_G_h(const Int& n, const LadderQuiver& q,
                                        const std::vector<IntVec>& weight_diffs) {
    const std::size_t m = q.arrows.size();
    GroupG g = group_G(n, q);
    if (g.order > 1000000) throw std::runtime_error("brute force guard: |G| too large");
    LatticeQuotient quo = quotient_invariants(m, IntMat::from_rows(g.torus.lattice_hnf));
    IntMat vinv = unimodular_inverse(quo.projection);
    // deduplicate weight rows for speed
    std::vector<IntVec> diffs = weight_diffs;
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    BruteForceResult res;
    std::vector<IntVec> accepted;
    std::vector<Int> y(m, 0);
    while (true) {
        IntVec lift = mul_vec(y, vinv);
        Int sum = std::accumulate(lift.begin(), lift.end(), Int(0));
        if (sum % n == 0) {
            res.tested += 1;
            bool ok = true;
            for (const IntVec& w : diffs)
                if (dot(w, lift) % n != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                res.accepted += 1;
                accepted.push_back(lift);
            }
        }
        std::size_t i = 0;
        for (; i < m; ++i) {
            y[i] += 1;
            if (y[i] < quo.all_factors[i]) break;
            y[i] = 0;
        }
        if (i == m) break;
    }
    std::vector<IntVec> gens = accepted;
    for (const IntVec& row : g.torus.lattice_hnf) gens.push_back(row);
    res.subgroup = make_subgroup(n, m, gens);
    return res;
}

}  // namespace grasstoric
