#pragma once
// Spanning fans, cone membership, star subdivision, and the blow-up fan whose
// rays recover the vertices of the primitive dual Q.
#include <grasstoric/gc.hpp>

namespace grasstoric {

using Cone = std::vector<std::size_t>;  // sorted ray indices of a maximal cone

struct Fan {
    std::string lattice;
    std::vector<IntVec> rays;   // primitive generators
    std::vector<Cone> cones;    // maximal cones
    // facet functionals, one per cone, for spanning fans; empty otherwise
    std::vector<IntVec> normals;
};

// H-representation {x : a_i x >= 0} of the cone spanned by the given rays
inline std::vector<IntVec> cone_hrep(const std::vector<IntVec>& rays) {
    return dd_rays(IntMat::from_rows(rays));
}

inline std::vector<IntVec> cone_rays(const Fan& f, const Cone& c) {
    std::vector<IntVec> out;
    for (std::size_t i : c) out.push_back(f.rays[i]);
    return out;
}

// one maximal cone per facet: the cone over the vertices tight on it
inline Fan spanning_fan(const LatticePolytope& p) {
    if (!is_reflexive(p)) throw std::runtime_error("spanning fan needs a reflexive polytope");
    Fan f;
    f.lattice = p.lattice;
    f.rays = p.vertices;
    for (const Facet& fac : p.hrep()) {
        Cone c;
        for (std::size_t i = 0; i < p.vertices.size(); ++i)
            if (dot(fac.normal, p.vertices[i]) == -fac.offset) c.push_back(i);
        f.cones.push_back(std::move(c));
        f.normals.push_back(fac.normal);
    }
    return f;
}

// x lies in the cones whose facet functional minimizes the pairing; valid for
// spanning fans of reflexive polytopes, which are complete
inline std::vector<std::size_t> cone_membership(const Fan& f, const IntVec& x) {
    if (f.normals.size() != f.cones.size())
        throw std::runtime_error("cone membership needs stored facet functionals");
    std::vector<Int> vals;
    for (const IntVec& u : f.normals) vals.push_back(dot(u, x));
    Int mn = *std::min_element(vals.begin(), vals.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] == mn) out.push_back(i);
    return out;
}

// Spanning fan of conv{v_lambda : lambda arrow partition}, a unimodular copy
// of P; maximal cones are labeled by partitions mu through the pairing table
// of P's facets carried along the phi-bijection.
struct LabeledFan {
    Fan fan;
    std::vector<Partition> cone_labels;          // per maximal cone
    std::vector<Partition> ray_labels;           // per ray (arrow partitions)
};

inline LabeledFan arrow_vertex_fan(const GCPolytopeSet& gc) {
    auto phi = phi_labeling(gc.quiver);
    std::vector<IntVec> verts;
    for (std::size_t dai = 0; dai < phi.size(); ++dai)
        verts.push_back(gc.q_verts[gc.partition_index(phi[dai])]);
    LatticePolytope yp = make_polytope("M_bar", verts);
    LabeledFan lf;
    lf.fan = spanning_fan(yp);
    // ray index -> dual arrow: vertices are sorted inside the polytope
    std::map<IntVec, std::size_t> by_vec;
    for (std::size_t dai = 0; dai < verts.size(); ++dai) by_vec[verts[dai]] = dai;
    for (const IntVec& v : lf.fan.rays) lf.ray_labels.push_back(phi[by_vec.at(v)]);
    // cone label: the mu whose pairing-(-1) vertex set matches the cone's rays
    std::map<std::set<IntVec>, Partition> tight_of;
    for (std::size_t li = 0; li < gc.partitions.size(); ++li) {
        std::set<IntVec> tight;
        for (std::size_t dai = 0; dai < gc.w.size(); ++dai)
            if (dot(gc.pdual_verts[li], gc.w[dai]) == -1) tight.insert(verts[dai]);
        tight_of[std::move(tight)] = gc.partitions[li];
    }
    for (const Cone& c : lf.fan.cones) {
        std::set<IntVec> tight;
        for (std::size_t i : c) tight.insert(lf.fan.rays[i]);
        auto it = tight_of.find(tight);
        if (it == tight_of.end()) throw std::runtime_error("cone matches no pairing column");
        lf.cone_labels.push_back(it->second);
    }
    return lf;
}

// maximal cones of the arrow-vertex fan containing the excess vertex v_lambda
inline std::vector<Partition> cones_containing(const GCPolytopeSet& gc, const Partition& lam) {
    auto sets = arrow_partition_sets(gc.quiver);
    if (!std::binary_search(sets.b_set.begin(), sets.b_set.end(), lam))
        throw std::runtime_error("partition is not an excess partition");
    LabeledFan lf = arrow_vertex_fan(gc);
    std::vector<Partition> out;
    for (std::size_t ci : cone_membership(lf.fan, gc.q_verts[gc.partition_index(lam)]))
        out.push_back(lf.cone_labels[ci]);
    std::sort(out.begin(), out.end());
    return out;
}

// Star subdivision at new_ray: cones not containing it are kept; each cone
// containing it is replaced by the joins of new_ray with the facets of the
// cone that new_ray is not on.
inline Fan star_subdivide(const Fan& f, const IntVec& new_ray) {
    IntVec primitive = content_normalized(new_ray);
    if (primitive != new_ray) throw std::runtime_error("new ray is not primitive");
    for (const IntVec& r : f.rays)
        if (r == new_ray) throw std::runtime_error("new ray is already a ray of the fan");
    Fan out;
    out.lattice = f.lattice;
    out.rays = f.rays;
    const std::size_t wi = out.rays.size();
    out.rays.push_back(new_ray);
    for (const Cone& c : f.cones) {
        std::vector<IntVec> a = cone_hrep(cone_rays(f, c));
        std::vector<Int> vals;
        for (const IntVec& row : a) vals.push_back(dot(row, new_ray));
        if (std::any_of(vals.begin(), vals.end(), [](const Int& v) { return v < 0; })) {
            out.cones.push_back(c);
            continue;
        }
        for (std::size_t fi = 0; fi < a.size(); ++fi) {
            if (vals[fi] <= 0) continue;
            Cone face;
            for (std::size_t i : c)
                if (dot(a[fi], f.rays[i]) == 0) face.push_back(i);
            face.push_back(wi);
            std::sort(face.begin(), face.end());
            out.cones.push_back(std::move(face));
        }
    }
    return out;
}

// every facet of every maximal cone must be shared by exactly two cones
inline bool fan_complete(const Fan& f) {
    std::map<Cone, int> count;
    for (const Cone& c : f.cones)
        for (const IntVec& a : cone_hrep(cone_rays(f, c))) {
            Cone face;
            for (std::size_t i : c)
                if (dot(a, f.rays[i]) == 0) face.push_back(i);
            count[face] += 1;
        }
    for (const auto& [face, cnt] : count)
        if (cnt != 2) return false;
    return true;
}

struct VgitReport {
    std::size_t cone_count = 0;
    bool rays_match_q_vertices = false;
    bool hull_equals_q = false;   // identical canonical H-representations
    bool complete = false;
    bool rays_are_hull_vertices = false;
    bool all_cones_simplicial = false;  // informational; not part of the claim
    bool passed() const {
        return rays_match_q_vertices && hull_equals_q && complete && rays_are_hull_vertices;
    }
};

// blow-up fan: spanning fan of the arrow-vertex polytope subdivided at the
// excess vertices in the given order
inline Fan blowup_fan(const GCPolytopeSet& gc, const std::vector<Partition>& order) {
    auto sets = arrow_partition_sets(gc.quiver);
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != sets.b_set)
            throw std::runtime_error("order is not a permutation of the excess partitions");
    }
    Fan f = arrow_vertex_fan(gc).fan;
    f.normals.clear();  // facet functionals are only meaningful for spanning fans
    for (const Partition& lam : order)
        f = star_subdivide(f, gc.q_verts[gc.partition_index(lam)]);
    return f;
}

inline VgitReport verify_vgit(const GCPolytopeSet& gc, const std::vector<Partition>& order) {
    Fan f = blowup_fan(gc, order);
    VgitReport rep;
    rep.cone_count = f.cones.size();
    std::vector<IntVec> rays = f.rays;
    std::sort(rays.begin(), rays.end());
    rep.rays_match_q_vertices = rays == gc.q.vertices;
    LatticePolytope hull = make_polytope(gc.q.lattice, f.rays);
    rep.hull_equals_q = hull.hrep() == gc.q.hrep();
    rep.rays_are_hull_vertices = hull.vertices == rays;
    rep.complete = fan_complete(f);
    const std::size_t d = gc.q_verts.front().size();
    rep.all_cones_simplicial =
        std::all_of(f.cones.begin(), f.cones.end(), [&](const Cone& c) { return c.size() == d; });
    return rep;
}

inline std::vector<Partition> lexicographic_excess_order(const GCPolytopeSet& gc) {
    return arrow_partition_sets(gc.quiver).b_set;
}

}  // namespace grasstoric
