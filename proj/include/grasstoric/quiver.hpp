#pragma once
// The ladder quiver LQ(n,r): arrows as monotone vertex-avoiding step paths,
// the dual quiver with its crossing bijection, partitions/paths/subsets, the
// phi labeling, crossing diagrams and m-coverings.
#include <grasstoric/linalg.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace grasstoric {

using GridPt = std::pair<int, int>;
using StepPath = std::vector<GridPt>;
using Partition = std::vector<int>;  // weakly decreasing, trailing zeros trimmed

struct Step {
    GridPt from;
    bool vertical;  // step goes up from `from`; otherwise right
    bool operator==(const Step& o) const { return from == o.from && vertical == o.vertical; }
};

inline bool path_contains_step(const StepPath& p, const Step& s) {
    GridPt nxt = s.vertical ? GridPt{s.from.first, s.from.second + 1}
                            : GridPt{s.from.first + 1, s.from.second};
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] == s.from && p[i + 1] == nxt) return true;
    return false;
}

struct DualArrow {
    int src, tgt;  // cell index i*r+j, or k*r (top external) / k*r+1 (right external)
    Step crossed;  // the unique ladder-arrow step this dual arrow crosses
};

class LadderQuiver {
  public:
    int n, r, k;
    std::vector<GridPt> vertices;       // source, internal grid vertices, sink
    std::vector<StepPath> arrows;       // each arrow carries its geometric path
    std::vector<DualArrow> dual_arrows;
    std::vector<std::size_t> cross;     // dual arrow index -> crossed ladder arrow

    LadderQuiver(int n_, int r_) : n(n_), r(r_), k(n_ - r_) {
        if (!(n > r && r > 0)) throw std::runtime_error("ladder quiver needs n > r > 0");
        vertices.push_back({0, 0});
        for (int x = 1; x < k; ++x)
            for (int y = 1; y < r; ++y) vertices.push_back({x, y});
        vertices.push_back({k, r});
        vset_.insert(vertices.begin(), vertices.end());
        for (const GridPt& u : vertices)
            for (const GridPt& v : vertices) {
                if (u == v || v.first < u.first || v.second < u.second) continue;
                enumerate_paths(u, v);
            }
        for (std::size_t i = 0; i < arrows.size(); ++i) arrow_index_[arrows[i]] = i;
        // dual quiver arrows with their crossed steps
        for (int j = 0; j < r; ++j)
            for (int i = 0; i + 1 < k; ++i)
                dual_arrows.push_back({cell(i, j), cell(i + 1, j), Step{{i + 1, j}, true}});
        dual_arrows.push_back({cell(k - 1, 0), right_external(), Step{{k, 0}, true}});
        for (int i = 0; i < k; ++i)
            for (int j = 1; j < r; ++j)
                dual_arrows.push_back({cell(i, j), cell(i, j - 1), Step{{i, j}, false}});
        dual_arrows.push_back({top_external(), cell(0, r - 1), Step{{0, r}, false}});
        if (dual_arrows.size() != arrows.size() ||
            arrows.size() != static_cast<std::size_t>(2 * (r - 1) * (k - 1) + n))
            throw std::runtime_error("ladder quiver arrow count mismatch");
        for (const DualArrow& da : dual_arrows) {
            std::optional<std::size_t> found;
            for (std::size_t ai = 0; ai < arrows.size(); ++ai)
                if (path_contains_step(arrows[ai], da.crossed)) {
                    if (found) throw std::runtime_error("crossing not unique");
                    found = ai;
                }
            if (!found) throw std::runtime_error("dual arrow crosses nothing");
            cross.push_back(*found);
        }
        auto sorted = cross;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i) throw std::runtime_error("crossing is not a bijection");
        cross_inv_.resize(cross.size());
        for (std::size_t d = 0; d < cross.size(); ++d) cross_inv_[cross[d]] = d;
    }

    int cell(int i, int j) const { return i * r + j; }
    int top_external() const { return k * r; }
    int right_external() const { return k * r + 1; }
    bool is_cell(int dv) const { return dv < k * r; }
    GridPt cell_coords(int dv) const { return {dv / r, dv % r}; }
    std::size_t dual_of(std::size_t arrow) const { return cross_inv_[arrow]; }

    std::vector<Partition> partitions() const {
        std::vector<Partition> out;
        Partition cur;
        gen_partitions(cur, k, r, out);
        std::sort(out.begin(), out.end());
        return out;
    }

    // full source-to-sink step path of a partition (area above-left of the path)
    StepPath path_of(const Partition& lam) const {
        std::vector<int> parts(lam);
        parts.resize(r, 0);
        StepPath pts{{0, 0}};
        int x = 0;
        for (int y = 0; y < r; ++y) {
            int xv = parts[r - 1 - y];
            while (x < xv) pts.push_back({++x, y});
            pts.push_back({x, y + 1});
        }
        while (x < k) pts.push_back({++x, r});
        return pts;
    }

    // I_lambda: positions of the vertical steps
    std::vector<int> subset_of(const Partition& lam) const {
        std::vector<int> parts(lam);
        parts.resize(r, 0);
        std::vector<int> out;
        for (int y = 0; y < r; ++y) out.push_back(parts[r - 1 - y] + y + 1);
        std::sort(out.begin(), out.end());
        return out;
    }

    Partition partition_of_subset(std::vector<int> subset) const {
        std::sort(subset.begin(), subset.end());
        Partition lam;
        for (int j = r - 1; j >= 0; --j) {
            int part = subset[j] - j - 1;
            if (part > 0) lam.push_back(part);
        }
        return lam;
    }

    std::vector<std::size_t> arrows_of_path(const Partition& lam) const {
        StepPath pts = path_of(lam);
        std::vector<std::size_t> cuts;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (vset_.count(pts[i])) cuts.push_back(i);
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
            StepPath seg(pts.begin() + cuts[t], pts.begin() + cuts[t + 1] + 1);
            out.push_back(arrow_index_.at(seg));
        }
        return out;
    }

    bool crosses(const Partition& lam, std::size_t dai) const {
        return path_contains_step(path_of(lam), dual_arrows[dai].crossed);
    }

    // a_v: per interior dual vertex, the horizontal out-arrow when one exists,
    // else the vertical out-arrow
    std::vector<std::size_t> select_a_v() const {
        std::vector<std::size_t> out(k * r);
        for (int c = 0; c < k * r; ++c) {
            auto [ci, cj] = cell_coords(c);
            std::optional<std::size_t> horiz, vert;
            for (std::size_t d = 0; d < dual_arrows.size(); ++d) {
                const DualArrow& da = dual_arrows[d];
                if (da.src != c) continue;
                if (da.tgt == right_external() || (is_cell(da.tgt) && cell_coords(da.tgt).second == cj))
                    horiz = d;
                else if (is_cell(da.tgt) && cell_coords(da.tgt).first == ci)
                    vert = d;
            }
            if (horiz) out[c] = *horiz;
            else if (vert) out[c] = *vert;
            else throw std::runtime_error("no outgoing dual arrow at cell");
        }
        return out;
    }

    // w_a = -e'_{s(a)} + e'_{t(a)} in the e' basis (externals contribute 0)
    IntVec w_eprime(std::size_t dai) const {
        IntVec vec(k * r);
        const DualArrow& da = dual_arrows[dai];
        if (is_cell(da.src)) vec[da.src] -= 1;
        if (is_cell(da.tgt)) vec[da.tgt] += 1;
        return vec;
    }

    // labels of the vertical steps of a ladder arrow (step at (x,y) -> x+y+1)
    std::vector<int> vertical_labels(std::size_t ai) const {
        std::vector<int> labs;
        const StepPath& p = arrows[ai];
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i + 1].second == p[i].second + 1) labs.push_back(p[i].first + p[i].second + 1);
        return labs;
    }

    std::vector<GridPt> internal_vertices() const {
        std::vector<GridPt> out;
        for (const GridPt& v : vertices)
            if (v != GridPt{0, 0} && v != GridPt{k, r}) out.push_back(v);
        return out;
    }

  private:
    std::set<GridPt> vset_;
    std::map<StepPath, std::size_t> arrow_index_;
    std::vector<std::size_t> cross_inv_;

    void enumerate_paths(const GridPt& u, const GridPt& v) {
        StepPath p{u};
        dfs(p, u, v);
    }
    void dfs(StepPath& p, const GridPt& cur, const GridPt& v) {
        if (cur == v) {
            arrows.push_back(p);
            return;
        }
        if (p.size() > 1 && vset_.count(cur)) return;  // passes through another vertex
        if (cur.first < v.first) {
            GridPt nxt{cur.first + 1, cur.second};
            p.push_back(nxt);
            dfs(p, nxt, v);
            p.pop_back();
        }
        if (cur.second < v.second) {
            GridPt nxt{cur.first, cur.second + 1};
            p.push_back(nxt);
            dfs(p, nxt, v);
            p.pop_back();
        }
    }
    static void gen_partitions(Partition& cur, int mx, int left, std::vector<Partition>& out) {
        if (left == 0) {
            Partition trimmed;
            for (int x : cur)
                if (x > 0) trimmed.push_back(x);
            out.push_back(trimmed);
            return;
        }
        for (int v = mx; v >= 0; --v) {
            cur.push_back(v);
            gen_partitions(cur, v, left - 1, out);
            cur.pop_back();
        }
    }
};

// phi: dual arrow -> partition, from the figure's three labeling rules.
// Composes with the crossing bijection to label ladder arrows.
inline std::vector<Partition> phi_labeling(const LadderQuiver& q) {
    const int k = q.k, r = q.r;
    auto nu = [&](int a, int b) {
        Partition out;
        for (int t = 0; t < b; ++t) out.push_back(a + 1);
        for (int t = 0; t < r - b; ++t)
            if (a > 0) out.push_back(a);
        return out;
    };
    auto mu = [&](int a, int b) {
        Partition out;
        for (int t = 0; t < a; ++t) out.push_back(k);
        if (b > 0) out.push_back(b);
        return out;
    };
    std::vector<Partition> out(q.dual_arrows.size());
    for (std::size_t d = 0; d < q.dual_arrows.size(); ++d) {
        const DualArrow& da = q.dual_arrows[d];
        if (da.src == q.top_external()) out[d] = Partition(r, k);
        else if (da.tgt == q.right_external()) out[d] = {};
        else {
            auto [si, sj] = q.cell_coords(da.src);
            auto [ti, tj] = q.cell_coords(da.tgt);
            if (sj == tj) out[d] = nu(k - 1 - si, sj);    // horizontal (i,j)->(i+1,j)
            else out[d] = mu(sj - 1, k - si);             // vertical (i,j)->(i,j-1)
        }
    }
    return out;
}

struct ArrowPartitionSets {
    std::vector<Partition> label;  // per dual arrow
    std::vector<Partition> a_set;  // sorted, the image of phi
    std::vector<Partition> b_set;  // sorted, the excess partitions
};

inline ArrowPartitionSets arrow_partition_sets(const LadderQuiver& q) {
    ArrowPartitionSets out;
    out.label = phi_labeling(q);
    std::set<Partition> a(out.label.begin(), out.label.end());
    if (a.size() != out.label.size()) throw std::runtime_error("phi labeling not injective");
    out.a_set.assign(a.begin(), a.end());
    for (const Partition& lam : q.partitions())
        if (!a.count(lam)) out.b_set.push_back(lam);
    return out;
}

inline std::pair<Partition, Partition> meet_join(const Partition& sig, const Partition& lam, int r) {
    std::vector<int> s(sig), l(lam);
    s.resize(r, 0);
    l.resize(r, 0);
    Partition wedge, vee;
    for (int i = 0; i < r; ++i) {
        if (std::max(s[i], l[i]) > 0) wedge.push_back(std::max(s[i], l[i]));
        if (std::min(s[i], l[i]) > 0) vee.push_back(std::min(s[i], l[i]));
    }
    return {wedge, vee};
}

// partial order: lam <= sig componentwise
inline bool partition_leq(const Partition& lam, const Partition& sig) {
    for (std::size_t i = 0; i < lam.size(); ++i)
        if (lam[i] > (i < sig.size() ? sig[i] : 0)) return false;
    return true;
}

struct CrossingDiagram {
    std::map<GridPt, bool> straight;  // internal vertex -> X (true) or O (false)
};

inline std::vector<Partition> crossing_diagram_paths(const LadderQuiver& q,
                                                     const CrossingDiagram& c) {
    std::vector<Partition> out;
    for (const Partition& lam : q.partitions()) {
        StepPath pts = q.path_of(lam);
        bool ok = true;
        for (const auto& [v, straight] : c.straight) {
            auto it = std::find(pts.begin(), pts.end(), v);
            if (it == pts.end() || it == pts.begin() || it + 1 == pts.end()) continue;
            const GridPt &a = *(it - 1), &b = *(it + 1);
            bool is_straight = (a.first == b.first) || (a.second == b.second);
            if (straight != is_straight) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(lam);
    }
    return out;
}

inline std::vector<CrossingDiagram> all_crossing_diagrams(const LadderQuiver& q) {
    auto iv = q.internal_vertices();
    std::vector<CrossingDiagram> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << iv.size()); ++mask) {
        CrossingDiagram c;
        for (std::size_t i = 0; i < iv.size(); ++i) c.straight[iv[i]] = (mask >> i) & 1;
        out.push_back(std::move(c));
    }
    return out;
}

inline std::optional<int> is_m_covering(const LadderQuiver& q, const std::vector<Partition>& paths) {
    std::vector<int> cnt(q.arrows.size(), 0);
    for (const Partition& lam : paths)
        for (std::size_t ai : q.arrows_of_path(lam)) ++cnt[ai];
    for (int c : cnt)
        if (c != cnt[0]) return std::nullopt;
    if (cnt.empty() || cnt[0] == 0) return std::nullopt;
    return cnt[0];
}

}  // namespace grasstoric
