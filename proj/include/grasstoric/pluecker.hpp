#pragma once
// Pluecker relations of the Grassmannian: shuffle relations, degenerate
// binomials, the degeneration-coefficient weight system, the d-diagonal
// equation for gcd(n,r) > 1, and the component-count arithmetic.
#include <grasstoric/groups.hpp>

#include <functional>
#include <random>

namespace grasstoric {

using Subset = std::vector<int>;                 // sorted indices in {1..n}
using MonomialKey = std::pair<Subset, Subset>;   // sorted pair of subsets
using PlueckerRelation = std::vector<std::pair<MonomialKey, Int>>;

inline std::pair<int, Subset> sort_sign(Subset s) {
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (s[i] == s[j]) return {0, {}};
            if (s[i] > s[j]) sign = -sign;
        }
    std::sort(s.begin(), s.end());
    return {sign, s};
}

inline void canonicalize(PlueckerRelation& rel) {
    std::sort(rel.begin(), rel.end());
    if (!rel.empty() && rel.front().second < 0)
        for (auto& [k, c] : rel) c = -c;
}

// all quadratic relations from (r-1, r+1) index shuffles, canonicalized and
// deduplicated
inline std::vector<PlueckerRelation> shuffle_relations(int n, int r) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i + 1;
    std::set<PlueckerRelation> rels;
    // iterate over all I of size r-1 and J of size r+1
    std::vector<Subset> is, js;
    std::function<void(int, int, Subset&, std::vector<Subset>&)> combos =
        [&](int start, int left, Subset& cur, std::vector<Subset>& out) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (int v = start; v <= n - left + 1; ++v) {
                cur.push_back(v);
                combos(v + 1, left - 1, cur, out);
                cur.pop_back();
            }
        };
    Subset tmp;
    combos(1, r - 1, tmp, is);
    combos(1, r + 1, tmp, js);
    for (const Subset& I : is)
        for (const Subset& J : js) {
            std::map<MonomialKey, Int> terms;
            for (std::size_t t = 0; t < J.size(); ++t) {
                Subset ext = I;
                ext.push_back(J[t]);
                auto [sg, s1] = sort_sign(ext);
                if (sg == 0) continue;
                Subset s2;
                for (int x : J)
                    if (x != J[t]) s2.push_back(x);
                Int c = Int((t % 2 == 0 ? 1 : -1) * sg);
                MonomialKey key = s1 <= s2 ? MonomialKey{s1, s2} : MonomialKey{s2, s1};
                terms[key] += c;
            }
            PlueckerRelation rel;
            for (auto& [k, c] : terms)
                if (c != 0) rel.push_back({k, c});
            if (rel.empty()) continue;
            canonicalize(rel);
            rels.insert(rel);
        }
    return {rels.begin(), rels.end()};
}

// exact check: a relation vanishes on the r x r minors of an integer matrix
inline bool vanishes_on_minors(int n, int r, const std::vector<PlueckerRelation>& rels,
                               std::mt19937& rng, int trials) {
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < trials; ++t) {
        IntMat a(r, n);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) a(i, j) = entry(rng);
        std::map<Subset, Int> minor;
        std::function<Int(const Subset&)> get = [&](const Subset& s) -> Int {
            auto it = minor.find(s);
            if (it != minor.end()) return it->second;
            IntMat sub(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub(i, j) = a(i, s[j] - 1);
            return minor[s] = det(sub);
        };
        for (const PlueckerRelation& rel : rels) {
            Int v = 0;
            for (const auto& [k, c] : rel) v += c * get(k.first) * get(k.second);
            if (v != 0) return false;
        }
    }
    return true;
}

// arrow-multiset weight of the monomial p_{S1} p_{S2}
inline IntVec monomial_arrow_weight(const LadderQuiver& q, const MonomialKey& key) {
    IntVec w(q.arrows.size());
    for (const Subset* s : {&key.first, &key.second})
        for (std::size_t a : q.arrows_of_path(q.partition_of_subset(*s))) w[a] += 1;
    return w;
}

// weight differences between the monomials of each relation; these are the
// homogeneity constraints defining G_h
inline std::vector<IntVec> relation_weight_diffs(const LadderQuiver& q,
                                                 const std::vector<PlueckerRelation>& rels) {
    std::vector<IntVec> out;
    for (const PlueckerRelation& rel : rels) {
        IntVec w0 = monomial_arrow_weight(q, rel[0].first);
        for (std::size_t t = 1; t < rel.size(); ++t) {
            IntVec wt = monomial_arrow_weight(q, rel[t].first);
            IntVec diff(w0.size());
            for (std::size_t i = 0; i < w0.size(); ++i) diff[i] = w0[i] - wt[i];
            out.push_back(std::move(diff));
        }
    }
    return out;
}

// one binomial p_sigma p_lambda - p_wedge p_vee per incomparable pair
inline std::vector<PlueckerRelation> degenerate_relations(const LadderQuiver& q) {
    std::vector<PlueckerRelation> out;
    auto parts = q.partitions();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (partition_leq(parts[i], parts[j]) || partition_leq(parts[j], parts[i])) continue;
            auto [wedge, vee] = meet_join(parts[i], parts[j], q.r);
            Subset s1 = q.subset_of(parts[i]), s2 = q.subset_of(parts[j]);
            Subset w1 = q.subset_of(wedge), w2 = q.subset_of(vee);
            MonomialKey k1 = s1 <= s2 ? MonomialKey{s1, s2} : MonomialKey{s2, s1};
            MonomialKey k2 = w1 <= w2 ? MonomialKey{w1, w2} : MonomialKey{w2, w1};
            PlueckerRelation rel{{k1, 1}, {k2, -1}};
            canonicalize(rel);
            out.push_back(std::move(rel));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct CoefficientSystem {
    // one weight per degenerating monomial: the character of G-tilde by which
    // the corresponding coefficient must scale
    std::vector<IntVec> weights;
    std::size_t relations_without_binomial = 0;
};

// Surviving terms of a degenerated relation are the groups of monomials with
// equal arrow weight (their coefficients cancel); all the rest degenerate and
// pick up a coefficient whose weight is the difference against the surviving
// group.
inline CoefficientSystem coefficient_weights(const LadderQuiver& q,
                                             const std::vector<PlueckerRelation>& rels) {
    CoefficientSystem out;
    for (const PlueckerRelation& rel : rels) {
        std::map<IntVec, std::vector<std::size_t>> groups;
        std::vector<IntVec> wts;
        for (const auto& [k, c] : rel) wts.push_back(monomial_arrow_weight(q, k));
        for (std::size_t t = 0; t < rel.size(); ++t) groups[wts[t]].push_back(t);
        std::vector<IntVec> surviving;
        for (const auto& [w, g] : groups)
            if (g.size() >= 2) {
                Int sum = 0;
                for (std::size_t t : g) sum += rel[t].second;
                if (sum != 0)
                    throw std::runtime_error("surviving group coefficients do not cancel");
                surviving.push_back(w);
            }
        if (surviving.empty()) {
            out.relations_without_binomial += 1;
            continue;
        }
        const IntVec& ref = *std::min_element(surviving.begin(), surviving.end());
        for (std::size_t t = 0; t < rel.size(); ++t) {
            if (groups[wts[t]].size() >= 2 && wts[t] == ref) continue;
            IntVec diff(ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) diff[i] = ref[i] - wts[t][i];
            out.weights.push_back(std::move(diff));
        }
    }
    return out;
}

inline Partition path_to_partition(const LadderQuiver& q, const StepPath& pts) {
    std::vector<int> lam(q.r, 0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1].second == pts[i].second + 1) lam[q.r - 1 - pts[i].second] = pts[i].first;
    for (std::size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] < lam[i + 1]) throw std::runtime_error("step path is not monotone");
    Partition out;
    for (int x : lam)
        if (x > 0) out.push_back(x);
    return out;
}

struct ThreeTermShapes {
    Partition alpha, beta;   // the two fully-bent routes around the vertex
    Partition lambda, sigma; // the two straight-through routes
    Partition wedge, vee;    // join and meet of lambda and sigma
};

// canonical three-term relation shapes at an internal ladder vertex
inline ThreeTermShapes dv_shapes(const LadderQuiver& q, const GridPt& v) {
    auto [x, y] = v;
    StepPath pre, post;
    for (int i = 0; i <= x - 1; ++i) pre.push_back({i, 0});
    for (int j = 1; j <= y - 1; ++j) pre.push_back({x - 1, j});
    for (int i = 1; i <= q.k - x - 1; ++i) post.push_back({x + 1 + i, y + 1});
    for (int j = y + 2; j <= q.r; ++j) post.push_back({q.k, j});
    auto mk = [&](const StepPath& local) {
        StepPath pts = pre;
        pts.insert(pts.end(), local.begin(), local.end());
        pts.insert(pts.end(), post.begin(), post.end());
        return path_to_partition(q, pts);
    };
    GridPt c0{x - 1, y - 1}, c2{x + 1, y + 1};
    ThreeTermShapes s;
    s.sigma = mk({c0, {x - 1, y}, {x, y}, {x + 1, y}, c2});
    s.lambda = mk({c0, {x, y - 1}, {x, y}, {x, y + 1}, c2});
    s.wedge = mk({c0, {x, y - 1}, {x, y}, {x + 1, y}, c2});
    s.vee = mk({c0, {x - 1, y}, {x, y}, {x, y + 1}, c2});
    s.alpha = mk({c0, {x - 1, y}, {x - 1, y + 1}, {x, y + 1}, c2});
    s.beta = mk({c0, {x, y - 1}, {x + 1, y - 1}, {x + 1, y}, c2});
    return s;
}

inline IntVec pair_weight(const LadderQuiver& q, const Partition& a, const Partition& b) {
    IntVec w(q.arrows.size());
    for (const Partition* lam : {&a, &b})
        for (std::size_t ai : q.arrows_of_path(*lam)) w[ai] += 1;
    return w;
}

// weight of the coefficient attached to the vertex relation: difference of
// the wedge-vee monomial weight and the alpha-beta monomial weight
inline std::vector<IntVec> dv_weights(const LadderQuiver& q) {
    std::vector<IntVec> out;
    for (const GridPt& v : q.internal_vertices()) {
        ThreeTermShapes s = dv_shapes(q, v);
        IntVec wv = pair_weight(q, s.wedge, s.vee);
        IntVec ab = pair_weight(q, s.alpha, s.beta);
        IntVec diff(wv.size());
        for (std::size_t i = 0; i < wv.size(); ++i) diff[i] = wv[i] - ab[i];
        out.push_back(std::move(diff));
    }
    return out;
}

// Is u a character of G-tilde lying in the subgroup generated by the all-ones
// character and the extra characters, mod n?
inline bool char_in_span(const Int& n, const IntVec& u, const std::vector<IntVec>& extra) {
    const std::size_t m = u.size();
    std::vector<IntVec> rows{IntVec(m, 1)};
    for (const IntVec& e : extra) rows.push_back(e);
    for (std::size_t i = 0; i < m; ++i) {
        IntVec e(m);
        e[i] = n;
        rows.push_back(std::move(e));
    }
    return in_hnf_lattice(hnf_basis(IntMat::from_rows(rows)), u);
}

// ------- the d-diagonal equation (gcd(n,r) > 1) -------

struct P2Item {
    std::pair<int, int> box;  // (p, q): bottom-left corner (q*d, p*d)
    int a = 0;                // diagonal vertex offset inside the box
    GridPt v;                 // the diagonal vertex
    Partition sigma, mu;      // routes bent at the diagonal vertex
    Partition sigma_b, mu_b;  // routes around the whole box
    int i = 0;                // first index of the 2d-window
};

inline std::vector<P2Item> p2_items(const LadderQuiver& q, int d) {
    std::vector<P2Item> out;
    const int s = q.r / d, t = q.k / d;
    for (int bp = 0; bp < s; ++bp)
        for (int bq = 0; bq < t; ++bq) {
            const int x0 = bq * d, y0 = bp * d;
            StepPath pre, post;
            for (int i = 0; i <= x0; ++i) pre.push_back({i, 0});
            for (int j = 1; j <= y0; ++j) pre.push_back({x0, j});
            for (int i = 1; i <= q.k - x0 - d; ++i) post.push_back({x0 + d + i, y0 + d});
            for (int j = y0 + d + 1; j <= q.r; ++j) post.push_back({q.k, j});
            auto mkpath = [&](const std::string& steps) {
                StepPath pts = pre;
                GridPt cur{x0, y0};
                for (char st : steps) {
                    cur = st == 'R' ? GridPt{cur.first + 1, cur.second}
                                    : GridPt{cur.first, cur.second + 1};
                    pts.push_back(cur);
                }
                pts.insert(pts.end(), post.begin(), post.end());
                return path_to_partition(q, pts);
            };
            std::string R(d, 'R'), U(d, 'U');
            Partition sig_b = mkpath(U + R), mu_b = mkpath(R + U);
            for (int a = 1; a < d; ++a) {
                P2Item it;
                it.box = {bp, bq};
                it.a = a;
                it.v = {x0 + a, y0 + a};
                it.sigma = mkpath(std::string(a, 'U') + R + std::string(d - a, 'U'));
                it.mu = mkpath(std::string(a, 'R') + U + std::string(d - a, 'R'));
                it.sigma_b = sig_b;
                it.mu_b = mu_b;
                it.i = x0 + y0 + 1;
                out.push_back(std::move(it));
            }
        }
    return out;
}

// Syzygy redistributing the block Js (inside I1) against Jt (inside I2), with
// the sign of each redistribution given by the parity of its arrangement.
inline std::map<MonomialKey, Int> swap_relation(int r, const Subset& i1, const Subset& i2,
                                                const Subset& js, const Subset& jt) {
    Subset pool = js;
    pool.insert(pool.end(), jt.begin(), jt.end());
    std::sort(pool.begin(), pool.end());
    Subset base1, base2;
    for (int x : i1)
        if (std::find(js.begin(), js.end(), x) == js.end()) base1.push_back(x);
    for (int x : i2)
        if (std::find(jt.begin(), jt.end(), x) == jt.end()) base2.push_back(x);
    Subset orig = js;
    orig.insert(orig.end(), jt.begin(), jt.end());
    std::map<MonomialKey, Int> terms;
    const std::size_t l = js.size();
    // iterate over all subsets of the pool of size l
    std::vector<std::size_t> comb(l);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t at) {
        if (at == l) {
            Subset s, sc;
            std::vector<bool> in(pool.size(), false);
            for (std::size_t c : comb) in[c] = true;
            for (std::size_t c = 0; c < pool.size(); ++c) (in[c] ? s : sc).push_back(pool[c]);
            Subset k1 = base1, k2 = base2;
            k1.insert(k1.end(), s.begin(), s.end());
            k2.insert(k2.end(), sc.begin(), sc.end());
            std::sort(k1.begin(), k1.end());
            std::sort(k2.begin(), k2.end());
            if (std::adjacent_find(k1.begin(), k1.end()) != k1.end()) return;
            if (std::adjacent_find(k2.begin(), k2.end()) != k2.end()) return;
            // parity of the arrangement relative to the original split
            std::vector<int> seq;
            for (int x : s) seq.push_back(static_cast<int>(
                std::find(orig.begin(), orig.end(), x) - orig.begin()));
            for (int x : sc) seq.push_back(static_cast<int>(
                std::find(orig.begin(), orig.end(), x) - orig.begin()));
            int sg = 1;
            for (std::size_t p1 = 0; p1 < seq.size(); ++p1)
                for (std::size_t p2 = p1 + 1; p2 < seq.size(); ++p2)
                    if (seq[p1] > seq[p2]) sg = -sg;
            terms[{k1, k2}] += sg;
            return;
        }
        for (std::size_t c = start; c < pool.size(); ++c) {
            comb[at] = c;
            rec(c + 1, at + 1);
        }
    };
    rec(0, 0);
    (void)r;
    std::map<MonomialKey, Int> out;
    for (auto& [k, c] : terms)
        if (c != 0) out[k] = c;
    return out;
}

struct P2Report {
    int d = 1;
    bool trivial = false;                // d == 1
    bool window_shapes_ok = true;        // I cap M matches the displayed blocks
    bool containing_relations_ok = true; // every (B, v) has a relation with both monomials
    bool weight_identity_ok = false;     // weight(prod f) = -d on the border arrows mod <1>
    bool power_trivial_ok = false;       // (n/d)-th power acts trivially
    int weight_order = 1;                // exact order of the product weight
    bool f_weights_in_span = true;       // each f weight in span(d_v) + <1>
    IntVec product_weight;
    bool passed() const {
        return trivial || (window_shapes_ok && containing_relations_ok && weight_identity_ok &&
                           power_trivial_ok && f_weights_in_span);
    }
};

inline P2Report p2_equation(const LadderQuiver& q, std::mt19937& rng) {
    P2Report rep;
    rep.d = std::gcd(q.n, q.r);
    if (rep.d == 1) {
        rep.trivial = true;
        return rep;
    }
    const int n = q.n, d = rep.d;
    auto dvw = dv_weights(q);
    IntVec total(q.arrows.size(), 0);
    for (const P2Item& it : p2_items(q, d)) {
        Subset is = q.subset_of(it.sigma), im = q.subset_of(it.mu);
        Subset isb = q.subset_of(it.sigma_b), imb = q.subset_of(it.mu_b);
        // windows
        std::set<int> m_window, exp_s, exp_m;
        for (int x = it.i; x < it.i + 2 * d; ++x) m_window.insert(x);
        for (int x = it.i; x < it.i + it.a; ++x) exp_s.insert(x);
        for (int x = it.i + it.a + d; x < it.i + 2 * d; ++x) exp_s.insert(x);
        for (int x = it.i + it.a; x < it.i + it.a + d; ++x) exp_m.insert(x);
        std::set<int> got_s, got_m;
        for (int x : is)
            if (m_window.count(x)) got_s.insert(x);
        for (int x : im)
            if (m_window.count(x)) got_m.insert(x);
        if (got_s != exp_s || got_m != exp_m) rep.window_shapes_ok = false;
        // the containing relation
        Subset js, jt;
        for (int x = it.i + it.a + d; x < it.i + 2 * d; ++x) js.push_back(x);
        for (int x = it.i + it.a; x < it.i + it.a + d; ++x) jt.push_back(x);
        auto rel = swap_relation(q.r, is, im, js, jt);
        auto has = [&](Subset a, Subset b) {
            return rel.count({a, b}) || rel.count({b, a});
        };
        if (!has(is, im) || !has(isb, imb)) rep.containing_relations_ok = false;
        {
            PlueckerRelation flat(rel.begin(), rel.end());
            canonicalize(flat);
            if (!vanishes_on_minors(n, q.r, {flat}, rng, 5)) rep.containing_relations_ok = false;
        }
        // f weight and span membership
        IntVec fv = pair_weight(q, it.sigma, it.mu);
        IntVec fb = pair_weight(q, it.sigma_b, it.mu_b);
        IntVec diff(fv.size());
        for (std::size_t c = 0; c < fv.size(); ++c) diff[c] = fv[c] - fb[c];
        if (!char_in_span(n, diff, dvw)) rep.f_weights_in_span = false;
        for (std::size_t c = 0; c < total.size(); ++c) total[c] += diff[c];
    }
    rep.product_weight = total;
    // border arrows: steps entirely on the boundaries of the d x d boxes
    std::set<std::pair<GridPt, bool>> border;
    for (int bp = 0; bp < q.r / d; ++bp)
        for (int bq = 0; bq < q.k / d; ++bq) {
            const int x0 = bq * d, y0 = bp * d;
            for (int x = x0; x < x0 + d; ++x) {
                border.insert({{x, y0}, false});
                border.insert({{x, y0 + d}, false});
            }
            for (int y = y0; y < y0 + d; ++y) {
                border.insert({{x0, y}, true});
                border.insert({{x0 + d, y}, true});
            }
        }
    IntVec target(q.arrows.size(), 0);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        bool all_border = true;
        const StepPath& p = q.arrows[ai];
        for (std::size_t c = 0; c + 1 < p.size(); ++c) {
            bool vertical = p[c + 1].second == p[c].second + 1;
            if (!border.count({p[c], vertical})) all_border = false;
        }
        if (all_border) target[ai] = -d;
    }
    rep.weight_identity_ok = char_in_span(n, [&] {
        IntVec diff(total.size());
        for (std::size_t c = 0; c < total.size(); ++c) diff[c] = total[c] - target[c];
        return diff;
    }(), {});
    IntVec powered(total.size());
    for (std::size_t c = 0; c < total.size(); ++c) powered[c] = (n / d) * total[c];
    rep.power_trivial_ok = char_in_span(n, powered, {});
    rep.weight_order = n / d;
    for (int e = 1; e < n / d; ++e) {
        if ((n / d) % e != 0) continue;
        IntVec scaled(total.size());
        for (std::size_t c = 0; c < total.size(); ++c) scaled[c] = e * total[c];
        if (char_in_span(n, scaled, {})) {
            rep.weight_order = e;
            break;
        }
    }
    if (rep.weight_order != n / d) rep.power_trivial_ok = false;
    return rep;
}

// expected number of components: s = n^{(r-1)(n-r-1)-1} * n / gcd(n,r)
inline Int component_count(int n, int r) {
    Int s = 1;
    for (int i = 0; i < (r - 1) * (n - r - 1) - 1; ++i) s *= n;
    return s * n / std::gcd(n, r);
}

}  // namespace grasstoric
