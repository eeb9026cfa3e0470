#include <catch2/catch_amalgamated.hpp>

#include <grasstoric/gc.hpp>

using namespace grasstoric;

TEST_CASE("weight matrix") {
    for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}) {
        LadderQuiver q(n, r);
        WeightMatrix wm = weight_matrix(q);
        CHECK(wm.row_vertices.size() == q.vertices.size() - 1);
        for (std::size_t i = 0; i < wm.b.rows; ++i) {
            Int ones = 0;
            for (std::size_t a = 0; a < wm.b.cols; ++a) ones += wm.b(i, a);
            CHECK(ones == n);
        }
        // every source-to-sink path meets each row's support exactly once
        for (const Partition& lam : q.partitions()) {
            auto ars = q.arrows_of_path(lam);
            for (std::size_t i = 0; i < wm.b.rows; ++i) {
                int hits = 0;
                for (std::size_t a : ars) hits += static_cast<int>(wm.b(i, a).get_si());
                CHECK(hits == 1);
            }
        }
        CHECK(rank_of(wm.b) == wm.b.rows);
    }
}

TEST_CASE("gc polytope construction") {
    GCPolytopeSet gc(5, 2);
    SECTION("dimensions and vertex counts") {
        CHECK(gc.p.dim == 6);
        CHECK(gc.p.vertices.size() == 9);
        CHECK(gc.q.vertices.size() == 10);
        CHECK(gc.p.hrep().size() == 10);
        CHECK(gc.q.hrep().size() == 9);
    }
    SECTION("dual pairing table") {
        for (std::size_t li = 0; li < gc.partitions.size(); ++li) {
            if (gc.partitions[li].empty()) continue;
            for (std::size_t dai = 0; dai < gc.w.size(); ++dai) {
                Int pr = dot(gc.m[li], gc.w[dai]);
                if (dai == gc.a_empty) CHECK(pr == -1);
                else CHECK(pr == (gc.quiver.crosses(gc.partitions[li], dai) ? 1 : 0));
            }
        }
    }
    SECTION("constructed dual equals the polar dual of P") {
        auto d = dual_polytope(gc.p);
        CHECK(d.vertices == gc.p_dual.vertices);
    }
    SECTION("quotient invariant factors are (n,...,n)") {
        CHECK(gc.quotient.invariant_factors == std::vector<Int>(5, Int(5)));
    }
    SECTION("inclusion carries Q's vertices back to the dual's") {
        std::vector<IntVec> back;
        for (const IntVec& v : gc.q_verts) back.push_back(mul_vec(v, gc.inclusion));
        CHECK(back == gc.pdual_verts);
    }
}

TEST_CASE("reflexivity and vertex spanning across cases") {
    for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
        GCPolytopeSet gc(n, r);
        CHECK(is_reflexive(gc.p));
        CHECK(is_vertex_spanning(gc.p));
        CHECK(is_reflexive(gc.q));
        CHECK(is_vertex_spanning(gc.q));
        const std::size_t d = static_cast<std::size_t>(r) * (n - r);
        CHECK(gc.quotient.invariant_factors == std::vector<Int>(d - 1, Int(n)));
        CHECK(gc.p.vertices.size() == static_cast<std::size_t>(2 * (r - 1) * (n - r - 1) + n));
        CHECK(gc.q.vertices.size() == gc.partitions.size());
        // P and Q are mutually dual: facet counts swap
        CHECK(gc.p.hrep().size() == gc.q.vertices.size());
        CHECK(gc.q.hrep().size() == gc.p.vertices.size());
    }
}

TEST_CASE("covering relations") {
    GCPolytopeSet gc(5, 2);
    SECTION("every crossing diagram gives a vanishing vertex sum") {
        for (const CrossingDiagram& c : all_crossing_diagrams(gc.quiver)) {
            auto paths = crossing_diagram_paths(gc.quiver, c);
            IntVec rel = covering_relation(gc, paths);
            Int total = 0;
            for (const Int& x : rel) total += x;
            CHECK(total == 5);
        }
    }
    SECTION("2-covering from two diagrams") {
        auto ds = all_crossing_diagrams(gc.quiver);
        auto paths = crossing_diagram_paths(gc.quiver, ds[0]);
        auto more = crossing_diagram_paths(gc.quiver, ds[1]);
        paths.insert(paths.end(), more.begin(), more.end());
        CHECK_NOTHROW(covering_relation(gc, paths));
    }
    SECTION("non-coverings rejected") {
        CHECK_THROWS(covering_relation(gc, gc.partitions));
    }
}

TEST_CASE("covering span rank") {
    auto expect_rank = [](int n, int r) {
        // C(n,r) - r(n-r)
        long c = 1;
        for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
        return static_cast<std::size_t>(c - r * (n - r));
    };
    for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
        GCPolytopeSet gc(n, r);
        CoveringSpanResult res = covering_span(gc);
        CHECK(res.rank == expect_rank(n, r));
        CHECK(res.full_rank == res.rank);
        CHECK(res.sublattice_index >= 1);
    }
}

TEST_CASE("excess deletion") {
    SECTION("checks pass for small cases") {
        for (auto [n, r] : {std::pair{4, 2}, {5, 2}, {6, 3}}) {
            GCPolytopeSet gc(n, r);
            CHECK(verify_excess_deletion(gc).passed());
        }
    }
    SECTION("B(4,2) empty forces Q equivalent to P") {
        GCPolytopeSet gc(4, 2);
        CHECK(arrow_partition_sets(gc.quiver).b_set.empty());
        CHECK(unimodular_equivalent(gc.q, gc.p));
    }
}
