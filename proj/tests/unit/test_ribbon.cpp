#include <doctest.h>

#include "pacert/errors.hpp"
#include "pacert/ribbon.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace pacert;

namespace {

// All vertex permutations and per-vertex rotations (or reflections)
// compatible with the pairing and the curve labels.
std::set<std::vector<int>> brute_force_automorphisms(const RibbonGraph& g, bool allow_reversing) {
    const int V = g.num_vertices();
    std::vector<int> perm(static_cast<std::size_t>(V));
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> out;
    do {
        std::vector<int> rot(static_cast<std::size_t>(V), 0);
        for (int flip = 0; flip <= (allow_reversing ? 1 : 0); ++flip) {
            std::fill(rot.begin(), rot.end(), 0);
            while (true) {
                std::vector<int> map(static_cast<std::size_t>(4 * V));
                for (int h = 0; h < 4 * V; ++h) {
                    int v = h / 4, s = h % 4;
                    int t = flip ? ((rot[static_cast<std::size_t>(v)] - s) % 4 + 4) % 4 : (s + rot[static_cast<std::size_t>(v)]) % 4;
                    map[static_cast<std::size_t>(h)] = 4 * perm[static_cast<std::size_t>(v)] + t;
                }
                bool ok = true;
                for (int h = 0; h < 4 * V && ok; ++h) {
                    int mh = map[static_cast<std::size_t>(h)];
                    ok = g.pair[static_cast<std::size_t>(mh)] == map[static_cast<std::size_t>(g.pair[static_cast<std::size_t>(h)])] &&
                         g.edge(mh).curve == g.edge(h).curve;
                }
                if (ok) out.insert(map);
                int i = 0;
                while (i < V && ++rot[static_cast<std::size_t>(i)] == 4) rot[static_cast<std::size_t>(i++)] = 0;
                if (i == V) break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

TEST_CASE("figure 1 graph") {
    RibbonGraph g = build_figure1();
    CHECK_NOTHROW(g.validate());
    CHECK(g.num_vertices() == 5);
    CHECK(g.num_edges() == 10);
    for (int v = 0; v < 5; ++v)
        for (int s = 0; s < 4; ++s) CHECK(g.edge(RibbonGraph::at(v, s)).family() != g.edge(RibbonGraph::at(v, s + 1)).family());
    FaceTrace ft = trace_faces(g);
    CHECK(ft.euler_graph() == -5);
    CHECK(ft.boundary_components == 1);
    CHECK(ft.genus == 3);
    CHECK(2 - 2 * ft.genus - ft.boundary_components == ft.euler_graph());
    CHECK(g.curve_cycle("a").size() == 5);
    CHECK(g.curve_cycle("b").size() == 5);
}

TEST_CASE("torus square") {
    RibbonGraph t = build_torus_square();
    FaceTrace ft = trace_faces(t);
    CHECK(ft.genus == 1);
    CHECK(ft.faces.size() == 1);
    CHECK(ft.faces[0].size() == 4);
}

TEST_CASE("genus 4 model") {
    for (int k = 1; k <= 3; ++k) {
        RibbonGraph g = build_genus4_model(k);
        CHECK_NOTHROW(g.validate());
        FaceTrace ft = trace_faces(g);
        CHECK(ft.genus == 4);
        CHECK(ft.boundary_components == k);
    }
}

TEST_CASE("parser diagnostics") {
    CHECK_THROWS_AS(parse_ribbon("vertex v: v.E v.N v.W\n"), StructuralError);
    try {
        parse_ribbon("# theta\nvertex v: x y z\n");
        FAIL("accepted a 3-valent vertex");
    } catch (const StructuralError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // a a b b at a vertex is not transverse
    std::string bad = "vertex p: p.E p.N p.W p.S\nedge e a: p.E p.N\nedge f b: p.W p.S\n";
    CHECK_THROWS_AS(parse_ribbon(bad).validate(), StructuralError);
}

TEST_CASE("write and parse round trip") {
    RibbonGraph g = build_figure1();
    RibbonGraph h = parse_ribbon(write_ribbon(g));
    CHECK(h.pair == g.pair);
    CHECK(h.vertex_names == g.vertex_names);
    CHECK(h.marked_vertex == g.marked_vertex);
    CHECK(write_ribbon(h) == write_ribbon(g));
}

TEST_CASE("figure 1 automorphisms") {
    RibbonGraph g = build_figure1();
    auto auts = enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving);
    REQUIRE(auts.size() == 2);
    auto rho = auts[0].is_identity() ? auts[1] : auts[0];
    CHECK_FALSE(rho.is_identity());
    CHECK(rho.order() == 2);
    CHECK(rho.compose(rho).is_identity());
    CHECK(rho.inverse() == rho);
    REQUIRE(g.marked_vertex);
    CHECK(rho.vertex_map[static_cast<std::size_t>(*g.marked_vertex)] == *g.marked_vertex);
    CHECK(preserves_faces(g, trace_faces(g), rho));

    auto any = enumerate_automorphisms(g, CurveConstraint::none, OrientationMode::either);
    CHECK(std::any_of(any.begin(), any.end(), [](const GraphAutomorphism& a) { return a.is_identity(); }));
}

TEST_CASE("automorphisms against brute force") {
    for (const RibbonGraph& g : {build_figure1(), build_torus_square()}) {
        std::set<std::vector<int>> mine;
        for (const auto& a : enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving)) mine.insert(a.half_edge_map);
        CHECK(mine == brute_force_automorphisms(g, false));
        std::set<std::vector<int>> both;
        for (const auto& a : enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::either)) both.insert(a.half_edge_map);
        CHECK(both == brute_force_automorphisms(g, true));
    }
}

TEST_CASE("arc orbits") {
    RibbonGraph g = build_figure1();
    auto auts = enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving);
    auto rho = auts[0].is_identity() ? auts[1] : auts[0];
    auto id = auts[0].is_identity() ? auts[0] : auts[1];
    ArcRef delta{g.marked_arcs.at(0).edge, g.marked_arcs.at(0).side};
    ArcRef img = arc_orbit(g, rho, delta);
    CHECK_FALSE(same_arc_class(img, delta));
    CHECK(arc_orbit(g, id, delta) == delta);
    CHECK(arc_orbit(g, rho, img) == delta);
    CHECK(g.edges[static_cast<std::size_t>(delta.edge)].label == "beta1");
}
