#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pacert {

// 4-valent ribbon graph of a transverse curve system. Half-edge id h
// sits at vertex h / 4 in cyclic (ccw) slot h % 4.
struct RibbonGraph {
    struct Edge {
        std::string label;
        std::string curve;   // curve id; family is its first character
        int tail = -1;       // outgoing half-edge
        int head = -1;       // incoming half-edge
        char family() const { return curve.empty() ? '?' : curve[0]; }
    };
    struct ArcMark {
        int edge = -1;
        int side = +1;       // +1 crosses the edge from its left to its right
    };

    std::vector<std::string> vertex_names;
    std::vector<std::string> half_edge_names;
    std::vector<int> pair;       // fixed point free involution
    std::vector<int> edge_of;    // half-edge -> edge index
    std::vector<Edge> edges;
    std::optional<int> marked_vertex;
    std::vector<ArcMark> marked_arcs;

    int num_vertices() const { return static_cast<int>(vertex_names.size()); }
    int num_half_edges() const { return 4 * num_vertices(); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    static int vertex(int h) { return h / 4; }
    static int slot(int h) { return h % 4; }
    static int at(int v, int s) { return 4 * v + ((s % 4) + 4) % 4; }
    static int next_ccw(int h) { return at(vertex(h), slot(h) + 1); }
    static int prev_ccw(int h) { return at(vertex(h), slot(h) + 3); }
    static int opposite(int h) { return at(vertex(h), slot(h) + 2); }
    bool outgoing(int h) const { return edges[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(h)])].tail == h; }
    const Edge& edge(int h) const { return edges[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(h)])]; }

    int find_vertex(const std::string& name) const;
    int find_edge(const std::string& label) const;
    std::vector<std::string> curve_ids() const;  // sorted
    // Cyclic sequence of outgoing half-edges traversed by a curve.
    std::vector<int> curve_cycle(const std::string& curve) const;

    // Throws StructuralError naming the violated invariant.
    void validate() const;
};

struct FaceTrace {
    std::vector<std::vector<int>> faces;  // half-edge cycles, next(h) = pair(prev_ccw(h))
    int vertices = 0, edges = 0;
    int genus = 0;
    int boundary_components = 0;
    int euler_graph() const { return vertices - edges; }
    int euler_closed() const { return vertices - edges + static_cast<int>(faces.size()); }
};

FaceTrace trace_faces(const RibbonGraph& g);

enum class CurveConstraint { none, families, curves };
enum class OrientationMode { preserving, either };

struct GraphAutomorphism {
    std::vector<int> half_edge_map;
    std::vector<int> vertex_map;
    bool orientation_preserving = true;

    bool is_identity() const;
    int order() const;
    GraphAutomorphism compose(const GraphAutomorphism& inner) const;  // this o inner
    GraphAutomorphism inverse() const;
    bool operator==(const GraphAutomorphism& o) const { return half_edge_map == o.half_edge_map; }
};

std::vector<GraphAutomorphism> enumerate_automorphisms(const RibbonGraph& g, CurveConstraint preserve, OrientationMode mode);

struct ArcRef {
    int edge = -1;
    int side = +1;
    bool operator==(const ArcRef&) const = default;
};

ArcRef arc_orbit(const RibbonGraph& g, const GraphAutomorphism& aut, const ArcRef& arc);
// Arcs crossing the same edge are taken as one class.
inline bool same_arc_class(const ArcRef& a, const ArcRef& b) { return a.edge == b.edge; }

// Faces map bijectively to faces under the automorphism.
bool preserves_faces(const RibbonGraph& g, const FaceTrace& ft, const GraphAutomorphism& aut);

// Text format: `vertex <name>: h1 h2 h3 h4`, `edge <label> <curve>: <tail> <head>`,
// `mark <vertex>`, `mark-arc <edge> <+|->`; `#` starts a comment.
RibbonGraph parse_ribbon(const std::string& text);
RibbonGraph load_ribbon(const std::string& path);
std::string write_ribbon(const RibbonGraph& g);

// Five intersection points v1..v5 of a and b, x = v3 marked, delta on beta1.
RibbonGraph build_figure1();
// Figure 1 pair plus a2 (through a new point y on beta1) and b2 meeting a2
// k times; curves a1, b1, a2, b2.
RibbonGraph build_genus4_model(int k = 1);
// One vertex, two loops a and b.
RibbonGraph build_torus_square();

} // namespace pacert
