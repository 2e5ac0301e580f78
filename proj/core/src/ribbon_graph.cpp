#include "pacert/ribbon.hpp"

#include "pacert/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace pacert {

int RibbonGraph::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
        if (vertex_names[i] == name) return static_cast<int>(i);
    return -1;
}

int RibbonGraph::find_edge(const std::string& label) const {
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].label == label) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> RibbonGraph::curve_ids() const {
    std::set<std::string> s;
    for (auto& e : edges) s.insert(e.curve);
    return {s.begin(), s.end()};
}

std::vector<int> RibbonGraph::curve_cycle(const std::string& curve) const {
    int start = -1;
    for (auto& e : edges)
        if (e.curve == curve) {
            start = e.tail;
            break;
        }
    if (start < 0) throw StructuralError("unknown curve '" + curve + "'");
    std::vector<int> cyc;
    int h = start;
    do {
        cyc.push_back(h);
        int in = pair[static_cast<std::size_t>(h)];
        h = opposite(in);
        if (cyc.size() > edges.size()) throw StructuralError("curve '" + curve + "' does not close up");
    } while (h != start);
    return cyc;
}

void RibbonGraph::validate() const {
    const int V = num_vertices();
    const int H = num_half_edges();
    if (V == 0) throw StructuralError("graph has no vertices");
    if (static_cast<int>(half_edge_names.size()) != H) throw StructuralError("every vertex must carry exactly 4 half-edges");
    if (static_cast<int>(pair.size()) != H || static_cast<int>(edge_of.size()) != H)
        throw StructuralError("half-edge tables have the wrong size");
    for (int h = 0; h < H; ++h) {
        int p = pair[static_cast<std::size_t>(h)];
        if (p < 0 || p >= H) throw StructuralError("half-edge " + half_edge_names[static_cast<std::size_t>(h)] + " is unpaired");
        if (p == h) throw StructuralError("pairing has a fixed point at " + half_edge_names[static_cast<std::size_t>(h)]);
        if (pair[static_cast<std::size_t>(p)] != h) throw StructuralError("pairing is not an involution");
    }
    if (static_cast<int>(edges.size()) * 2 != H) throw StructuralError("edge count must be twice the vertex count");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.tail < 0 || e.head < 0 || pair[static_cast<std::size_t>(e.tail)] != e.head)
            throw StructuralError("edge " + e.label + " does not match the pairing");
        if (edge_of[static_cast<std::size_t>(e.tail)] != static_cast<int>(i) ||
            edge_of[static_cast<std::size_t>(e.head)] != static_cast<int>(i))
            throw StructuralError("edge table inconsistent at " + e.label);
        if (e.family() != 'a' && e.family() != 'b') throw StructuralError("edge " + e.label + " has curve id outside {a*, b*}");
    }
    for (int v = 0; v < V; ++v) {
        for (int s = 0; s < 4; ++s) {
            const Edge& e = edge(at(v, s));
            const Edge& o = edge(at(v, s + 2));
            const Edge& n = edge(at(v, s + 1));
            if (e.family() == n.family())
                throw StructuralError("vertex " + vertex_names[static_cast<std::size_t>(v)] + " does not alternate a/b edges");
            if (e.curve != o.curve)
                throw StructuralError("vertex " + vertex_names[static_cast<std::size_t>(v)] + " is not a transverse crossing of two curves");
        }
        for (int s = 0; s < 2; ++s)
            if (outgoing(at(v, s)) == outgoing(at(v, s + 2)))
                throw StructuralError("curve through vertex " + vertex_names[static_cast<std::size_t>(v)] + " is not consistently oriented");
    }
    // connectivity
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int s = 0; s < 4; ++s) {
            int w = vertex(pair[static_cast<std::size_t>(at(v, s))]);
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                q.push_back(w);
            }
        }
    }
    for (char c : seen)
        if (!c) throw StructuralError("graph is not connected");
    if (marked_vertex && (*marked_vertex < 0 || *marked_vertex >= V)) throw StructuralError("marked vertex out of range");
    for (auto& a : marked_arcs)
        if (a.edge < 0 || a.edge >= num_edges() || (a.side != 1 && a.side != -1)) throw StructuralError("marked arc is invalid");
}

FaceTrace trace_faces(const RibbonGraph& g) {
    g.validate();
    FaceTrace ft;
    ft.vertices = g.num_vertices();
    ft.edges = g.num_edges();
    const int H = g.num_half_edges();
    std::vector<char> seen(static_cast<std::size_t>(H), 0);
    for (int h0 = 0; h0 < H; ++h0) {
        if (seen[static_cast<std::size_t>(h0)]) continue;
        std::vector<int> face;
        int h = h0;
        while (!seen[static_cast<std::size_t>(h)]) {
            seen[static_cast<std::size_t>(h)] = 1;
            face.push_back(h);
            h = g.pair[static_cast<std::size_t>(RibbonGraph::prev_ccw(h))];
        }
        if (h != h0) throw StructuralError("face tracing did not close up");
        ft.faces.push_back(std::move(face));
    }
    ft.boundary_components = static_cast<int>(ft.faces.size());
    int chi = ft.euler_closed();
    if (chi % 2 != 0 || chi > 2) throw StructuralError("Euler characteristic is not that of a closed orientable surface");
    ft.genus = (2 - chi) / 2;
    return ft;
}

bool GraphAutomorphism::is_identity() const {
    for (std::size_t i = 0; i < half_edge_map.size(); ++i)
        if (half_edge_map[i] != static_cast<int>(i)) return false;
    return true;
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& inner) const {
    GraphAutomorphism r;
    r.half_edge_map.resize(inner.half_edge_map.size());
    for (std::size_t i = 0; i < inner.half_edge_map.size(); ++i)
        r.half_edge_map[i] = half_edge_map[static_cast<std::size_t>(inner.half_edge_map[i])];
    r.vertex_map.resize(inner.vertex_map.size());
    for (std::size_t i = 0; i < inner.vertex_map.size(); ++i)
        r.vertex_map[i] = vertex_map[static_cast<std::size_t>(inner.vertex_map[i])];
    r.orientation_preserving = orientation_preserving == inner.orientation_preserving;
    return r;
}

GraphAutomorphism GraphAutomorphism::inverse() const {
    GraphAutomorphism r;
    r.half_edge_map.resize(half_edge_map.size());
    for (std::size_t i = 0; i < half_edge_map.size(); ++i) r.half_edge_map[static_cast<std::size_t>(half_edge_map[i])] = static_cast<int>(i);
    r.vertex_map.resize(vertex_map.size());
    for (std::size_t i = 0; i < vertex_map.size(); ++i) r.vertex_map[static_cast<std::size_t>(vertex_map[i])] = static_cast<int>(i);
    r.orientation_preserving = orientation_preserving;
    return r;
}

int GraphAutomorphism::order() const {
    GraphAutomorphism p = *this;
    for (int k = 1; k <= static_cast<int>(half_edge_map.size()) * 4 + 1; ++k) {
        if (p.is_identity()) return k;
        p = p.compose(*this);
    }
    return -1;
}

namespace {

bool propagate(const RibbonGraph& g, int target, bool preserving, std::vector<int>& phi) {
    const int H = g.num_half_edges();
    phi.assign(static_cast<std::size_t>(H), -1);
    std::vector<int> inv(static_cast<std::size_t>(H), -1);
    std::deque<int> q;
    auto assign = [&](int h, int t) {
        int& cur = phi[static_cast<std::size_t>(h)];
        if (cur == t) return true;
        if (cur != -1 || inv[static_cast<std::size_t>(t)] != -1) return false;
        cur = t;
        inv[static_cast<std::size_t>(t)] = h;
        q.push_back(h);
        return true;
    };
    if (!assign(0, target)) return false;
    while (!q.empty()) {
        int h = q.front();
        q.pop_front();
        int t = phi[static_cast<std::size_t>(h)];
        if (!assign(g.pair[static_cast<std::size_t>(h)], g.pair[static_cast<std::size_t>(t)])) return false;
        int nt = preserving ? RibbonGraph::next_ccw(t) : RibbonGraph::prev_ccw(t);
        if (!assign(RibbonGraph::next_ccw(h), nt)) return false;
    }
    for (int x : phi)
        if (x < 0) return false;
    return true;
}

} // namespace

std::vector<GraphAutomorphism> enumerate_automorphisms(const RibbonGraph& g, CurveConstraint preserve, OrientationMode mode) {
    g.validate();
    std::vector<GraphAutomorphism> out;
    const int H = g.num_half_edges();
    std::vector<std::string> curves = g.curve_ids();
    for (int t = 0; t < H; ++t) {
        for (int pass = 0; pass < (mode == OrientationMode::either ? 2 : 1); ++pass) {
            bool preserving = pass == 0;
            std::vector<int> phi;
            if (!propagate(g, t, preserving, phi)) continue;
            bool ok = true;
            // curve constraint; edges already map to edges via the pairing
            std::map<std::string, std::string> curve_image;
            for (int h = 0; h < H && ok; ++h) {
                const auto& e = g.edge(h);
                const auto& f = g.edge(phi[static_cast<std::size_t>(h)]);
                if (preserve == CurveConstraint::families && e.family() != f.family()) ok = false;
                if (preserve == CurveConstraint::curves && e.curve != f.curve) ok = false;
                auto [it, fresh] = curve_image.emplace(e.curve, f.curve);
                if (!fresh && it->second != f.curve) ok = false;  // a curve must map onto a single curve
            }
            if (!ok) continue;
            GraphAutomorphism a;
            a.half_edge_map = phi;
            a.vertex_map.resize(static_cast<std::size_t>(g.num_vertices()));
            for (int v = 0; v < g.num_vertices(); ++v) a.vertex_map[static_cast<std::size_t>(v)] = RibbonGraph::vertex(phi[static_cast<std::size_t>(4 * v)]);
            a.orientation_preserving = preserving;
            out.push_back(std::move(a));
        }
    }
    return out;
}

ArcRef arc_orbit(const RibbonGraph& g, const GraphAutomorphism& aut, const ArcRef& arc) {
    if (arc.edge < 0 || arc.edge >= g.num_edges()) throw StructuralError("unknown arc id " + std::to_string(arc.edge));
    const auto& e = g.edges[static_cast<std::size_t>(arc.edge)];
    int t = aut.half_edge_map[static_cast<std::size_t>(e.tail)];
    ArcRef r;
    r.edge = g.edge_of[static_cast<std::size_t>(t)];
    bool direction_kept = g.outgoing(t);
    r.side = arc.side * (direction_kept ? 1 : -1) * (aut.orientation_preserving ? 1 : -1);
    return r;
}

bool preserves_faces(const RibbonGraph& g, const FaceTrace& ft, const GraphAutomorphism& aut) {
    std::vector<int> face_of(static_cast<std::size_t>(g.num_half_edges()), -1);
    for (std::size_t i = 0; i < ft.faces.size(); ++i)
        for (int h : ft.faces[i]) face_of[static_cast<std::size_t>(h)] = static_cast<int>(i);
    std::vector<int> image(ft.faces.size(), -1);
    std::vector<char> hit(ft.faces.size(), 0);
    // a reversing map sends the face of h onto the paired half-edges of a face
    for (std::size_t i = 0; i < ft.faces.size(); ++i) {
        std::set<int> imgs;
        for (int h : ft.faces[i]) {
            int t = aut.half_edge_map[static_cast<std::size_t>(h)];
            int corner = aut.orientation_preserving ? t : g.pair[static_cast<std::size_t>(t)];
            imgs.insert(face_of[static_cast<std::size_t>(corner)]);
        }
        if (imgs.size() != 1) return false;
        int f = *imgs.begin();
        if (hit[static_cast<std::size_t>(f)]) return false;
        hit[static_cast<std::size_t>(f)] = 1;
        image[i] = f;
    }
    return true;
}

} // namespace pacert
