#include "pacert/ribbon.hpp"

#include "pacert/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pacert {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw StructuralError("line " + std::to_string(line) + ": " + msg);
}

// "name:" or "name :" -> tokens before and after the colon
bool split_colon(const std::string& line, std::vector<std::string>& head, std::vector<std::string>& tail) {
    auto pos = line.find(':');
    if (pos == std::string::npos) return false;
    head = split_ws(line.substr(0, pos));
    tail = split_ws(line.substr(pos + 1));
    return true;
}

} // namespace

RibbonGraph parse_ribbon(const std::string& text) {
    RibbonGraph g;
    std::map<std::string, int> half_id;
    struct PendingEdge {
        std::string label, curve, tail, head;
        int line;
    };
    std::vector<PendingEdge> pending;
    std::vector<std::pair<std::string, int>> marks;
    std::vector<std::tuple<std::string, int, int>> arc_marks;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "vertex") {
            std::vector<std::string> head, tail;
            if (!split_colon(line, head, tail) || head.size() != 2) fail(lineno, "expected `vertex <name>: h1 h2 h3 h4`");
            if (tail.size() != 4)
                fail(lineno, "vertex " + head[1] + " has " + std::to_string(tail.size()) + " half-edges; every vertex must be 4-valent");
            if (g.find_vertex(head[1]) >= 0) fail(lineno, "duplicate vertex " + head[1]);
            int v = g.num_vertices();
            g.vertex_names.push_back(head[1]);
            for (int s = 0; s < 4; ++s) {
                const std::string& h = tail[static_cast<std::size_t>(s)];
                if (half_id.count(h)) fail(lineno, "half-edge " + h + " appears at two vertices");
                half_id[h] = RibbonGraph::at(v, s);
                g.half_edge_names.push_back(h);
            }
        } else if (kw == "edge") {
            std::vector<std::string> head, tail;
            if (!split_colon(line, head, tail) || head.size() != 3 || tail.size() != 2)
                fail(lineno, "expected `edge <label> <curve>: <tail> <head>`");
            pending.push_back({head[1], head[2], tail[0], tail[1], lineno});
        } else if (kw == "mark") {
            if (tok.size() != 2) fail(lineno, "expected `mark <vertex>`");
            marks.emplace_back(tok[1], lineno);
        } else if (kw == "mark-arc") {
            if (tok.size() != 3) fail(lineno, "expected `mark-arc <edge> <side>`");
            int side = 0;
            const std::string& sd = tok[2];
            if (sd == "+" || sd == "+1" || sd == "1" || sd == "left") side = 1;
            else if (sd == "-" || sd == "-1" || sd == "right") side = -1;
            else fail(lineno, "arc side must be + or -");
            arc_marks.emplace_back(tok[1], side, lineno);
        } else {
            fail(lineno, "unknown directive '" + kw + "'");
        }
    }
    const int H = g.num_half_edges();
    g.pair.assign(static_cast<std::size_t>(H), -1);
    g.edge_of.assign(static_cast<std::size_t>(H), -1);
    for (auto& pe : pending) {
        auto a = half_id.find(pe.tail), b = half_id.find(pe.head);
        if (a == half_id.end()) fail(pe.line, "unknown half-edge " + pe.tail);
        if (b == half_id.end()) fail(pe.line, "unknown half-edge " + pe.head);
        if (a->second == b->second) fail(pe.line, "edge " + pe.label + " pairs a half-edge with itself");
        if (g.pair[static_cast<std::size_t>(a->second)] != -1) fail(pe.line, "half-edge " + pe.tail + " used by two edges");
        if (g.pair[static_cast<std::size_t>(b->second)] != -1) fail(pe.line, "half-edge " + pe.head + " used by two edges");
        if (g.find_edge(pe.label) >= 0) fail(pe.line, "duplicate edge label " + pe.label);
        g.pair[static_cast<std::size_t>(a->second)] = b->second;
        g.pair[static_cast<std::size_t>(b->second)] = a->second;
        int idx = g.num_edges();
        g.edge_of[static_cast<std::size_t>(a->second)] = idx;
        g.edge_of[static_cast<std::size_t>(b->second)] = idx;
        g.edges.push_back({pe.label, pe.curve, a->second, b->second});
    }
    for (int h = 0; h < H; ++h)
        if (g.pair[static_cast<std::size_t>(h)] == -1)
            throw StructuralError("half-edge " + g.half_edge_names[static_cast<std::size_t>(h)] + " is not on any edge");
    for (auto& [name, line] : marks) {
        int v = g.find_vertex(name);
        if (v < 0) fail(line, "mark of unknown vertex " + name);
        g.marked_vertex = v;
    }
    for (auto& [label, side, line] : arc_marks) {
        int e = g.find_edge(label);
        if (e < 0) fail(line, "mark-arc of unknown edge " + label);
        g.marked_arcs.push_back({e, side});
    }
    g.validate();
    return g;
}

RibbonGraph load_ribbon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open ribbon graph file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_ribbon(ss.str());
}

std::string write_ribbon(const RibbonGraph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "vertex " << g.vertex_names[static_cast<std::size_t>(v)] << ":";
        for (int s = 0; s < 4; ++s) out << " " << g.half_edge_names[static_cast<std::size_t>(RibbonGraph::at(v, s))];
        out << "\n";
    }
    for (auto& e : g.edges)
        out << "edge " << e.label << " " << e.curve << ": " << g.half_edge_names[static_cast<std::size_t>(e.tail)] << " "
            << g.half_edge_names[static_cast<std::size_t>(e.head)] << "\n";
    if (g.marked_vertex) out << "mark " << g.vertex_names[static_cast<std::size_t>(*g.marked_vertex)] << "\n";
    for (auto& a : g.marked_arcs)
        out << "mark-arc " << g.edges[static_cast<std::size_t>(a.edge)].label << " " << (a.side > 0 ? "+" : "-") << "\n";
    return out.str();
}

} // namespace pacert
