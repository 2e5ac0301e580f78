#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace pacert {

SquareComplex build_complex(const RibbonGraph& g) {
    g.validate();
    SquareComplex X{g, trace_faces(g)};
    return X;
}

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("PACERT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_edge_weight = v;
    }
    return b;
}

namespace {

// Booth's least rotation.
std::size_t least_rotation(const std::vector<int>& s) {
    const std::size_t n = s.size();
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

} // namespace

std::vector<int> reduce_walk(const RibbonGraph& g, std::vector<int> walk) {
    std::vector<int> st;
    st.reserve(walk.size());
    for (int h : walk) {
        if (!st.empty() && h == g.pair[static_cast<std::size_t>(st.back())])
            st.pop_back();
        else
            st.push_back(h);
    }
    std::size_t lo = 0, hi = st.size();
    while (hi - lo >= 2 && st[lo] == g.pair[static_cast<std::size_t>(st[hi - 1])]) {
        ++lo;
        --hi;
    }
    return std::vector<int>(st.begin() + static_cast<long>(lo), st.begin() + static_cast<long>(hi));
}

NormalPath::NormalPath(const SquareComplex& X, std::vector<int> walk) {
    const RibbonGraph& g = X.graph;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        int h = walk[i], nx = walk[(i + 1) % walk.size()];
        if (h < 0 || h >= g.num_half_edges()) throw StructuralError("path uses an unknown half-edge");
        if (RibbonGraph::vertex(g.pair[static_cast<std::size_t>(h)]) != RibbonGraph::vertex(nx))
            throw StructuralError("edge path is not closed at position " + std::to_string(i));
    }
    h_ = reduce_walk(g, std::move(walk));
    if (h_.empty()) throw StructuralError("closed path is null-homotopic");
    std::rotate(h_.begin(), h_.begin() + static_cast<long>(least_rotation(h_)), h_.end());
}

NormalPath NormalPath::reversed(const SquareComplex& X) const {
    std::vector<int> r(h_.size());
    for (std::size_t j = 0; j < h_.size(); ++j) r[j] = X.graph.pair[static_cast<std::size_t>(h_[h_.size() - 1 - j])];
    return NormalPath(X, std::move(r));
}

bool NormalPath::same_curve(const SquareComplex& X, const NormalPath& o) const {
    return *this == o || *this == o.reversed(X);
}

std::vector<std::uint64_t> NormalPath::weights(const SquareComplex& X) const {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(X.graph.num_edges()), 0);
    for (int h : h_) ++w[static_cast<std::size_t>(X.graph.edge_of[static_cast<std::size_t>(h)])];
    return w;
}

std::uint64_t NormalPath::max_weight(const SquareComplex& X) const {
    auto w = weights(X);
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

std::vector<std::tuple<int, int, int>> NormalPath::dump(const SquareComplex& X) const {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(h_.size());
    for (std::size_t i = 0; i < h_.size(); ++i) {
        int in = X.graph.pair[static_cast<std::size_t>(h_[(i + h_.size() - 1) % h_.size()])];
        out.emplace_back(RibbonGraph::vertex(h_[i]), RibbonGraph::slot(in), RibbonGraph::slot(h_[i]));
    }
    return out;
}

std::string NormalPath::to_string(const SquareComplex& X) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < h_.size(); ++i) {
        const auto& e = X.graph.edge(h_[i]);
        if (i) os << ' ';
        os << e.label << (e.tail == h_[i] ? "" : "'");
    }
    return os.str();
}

NormalPath curve_path(const SquareComplex& X, const std::string& curve_id) {
    auto cyc = X.graph.curve_cycle(curve_id);
    if (cyc.empty()) throw UsageError("no curve '" + curve_id + "' in the model");
    return NormalPath(X, cyc);
}

NormalPath twist(const SquareComplex& X, const NormalPath& p, const NormalPath& c, long k, const Budget& budget) {
    if (k == 0) return p;
    const RibbonGraph& g = X.graph;
    const auto& C = c.half_edges();
    const std::size_t l = C.size();
    std::vector<long> pos(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t j = 0; j < l; ++j) {
        auto& slot = pos[static_cast<std::size_t>(RibbonGraph::vertex(C[j]))];
        if (slot >= 0) throw StructuralError("twist curve is not simple");
        slot = static_cast<long>(j);
    }
    auto c_out = [&](int v) { return C[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])]; };
    auto c_in = [&](int v) {
        std::size_t j = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
        return g.pair[static_cast<std::size_t>(C[(j + l - 1) % l])];
    };
    auto on_c = [&](int h) {
        int v = RibbonGraph::vertex(h);
        return pos[static_cast<std::size_t>(v)] >= 0 && (h == c_out(v) || h == c_in(v));
    };
    // +1 left of c, -1 right of c
    auto side = [&](int h) {
        int v = RibbonGraph::vertex(h);
        int o = RibbonGraph::slot(c_out(v)), i = RibbonGraph::slot(c_in(v));
        return ((RibbonGraph::slot(h) - o + 4) % 4) < ((i - o + 4) % 4) ? +1 : -1;
    };

    const auto& P = p.half_edges();
    const std::size_t L = P.size();
    std::vector<std::pair<std::size_t, int>> inserts;  // position, direction of c
    for (std::size_t i = 0; i < L; ++i) {
        int v = RibbonGraph::vertex(P[i]);
        if (pos[static_cast<std::size_t>(v)] < 0) continue;
        int arrive = g.pair[static_cast<std::size_t>(P[(i + L - 1) % L])];
        if (on_c(arrive)) continue;
        std::size_t t = 0;
        while (t < L && on_c(P[(i + t) % L])) ++t;
        int leave = P[(i + t) % L];
        int s_in = side(arrive), s_out = side(leave);
        if (s_in == s_out) continue;
        inserts.emplace_back(i, k > 0 ? s_in : -s_in);
    }
    if (inserts.empty()) return p;

    const std::uint64_t K = static_cast<std::uint64_t>(k > 0 ? k : -k);
    const std::uint64_t total = L + inserts.size() * K * l;
    if (total > budget.max_total_length)
        throw ResourceError("twisted path length over budget", static_cast<double>(total), static_cast<double>(budget.max_total_length));

    std::vector<int> walk;
    walk.reserve(static_cast<std::size_t>(total));
    std::size_t next = 0;
    for (std::size_t i = 0; i < L; ++i) {
        while (next < inserts.size() && inserts[next].first == i) {
            int v = RibbonGraph::vertex(P[i]);
            std::size_t j = static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]);
            for (std::uint64_t rep = 0; rep < K; ++rep) {
                if (inserts[next].second > 0)
                    for (std::size_t u = 0; u < l; ++u) walk.push_back(C[(j + u) % l]);
                else
                    for (std::size_t u = 1; u <= l; ++u) walk.push_back(g.pair[static_cast<std::size_t>(C[(j + l - u) % l])]);
            }
            ++next;
        }
        walk.push_back(P[i]);
    }
    NormalPath out(X, std::move(walk));
    std::uint64_t w = out.max_weight(X);
    if (w > budget.max_edge_weight)
        throw ResourceError("edge weight over budget", static_cast<double>(w), static_cast<double>(budget.max_edge_weight));
    return out;
}

NormalPath apply_twists(const SquareComplex& X, const std::map<std::string, NormalPath>& curves, const std::vector<Twist>& word,
                        const NormalPath& p, const Budget& budget) {
    NormalPath cur = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        auto c = curves.find(it->curve);
        if (c == curves.end()) throw UsageError("twist along unknown curve '" + it->curve + "'");
        cur = twist(X, cur, c->second, it->exponent, budget);
    }
    return cur;
}

} // namespace pacert
