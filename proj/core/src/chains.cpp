#include "pacert/chains.hpp"

#include "pacert/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace pacert {

int ChainConfig::curve_index(const std::string& c) const {
    for (std::size_t i = 0; i < A.size(); ++i)
        if (A[i] == c) return static_cast<int>(i);
    for (std::size_t i = 0; i < B.size(); ++i)
        if (B[i] == c) return static_cast<int>(A.size() + i);
    return -1;
}

bool ChainConfig::in_A(const std::string& c) const { return std::find(A.begin(), A.end(), c) != A.end(); }
bool ChainConfig::in_B(const std::string& c) const { return std::find(B.begin(), B.end(), c) != B.end(); }

Integer ChainConfig::intersection(const std::string& c, const std::string& d) const {
    int ic = curve_index(c), id = curve_index(d);
    if (ic < 0 || id < 0) throw UsageError("unknown curve in intersection query: " + (ic < 0 ? c : d));
    const int na = static_cast<int>(A.size());
    if ((ic < na) == (id < na)) return 0;
    if (ic < na) return N(static_cast<std::size_t>(ic), static_cast<std::size_t>(id - na));
    return N(static_cast<std::size_t>(id), static_cast<std::size_t>(ic - na));
}

std::vector<std::string> ChainConfig::basis() const {
    std::vector<std::string> v = A;
    v.insert(v.end(), B.begin(), B.end());
    return v;
}

static IntMatrix chain_matrix(int r, int k) {
    IntMatrix n(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) n(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    n(0, 0) = 5;
    n(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(r - 1)) = k;
    for (int i = 1; i < r; ++i) n(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
    return n;
}

bool ChainConfig::matches_chain_shape() const {
    return r >= 2 && N == chain_matrix(r, k);
}

ChainConfig build_chain(int r, int g, int k) {
    if (r < 2) throw UsageError("r must be at least 2 (got " + std::to_string(r) + ")");
    if (k < 1) throw UsageError("k must be positive (got " + std::to_string(k) + ")");
    if (g < r + 2)
        throw GenusBoundError("genus bound violated: need g >= r + 2, got g = " + std::to_string(g) + ", r = " + std::to_string(r));
    ChainConfig c;
    c.r = r;
    c.g = g;
    c.k = k;
    for (int i = 1; i <= r; ++i) {
        c.A.push_back("a" + std::to_string(i));
        c.B.push_back("b" + std::to_string(i));
    }
    c.N = chain_matrix(r, k);
    for (int i = 0; i < r; ++i) c.placement.push_back(i == 0 ? "X" : "Z");
    for (int i = 0; i < r; ++i) c.placement.push_back(i == 0 ? "X" : "Z");
    return c;
}

ChainConfig custom_config(std::vector<std::string> A, std::vector<std::string> B, IntMatrix N) {
    if (N.rows() != A.size() || N.cols() != B.size()) throw UsageError("intersection matrix shape does not match the curve lists");
    ChainConfig c;
    c.r = static_cast<int>(A.size());
    c.g = 0;
    c.k = 0;
    c.A = std::move(A);
    c.B = std::move(B);
    c.N = std::move(N);
    c.n_overridden = true;
    c.placement.assign(c.A.size() + c.B.size(), "synthetic");
    return c;
}

ChainConfig torus_config() { return custom_config({"a"}, {"b"}, IntMatrix{{1}}); }

ChainConfig parse_chain_config(const std::string& text) {
    int r = 2, g = 4, k = 1;
    std::optional<std::string> n_text, loop_text;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t\r") + 1);
        try {
            if (key == "r") r = std::stoi(val);
            else if (key == "g") g = std::stoi(val);
            else if (key == "k") k = std::stoi(val);
            else if (key == "N") n_text = val;
            else if (key == "loop") loop_text = val;
            else throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const UsageError*>(&e)) throw;
            throw UsageError("config line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    ChainConfig c = build_chain(r, g, k);
    if (n_text) {
        std::vector<std::vector<Integer>> rows(1);
        std::string tok;
        for (char ch : *n_text + ";") {
            if (ch == ';' || ch == ' ' || ch == '\t' || ch == ',') {
                if (!tok.empty()) rows.back().push_back(parse_integer(tok));
                tok.clear();
                if (ch == ';') rows.emplace_back();
            } else if (ch != '\r') {
                tok += ch;
            }
        }
        while (!rows.empty() && rows.back().empty()) rows.pop_back();
        if (rows.size() != static_cast<std::size_t>(r)) throw UsageError("N override must have r rows");
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != static_cast<std::size_t>(r)) throw UsageError("N override must be r x r");
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (rows[i][j] < 0) throw UsageError("intersection numbers are nonnegative");
                c.N(i, j) = rows[i][j];
            }
        }
        c.n_overridden = true;
    }
    if (loop_text) {
        std::istringstream ls(*loop_text);
        std::vector<std::string> v;
        std::string t;
        while (ls >> t) v.push_back(t);
        c.loop_override = v;
    }
    return c;
}

RankDet rank_and_det(const IntMatrix& n) { return {rank(n), n.square() ? det(n) : Integer(0)}; }

RankDet rank_and_det(const ChainConfig& cfg) { return rank_and_det(cfg.N); }

bool AdjacencyGraph::adjacent(int a, int b) const {
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool AdjacencyGraph::connected() const {
    const int V = 2 * r;
    if (V == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(V));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(r + b);
        adj[static_cast<std::size_t>(r + b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                q.push_back(w);
            }
    }
    return count == V;
}

AdjacencyGraph adjacency_graph(const ChainConfig& cfg) {
    AdjacencyGraph g;
    g.r = static_cast<int>(cfg.A.size());
    for (std::size_t i = 0; i < cfg.N.rows(); ++i)
        for (std::size_t j = 0; j < cfg.N.cols(); ++j)
            if (cfg.N(i, j) != 0) g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return g;
}

std::vector<std::string> reduce_backtracks(std::vector<std::string> w) {
    bool changed = true;
    while (changed && w.size() > 1) {
        changed = false;
        const std::size_t n = w.size();
        if (n == 2) {  // x -> y -> x
            w.resize(1);
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] == w[(i + 2) % n]) {
                // drop the middle vertex and one copy of the repeated one
                std::size_t a = (i + 1) % n, b = (i + 2) % n;
                std::vector<std::string> nw;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != a && j != b) nw.push_back(w[j]);
                w.swap(nw);
                changed = true;
                break;
            }
        }
    }
    return w;
}

LoopReport validate_strenner_loop(const ChainConfig& cfg, std::vector<std::string> loop) {
    LoopReport rep;
    for (auto& c : loop)
        if (!cfg.has_curve(c)) throw UsageError("loop references unknown curve '" + c + "'");
    if (loop.size() >= 2 && loop.front() == loop.back()) loop.pop_back();
    if (loop.size() < 2) {
        rep.closed = false;
        rep.failures.push_back("loop has fewer than two vertices");
    }
    const std::size_t n = loop.size();
    for (std::size_t i = 0; i < n && n >= 2; ++i) {
        const std::string& x = loop[i];
        const std::string& y = loop[(i + 1) % n];
        if (cfg.in_A(x) == cfg.in_A(y)) {
            rep.alternates = false;
            rep.failures.push_back("step " + x + " -> " + y + " does not alternate A/B");
        } else if (cfg.intersection(x, y) == 0) {
            rep.all_edges = false;
            rep.failures.push_back("step " + x + " -> " + y + " is not an edge of the adjacency graph (missing edge)");
        }
    }
    std::set<std::string> seen(loop.begin(), loop.end());
    for (auto& c : cfg.basis())
        if (!seen.count(c)) {
            rep.visits_all = false;
            rep.failures.push_back("not visiting every vertex: " + c + " missing");
        }
    if (n >= 2 && reduce_backtracks(loop).size() != 1) {
        rep.contractible = false;
        rep.failures.push_back("loop does not reduce to a point by backtracking");
    }
    return rep;
}

const TwistLetter& TwistWord::letter(long j) const {
    if (letters.empty()) throw UsageError("empty twist word");
    long n = static_cast<long>(letters.size());
    long idx = ((j - 1) % n + n) % n;
    return letters[static_cast<std::size_t>(idx)];
}

std::vector<std::string> TwistWord::loop() const {
    std::vector<std::string> v;
    for (auto& l : letters) v.push_back(l.curve);
    return v;
}

std::string TwistWord::canonical() const {
    std::string s;
    for (auto& l : letters) {
        if (!s.empty()) s += " ";
        s += l.curve + (l.kappa > 0 ? "^+m" : "^-m");
    }
    return s;
}

std::string TwistWord::numeric() const {
    std::string s;
    for (auto& l : letters) {
        if (!s.empty()) s += " ";
        s += l.curve + "^" + (l.kappa > 0 ? "+" : "-") + std::to_string(m);
    }
    return s;
}

bool TwistWord::penner_signs(const ChainConfig& cfg) const {
    for (auto& l : letters) {
        if (cfg.in_A(l.curve) && l.kappa <= 0) return false;
        if (cfg.in_B(l.curve) && l.kappa >= 0) return false;
        if (!cfg.has_curve(l.curve)) return false;
    }
    return true;
}

bool TwistWord::consecutive_intersect(const ChainConfig& cfg) const {
    const std::size_t n = letters.size();
    for (std::size_t i = 0; i < n; ++i)
        if (cfg.intersection(letters[i].curve, letters[(i + 1) % n].curve) == 0) return false;
    return true;
}

TwistWord family_word(const ChainConfig& cfg, long m) {
    if (m <= 0) throw UsageError("exponent m must be >= 1 (got " + std::to_string(m) + ")");
    TwistWord w;
    w.m = m;
    if (cfg.loop_override) {
        for (auto& c : *cfg.loop_override) {
            if (!cfg.has_curve(c)) throw UsageError("loop references unknown curve '" + c + "'");
            w.letters.push_back({c, cfg.in_A(c) ? +1 : -1});
        }
        if (w.letters.size() >= 2 && w.letters.front() == w.letters.back()) w.letters.pop_back();
        return w;
    }
    const int r = static_cast<int>(cfg.A.size());
    for (int i = 0; i < r; ++i) {
        w.letters.push_back({cfg.A[static_cast<std::size_t>(i)], +1});
        w.letters.push_back({cfg.B[static_cast<std::size_t>(i)], -1});
    }
    for (int i = r - 1; i >= 1; --i) {
        w.letters.push_back({cfg.A[static_cast<std::size_t>(i)], +1});
        w.letters.push_back({cfg.B[static_cast<std::size_t>(i - 1)], -1});
    }
    return w;
}

TwistWord parse_twist_word(const std::string& text, long m) {
    TwistWord w;
    w.m = m;
    std::istringstream in(text);
    std::string t;
    while (in >> t) {
        auto caret = t.find('^');
        if (caret == std::string::npos || caret + 1 >= t.size()) throw UsageError("bad twist letter '" + t + "'");
        char s = t[caret + 1];
        if (s != '+' && s != '-') throw UsageError("twist letter needs an explicit sign: '" + t + "'");
        w.letters.push_back({t.substr(0, caret), s == '+' ? +1 : -1});
    }
    return w;
}

} // namespace pacert
