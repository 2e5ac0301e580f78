#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace pacert {

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

// Oriented copies of every curve with their turn sequences; the turn at
// position i is the ccw offset from the arrival slot to the exit slot.
struct Pool {
    std::vector<std::vector<int>> paths;  // 2k forward, 2k+1 reversed
    std::vector<std::size_t> offset;
    std::vector<std::uint32_t> turn;      // concatenated
    std::vector<std::vector<std::uint32_t>> rank;
    std::size_t max_len = 0;

    std::size_t len(std::size_t o) const { return paths[o].size(); }
    std::size_t advance(std::size_t o, std::size_t i, u64 d) const { return (i + d % len(o)) % len(o); }
    std::size_t gpos(std::size_t o, std::size_t i) const { return offset[o] + i; }
};

Pool make_pool(const SquareComplex& X, const std::vector<NormalPath>& curves) {
    const auto& pr = X.graph.pair;
    Pool P;
    std::size_t total = 0;
    for (const auto& c : curves) {
        const auto& h = c.half_edges();
        std::vector<int> r(h.size());
        for (std::size_t j = 0; j < h.size(); ++j) r[j] = pr[static_cast<std::size_t>(h[h.size() - 1 - j])];
        P.paths.push_back(h);
        P.paths.push_back(std::move(r));
        P.max_len = std::max(P.max_len, h.size());
    }
    for (const auto& p : P.paths) {
        P.offset.push_back(total);
        total += p.size();
    }
    P.turn.resize(total);
    for (std::size_t o = 0; o < P.paths.size(); ++o) {
        const auto& p = P.paths[o];
        for (std::size_t i = 0; i < p.size(); ++i) {
            int in = pr[static_cast<std::size_t>(p[(i + p.size() - 1) % p.size()])];
            P.turn[P.offset[o] + i] = static_cast<std::uint32_t>((RibbonGraph::slot(p[i]) - RibbonGraph::slot(in) + 4) % 4);
        }
    }
    // prefix doubling over the cyclic sequences
    std::vector<std::size_t> owner(total);
    for (std::size_t o = 0; o < P.paths.size(); ++o)
        for (std::size_t i = 0; i < P.paths[o].size(); ++i) owner[P.offset[o] + i] = o;
    std::size_t levels = 1;
    while ((u64{1} << levels) - 1 < 2 * P.max_len + 2) ++levels;
    P.rank.push_back(P.turn);
    std::vector<std::size_t> idx(total), tmp(total);
    std::vector<std::size_t> cnt;
    for (std::size_t k = 0; k + 1 < levels; ++k) {
        const auto& cur = P.rank.back();
        const u64 step = u64{1} << k;
        std::vector<std::uint32_t> second(total);
        std::uint32_t maxr = 0;
        for (std::size_t g = 0; g < total; ++g) {
            std::size_t o = owner[g];
            second[g] = cur[P.gpos(o, P.advance(o, g - P.offset[o], step))];
            maxr = std::max(maxr, cur[g]);
        }
        // LSD radix on (cur, second)
        cnt.assign(maxr + 2, 0);
        for (std::size_t g = 0; g < total; ++g) ++cnt[second[g] + 1];
        for (std::size_t r = 1; r < cnt.size(); ++r) cnt[r] += cnt[r - 1];
        for (std::size_t g = 0; g < total; ++g) tmp[cnt[second[g]]++] = g;
        cnt.assign(maxr + 2, 0);
        for (std::size_t g = 0; g < total; ++g) ++cnt[cur[g] + 1];
        for (std::size_t r = 1; r < cnt.size(); ++r) cnt[r] += cnt[r - 1];
        for (std::size_t t = 0; t < total; ++t) {
            std::size_t g = tmp[t];
            idx[cnt[cur[g]]++] = g;
        }
        std::vector<std::uint32_t> next(total);
        std::uint32_t r = 0;
        for (std::size_t t = 0; t < total; ++t) {
            if (t > 0 && (cur[idx[t]] != cur[idx[t - 1]] || second[idx[t]] != second[idx[t - 1]])) ++r;
            next[idx[t]] = r;
        }
        P.rank.push_back(std::move(next));
    }
    return P;
}

u64 lcp(const Pool& P, std::size_t oa, std::size_t ia, std::size_t ob, std::size_t ib) {
    u64 l = 0;
    for (std::size_t k = P.rank.size(); k-- > 0;) {
        if (P.rank[k][P.gpos(oa, ia)] == P.rank[k][P.gpos(ob, ib)]) {
            u64 step = u64{1} << k;
            l += step;
            ia = P.advance(oa, ia, step);
            ib = P.advance(ob, ib, step);
        }
    }
    return l;
}

struct Strand {
    std::size_t o, i;   // edge i of oriented path o, traversed in the band's direction
};

// true if a lies left of b in the band
bool left_of(const Pool& P, const Strand& a, const Strand& b) {
    std::size_t la = P.len(a.o), lb = P.len(b.o);
    u64 cap = la + lb;
    std::size_t fa = P.advance(a.o, a.i, 1), fb = P.advance(b.o, b.i, 1);
    std::size_t ra = a.o ^ 1, rb = b.o ^ 1;
    std::size_t ba = (la - a.i) % la, bb = (lb - b.i) % lb;
    u64 lf = lcp(P, a.o, fa, b.o, fb);
    u64 lbk = lcp(P, ra, ba, rb, bb);
    if (std::min(lf, lbk) >= cap) {
        // parallel copies: the later curve runs on the right of the earlier
        // one, seen in the earlier one's direction
        if (a.o / 2 != b.o / 2) return a.o / 2 < b.o / 2 ? a.o % 2 == 0 : b.o % 2 == 1;
        if (a.o != b.o) return a.o < b.o;
        return a.i < b.i;
    }
    if (lf <= lbk) {
        auto ta = P.turn[P.gpos(a.o, P.advance(a.o, fa, lf))];
        auto tb = P.turn[P.gpos(b.o, P.advance(b.o, fb, lf))];
        return ta > tb;
    }
    auto ta = P.turn[P.gpos(ra, P.advance(ra, ba, lbk))];
    auto tb = P.turn[P.gpos(rb, P.advance(rb, bb, lbk))];
    return ta < tb;
}

// interleaving pairs of chords with distinct endpoints
u64 interleave_count(std::vector<std::pair<u64, u64>> chords) {
    if (chords.size() < 2) return 0;
    std::vector<u64> coords;
    coords.reserve(2 * chords.size());
    for (auto& [a, b] : chords) {
        if (a > b) std::swap(a, b);
        coords.push_back(a);
        coords.push_back(b);
    }
    std::sort(coords.begin(), coords.end());
    auto rk = [&](u64 c) { return static_cast<std::size_t>(std::lower_bound(coords.begin(), coords.end(), c) - coords.begin()) + 1; };
    const std::size_t n = coords.size();
    std::vector<long> bit(n + 1, 0);
    auto add = [&](std::size_t i, long v) { for (; i <= n; i += i & (~i + 1)) bit[i] += v; };
    auto sum = [&](std::size_t i) { long s = 0; for (; i > 0; i -= i & (~i + 1)) s += bit[i]; return s; };
    // events by coordinate
    std::vector<std::pair<std::size_t, std::size_t>> ev;  // (rank, chord) for both ends
    std::vector<std::size_t> start(chords.size());
    for (std::size_t c = 0; c < chords.size(); ++c) {
        start[c] = rk(chords[c].first);
        ev.emplace_back(start[c], c);
        ev.emplace_back(rk(chords[c].second), c);
    }
    std::sort(ev.begin(), ev.end());
    u64 total = 0;
    for (auto [r, c] : ev) {
        if (r == start[c]) {
            add(r, 1);
        } else {
            add(start[c], -1);
            total += static_cast<u64>(sum(r) - sum(start[c]));
        }
    }
    return total;
}

} // namespace

StrandLayout layout_strands(const SquareComplex& X, const std::vector<NormalPath>& curves) {
    const RibbonGraph& g = X.graph;
    Pool P = make_pool(X, curves);
    std::vector<std::vector<Strand>> band(static_cast<std::size_t>(g.num_edges()));
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& h = curves[k].half_edges();
        const std::size_t L = h.size();
        for (std::size_t i = 0; i < L; ++i) {
            const auto& e = g.edges[static_cast<std::size_t>(g.edge_of[static_cast<std::size_t>(h[i])])];
            if (e.tail == h[i])
                band[static_cast<std::size_t>(g.edge_of[static_cast<std::size_t>(h[i])])].push_back({2 * k, i});
            else
                band[static_cast<std::size_t>(g.edge_of[static_cast<std::size_t>(h[i])])].push_back({2 * k + 1, L - 1 - i});
        }
    }
    StrandLayout out;
    std::vector<std::vector<u64>> idx(curves.size());
    for (std::size_t k = 0; k < curves.size(); ++k) idx[k].resize(curves[k].length());
    out.side_count.assign(static_cast<std::size_t>(g.num_half_edges()), 0);
    for (std::size_t e = 0; e < band.size(); ++e) {
        auto& b = band[e];
        std::sort(b.begin(), b.end(), [&](const Strand& x, const Strand& y) { return left_of(P, x, y); });
        for (std::size_t t = 0; t < b.size(); ++t) {
            std::size_t k = b[t].o / 2;
            std::size_t i = (b[t].o % 2 == 0) ? b[t].i : curves[k].length() - 1 - b[t].i;
            idx[k][i] = t;
        }
        out.side_count[static_cast<std::size_t>(g.edges[e].tail)] = b.size();
        out.side_count[static_cast<std::size_t>(g.edges[e].head)] = b.size();
    }
    auto coord = [&](int side_he, u64 strand_index) {
        u64 n = out.side_count[static_cast<std::size_t>(side_he)];
        return g.outgoing(side_he) ? n - 1 - strand_index : strand_index;
    };
    out.side_position.resize(curves.size());
    out.head_position.resize(curves.size());
    out.chords.assign(static_cast<std::size_t>(g.num_vertices()), {});
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& h = curves[k].half_edges();
        const std::size_t L = h.size();
        out.side_position[k].resize(L);
        out.head_position[k].resize(L);
        for (std::size_t i = 0; i < L; ++i) {
            int from = h[i], to = g.pair[static_cast<std::size_t>(h[i])];
            out.side_position[k][i] = coord(from, idx[k][i]);
            out.head_position[k][i] = coord(to, idx[k][i]);
        }
    }
    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& h = curves[k].half_edges();
        const std::size_t L = h.size();
        for (std::size_t i = 0; i < L; ++i) {
            int v = RibbonGraph::vertex(h[i]);
            int in = g.pair[static_cast<std::size_t>(h[(i + L - 1) % L])];
            u64 off[4];
            u64 acc = 0;
            for (int s = 0; s < 4; ++s) {
                off[s] = acc;
                acc += out.side_count[static_cast<std::size_t>(RibbonGraph::at(v, s))];
            }
            u64 a = off[RibbonGraph::slot(in)] + out.head_position[k][(i + L - 1) % L];
            u64 b = off[RibbonGraph::slot(h[i])] + out.side_position[k][i];
            out.chords[static_cast<std::size_t>(v)].push_back({static_cast<int>(k), i, a, b});
        }
    }
    return out;
}

std::uint64_t crossing_count(const StrandLayout& L, int a, int b) {
    u64 total = 0;
    for (const auto& sq : L.chords) {
        std::vector<std::pair<u64, u64>> ca, cb, both;
        for (const auto& c : sq) {
            if (c.curve == a) ca.emplace_back(c.from, c.to);
            if (c.curve == b && b != a) cb.emplace_back(c.from, c.to);
        }
        if (a == b) {
            total += interleave_count(ca);
            continue;
        }
        if (ca.empty() || cb.empty()) continue;
        both = ca;
        both.insert(both.end(), cb.begin(), cb.end());
        total += interleave_count(both) - interleave_count(ca) - interleave_count(cb);
    }
    return total;
}

std::optional<std::pair<StrandLayout::Chord, StrandLayout::Chord>> find_crossing(const StrandLayout& L, int a, int b) {
    using Chord = StrandLayout::Chord;
    for (const auto& sq : L.chords) {
        struct Ev {
            u64 at;
            bool open;
            std::size_t c;
        };
        std::vector<Ev> ev;
        for (std::size_t c = 0; c < sq.size(); ++c) {
            if (sq[c].curve != a && sq[c].curve != b) continue;
            u64 lo = std::min(sq[c].from, sq[c].to), hi = std::max(sq[c].from, sq[c].to);
            ev.push_back({lo, true, c});
            ev.push_back({hi, false, c});
        }
        std::sort(ev.begin(), ev.end(), [](const Ev& x, const Ev& y) { return x.at < y.at; });
        std::map<u64, std::size_t> open_a, open_b;  // start -> chord
        for (const auto& e : ev) {
            const Chord& ch = sq[e.c];
            bool is_a = ch.curve == a;
            auto& mine = is_a ? open_a : open_b;
            auto& theirs = is_a ? open_b : open_a;
            u64 lo = std::min(ch.from, ch.to);
            if (e.open) {
                mine.emplace(lo, e.c);
                continue;
            }
            mine.erase(lo);
            auto it = theirs.upper_bound(lo);
            if (it != theirs.end() && it->first < e.at) {
                const Chord& other = sq[it->second];
                return is_a ? std::make_pair(ch, other) : std::make_pair(other, ch);
            }
        }
    }
    return std::nullopt;
}

std::uint64_t intersection_number(const SquareComplex& X, const NormalPath& p, const NormalPath& q) {
    auto L = layout_strands(X, {p, q});
    return crossing_count(L, 0, 1);
}

std::uint64_t intersection_by_linking(const SquareComplex& X, const NormalPath& p, const NormalPath& q) {
    const auto& pr = X.graph.pair;
    auto slot = [](int h) { return RibbonGraph::slot(h); };
    const auto& P = p.half_edges();
    const std::size_t LP = P.size();
    u64 count = 0;
    for (int sigma = 0; sigma < 2; ++sigma) {
        NormalPath qq = sigma == 0 ? q : q.reversed(X);
        const auto& Q = qq.half_edges();
        const std::size_t LQ = Q.size();
        std::vector<std::vector<std::size_t>> at_vertex(static_cast<std::size_t>(X.graph.num_vertices()));
        for (std::size_t j = 0; j < LQ; ++j) at_vertex[static_cast<std::size_t>(RibbonGraph::vertex(Q[j]))].push_back(j);
        for (std::size_t i = 0; i < LP; ++i) {
            int xp = pr[static_cast<std::size_t>(P[(i + LP - 1) % LP])];
            for (std::size_t j : at_vertex[static_cast<std::size_t>(RibbonGraph::vertex(P[i]))]) {
                int xq = pr[static_cast<std::size_t>(Q[(j + LQ - 1) % LQ])];
                if (xp == xq) continue;
                std::size_t t = 0;
                while (t < LP + LQ && P[(i + t) % LP] == Q[(j + t) % LQ]) ++t;
                if (t >= LP + LQ) continue;
                int yp = P[(i + t) % LP], yq = Q[(j + t) % LQ];
                if (t == 0) {
                    if (sigma == 1 || xp == yq || yp == xq) continue;
                    if ((slot(yp) - slot(xp) + 4) % 4 == 2) ++count;
                    continue;
                }
                int d = P[i];
                int a = pr[static_cast<std::size_t>(P[(i + t - 1) % LP])];
                bool p_left_start = (slot(xp) - slot(d) + 4) % 4 < (slot(xq) - slot(d) + 4) % 4;
                bool p_left_end = (slot(yp) - slot(a) + 4) % 4 > (slot(yq) - slot(a) + 4) % 4;
                if (p_left_start != p_left_end) ++count;
            }
        }
    }
    return count;
}

namespace {

struct Pt {
    i128 x, y;
};
i128 cross(Pt a, Pt b) { return a.x * b.y - a.y * b.x; }
Pt sub(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }

} // namespace

FillingReport fills(const SquareComplex& X, const std::vector<NormalPath>& input, std::uint64_t max_crossings) {
    if (X.punctures() != 1) throw UsageError("filling test needs a model surface with one boundary component");
    std::vector<NormalPath> curves;
    for (const auto& c : input) {
        bool dup = false;
        for (const auto& d : curves) dup = dup || d.same_curve(X, c);
        if (!dup) curves.push_back(c);
    }
    FillingReport rep;
    rep.curves_used = static_cast<int>(curves.size());
    const RibbonGraph& g = X.graph;
    StrandLayout L = layout_strands(X, curves);

    // crossings: (square, chord a, chord b) with parameters along each chord
    struct Crossing {
        int ca, cb;          // curves
        bool b_ccw_of_a;     // orientation of the pair
    };
    std::vector<Crossing> xs;
    // per curve, per position: crossing ids in travel order, with which curve role
    std::vector<std::vector<std::vector<std::pair<u64, int>>>> along(curves.size());
    for (std::size_t k = 0; k < curves.size(); ++k) along[k].resize(curves[k].length());

    std::mt19937_64 rng(0x5eed);
    const i128 S = i128{1} << 24;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& sq = L.chords[static_cast<std::size_t>(v)];
        if (sq.size() < 2) continue;
        u64 n[4], off[4], acc = 0;
        for (int s = 0; s < 4; ++s) {
            n[s] = L.side_count[static_cast<std::size_t>(RibbonGraph::at(v, s))];
            off[s] = acc;
            acc += n[s];
            if (n[s] + 1 >= (u64{1} << 22)) throw ResourceError("too many strands on one side", static_cast<double>(n[s]), 4194304.0);
        }
        for (int round = 0;; ++round) {
            std::vector<Pt> pts(acc);
            for (int s = 0; s < 4; ++s) {
                i128 step = S / static_cast<i128>(n[s] + 1);
                for (u64 p = 0; p < n[s]; ++p) {
                    i128 jitter = round == 0 ? 0 : static_cast<i128>(rng() % static_cast<u64>(step / 2 + 1)) - step / 4;
                    i128 t = static_cast<i128>(p + 1) * step + jitter;
                    Pt q{};
                    switch (s) {
                        case 0: q = {S, t}; break;
                        case 1: q = {S - t, S}; break;
                        case 2: q = {0, S - t}; break;
                        default: q = {t, 0}; break;
                    }
                    pts[off[s] + p] = q;
                }
            }
            // owner chord per coordinate
            std::vector<std::size_t> owner(acc);
            for (std::size_t c = 0; c < sq.size(); ++c) owner[sq[c].from] = owner[sq[c].to] = c;
            std::vector<std::vector<std::pair<std::size_t, std::pair<i128, i128>>>> hits(sq.size());
            std::vector<std::tuple<std::size_t, std::size_t, bool>> pairs;
            for (std::size_t c = 0; c < sq.size(); ++c) {
                u64 lo = std::min(sq[c].from, sq[c].to), hi = std::max(sq[c].from, sq[c].to);
                for (u64 z = lo + 1; z < hi; ++z) {
                    std::size_t d = owner[z];
                    if (d <= c) continue;
                    u64 other = sq[d].from == z ? sq[d].to : sq[d].from;
                    if (other > lo && other < hi) continue;
                    Pt P0 = pts[sq[c].from], P1 = pts[sq[c].to], Q0 = pts[sq[d].from], Q1 = pts[sq[d].to];
                    Pt dc = sub(P1, P0), dd = sub(Q1, Q0);
                    i128 den = cross(dc, dd);
                    i128 tc = cross(sub(Q0, P0), dd), td = cross(sub(Q0, P0), dc);
                    if (den < 0) {
                        den = -den;
                        tc = -tc;
                        td = -td;
                    }
                    hits[c].push_back({pairs.size(), {tc, den}});
                    hits[d].push_back({pairs.size(), {td, den}});
                    pairs.emplace_back(c, d, cross(dc, dd) > 0);
                    if (xs.size() + pairs.size() > max_crossings)
                        throw ResourceError("overlay crossings over budget", static_cast<double>(xs.size() + pairs.size()),
                                            static_cast<double>(max_crossings));
                }
            }
            bool degenerate = false;
            for (auto& hc : hits) {
                std::sort(hc.begin(), hc.end(), [](const auto& a, const auto& b) {
                    return a.second.first * b.second.second < b.second.first * a.second.second;
                });
                for (std::size_t t = 1; t < hc.size(); ++t)
                    if (hc[t].second.first * hc[t - 1].second.second == hc[t - 1].second.first * hc[t].second.second) degenerate = true;
            }
            if (degenerate) {
                if (round > 64) throw StructuralError("could not perturb overlay into general position");
                rep.jitter_rounds = std::max(rep.jitter_rounds, round + 1);
                continue;
            }
            const u64 base = xs.size();
            for (auto& [c, d, ccw] : pairs) xs.push_back({sq[c].curve, sq[d].curve, ccw});
            for (std::size_t c = 0; c < sq.size(); ++c) {
                auto& dst = along[static_cast<std::size_t>(sq[c].curve)][sq[c].position];
                for (auto& [pid, par] : hits[c]) {
                    int role = std::get<0>(pairs[pid]) == c ? 0 : 1;
                    dst.push_back({base + pid, role});
                }
            }
            break;
        }
    }
    rep.crossings = xs.size();
    rep.overlay_edges = 2 * xs.size();
    // darts: 4x + r, r in ccw order around the crossing
    auto dart = [&](u64 x, int role, bool forward) -> u64 {
        // ccw order: a+, b+, a-, b- if b is ccw of a; else a+, b-, a-, b+
        int r;
        if (xs[x].b_ccw_of_a)
            r = role == 0 ? (forward ? 0 : 2) : (forward ? 1 : 3);
        else
            r = role == 0 ? (forward ? 0 : 2) : (forward ? 3 : 1);
        return 4 * x + static_cast<u64>(r);
    };
    std::vector<u64> pairing(4 * xs.size(), ~u64{0});
    u64 faces = 0;
    for (std::size_t k = 0; k < curves.size(); ++k) {
        std::vector<std::pair<u64, int>> seq;
        for (auto& v : along[k]) seq.insert(seq.end(), v.begin(), v.end());
        if (seq.empty()) {
            faces += 2;
            continue;
        }
        for (std::size_t t = 0; t < seq.size(); ++t) {
            auto [x0, r0] = seq[t];
            auto [x1, r1] = seq[(t + 1) % seq.size()];
            u64 a = dart(x0, r0, true), b = dart(x1, r1, false);
            pairing[a] = b;
            pairing[b] = a;
        }
    }
    std::vector<char> seen(pairing.size(), 0);
    for (u64 h = 0; h < pairing.size(); ++h) {
        if (seen[h]) continue;
        ++faces;
        u64 cur = h;
        while (!seen[cur]) {
            seen[cur] = 1;
            u64 prev = (cur & ~u64{3}) | ((cur + 3) & 3);
            cur = pairing[prev];
        }
    }
    rep.overlay_faces = faces;
    long long chi_s = X.euler_characteristic();
    long long chi_u = static_cast<long long>(xs.size()) - static_cast<long long>(2 * xs.size());
    rep.euler_gap = (chi_s - chi_u) - (static_cast<long long>(faces) - 1);
    rep.fills = rep.euler_gap == 0;
    return rep;
}

} // namespace pacert
