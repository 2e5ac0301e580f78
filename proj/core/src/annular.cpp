#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"

#include <algorithm>
#include <optional>

namespace pacert {

namespace {

struct Oriented {
    std::vector<int> fwd, rev;   // rev[j] = pair(fwd[L-1-j])
    std::vector<int> tf, tr;     // turns at each position
};

Oriented orient(const SquareComplex& X, const NormalPath& p) {
    const auto& pr = X.graph.pair;
    Oriented o;
    o.fwd = p.half_edges();
    const std::size_t L = o.fwd.size();
    o.rev.resize(L);
    for (std::size_t j = 0; j < L; ++j) o.rev[j] = pr[static_cast<std::size_t>(o.fwd[L - 1 - j])];
    auto turns = [&](const std::vector<int>& h) {
        std::vector<int> t(h.size());
        for (std::size_t i = 0; i < h.size(); ++i) {
            int in = pr[static_cast<std::size_t>(h[(i + h.size() - 1) % h.size()])];
            t[i] = (RibbonGraph::slot(h[i]) - RibbonGraph::slot(in) + 4) % 4;
        }
        return t;
    };
    o.tf = turns(o.fwd);
    o.tr = turns(o.rev);
    return o;
}

// A ray leaving the axis: turn sequence of an oriented copy from a start index.
struct Ray {
    const std::vector<int>* turns;
    std::size_t start;
};

int compare_rays(const Ray& a, const Ray& b, std::size_t limit) {
    const std::size_t la = a.turns->size(), lb = b.turns->size();
    for (std::size_t t = 0; t < limit; ++t) {
        int x = (*a.turns)[(a.start + t) % la], y = (*b.turns)[(b.start + t) % lb];
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

struct End {
    long pos;      // vertex index along the unrolled axis
    int rank;      // slot order along the side, increasing with pos
    Ray ray;
};

struct Lift {
    End left, right;
};

int sgn(long v) { return (v > 0) - (v < 0); }

// order of two ends on the same side of the axis; +1 if a comes later
int compare_ends(const End& a, const End& b, bool left_side, std::size_t limit) {
    if (a.pos != b.pos) return sgn(a.pos - b.pos);
    if (a.rank != b.rank) return sgn(a.rank - b.rank);
    int c = compare_rays(a.ray, b.ray, limit);
    return left_side ? -c : c;
}

// Lift of the run of (an orientation of) A starting at position i against
// axis position j, if A leaves gamma there and crosses it.
std::optional<Lift> run_at(const SquareComplex& X, const Oriented& G, const Oriented& A, int sigma, std::size_t i, std::size_t j) {
    const auto& pr = X.graph.pair;
    auto slot = [](int h) { return RibbonGraph::slot(h); };
    const auto& g = G.fwd;
    const std::size_t Lg = g.size();
    const auto& a = sigma == 0 ? A.fwd : A.rev;
    const auto& ta = sigma == 0 ? A.tf : A.tr;
    const auto& tb = sigma == 0 ? A.tr : A.tf;  // turns of the opposite orientation
    const std::size_t La = a.size();
    int x = pr[static_cast<std::size_t>(a[(i + La - 1) % La])];
    int gin = pr[static_cast<std::size_t>(g[(j + Lg - 1) % Lg])];
    int gout = g[j];
    if (x == gin) return std::nullopt;
    std::size_t t = 0;
    while (t < La + Lg && a[(i + t) % La] == g[(j + t) % Lg]) ++t;
    if (t >= La + Lg) return std::nullopt;
    int y = a[(i + t) % La];
    std::size_t je = (j + t) % Lg;
    int gin_e = pr[static_cast<std::size_t>(g[(je + Lg - 1) % Lg])];
    int gout_e = g[je];
    if (t == 0 && (sigma == 1 || x == gout || y == gin)) return std::nullopt;
    auto is_left = [&](int h, int gi, int go) { return (slot(h) - slot(go) + 4) % 4 < (slot(gi) - slot(go) + 4) % 4; };
    bool x_left = is_left(x, gin, gout), y_left = is_left(y, gin_e, gout_e);
    if (x_left == y_left) return std::nullopt;
    auto rank = [&](int h, int gi, bool left) { return left ? (slot(gi) - slot(h) + 4) % 4 : (slot(h) - slot(gi) + 4) % 4; };
    // backward ray: opposite orientation from the vertex before i
    End start{static_cast<long>(j), rank(x, gin, x_left), Ray{&tb, (La - i + 1) % La}};
    End finish{static_cast<long>(j + t), rank(y, gin_e, y_left), Ray{&ta, (i + t + 1) % La}};
    return x_left ? Lift{start, finish} : Lift{finish, start};
}

// A crossing strand of A through the axis. A short scan over alignments
// usually finds one; sparse crossings are located through the joint
// minimal position instead.
std::optional<Lift> first_crossing_lift(const SquareComplex& X, const NormalPath& gamma, const NormalPath& alpha, const Oriented& G,
                                        const Oriented& A) {
    const std::size_t Lg = G.fwd.size(), La = A.fwd.size();
    std::vector<std::vector<std::size_t>> at_vertex(static_cast<std::size_t>(X.graph.num_vertices()));
    for (std::size_t j = 0; j < Lg; ++j) at_vertex[static_cast<std::size_t>(RibbonGraph::vertex(G.fwd[j]))].push_back(j);
    const std::size_t work_limit = 16 * (La + Lg);
    std::size_t work = 0;
    for (std::size_t step = 0; step < La && work < work_limit; ++step) {
        for (int sigma = 0; sigma < 2; ++sigma) {
            const auto& a = sigma == 0 ? A.fwd : A.rev;
            const std::size_t i = sigma == 0 ? step : (La - step) % La;
            const auto& js = at_vertex[static_cast<std::size_t>(RibbonGraph::vertex(a[i]))];
            work += js.size();
            for (std::size_t j : js)
                if (auto lift = run_at(X, G, A, sigma, i, j)) return lift;
        }
    }
    auto L = layout_strands(X, {gamma, alpha});
    auto hit = find_crossing(L, 0, 1);
    if (!hit) return std::nullopt;
    const std::size_t j0 = hit->first.position, i0 = hit->second.position;
    for (int sigma = 0; sigma < 2; ++sigma) {
        const auto& a = sigma == 0 ? A.fwd : A.rev;
        std::size_t i = sigma == 0 ? i0 : (La - i0) % La, j = j0;
        for (std::size_t back = 0; back < La + Lg && a[(i + La - 1) % La] == G.fwd[(j + Lg - 1) % Lg]; ++back) {
            i = (i + La - 1) % La;
            j = (j + Lg - 1) % Lg;
        }
        if (auto lift = run_at(X, G, A, sigma, i, j)) return lift;
    }
    throw StructuralError("crossing in minimal position has no crossing lift");
}

} // namespace

TwistingEstimate twisting_estimate(const SquareComplex& X, const NormalPath& gamma, const NormalPath& alpha, const NormalPath& beta) {
    Oriented G = orient(X, gamma), A = orient(X, alpha), B = orient(X, beta);
    auto la = first_crossing_lift(X, gamma, alpha, G, A);
    auto lb = first_crossing_lift(X, gamma, beta, G, B);
    if (!la || !lb) throw ProjectionUndefinedError("curve misses the annulus core: projection undefined");
    TwistingEstimate est;
    const Lift& a = *la;
    const Lift& b = *lb;
    const long L = static_cast<long>(gamma.length());
    const std::size_t limit = alpha.length() + beta.length() + 4;
    long amin = std::min(a.left.pos, a.right.pos), amax = std::max(a.left.pos, a.right.pos);
    long bmin = std::min(b.left.pos, b.right.pos), bmax = std::max(b.left.pos, b.right.pos);
    long tlo = (amin - bmax) / L - 2, thi = (amax - bmin) / L + 2;
    for (long t = tlo; t <= thi; ++t) {
        End bl = b.left, br = b.right;
        bl.pos += t * L;
        br.pos += t * L;
        int cl = compare_ends(a.left, bl, true, limit);
        int cr = compare_ends(a.right, br, false, limit);
        if (cl * cr < 0) {
            ++est.tau;
            est.signed_tau += cl;
        }
    }
    return est;
}

std::string twist_sign_selftest(const SquareComplex& X) {
    auto ids = X.graph.curve_ids();
    for (const auto& c : ids) {
        NormalPath core = curve_path(X, c);
        for (const auto& d : ids) {
            if (d == c || d[0] == c[0]) continue;
            NormalPath a = curve_path(X, d);
            if (intersection_number(X, core, a) == 0) continue;
            for (long k : {1L, 2L, -1L, -2L}) {
                NormalPath b = twist(X, a, core, k);
                auto est = twisting_estimate(X, core, a, b);
                long expect = k;
                if (sgn(est.signed_tau) != sgn(expect) || std::labs(est.tau - std::labs(k)) > est.error_bound)
                    return "twist " + c + "^" + std::to_string(k) + " of " + d + ": tau " + std::to_string(est.tau) + ", signed " +
                           std::to_string(est.signed_tau);
            }
        }
    }
    return {};
}

} // namespace pacert
