// One line per acceptance criterion; exit status 0 iff all pass.
#include "pacert/commands.hpp"
#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"
#include "pacert/penner.hpp"
#include "pacert/symmetry.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace pacert;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail_if(bool bad, const std::string& why) {
        if (bad) {
            ok = false;
            detail << " [" << why << "]";
        }
    }
};

using Clock = std::chrono::steady_clock;

int run(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = Clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << " [exception: " << e.what() << "]";
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (limit_s > 0 && dt > limit_s) {
        o.ok = false;
        o.detail << " [over time limit " << limit_s << " s]";
    }
    std::printf("%s %2d %s:%s (%.2f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), dt);
    std::fflush(stdout);
    return o.ok ? 0 : 1;
}

const CurveModel& r2_model() {
    static const CurveModel M = build_curve_model(build_chain(2, 4, 1));
    return M;
}

void figure1(Outcome& o) {
    RibbonGraph g = build_figure1();
    g.validate();
    FaceTrace ft = trace_faces(g);
    SquareComplex X = build_complex(g);
    auto a = curve_path(X, "a"), b = curve_path(X, "b");
    auto i1 = intersection_number(X, a, b), i2 = intersection_by_linking(X, a, b);
    o.detail << " i(a,b) = " << i1 << "/" << i2 << ", faces " << ft.boundary_components << ", genus " << ft.genus << ", chi "
             << ft.euler_graph();
    o.fail_if(i1 != 5 || i2 != 5, "intersection");
    o.fail_if(ft.boundary_components != 1, "boundary");
    o.fail_if(ft.genus != 3 || ft.euler_graph() != -5, "genus");
}

void involution(Outcome& o) {
    RibbonGraph g = build_figure1();
    auto auts = enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving);
    o.detail << " " << auts.size() << " automorphisms";
    o.fail_if(auts.size() != 2, "count");
    if (auts.size() != 2) return;
    const GraphAutomorphism& rho = auts[0].is_identity() ? auts[1] : auts[0];
    o.fail_if(!(auts[0].is_identity() || auts[1].is_identity()), "identity missing");
    o.fail_if(!rho.compose(rho).is_identity(), "rho^2");
    o.fail_if(!g.marked_vertex || rho.vertex_map[static_cast<std::size_t>(*g.marked_vertex)] != *g.marked_vertex, "x not fixed");
    ArcRef d{g.marked_arcs.at(0).edge, g.marked_arcs.at(0).side};
    ArcRef img = arc_orbit(g, rho, d);
    o.detail << ", rho(delta) on " << g.edges[static_cast<std::size_t>(img.edge)].label;
    o.fail_if(same_arc_class(d, img), "delta fixed");
}

void torus(Outcome& o) {
    ChainConfig t = torus_config();
    for (long m = 1; m <= 3; ++m) {
        TwistWord w = parse_twist_word("a^+ b^-", m);
        o.fail_if(transition_matrix(w, t).matrix != IntMatrix{{1 + m * m, m}, {m, 1}}, "matrix m=" + std::to_string(m));
        o.fail_if(stretch_report(w, t).degree != 2, "degree m=" + std::to_string(m));
    }
    o.detail << " [[1+m^2, m], [m, 1]] and degree 2 for m = 1..3";
}

void sweep_tail(Outcome& o, int r, std::initializer_list<int> ks) {
    for (int k : ks) {
        SweepResult s = sweep(build_chain(r, r + 2, k), 1, 40);
        o.detail << " r=" << r << " k=" << k << " tail " << s.rows.back().degree << " onset " << (s.onset ? std::to_string(*s.onset) : "-")
                 << ";";
        o.fail_if(!s.tail_constant(5) || s.target_degree != 2 * r, "tail r=" + std::to_string(r) + " k=" + std::to_string(k));
    }
}

void matrix_algebra(Outcome& o) {
    int cases = 0;
    for (int r = 2; r <= 6; ++r)
        for (int k = 1; k <= 4; ++k) {
            RankDet rd = rank_and_det(build_chain(r, r + 2, k));
            o.fail_if(rd.rank != static_cast<std::size_t>(r) || abs(rd.det) != 5 * k, "r=" + std::to_string(r) + " k=" + std::to_string(k));
            ++cases;
        }
    o.detail << " " << cases << " configurations";
}

void shift(Outcome& o) {
    const CurveModel& M = r2_model();
    TwistWord w = family_word(build_chain(2, 4, 1), 5);
    const long n = static_cast<long>(w.n());
    const auto f = relative_word(w, 0, n);
    Budget budget = Budget::from_env();
    int direct = 0, framed = 0, skipped = 0;
    GammaCache G(M, w, budget);
    bool over = false;  // direct lengths only grow with j past n/2
    for (long j = -2; j <= n + 2; ++j) {
        if (over) {
            ++skipped;
        } else try {
            NormalPath g = gamma_curve(M, w, j, std::nullopt, budget);
            NormalPath h = gamma_curve(M, w, j + n, std::nullopt, budget);
            o.fail_if(apply_twists(M.complex, M.curves, f, g, budget) != h, "direct j=" + std::to_string(j));
            ++direct;
        } catch (const ResourceError&) {
            ++skipped;
            over = j > 0;
        }
        const long s = j + 1;
        o.fail_if(apply_twists(M.complex, M.curves, relative_word(w, s, s + n), G.curve(j, s), budget) != G.curve(j + n, s),
                  "framed j=" + std::to_string(j));
        ++framed;
    }
    o.detail << " j = -2.." << n + 2 << ": " << direct << " direct, " << framed << " framed, " << skipped << " direct over budget";
}

void lemma(Outcome& o) {
    const CurveModel& M = r2_model();
    for (long m : {4L, 5L, 6L}) {
        TwistWord w = family_word(build_chain(2, 4, 1), m);
        const long n = static_cast<long>(w.n()), lo = -2, hi = n + 2;
        const long R0 = compute_R0(M, w).R0;
        GammaCache G(M, w);
        int zero = 0, pairs = 0, bad = 0, triples = 0;
        long worst = 0;
        for (long i = lo; i <= hi; ++i)
            for (long j = i + 1; j <= hi; ++j, ++pairs) zero += gamma_intersection(G, i, j) == 0;
        for (long i = lo; i <= hi; ++i)
            for (long l = i + 1; l <= hi; ++l)
                for (long j = l + 1; j <= hi; ++j, ++triples) {
                    long dev = std::labs(lemma_twisting(G, i, l, j).tau - std::labs(w.exponent(l)));
                    worst = std::max(worst, dev);
                    bad += dev > R0 + 8;
                }
        o.detail << " m=" << m << ": R0 " << R0 << ", " << pairs << " pairs (" << zero << " zero), " << triples << " triples, max |tau-m| "
                 << worst << ";";
        o.fail_if(zero > 0, "disjoint pair at m=" + std::to_string(m));
        o.fail_if(bad > 0, "tau outside band at m=" + std::to_string(m));
    }
}

void filling(Outcome& o) {
    const CurveModel& M = r2_model();
    TwistWord w = family_word(build_chain(2, 4, 1), 5);
    const long n = static_cast<long>(w.n());
    GammaCache G(M, w);
    const long s = balanced_frame({1, n}, 0);
    std::vector<NormalPath> cs;
    for (long j = 1; j <= n; ++j) cs.push_back(G.curve(j, s));
    FillingReport f = fills(M.complex, cs);
    o.detail << " n = " << n << ", overlay V = " << f.crossings << ", faces " << f.overlay_faces << ", gap " << f.euler_gap;
    o.fail_if(!f.fills, "complement has a non-disc region");
}

void behrstock(Outcome& o) {
    const CurveModel& M = r2_model();
    const SquareComplex& X = M.complex;
    ChainConfig cfg = build_chain(2, 4, 1);
    std::vector<BehrstockTriple> triples;
    for (long m : {5L, 20L}) {
        TwistWord w = family_word(cfg, m);
        GammaCache G(M, w);
        for (long l = 1; l <= static_cast<long>(w.n()); ++l)
            triples.push_back({"", G.curve(l, l - 1), G.curve(l - 1, l - 1), G.curve(l + 1, l - 1)});
    }
    for (const auto& [c, cp] : M.curves)
        for (const auto& [d, dp] : M.curves)
            if (c != d && intersection_number(X, cp, dp) > 0) triples.push_back({"", cp, dp, twist(X, dp, cp, 15)});
    BehrstockReport r = behrstock_probe(X, triples);
    o.detail << " " << triples.size() << " triples, " << r.tested << " with tau >= 12, " << r.violations << " violations";
    o.fail_if(r.tested == 0, "no triple met the hypothesis");
    o.fail_if(r.violations > 0, "reverse tau above 5");
}

void certificates(Outcome& o) {
    for (auto [r, g] : {std::pair{2, 4}, std::pair{3, 5}}) {
        RunConfig cfg;
        cfg.r = r;
        cfg.g = g;
        cfg.k = 1;
        cfg.m = 10;
        Report a = cmd_certify(cfg), b = cmd_certify(cfg);
        auto cert = nlohmann::json::parse(a.attachment);
        bool complete = true;
        int checked = 0;
        for (const auto& e : cert.at("hypothesis_ledger").at("entries")) {
            std::string st = e.at("status");
            complete = complete && (st == "pass" || st == "assumption");
            checked += st == "pass";
        }
        o.detail << " (" << g << ", " << 2 * r << "): " << cert.at("conclusion").get<std::string>() << ", " << checked << " ledger checks;";
        o.fail_if(cert.at("conclusion") != "obstructed", "conclusion r=" + std::to_string(r));
        o.fail_if(!complete || checked < 5, "ledger r=" + std::to_string(r));
        o.fail_if(a.exit_code() != 0, "exit status r=" + std::to_string(r));
        o.fail_if(render(a, Format::json) != render(b, Format::json), "nondeterministic r=" + std::to_string(r));
        o.fail_if(!verify_certificate(a.attachment).ok, "re-verification r=" + std::to_string(r));
    }
}

} // namespace

int main() {
    int failures = 0;
    failures += run(1, "Figure 1 pair", 1.0, figure1);
    failures += run(2, "unique involution", 1.0, involution);
    failures += run(3, "torus oracle", 1.0, torus);
    failures += run(4, "degree 4 tail, r = 2", 60.0, [](Outcome& o) { sweep_tail(o, 2, {1, 2, 3}); });
    failures += run(5, "degree 2r tail, r = 3..5", 300.0, [](Outcome& o) {
        for (int r = 3; r <= 5; ++r) sweep_tail(o, r, {1});
    });
    failures += run(6, "rank r, |det| = 5k", 0, matrix_algebra);
    failures += run(7, "shift property, m = 5", 120.0, shift);
    failures += run(8, "pairwise intersection and twisting band", 0, lemma);
    failures += run(9, "gamma_1..gamma_n fill, m = 5", 0, filling);
    failures += run(10, "Behrstock probe", 0, behrstock);
    failures += run(11, "end-to-end certificates", 0, certificates);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
