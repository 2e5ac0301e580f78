#include "pacert/commands.hpp"
#include "pacert/errors.hpp"
#include "pacert/penner.hpp"
#include "pacert/symmetry.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace pacert {

namespace {

std::string str(long v) { return std::to_string(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }
std::string yes(bool b) { return b ? "true" : "false"; }

std::string range_str(long lo, long hi) { return str(lo) + ".." + str(hi); }

void echo_common(Report& rep, const RunConfig& cfg) {
    rep.inputs.push_back({"r", str(cfg.r)});
    rep.inputs.push_back({"g", str(cfg.genus())});
    rep.inputs.push_back({"k", str(cfg.k)});
    rep.inputs.push_back({"budget", str(cfg.budget.max_edge_weight)});
    rep.inputs.push_back({"seed", str(cfg.seed)});
}

void require(bool ok, const std::string& inequality, const std::string& values) {
    if (!ok) throw UsageError("gate failed: " + inequality + " (" + values + ")");
}

} // namespace

std::pair<long, long> parse_range(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?\d+)\s*\.\.\s*([+-]?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw UsageError("malformed range '" + s + "' (expected lo..hi)");
    return {std::stol(m[1].str()), std::stol(m[2].str())};
}

// ---- verify-figure1 ----------------------------------------------------

Report cmd_verify_figure1(const RunConfig& cfg) {
    Report rep;
    rep.command = "verify-figure1";
    rep.inputs.push_back({"graph", cfg.graph_file.empty() ? "builtin" : cfg.graph_file});

    RibbonGraph g;
    try {
        g = cfg.graph_file.empty() ? build_figure1() : load_ribbon(cfg.graph_file);
        g.validate();
        rep.check("graph invariants", true, str(g.num_vertices()) + " vertices, " + str(g.num_edges()) + " edges");
    } catch (const StructuralError& e) {
        rep.check("graph invariants", false, e.what());
        rep.summary = "graph rejected";
        return rep;
    }
    const auto ids = g.curve_ids();
    if (ids != std::vector<std::string>{"a", "b"}) {
        std::string got;
        for (const auto& c : ids) got += (got.empty() ? "" : ",") + c;
        rep.check("curves a and b present", false, "curve ids: " + got);
        return rep;
    }

    FaceTrace ft = trace_faces(g);
    rep.check("one boundary component", ft.boundary_components == 1, str(ft.boundary_components) + " face cycles");
    rep.check("genus 3", ft.genus == 3, "genus " + str(ft.genus));
    rep.check("euler characteristic -5", ft.euler_graph() == -5, "V - E = " + str(ft.euler_graph()));

    SquareComplex X = build_complex(g);
    NormalPath a = curve_path(X, "a"), b = curve_path(X, "b");
    auto i_layout = intersection_number(X, a, b);
    auto i_link = intersection_by_linking(X, a, b);
    rep.check("i(a,b) = 5", i_layout == 5 && i_link == 5,
              "layout " + str(i_layout) + ", linking " + str(i_link) + ", vertices " + str(g.num_vertices()));

    auto auts = enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving);
    std::vector<const GraphAutomorphism*> nontrivial;
    for (const auto& x : auts)
        if (!x.is_identity()) nontrivial.push_back(&x);
    rep.check("automorphisms are exactly {id, rho}", auts.size() == 2 && nontrivial.size() == 1,
              str(static_cast<std::uint64_t>(auts.size())) + " curve and orientation preserving automorphisms");
    if (nontrivial.size() == 1) {
        const GraphAutomorphism& rho = *nontrivial.front();
        rep.check("rho^2 = id", rho.order() == 2, "order " + str(rho.order()));
        bool fixes_x = g.marked_vertex && rho.vertex_map[static_cast<std::size_t>(*g.marked_vertex)] == *g.marked_vertex;
        rep.check("rho fixes x", fixes_x,
                  g.marked_vertex ? "x = " + g.vertex_names[static_cast<std::size_t>(*g.marked_vertex)] : "no marked vertex");
        if (g.marked_arcs.empty()) {
            rep.check("rho(delta) != delta", false, "no marked arc");
        } else {
            ArcRef d{g.marked_arcs.front().edge, g.marked_arcs.front().side};
            ArcRef img = arc_orbit(g, rho, d);
            rep.check("rho(delta) != delta", !same_arc_class(d, img),
                      "delta on " + g.edges[static_cast<std::size_t>(d.edge)].label + ", image on " +
                          g.edges[static_cast<std::size_t>(img.edge)].label);
        }
        std::string perm;
        for (int v = 0; v < g.num_vertices(); ++v)
            perm += (v ? " " : "") + g.vertex_names[static_cast<std::size_t>(v)] + "->" +
                    g.vertex_names[static_cast<std::size_t>(rho.vertex_map[static_cast<std::size_t>(v)])];
        rep.observe("rho on vertices", perm);
    }
    rep.summary = rep.exit_code() == 0 ? "all Figure 1 checks pass" : "Figure 1 verification failed";
    return rep;
}

// ---- degree-sweep ------------------------------------------------------

namespace {

Table& sweep_table(Report& rep, const SweepResult& s) {
    Table& t = rep.table("sweep", {"m", "primitive", "degree", "lambda_30digits", "charpoly_hash"});
    for (const auto& row : s.rows)
        t.rows.push_back({str(row.m), yes(row.primitive), row.primitive ? str(row.degree) : "", row.lambda, row.charpoly_hash});
    return t;
}

} // namespace

Report cmd_degree_sweep(const RunConfig& cfg) {
    Report rep;
    rep.command = "degree-sweep";
    echo_common(rep, cfg);
    rep.inputs.push_back({"m_range", range_str(cfg.m_lo, cfg.m_hi)});
    if (cfg.m_hi < cfg.m_lo) throw UsageError("empty m range " + range_str(cfg.m_lo, cfg.m_hi));
    if (cfg.m_lo < 1) throw UsageError("gate failed: m ≥ 1 (m_lo = " + str(cfg.m_lo) + ")");
    ChainConfig chain = build_chain(cfg.r, cfg.genus(), cfg.k);

    SweepResult s;
    bool partial = false;
    try {
        s = sweep(chain, cfg.m_lo, cfg.m_hi);
    } catch (const ResourceError&) {
        // keep every row that fits
        partial = true;
        s = SweepResult{};
        s.target_degree = 2 * cfg.r;
        for (long m = cfg.m_lo; m <= cfg.m_hi; ++m) {
            try {
                s.rows.push_back(stretch_report(family_word(chain, m), chain));
            } catch (const ResourceError& e) {
                rep.partial("row m = " + str(m), e.what());
            }
        }
    }
    sweep_table(rep, s);

    const std::size_t tail = std::min<std::size_t>(5, s.rows.size());
    std::string tail_degrees;
    for (std::size_t i = s.rows.size() - tail; i < s.rows.size(); ++i)
        tail_degrees += (tail_degrees.empty() ? "" : ",") + str(s.rows[i].degree);
    if (partial) {
        rep.partial("tail constant at degree " + str(s.target_degree), "rows missing; tail degrees " + tail_degrees);
    } else {
        rep.check("tail constant at degree " + str(s.target_degree), tail == 5 && s.tail_constant(5),
                  "last " + str(static_cast<std::uint64_t>(tail)) + " degrees " + tail_degrees);
    }
    rep.observe("stabilisation onset", s.onset ? "m = " + str(*s.onset) : "not reached in range");
    rep.observe("lambda increasing in m", yes(s.monotone));
    bool recip = std::all_of(s.rows.begin(), s.rows.end(), [](const SweepRow& row) { return !row.primitive || row.perron_reciprocal; });
    rep.observe("Perron factor reciprocal", yes(recip));
    rep.summary = "r = " + str(cfg.r) + ", k = " + str(cfg.k) + ": degree " + (tail ? str(s.rows.back().degree) : "?") +
                  " at m = " + (tail ? str(s.rows.back().m) : "?") + (partial ? " (partial)" : "");
    return rep;
}

// ---- twist-probe -------------------------------------------------------

Report cmd_twist_probe(const RunConfig& cfg) {
    Report rep;
    rep.command = "twist-probe";
    echo_common(rep, cfg);
    if (!cfg.m) throw UsageError("twist-probe needs --m");
    const long m = *cfg.m;
    if (m < 1) throw UsageError("gate failed: m ≥ 1 (m = " + str(m) + ")");
    if (cfg.r != 2) throw UsageError("twist-probe has an explicit curve model for r = 2 only");
    ChainConfig chain = build_chain(cfg.r, cfg.genus(), cfg.k);
    CurveModel M = build_curve_model(chain);
    TwistWord w = family_word(chain, m);
    const long n = static_cast<long>(w.n());
    auto [lo, hi] = cfg.j_range ? *cfg.j_range : std::pair<long, long>{-2, n + 2};
    if (hi < lo) throw UsageError("empty j range " + range_str(lo, hi));
    rep.inputs.push_back({"m", str(m)});
    rep.inputs.push_back({"j_range", range_str(lo, hi)});
    rep.inputs.push_back({"word", w.numeric()});
    for (const auto& a : M.assumptions) rep.assume(a);

    const SquareComplex& X = M.complex;
    std::string sign = twist_sign_selftest(X);
    rep.check("twist sign self-test", sign.empty(), sign.empty() ? "positive twist gives positive signed tau" : sign);

    R0Report r0 = compute_R0(M, w);
    std::string base;
    for (long t : r0.base_tau) base += (base.empty() ? "" : ",") + str(t);
    rep.observe("R0", str(r0.R0) + " (base tau " + base + ")");

    // gamma_j directly in the fixed frame, as far as the budget allows
    std::map<long, NormalPath> direct;
    std::string paths;
    Table& gt = rep.table("gamma", {"j", "curve", "length", "max_weight", "status"});
    for (long j = lo; j <= hi + n; ++j) {
        try {
            NormalPath p = gamma_curve(M, w, j, std::nullopt, cfg.budget);
            gt.rows.push_back({str(j), w.letter(j).curve, str(static_cast<std::uint64_t>(p.length())), str(p.max_weight(X)), "direct"});
            if (p.length() <= 100000) {
                std::string dump = "gamma " + str(j) + ":";
                for (auto [sq, in, out] : p.dump(X)) dump += " (" + str(sq) + "," + str(in) + "," + str(out) + ")";
                paths += dump + "\n";
            }
            direct.emplace(j, std::move(p));
        } catch (const ResourceError& e) {
            gt.rows.push_back({str(j), w.letter(j).curve, "", "", "over budget"});
            break;  // lengths grow with |j - n/2|; later j only get longer
        }
    }

    rep.files.push_back({"gamma_paths.txt", paths});

    GammaCache G(M, w, cfg.budget);
    const auto f = relative_word(w, 0, n);
    Table& st = rep.table("shift", {"j", "route", "frame", "equal"});
    bool shift_ok = true;
    long shift_direct = 0;
    for (long j = lo; j <= hi; ++j) {
        if (direct.count(j) && direct.count(j + n)) {
            bool eq = apply_twists(X, M.curves, f, direct.at(j), cfg.budget) == direct.at(j + n);
            st.rows.push_back({str(j), "direct", "0", yes(eq)});
            shift_ok = shift_ok && eq;
            ++shift_direct;
        }
        // f_s^{-1} f f_s is the rotated word; s = j + 1 keeps both sides short
        const long s = j + 1;
        bool eq = apply_twists(X, M.curves, relative_word(w, s, s + n), G.curve(j, s), cfg.budget) == G.curve(j + n, s);
        st.rows.push_back({str(j), "framed", str(s), yes(eq)});
        shift_ok = shift_ok && eq;
    }
    rep.check("f(gamma_j) = gamma_{j+n}", shift_ok,
              "j = " + range_str(lo, hi) + ", " + str(shift_direct) + " direct and " + str(hi - lo + 1) + " framed comparisons");

    Table& it = rep.table("intersections", {"i", "j", "i(gamma_i,gamma_j)"});
    long zero_pairs = 0, pairs = 0;
    for (long i = lo; i <= hi; ++i)
        for (long j = i + 1; j <= hi; ++j) {
            auto v = gamma_intersection(G, i, j);
            it.rows.push_back({str(i), str(j), str(v)});
            ++pairs;
            if (v == 0) ++zero_pairs;
        }
    rep.check("pairwise i(gamma_i,gamma_j) != 0", zero_pairs == 0, str(pairs) + " pairs, " + str(zero_pairs) + " zero");

    Table& tt = rep.table("twisting", {"i", "l", "j", "tau", "signed_tau", "slack"});
    const long band = r0.R0 + 8;
    long bad = 0, triples = 0, tmin = 0, tmax = 0;
    for (long i = lo; i <= hi; ++i)
        for (long l = i + 1; l <= hi; ++l)
            for (long j = l + 1; j <= hi; ++j) {
                TwistingEstimate e = lemma_twisting(G, i, l, j);
                long slack = band - std::labs(e.tau - std::labs(w.exponent(l)));
                tt.rows.push_back({str(i), str(l), str(j), str(e.tau), str(e.signed_tau), str(slack)});
                if (slack < 0) ++bad;
                tmin = triples ? std::min(tmin, e.tau) : e.tau;
                tmax = triples ? std::max(tmax, e.tau) : e.tau;
                ++triples;
            }
    rep.check("|tau - |k_l|| <= R0 + 8", bad == 0,
              str(triples) + " triples, tau in " + range_str(tmin, tmax) + ", band " + str(band) + ", " + str(bad) + " outside");

    {
        const long s = balanced_frame({1, n}, 0);
        std::vector<NormalPath> cs;
        for (long j = 1; j <= n; ++j) cs.push_back(G.curve(j, s));
        FillingReport fr = fills(X, cs);
        rep.check("gamma_1..gamma_n fill", fr.fills,
                  "frame " + str(s) + ", overlay V = " + str(fr.crossings) + ", E = " + str(fr.overlay_edges) +
                      ", faces = " + str(fr.overlay_faces) + ", gap " + std::to_string(fr.euler_gap));
    }

    // consecutive triples at this m and at m = 20, plus T_c^e(alpha) pairs
    std::vector<BehrstockTriple> triples_b;
    auto add_consecutive = [&](GammaCache& C, const std::string& tag) {
        for (long l = 1; l <= n; ++l)
            triples_b.push_back({tag + " l=" + str(l), C.curve(l, l - 1), C.curve(l - 1, l - 1), C.curve(l + 1, l - 1)});
    };
    add_consecutive(G, "m=" + str(m));
    TwistWord w20 = family_word(chain, 20);
    GammaCache G20(M, w20, cfg.budget);
    add_consecutive(G20, "m=20");
    std::mt19937_64 rng(cfg.seed);
    for (const auto& [c, cp] : M.curves)
        for (const auto& [d, dp] : M.curves) {
            if (c >= d || intersection_number(X, cp, dp) == 0) continue;
            long e1 = 12 + static_cast<long>(rng() % 9), e2 = 12 + static_cast<long>(rng() % 9);
            triples_b.push_back({c + " " + d + " T^" + str(e1), cp, dp, twist(X, dp, cp, e1, cfg.budget)});
            triples_b.push_back({d + " " + c + " T^" + str(e2), dp, cp, twist(X, cp, dp, e2, cfg.budget)});
        }
    BehrstockReport br = behrstock_probe(X, triples_b);
    Table& bt = rep.table("behrstock", {"triple", "forward_tau", "reverse_tau", "violation"});
    for (const auto& row : br.rows)
        bt.rows.push_back({row.label, str(row.forward_tau), row.reverse_tau ? str(*row.reverse_tau) : "", yes(row.violation)});
    rep.check("reverse tau <= " + str(br.reverse_limit) + " when tau >= " + str(br.forward_threshold), br.violations == 0,
              str(br.tested) + " tested, " + str(br.violations) + " violations, " + str(br.skipped) + " skipped");
    rep.observe("gamma cache", str(static_cast<std::uint64_t>(G.size())) + " framed curves");

    rep.summary = "r = 2, m = " + str(m) + ", j = " + range_str(lo, hi) + ": " +
                  (rep.exit_code() == 0 ? "all probes pass" : "some probes fail or are partial");
    return rep;
}

// ---- certify -----------------------------------------------------------

Report cmd_certify(const RunConfig& cfg) {
    Report rep;
    rep.command = "certify";
    echo_common(rep, cfg);
    const long m = cfg.m.value_or(10);
    rep.inputs.push_back({"m", str(m)});
    const int r = cfg.r, g = cfg.genus(), d = 2 * cfg.r;
    require(d >= 4, "d ≥ 4", "d = 2r = " + str(d));
    require(g >= d / 2 + 2, "g ≥ d/2 + 2", "d = 2r = " + str(d) + ", g = " + str(g));
    require(cfg.k >= 1, "k ≥ 1", "k = " + str(cfg.k));
    require(m >= 1, "m ≥ 1", "m = " + str(m));

    ChainConfig chain = build_chain(r, g, cfg.k);
    TwistWord w = family_word(chain, m);
    rep.inputs.push_back({"word", w.numeric()});

    SweepResult s = sweep(chain, 1, m);
    const SweepRow& row = s.rows.back();
    HypothesisLedger ledger = hypothesis_ledger(chain, w, row, s.onset);
    for (const auto& e : ledger.entries) {
        switch (e.status) {
            case LedgerStatus::pass: rep.check(e.name, true, e.detail); break;
            case LedgerStatus::fail: rep.check(e.name, false, e.detail); break;
            case LedgerStatus::not_yet_observed:
                rep.checks.push_back({e.name, Tier::verified, Status::not_yet_observed, e.detail});
                break;
            case LedgerStatus::assumption: rep.assume(e.name + (e.detail.empty() ? "" : ": " + e.detail)); break;
        }
    }
    Table& dt = rep.table("degree", {"m", "degree", "lambda_30digits", "charpoly_hash", "onset"});
    dt.rows.push_back({str(row.m), str(row.degree), row.lambda, row.charpoly_hash, s.onset ? str(*s.onset) : ""});

    ObstructionCertificate cert = obstruction_check(chain);
    rep.attachment = certificate_json(cert, ledger);
    CertificateCheck back = verify_certificate(rep.attachment);
    rep.check("certificate re-verifies", back.ok && back.recomputed == cert.conclusion, back.ok ? "" : back.reason);
    if (cert.conclusion == Conclusion::obstructed)
        rep.check("no involution preserves the curve system", true,
                  str(cert.automorphism_count) + " automorphisms" + (cert.involution ? ", rho moves delta" : ""));
    else
        rep.checks.push_back({"no involution preserves the curve system", Tier::verified,
                              cert.conclusion == Conclusion::inconclusive ? Status::partial : Status::fail, to_string(cert.conclusion)});

    std::ostringstream sum;
    sum << "(g, d) = (" << g << ", " << d << "): f_m on S_" << g << " from the r = " << r << " chain with k = " << cfg.k << ", m = " << m
        << "; degree " << row.degree << "; conclusion " << to_string(cert.conclusion) << " (conditional on the assumptions listed)";
    rep.summary = sum.str();
    return rep;
}

// ---- output files ------------------------------------------------------

std::vector<std::string> write_outputs(const Report& r, const RunConfig& cfg) {
    std::vector<std::string> written;
    if (cfg.out_dir.empty()) return written;
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    auto put = [&](const std::string& name, const std::string& body) {
        fs::path p = fs::path(cfg.out_dir) / name;
        std::ofstream os(p, std::ios::binary);
        if (!os) throw UsageError("cannot write " + p.string());
        os << body;
        written.push_back(p.string());
    };
    const char* ext = cfg.format == Format::json ? "json" : cfg.format == Format::csv ? "csv" : "txt";
    put(r.command + "." + ext, render(r, cfg.format));
    for (const auto& t : r.tables) {
        Report one;
        one.tables.push_back(t);
        put(t.name + ".csv", render(one, Format::csv));
    }
    if (!r.attachment.empty()) put("certificate.json", r.attachment + "\n");
    for (const auto& [name, body] : r.files) put(name, body);
    return written;
}

} // namespace pacert
