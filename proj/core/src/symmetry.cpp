#include "pacert/symmetry.hpp"
#include "pacert/errors.hpp"

#include <json.hpp>

namespace pacert {

using nlohmann::json;

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::obstructed: return "obstructed";
        case Conclusion::not_obstructed: return "not_obstructed";
        default: return "inconclusive";
    }
}

Conclusion parse_conclusion(const std::string& s) {
    if (s == "obstructed") return Conclusion::obstructed;
    if (s == "not_obstructed") return Conclusion::not_obstructed;
    if (s == "inconclusive") return Conclusion::inconclusive;
    throw UsageError("unknown conclusion '" + s + "'");
}

std::string to_string(LedgerStatus s) {
    switch (s) {
        case LedgerStatus::pass: return "pass";
        case LedgerStatus::fail: return "fail";
        case LedgerStatus::not_yet_observed: return "not_yet_observed";
        default: return "assumption";
    }
}

namespace {

std::vector<std::string> standard_assumptions() {
    return {
        "Z-side curves are abstract: their realisation on S_g and the filling of the full system are not machine-checked",
        "the lifting threshold N is not quantified; the family index m is assumed to satisfy m >= N",
        "the step from this certificate to 'not a virtual lift' is the lifting-curves theorem and its corollary, taken as given",
        "delta is certified up to edge-side orbits on the graph model",
    };
}

} // namespace

ObstructionCertificate obstruction_check(const ChainConfig& cfg, const std::optional<RibbonGraph>& piece, const std::optional<ArcRef>& delta) {
    RibbonGraph g = piece ? *piece : build_figure1();
    g.validate();
    ObstructionCertificate c;
    c.r = cfg.r;
    c.g = cfg.g;
    c.k = cfg.k;
    c.assumptions = standard_assumptions();
    c.automorphisms = enumerate_automorphisms(g, CurveConstraint::curves, OrientationMode::preserving);
    c.automorphism_count = static_cast<int>(c.automorphisms.size());
    if (delta) {
        c.delta = *delta;
    } else {
        if (g.marked_arcs.empty()) throw StructuralError("graph has no marked arc for delta");
        c.delta = ArcRef{g.marked_arcs.front().edge, g.marked_arcs.front().side};
    }
    std::vector<const GraphAutomorphism*> nontrivial;
    for (const auto& a : c.automorphisms)
        if (!a.is_identity()) nontrivial.push_back(&a);
    if (nontrivial.size() == 1 && nontrivial.front()->order() == 2) {
        c.involution = *nontrivial.front();
        c.delta_image = arc_orbit(g, *c.involution, c.delta);
        c.delta_moved = !same_arc_class(c.delta, *c.delta_image);
        c.fixes_marked_vertex = g.marked_vertex &&
                                c.involution->vertex_map[static_cast<std::size_t>(*g.marked_vertex)] == *g.marked_vertex;
    }
    if (c.automorphism_count == 1)
        c.conclusion = Conclusion::obstructed;
    else if (c.involution)
        c.conclusion = c.delta_moved ? Conclusion::obstructed : Conclusion::not_obstructed;
    else
        c.conclusion = Conclusion::inconclusive;
    return c;
}

std::optional<ArcRef> involution_invariant_arc(const RibbonGraph& g, const GraphAutomorphism& rho) {
    for (int e = 0; e < g.num_edges(); ++e) {
        if (g.edges[static_cast<std::size_t>(e)].family() != 'b') continue;
        ArcRef a{e, +1};
        if (same_arc_class(a, arc_orbit(g, rho, a))) return a;
    }
    return std::nullopt;
}

bool HypothesisLedger::all_checks_pass() const {
    for (const auto& e : entries)
        if (e.status != LedgerStatus::pass && e.status != LedgerStatus::assumption) return false;
    return true;
}

bool HypothesisLedger::any_failed() const {
    for (const auto& e : entries)
        if (e.status == LedgerStatus::fail) return true;
    return false;
}

bool HypothesisLedger::any_unobserved() const {
    for (const auto& e : entries)
        if (e.status == LedgerStatus::not_yet_observed) return true;
    return false;
}

HypothesisLedger hypothesis_ledger(const ChainConfig& cfg, const TwistWord& w, const SweepRow& row, std::optional<long> onset) {
    HypothesisLedger L;
    L.m = row.m;
    auto pf = [](bool ok) { return ok ? LedgerStatus::pass : LedgerStatus::fail; };

    std::string deg = "degree " + std::to_string(row.degree) + " at m = " + std::to_string(row.m);
    if (row.primitive && row.degree > 2)
        L.entries.push_back({"stretch factor degree > 2", LedgerStatus::pass, deg});
    else if (!onset || row.m < *onset)
        L.entries.push_back({"stretch factor degree > 2", LedgerStatus::not_yet_observed, deg + ", below the observed onset"});
    else
        L.entries.push_back({"stretch factor degree > 2", LedgerStatus::fail, deg});

    std::string once;
    const long n = static_cast<long>(w.n());
    for (long j = 1; j <= n && once.empty(); ++j)
        if (cfg.intersection(w.letter(j).curve, w.letter(j + 1).curve) == 1) once = w.letter(j).curve + ", " + w.letter(j + 1).curve;
    L.entries.push_back({"some consecutive pair c_i, c_i+1 meets exactly once", pf(!once.empty()),
                         once.empty() ? "no consecutive pair with intersection 1" : "i(" + once + ") = 1"});

    L.entries.push_back({"twist signs: positive on A, negative on B", pf(w.penner_signs(cfg)), w.canonical()});
    L.entries.push_back({"consecutive twist curves intersect", pf(w.consecutive_intersect(cfg)), ""});

    auto loop = validate_strenner_loop(cfg, w.loop());
    std::string why;
    for (const auto& f : loop.failures) why += (why.empty() ? "" : "; ") + f;
    L.entries.push_back({"twist loop valid in the adjacency graph", pf(loop.valid()), why.empty() ? "closed, alternating, visits all, contractible" : why});

    L.entries.push_back({"adjacency graph connected", pf(adjacency_graph(cfg).connected()), ""});

    auto rd = rank_and_det(cfg);
    L.entries.push_back({"intersection matrix has rank r", pf(rd.rank == static_cast<std::size_t>(cfg.r)),
                         "rank " + std::to_string(rd.rank) + ", det " + to_string(rd.det)});

    for (const auto& a : standard_assumptions()) L.entries.push_back({a, LedgerStatus::assumption, ""});
    return L;
}

namespace {

json aut_json(const GraphAutomorphism& a) {
    return json{{"half_edges", a.half_edge_map}, {"vertices", a.vertex_map}, {"orientation_preserving", a.orientation_preserving},
                {"order", a.order()}};
}

json arc_json(const ArcRef& a, const RibbonGraph& g) {
    return json{{"edge", a.edge}, {"label", g.edges[static_cast<std::size_t>(a.edge)].label}, {"side", a.side}};
}

} // namespace

std::string certificate_json(const ObstructionCertificate& c, const std::optional<HypothesisLedger>& ledger, int indent) {
    RibbonGraph g = build_figure1();
    json j;
    j["config"] = {{"r", c.r}, {"g", c.g}, {"k", c.k}};
    j["automorphism_count"] = c.automorphism_count;
    json auts = json::array();
    for (const auto& a : c.automorphisms) auts.push_back(aut_json(a));
    j["automorphisms"] = auts;
    j["involution"] = c.involution ? aut_json(*c.involution) : json(nullptr);
    j["delta"] = {{"edge", c.delta.edge}, {"side", c.delta.side}};
    j["delta_image"] = c.delta_image ? json{{"edge", c.delta_image->edge}, {"side", c.delta_image->side}} : json(nullptr);
    if (c.delta.edge >= 0 && c.delta.edge < g.num_edges()) {
        j["delta"] = arc_json(c.delta, g);
        if (c.delta_image) j["delta_image"] = arc_json(*c.delta_image, g);
    }
    j["delta_moved"] = c.delta_moved;
    j["fixes_marked_vertex"] = c.fixes_marked_vertex;
    j["conclusion"] = to_string(c.conclusion);
    j["assumptions"] = c.assumptions;
    j["inference"] = "combinatorial facts only; non-lifting follows conditionally via the lifting-curves theorem and its corollary";
    if (ledger) {
        json l = json::array();
        for (const auto& e : ledger->entries) l.push_back({{"name", e.name}, {"status", to_string(e.status)}, {"detail", e.detail}});
        j["hypothesis_ledger"] = {{"m", ledger->m}, {"entries", l}};
    }
    return j.dump(indent);
}

CertificateCheck verify_certificate(const std::string& text) {
    CertificateCheck out;
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        out.reason = std::string("not valid JSON: ") + e.what();
        return out;
    }
    try {
        int r = j.at("config").at("r"), g = j.at("config").at("g"), k = j.at("config").at("k");
        ArcRef d{j.at("delta").at("edge").get<int>(), j.at("delta").at("side").get<int>()};
        auto fresh = obstruction_check(build_chain(r, g, k), std::nullopt, d);
        out.recomputed = fresh.conclusion;
        std::string again = certificate_json(fresh);
        json stored = j;
        stored.erase("hypothesis_ledger");
        if (json::parse(again) != stored) {
            out.reason = "recomputed certificate differs from stored one";
            return out;
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.reason = e.what();
    }
    return out;
}

} // namespace pacert
