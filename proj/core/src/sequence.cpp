#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"

#include <algorithm>

namespace pacert {

CurveModel build_curve_model(const ChainConfig& cfg) {
    const std::vector<std::string> A{"a1", "a2"}, B{"b1", "b2"};
    if (cfg.r != 2 || cfg.A != A || cfg.B != B)
        throw UsageError("explicit curve paths are available for the r = 2 family only");
    CurveModel M{build_complex(build_genus4_model(cfg.k)), {}, {}};
    for (const auto& c : cfg.basis()) M.curves.emplace(c, curve_path(M.complex, c));
    for (const auto& a : A)
        for (const auto& b : B) {
            auto got = intersection_number(M.complex, M.curves.at(a), M.curves.at(b));
            if (Integer(static_cast<unsigned long>(got)) != cfg.intersection(a, b))
                throw StructuralError("model curves " + a + ", " + b + " meet " + std::to_string(got) + " times, configuration says " +
                                      to_string(cfg.intersection(a, b)));
        }
    M.assumptions.push_back("explicit model is the genus 4 subsurface carrying a1, b1, a2, b2 with " +
                            std::to_string(M.complex.punctures()) + " boundary component(s); the remaining genus is untouched");
    return M;
}

std::vector<Twist> relative_word(const TwistWord& w, long lo, long hi) {
    std::vector<Twist> out;
    if (hi >= lo) {
        for (long j = lo + 1; j <= hi; ++j) out.push_back({w.letter(j).curve, w.exponent(j)});
    } else {
        for (long j = lo; j > hi; --j) out.push_back({w.letter(j).curve, -w.exponent(j)});
    }
    return out;
}

NormalPath gamma_curve(const CurveModel& M, const TwistWord& w, long j, std::optional<long> frame, const Budget& budget) {
    long s = frame.value_or(0);
    const auto& name = w.letter(j).curve;
    auto it = M.curves.find(name);
    if (it == M.curves.end()) throw UsageError("word letter '" + name + "' has no explicit path");
    return apply_twists(M.complex, M.curves, relative_word(w, s, j - 1), it->second, budget);
}

std::vector<NormalPath> gamma_sequence(const CurveModel& M, const TwistWord& w, long j_lo, long j_hi, const Budget& budget) {
    if (j_hi < j_lo) throw UsageError("empty j range");
    std::vector<NormalPath> out;
    for (long j = j_lo; j <= j_hi; ++j) {
        try {
            out.push_back(gamma_curve(M, w, j, std::nullopt, budget));
        } catch (const ResourceError& e) {
            throw ResourceError("gamma_" + std::to_string(j) + ": " + e.what(), e.attempted, e.limit);
        }
    }
    return out;
}

R0Report compute_R0(const CurveModel& M, const TwistWord& w) {
    R0Report rep;
    long worst = 0;
    for (long j = 1; j <= static_cast<long>(w.n()); ++j) {
        const auto& c = M.curves.at(w.letter(j).curve);
        const auto& prev = M.curves.at(w.letter(j - 1).curve);
        const auto& next = M.curves.at(w.letter(j + 1).curve);
        auto est = twisting_estimate(M.complex, c, prev, next);
        rep.base_tau.push_back(est.tau);
        worst = std::max(worst, est.tau);
    }
    rep.R0 = 3 + worst + 2;
    return rep;
}

long frame_cost(long x, long s) { return x - 1 >= s ? x - 1 - s : s - x; }

long balanced_frame(std::initializer_list<long> xs, long prefer) {
    long lo = *std::min_element(xs.begin(), xs.end()) - 1;
    long hi = *std::max_element(xs.begin(), xs.end());
    auto worst = [&](long s) {
        long c = 0;
        for (long x : xs) c = std::max(c, frame_cost(x, s));
        return c;
    };
    long best = prefer;
    for (long s = lo; s <= hi; ++s)
        if (worst(s) < worst(best)) best = s;
    return best;
}

const NormalPath& GammaCache::curve(long j, long frame) {
    auto key = std::make_pair(j, frame);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    NormalPath p;
    if (frame == j - 1 || frame == j) {
        const auto& name = w_.letter(j).curve;
        auto it = M_.curves.find(name);
        if (it == M_.curves.end()) throw UsageError("word letter '" + name + "' has no explicit path");
        p = it->second;
    } else if (frame < j - 1) {
        const NormalPath& inner = curve(j, frame + 1);
        p = twist(M_.complex, inner, M_.curves.at(w_.letter(frame + 1).curve), w_.exponent(frame + 1), budget_);
    } else {
        const NormalPath& inner = curve(j, frame - 1);
        p = twist(M_.complex, inner, M_.curves.at(w_.letter(frame).curve), -w_.exponent(frame), budget_);
    }
    return memo_.emplace(key, std::move(p)).first->second;
}

TwistingEstimate lemma_twisting(GammaCache& G, long i, long l, long j, std::optional<long> frame) {
    if (!(i < l && l < j)) throw UsageError("need i < l < j");
    long s = frame.value_or(balanced_frame({i, l, j}, l - 1));
    const NormalPath& core = G.curve(l, s);
    const NormalPath& a = G.curve(i, s);
    const NormalPath& b = G.curve(j, s);
    return twisting_estimate(G.model().complex, core, a, b);
}

std::uint64_t gamma_intersection(GammaCache& G, long i, long j) {
    if (i == j) return 0;
    if (j < i) std::swap(i, j);
    long s = balanced_frame({i, j}, i);
    return intersection_number(G.model().complex, G.curve(i, s), G.curve(j, s));
}

BehrstockReport behrstock_probe(const SquareComplex& X, const std::vector<BehrstockTriple>& triples) {
    BehrstockReport rep;
    for (const auto& t : triples) {
        BehrstockRow row;
        row.label = t.label;
        row.forward_tau = twisting_estimate(X, t.gamma, t.alpha, t.beta).tau;
        row.hypothesis_met = row.forward_tau >= rep.forward_threshold;
        if (row.hypothesis_met) {
            row.reverse_tau = twisting_estimate(X, t.alpha, t.gamma, t.beta).tau;
            row.violation = *row.reverse_tau > rep.reverse_limit;
            ++rep.tested;
            if (row.violation) ++rep.violations;
        } else {
            ++rep.skipped;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace pacert
