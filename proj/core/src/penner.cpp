#include "pacert/penner.hpp"

#include "pacert/errors.hpp"

#include <sstream>

namespace pacert {

IntMatrix elementary_matrix(const std::string& c, long exponent, const ChainConfig& cfg) {
    int ic = cfg.curve_index(c);
    if (ic < 0) throw UsageError("unknown curve '" + c + "'");
    bool in_a = cfg.in_A(c);
    if (in_a && exponent < 0) throw PennerSignError("negative twist on A-curve " + c);
    if (!in_a && exponent > 0) throw PennerSignError("positive twist on B-curve " + c);
    auto basis = cfg.basis();
    IntMatrix e = IntMatrix::identity(basis.size());
    Integer q = exponent < 0 ? -exponent : exponent;
    for (std::size_t x = 0; x < basis.size(); ++x) {
        if (cfg.in_A(basis[x]) == in_a) continue;
        Integer i = cfg.intersection(c, basis[x]);
        if (i != 0) e(static_cast<std::size_t>(ic), x) += q * i;
    }
    return e;
}

TransitionMatrix transition_matrix(const TwistWord& w, const ChainConfig& cfg) {
    TransitionMatrix t;
    t.basis = cfg.basis();
    t.word = w;
    t.matrix = IntMatrix::identity(t.basis.size());
    t.empty_word = w.letters.empty();
    for (auto& l : w.letters) t.matrix = t.matrix * elementary_matrix(l.curve, l.kappa * w.m, cfg);
    if (det(t.matrix) != 1) throw std::logic_error("transition matrix is not unimodular");
    return t;
}

SweepRow stretch_report(const TwistWord& w, const ChainConfig& cfg, const PerronOptions& opt) {
    SweepRow row;
    row.m = w.m;
    auto t = transition_matrix(w, cfg);
    try {
        DegreeCertificate c = perron_degree(t.matrix, opt);
        row.primitive = true;
        row.degree = c.degree;
        row.lambda = c.lambda_digits(30);
        row.charpoly_hash = c.charpoly_hash();
        row.perron_reciprocal = c.perron_reciprocal();
        row.cert = std::move(c);
    } catch (const PrimitivityError&) {
        row.primitive = false;
        row.charpoly_hash = DegreeCertificate{char_poly(t.matrix), {}, 0, 0, 0, 0, 0}.charpoly_hash();
    }
    return row;
}

bool SweepResult::tail_constant(std::size_t tail) const {
    if (rows.size() < tail) return false;
    for (std::size_t i = rows.size() - tail; i < rows.size(); ++i)
        if (!rows[i].primitive || rows[i].degree != target_degree) return false;
    return true;
}

SweepResult sweep(const ChainConfig& cfg, long m_lo, long m_hi, const PerronOptions& opt) {
    if (m_hi < m_lo) throw UsageError("empty m range " + std::to_string(m_lo) + ".." + std::to_string(m_hi));
    if (m_lo < 1) throw UsageError("m must be >= 1");
    SweepResult s;
    s.target_degree = 2 * static_cast<int>(cfg.A.size());
    for (long m = m_lo; m <= m_hi; ++m) s.rows.push_back(stretch_report(family_word(cfg, m), cfg, opt));
    long onset = -1;
    for (std::size_t i = s.rows.size(); i-- > 0;) {
        const auto& r = s.rows[i];
        if (r.primitive && r.degree == s.target_degree) onset = r.m;
        else break;
    }
    if (onset > 0) s.onset = onset;
    for (auto& r : s.rows) r.below_onset = !s.onset || r.m < *s.onset;
    const SweepRow* prev = nullptr;
    for (auto& r : s.rows) {
        if (!r.primitive) continue;
        if (prev && !(r.cert->lambda_lo > prev->cert->lambda_hi)) s.monotone = false;
        prev = &r;
    }
    return s;
}

std::string sweep_csv(const SweepResult& s) {
    std::ostringstream out;
    out << "m,primitive,degree,lambda_30digits,charpoly_hash\n";
    for (auto& r : s.rows)
        out << r.m << "," << (r.primitive ? "true" : "false") << "," << (r.primitive ? std::to_string(r.degree) : "") << ","
            << r.lambda << "," << r.charpoly_hash << "\n";
    return out.str();
}

} // namespace pacert
