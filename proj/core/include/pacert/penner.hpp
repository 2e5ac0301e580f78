#pragma once

#include "pacert/chains.hpp"
#include "pacert/perron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pacert {

// Weight-space action of T_c^e on the basis A then B: row c gains
// |e| * i(c, x) in every opposite-family column x.
IntMatrix elementary_matrix(const std::string& c, long exponent, const ChainConfig& cfg);

struct TransitionMatrix {
    IntMatrix matrix;
    std::vector<std::string> basis;
    TwistWord word;
    bool empty_word = false;
};

// E_{c1} E_{c2} ... E_{cn}, so that M w(x) = w(f(x)) with f applied
// rightmost letter first.
TransitionMatrix transition_matrix(const TwistWord& w, const ChainConfig& cfg);

struct SweepRow {
    long m = 0;
    bool primitive = false;
    int degree = 0;                 // 0 when not primitive
    std::string lambda;             // 30 significant digits
    std::string charpoly_hash;
    bool perron_reciprocal = false;
    bool below_onset = false;
    std::optional<DegreeCertificate> cert;
};

SweepRow stretch_report(const TwistWord& w, const ChainConfig& cfg, const PerronOptions& opt = {});

struct SweepResult {
    std::vector<SweepRow> rows;
    int target_degree = 0;          // 2r
    std::optional<long> onset;      // least m from which every later row has target degree
    bool monotone = true;           // lambda strictly increasing along primitive rows
    bool tail_constant(std::size_t tail = 5) const;
};

// One row per m in [m_lo, m_hi]; throws UsageError on an empty range.
SweepResult sweep(const ChainConfig& cfg, long m_lo, long m_hi, const PerronOptions& opt = {});

std::string sweep_csv(const SweepResult& s);

} // namespace pacert
