#pragma once

#include "pacert/curvesys.hpp"
#include "pacert/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace pacert {

struct RunConfig {
    int r = 2;
    std::optional<int> g;                        // default r + 2
    int k = 1;
    std::optional<long> m;
    long m_lo = 1, m_hi = 40;
    std::optional<std::pair<long, long>> j_range;
    Budget budget = Budget::from_env();
    std::uint64_t seed = 1;
    std::string out_dir;
    Format format = Format::text;
    std::string graph_file;                      // verify-figure1 override

    int genus() const { return g ? *g : r + 2; }
};

// "a..b" with optional signs; throws UsageError.
std::pair<long, long> parse_range(const std::string& s);

// Each command throws UsageError for gate violations (exit status 2).
Report cmd_verify_figure1(const RunConfig& cfg);
Report cmd_degree_sweep(const RunConfig& cfg);
Report cmd_twist_probe(const RunConfig& cfg);
Report cmd_certify(const RunConfig& cfg);

// Writes report.<json|csv|txt> (plus certificate.json / sweep.csv when
// present) into cfg.out_dir; returns the paths written.
std::vector<std::string> write_outputs(const Report& r, const RunConfig& cfg);

} // namespace pacert
