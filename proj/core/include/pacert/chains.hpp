#pragma once

#include "pacert/bigint.hpp"
#include "pacert/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pacert {

struct ChainConfig {
    int r = 2, g = 4, k = 1;
    std::vector<std::string> A, B;       // a1..ar, b1..br
    IntMatrix N;                         // N(i, j) = i(a_i, b_j)
    bool same_sign = true;
    bool n_overridden = false;
    std::vector<std::string> placement;  // per curve in A then B: "X" or "Z"
    std::optional<std::vector<std::string>> loop_override;

    int curve_index(const std::string& c) const;   // A first, then B; -1 if unknown
    bool in_A(const std::string& c) const;
    bool in_B(const std::string& c) const;
    bool has_curve(const std::string& c) const { return curve_index(c) >= 0; }
    // geometric intersection number; 0 within a family
    Integer intersection(const std::string& c, const std::string& d) const;
    std::vector<std::string> basis() const;       // A then B
    bool matches_chain_shape() const;
    int z_genus() const { return g - 3; }
};

// Chain configuration; throws GenusBoundError if g < r + 2.
ChainConfig build_chain(int r, int g, int k);
// Arbitrary two-family configuration (rows A, columns B); no chain gates.
ChainConfig custom_config(std::vector<std::string> A, std::vector<std::string> B, IntMatrix N);
// A = {a}, B = {b}, i(a, b) = 1.
ChainConfig torus_config();
// Key/value text: r, g, k, optional `N = row; row; ...` and `loop = a1 b1 ...`.
ChainConfig parse_chain_config(const std::string& text);

struct RankDet {
    std::size_t rank;
    Integer det;
};
RankDet rank_and_det(const ChainConfig& cfg);
RankDet rank_and_det(const IntMatrix& n);

struct AdjacencyGraph {
    int r = 0;                                   // vertices 0..r-1 are A, r..2r-1 are B
    std::vector<std::pair<int, int>> edges;      // (a index, b index)
    bool adjacent(int a, int b) const;
    bool connected() const;
};
AdjacencyGraph adjacency_graph(const ChainConfig& cfg);

struct LoopReport {
    bool closed = true, alternates = true, all_edges = true, visits_all = true, contractible = true;
    std::vector<std::string> failures;
    bool valid() const { return closed && alternates && all_edges && visits_all && contractible; }
};

// Loop given as a vertex sequence; a repeated first vertex at the end is
// optional. Throws UsageError on unknown curves.
LoopReport validate_strenner_loop(const ChainConfig& cfg, std::vector<std::string> loop);

// Cyclic backtracking reduction of a closed walk; returns the reduced walk.
std::vector<std::string> reduce_backtracks(std::vector<std::string> walk);

struct TwistLetter {
    std::string curve;
    int kappa = +1;   // sign of the exponent
    bool operator==(const TwistLetter&) const = default;
};

// T_{c1}^{k1} ... T_{cn}^{kn}, k_j = kappa_j * m, extended periodically.
struct TwistWord {
    std::vector<TwistLetter> letters;
    long m = 1;

    std::size_t n() const { return letters.size(); }
    // 1-based, any integer index (periodic)
    const TwistLetter& letter(long j) const;
    long exponent(long j) const { return letter(j).kappa * m; }
    std::vector<std::string> loop() const;
    std::string canonical() const;            // "a1^+m b1^-m ..."
    std::string numeric() const;              // "a1^+5 b1^-5 ..."
    bool penner_signs(const ChainConfig& cfg) const;
    bool consecutive_intersect(const ChainConfig& cfg) const;
};

TwistWord family_word(const ChainConfig& cfg, long m);
TwistWord parse_twist_word(const std::string& text, long m);

} // namespace pacert
