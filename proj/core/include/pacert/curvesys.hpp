#pragma once

#include "pacert/chains.hpp"
#include "pacert/ribbon.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace pacert {

// Squares are the vertex discs of the ribbon graph; side s of square v is
// half-edge 4v + s and sides are glued along edges.
struct SquareComplex {
    RibbonGraph graph;
    FaceTrace faces;
    int squares() const { return graph.num_vertices(); }
    int euler_characteristic() const { return faces.euler_graph(); }  // of the bounded surface
    int punctures() const { return faces.boundary_components; }
};

SquareComplex build_complex(const RibbonGraph& g);

struct Budget {
    std::uint64_t max_edge_weight = 1000000000ULL;   // crossings through any one band
    std::uint64_t max_total_length = 50000000ULL;    // memory guard per path
    static Budget from_env();                         // PACERT_BUDGET overrides max_edge_weight
};

// Closed curve as a cyclic, cyclically reduced edge path: outgoing
// half-edges h_0 .. h_{L-1}, pair(h_i) at the vertex of h_{i+1}.
class NormalPath {
public:
    NormalPath() = default;
    // Reduces and canonicalises the rotation. Throws StructuralError if
    // the walk is not closed or reduces to a point.
    NormalPath(const SquareComplex& X, std::vector<int> walk);

    std::size_t length() const { return h_.size(); }
    const std::vector<int>& half_edges() const { return h_; }
    int at(std::size_t i) const { return h_[i % h_.size()]; }
    bool reduced() const { return true; }
    NormalPath reversed(const SquareComplex& X) const;
    std::vector<std::uint64_t> weights(const SquareComplex& X) const;  // passes per edge
    std::uint64_t max_weight(const SquareComplex& X) const;
    // (square, entry side, exit side) per square visited
    std::vector<std::tuple<int, int, int>> dump(const SquareComplex& X) const;
    std::string to_string(const SquareComplex& X) const;
    bool operator==(const NormalPath& o) const { return h_ == o.h_; }
    bool operator<(const NormalPath& o) const { return h_ < o.h_; }
    // same unoriented curve
    bool same_curve(const SquareComplex& X, const NormalPath& o) const;

private:
    std::vector<int> h_;
};

// Cyclic free reduction of a closed walk of outgoing half-edges.
std::vector<int> reduce_walk(const RibbonGraph& g, std::vector<int> walk);

NormalPath curve_path(const SquareComplex& X, const std::string& curve_id);

// T_c^k(p) for a simple curve c given as a path; positive k is the left
// twist: a strand arriving at c from the left turns left along c.
NormalPath twist(const SquareComplex& X, const NormalPath& p, const NormalPath& c, long k, const Budget& budget = {});

struct Twist {
    std::string curve;
    long exponent = 0;
};
// Mapping class T_{t0} T_{t1} ... applied to p, rightmost first.
NormalPath apply_twists(const SquareComplex& X, const std::map<std::string, NormalPath>& curves, const std::vector<Twist>& word,
                        const NormalPath& p, const Budget& budget = {});

// ---- minimal position ------------------------------------------------

// Joint minimal-position drawing of a family of curves: strands in each
// band ordered left to right, chords in each square.
struct StrandLayout {
    struct Chord {
        int curve;
        std::size_t position;   // index in the curve's path (vertex of h_position)
        std::uint64_t from, to; // boundary coordinates around the square, ccw
    };
    std::vector<std::vector<Chord>> chords;  // per square
    std::vector<std::uint64_t> side_count;   // strands per side (half-edge)
    // position of a strand on each side in ccw order around the square
    std::vector<std::vector<std::uint64_t>> side_position;  // [curve][i] at tail side of edge i
    std::vector<std::vector<std::uint64_t>> head_position;  // [curve][i] at head side of edge i
};

StrandLayout layout_strands(const SquareComplex& X, const std::vector<NormalPath>& curves);

// Number of interleaving chord pairs between curves a and b (a == b gives
// self crossings).
std::uint64_t crossing_count(const StrandLayout& L, int a, int b);

// Some pair of crossing chords (curve a, curve b), if any.
std::optional<std::pair<StrandLayout::Chord, StrandLayout::Chord>> find_crossing(const StrandLayout& L, int a, int b);

std::uint64_t intersection_number(const SquareComplex& X, const NormalPath& p, const NormalPath& q);

// Independent count: linked maximal common segments of the lifts.
std::uint64_t intersection_by_linking(const SquareComplex& X, const NormalPath& p, const NormalPath& q);

struct FillingReport {
    bool fills = false;
    int curves_used = 0;           // after removing duplicates
    std::uint64_t crossings = 0;   // V of the overlay
    std::uint64_t overlay_edges = 0;
    std::uint64_t overlay_faces = 0;
    long long euler_gap = 0;       // chi(S) - chi(U) - (faces - boundary count); 0 iff fills
    int jitter_rounds = 0;
};

// Requires a model surface with one boundary component.
FillingReport fills(const SquareComplex& X, const std::vector<NormalPath>& curves, std::uint64_t max_crossings = 20000000ULL);

// ---- annular projection estimate -------------------------------------

struct TwistingEstimate {
    long tau = 0;
    long signed_tau = 0;     // orientation of the relative twisting
    int error_bound = 2;
};

// Lift intersection count in the annular cover of gamma using one
// crossing strand of each curve. Throws ProjectionUndefinedError if either
// misses gamma.
TwistingEstimate twisting_estimate(const SquareComplex& X, const NormalPath& gamma, const NormalPath& alpha, const NormalPath& beta);

// Positive twists must shift the relative twisting positively; returns a
// description of the first failure, empty on success.
std::string twist_sign_selftest(const SquareComplex& X);

// ---- gamma sequence ---------------------------------------------------

struct CurveModel {
    SquareComplex complex;
    std::map<std::string, NormalPath> curves;   // defining curves by id
    std::vector<std::string> assumptions;
};

// Explicit paths for the r = 2 family: a1, b1 from Figure 1, a2 through the
// delta arc, b2 meeting a2 k times. Throws UsageError otherwise.
CurveModel build_curve_model(const ChainConfig& cfg);

// Letters of f_{lo}^{-1} f_{hi} as twists (periodic indices), for any lo, hi.
std::vector<Twist> relative_word(const TwistWord& w, long lo, long hi);

// gamma_j = f_{j-1}(c_j), optionally in the frame f_s^{-1}.
NormalPath gamma_curve(const CurveModel& M, const TwistWord& w, long j, std::optional<long> frame = std::nullopt,
                       const Budget& budget = {});

// Throws ResourceError naming the first j over budget.
std::vector<NormalPath> gamma_sequence(const CurveModel& M, const TwistWord& w, long j_lo, long j_hi, const Budget& budget = {});

// 3 + max_j tau_{c_j}(c_{j-1}, c_{j+1}), plus 2 for the estimator.
struct R0Report {
    long R0 = 0;
    std::vector<long> base_tau;  // per j = 1..n
};
R0Report compute_R0(const CurveModel& M, const TwistWord& w);

// Number of twists needed to write gamma_x in the frame f_s^{-1}.
long frame_cost(long x, long s);
// Frame minimising the longest pulled-back curve; ties keep `prefer`.
long balanced_frame(std::initializer_list<long> xs, long prefer);

// Memoised f_s^{-1}(gamma_j), built one twist at a time from c_j.
class GammaCache {
public:
    GammaCache(const CurveModel& M, const TwistWord& w, Budget budget = {}) : M_(M), w_(w), budget_(budget) {}
    const NormalPath& curve(long j, long frame);
    const CurveModel& model() const { return M_; }
    const TwistWord& word() const { return w_; }
    const Budget& budget() const { return budget_; }
    std::size_t size() const { return memo_.size(); }

private:
    const CurveModel& M_;
    TwistWord w_;
    Budget budget_;
    std::map<std::pair<long, long>, NormalPath> memo_;
};

// tau_{gamma_l}(gamma_i, gamma_j), computed after pulling the triple back
// by f_s^{-1} (default: balanced frame, f_{l-1}^{-1} on ties).
TwistingEstimate lemma_twisting(GammaCache& G, long i, long l, long j, std::optional<long> frame = std::nullopt);
// i(gamma_i, gamma_j), computed in a balanced frame.
std::uint64_t gamma_intersection(GammaCache& G, long i, long j);

struct BehrstockTriple {
    std::string label;
    NormalPath gamma, alpha, beta;
};
struct BehrstockRow {
    std::string label;
    long forward_tau = 0;            // tau_gamma(alpha, beta)
    std::optional<long> reverse_tau; // tau_alpha(gamma, beta) when the hypothesis holds
    bool hypothesis_met = false;
    bool violation = false;
};
struct BehrstockReport {
    std::vector<BehrstockRow> rows;
    int tested = 0, violations = 0, skipped = 0;
    long forward_threshold = 12, reverse_limit = 5;
};
BehrstockReport behrstock_probe(const SquareComplex& X, const std::vector<BehrstockTriple>& triples);

} // namespace pacert
