#pragma once

#include "pacert/chains.hpp"
#include "pacert/penner.hpp"
#include "pacert/ribbon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pacert {

enum class Conclusion { obstructed, not_obstructed, inconclusive };
std::string to_string(Conclusion c);
Conclusion parse_conclusion(const std::string& s);

struct ObstructionCertificate {
    int r = 0, g = 0, k = 0;
    std::vector<GraphAutomorphism> automorphisms;   // curve preserving, orientation preserving
    int automorphism_count = 0;
    std::optional<GraphAutomorphism> involution;    // the unique nontrivial one, if it is an involution
    ArcRef delta;
    std::optional<ArcRef> delta_image;
    bool delta_moved = false;
    bool fixes_marked_vertex = false;
    Conclusion conclusion = Conclusion::inconclusive;
    std::vector<std::string> assumptions;
};

// Automorphisms of the Figure 1 piece (or `piece`) preserving each curve;
// delta defaults to the piece's first marked arc.
ObstructionCertificate obstruction_check(const ChainConfig& cfg, const std::optional<RibbonGraph>& piece = std::nullopt,
                                         const std::optional<ArcRef>& delta = std::nullopt);

// An arc on a b-edge fixed by the unique involution (for the negative control).
std::optional<ArcRef> involution_invariant_arc(const RibbonGraph& g, const GraphAutomorphism& rho);

enum class LedgerStatus { pass, fail, not_yet_observed, assumption };
std::string to_string(LedgerStatus s);

struct LedgerEntry {
    std::string name;
    LedgerStatus status;
    std::string detail;
};

struct HypothesisLedger {
    long m = 0;
    std::vector<LedgerEntry> entries;
    bool all_checks_pass() const;   // every non-assumption entry passed
    bool any_failed() const;
    bool any_unobserved() const;
};

HypothesisLedger hypothesis_ledger(const ChainConfig& cfg, const TwistWord& w, const SweepRow& row, std::optional<long> onset);

std::string certificate_json(const ObstructionCertificate& c, const std::optional<HypothesisLedger>& ledger = std::nullopt, int indent = 2);

struct CertificateCheck {
    bool ok = false;
    std::string reason;
    Conclusion recomputed = Conclusion::inconclusive;
};
// Re-derives the certificate from its stored configuration and compares.
CertificateCheck verify_certificate(const std::string& json);

} // namespace pacert
