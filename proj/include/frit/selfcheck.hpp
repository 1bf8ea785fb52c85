// The acceptance-criterion engine: ten numbered checks covering operator
// identities, route agreement, norm-bound uniformity, the classical limit,
// the near-field symbol bound, cube-decomposition invariants, the weak-type
// bound, the per-cube tail bound, the velocity law, and determinism.
//
// The same engine runs at two scales: desk() is the full-resolution
// configuration the acceptance suite uses (N = 256 base), quick() the reduced
// configuration behind the CLI selftest (N = 64). Convention-sensitive
// tolerances (eigen-identities, constants, spreads) are scale-independent;
// resolution-dependent tolerances (route agreement, refinement stability) are
// wider at the quick scale and recorded in the options.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frit/field.hpp"

namespace frit {

struct CheckOptions {
    int N = 256;        // base resolution (doubling checks use 2N, halving N/2)
    Real L = 16.0;
    std::uint64_t seed = 0x46524954ULL;

    int czd_cases = 50;          // random decomposition cases
    int multiplier_M = 512;      // symbol quadrature resolution
    int points_per_regime = 6;   // frequency samples per symbol regime

    Real eigen_tolerance = 1e-8;
    Real route_tolerance = 0.05;            // direct-vs-spectral at base N
    Real spread_limit = 10.0;               // uniformity: max ratio / min ratio
    Real potential_growth_required = 3.0;   // potential-route constant growth factor
    Real potential_p = 1.2;                 // Lp input norm for the potential contrast
    Real recovery_tolerance = 0.02;         // beta -> 0 recovery
    Real envelope_slack = 1.10;             // small-frequency symbol envelope
    Real weak_type_change_tolerance = 0.20; // max-ratio drift under N doubling
    Real tail_change_tolerance = 0.20;      // tail-constant drift under N doubling
    Real tail_recorded_bound = 6.0;         // recorded empirical tail constant (with margin)
    Real sqg_route_tolerance = 0.05;        // velocity direct-vs-spectral at alpha = 0.3
    Real alpha_final_tolerance = 0.05;      // last alpha-convergence row

    static CheckOptions desk();
    static CheckOptions quick();
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // deterministic numbers backing the verdict
};

// Runs all ten criteria in order. Never throws for a failed criterion (the
// failure lands in the result); configuration errors in the options do throw.
std::vector<CriterionResult> run_acceptance_criteria(const CheckOptions& opt);

bool all_passed(const std::vector<CriterionResult>& results);

// Fixed-format table, one line per criterion; byte-identical across runs with
// identical options.
std::string render_report(const std::vector<CriterionResult>& results);

}  // namespace frit
