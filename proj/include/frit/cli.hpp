// Command-line front end: field construction, operator application, cube
// decomposition, verification sweeps, velocity reconstruction, and the
// self-test suite, with deterministic CSV/JSON/binary artifacts.
//
// Configuration resolves in three layers: struct defaults, then an optional
// JSON config document (--config file.json), then command-line flags; the
// command line wins. The fully resolved configuration is written next to
// every artifact the run produces, so any output can be reproduced from its
// own directory.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "frit/field.hpp"

namespace frit {

struct RunConfig {
    // Domain.
    int n = 2;
    int N = 256;
    Real L = 16.0;

    // Kernel.
    int j = 1;
    Real beta = 0.5;
    Real alpha = 0.3;  // velocity subcommand; beta = 1 - 2 alpha there

    // Field.
    std::string field = "gaussian_bump";
    Real amplitude = 1.0;
    Real sigma_fraction = 1.0 / 32.0;
    int bump_count = 3;
    Real indicator_side_fraction = 1.0 / 8.0;
    int band_limit = 4;
    std::vector<int> mode = {1, 2};
    std::uint64_t seed = 0x46524954ULL;

    // Operator route and discretization.
    std::string route = "spectral";  // "spectral" or "direct"
    int padding_factor = 2;

    // Sweep/report parameters.
    std::string kind = "norm-bound";  // sweep selector, see cmd_sweep
    Real q = 2.0;
    Real p = 1.2;                     // potential-contrast input exponent
    std::vector<Real> beta_grid;      // empty: per-kind default
    std::vector<Real> alpha_grid;     // empty: {0.3, 0.4, 0.45, 0.49}
    int t_points = 41;                // weak-type t grid size (4 decades)
    Real t = 0.0;                     // decomposition level; 0 = automatic
    Real uniformity_threshold = 10.0;
    int quadrature_M = 512;
    int points_per_regime = 6;

    // Artifacts.
    std::string out_dir = "frit-out";

    // Self-test.
    int selftest_N = 64;
    bool inject_fault = false;
};

// JSON round-trip of the resolved configuration (stable key order, exact
// numeric round-trip).
std::string render_config_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

// File-name stem carrying the distinguishing parameters of a run.
std::string artifact_stem(const std::string& command, const RunConfig& cfg);

// Entry point used by the binary; returns the process exit code
// (0 success, 1 failed checks, 2 configuration error, 3 invariant violation).
int run_cli(int argc, const char* const* argv);

}  // namespace frit
