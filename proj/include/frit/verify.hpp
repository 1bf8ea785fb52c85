// Inequality verification harness: parameter sweeps that measure the norm
// ratios behind the operator's mapping properties, record empirical constants,
// and compare them with the closed-form envelopes that admit explicit
// constants.
//
// Every check reports LHS/RHS ratios; "uniform in beta" is operationalized as
// a bounded spread (max ratio over min ratio) across the beta grid and the
// standard corpus. Reports carry enough metadata to be re-run bit-identically.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frit/czd.hpp"
#include "frit/field.hpp"
#include "frit/kernels.hpp"

namespace frit {

struct SweepRow {
    Real parameter = 0.0;       // axis value
    Real lhs = 0.0;             // measured quantity
    Real rhs = 0.0;             // envelope / reference quantity
    Real ratio = 0.0;           // lhs/rhs (0 when lhs = 0)
    std::vector<Real> extra;    // named by SweepReport::columns[4..]
};

struct SweepReport {
    std::string axis;                                     // "beta", "alpha", "t", ...
    std::vector<std::string> columns;                     // axis, lhs, rhs, ratio, extras...
    std::vector<SweepRow> rows;                           // strictly increasing in parameter
    std::vector<std::pair<std::string, std::string>> meta;

    Real max_ratio() const;
    Real min_positive_ratio() const;
    // max/min over positive ratios; 0 when no row has a positive ratio.
    Real ratio_spread() const;
};

struct ConstantEstimate {
    Real value = 0.0;    // the recorded empirical constant (max ratio)
    Real witness = 0.0;  // parameter value attaining it
    std::vector<std::string> corpus;
};

ConstantEstimate max_ratio_estimate(const SweepReport& report,
                                    std::vector<std::string> corpus = {});

// Closed-form growth factor L(beta) multiplying ||f||_1 in the L^q bound:
// beta^{n(q-1)/q} / (n(q-1) - beta q)^{1/q} + beta q / ((q-1) n).
// Requires q > 1 and 0 <= beta < n(q-1)/q.
Real L_of_beta(int n, Real q, Real beta);

// Explicit-constant envelopes for the near-field symbol sup |K1_hat(y)|.
// Small frequencies |y| <= beta/2:   2 pi S_{n-1} 2^beta beta^{-beta} / (beta+1).
// Middle frequencies beta/2 <= |y| <= beta: the small-y term plus the annulus
// mass S_{n-1} (2^beta - 1) beta^{-beta-1}.
Real k1_hat_small_y_bound(int n, Real beta);
Real k1_hat_mid_y_bound(int n, Real beta);

// L^q mapping bound sweep over beta: per beta, LHS = ||T f||_q against the
// envelope RHS = ||f||_q + L(beta) ||f||_1; extras record p (from the scaling
// relation 1/q = 1/p - beta/n), the input norms, and the three-term bracket
// variant ||f||_q + ||f||_p + beta^{n(q-1)/q}(n(q-1)-beta q)^{-1/q} ||f||_1.
SweepReport norm_bound_sweep(const GridField& f, Real q, const std::vector<Real>& beta_grid,
                             int j = 1);

// Weak-type distribution bound for the near-field operator at exponent
// q = n/(n-beta): per t, LHS = m{|T1 f| > t}, RHS = ||f||_1/t + ||f||_1^q/t^q.
SweepReport weak_type_check(const GridField& f, Real beta, const std::vector<Real>& t_grid,
                            int j = 1, int padding_factor = 2);

// Far-field L1 -> Lq bound: ratio of ||T2 f||_q to the envelope
// beta^{n(q-1)/q} (n(q-1) - beta q)^{-1/q} ||f||_1. Requires 0 < beta < n(q-1)/q.
ConstantEstimate far_field_norm_check(const GridField& f, Real beta, Real q, int j = 1,
                                      int padding_factor = 2);

// L2 -> L2 ratio of the near-field operator per beta in (0, n).
SweepReport near_field_l2_sweep(const GridField& f, const std::vector<Real>& beta_grid,
                                int j = 1, int padding_factor = 2);

// Sup of |K1_hat| over a log-spaced frequency grid spanning the three analysis
// regimes |y| < beta/2, beta/2 <= |y| <= beta, |y| > beta (two directions per
// magnitude: the kernel axis e_j and the main diagonal). Extras per row:
// regime maxima and the two explicit-constant envelopes.
SweepReport multiplier_sup_check(int n, const std::vector<Real>& beta_grid,
                                 int points_per_regime = 6, int quadrature_M = 512, int j = 1);

// Contrast sweep: the smoothing-potential route constant ||I_beta |f| ||_q /
// ||f||_p (with 1/q = 1/p - beta/n) against ||T f||_q, demonstrating that the
// potential-route constant blows up as beta -> 0 while the direct bound stays
// flat.
SweepReport riesz_potential_comparison(const GridField& f, const std::vector<Real>& beta_grid,
                                       Real p, int j = 1, int padding_factor = 2);

// Endpoint ratios for the cube-split operator component concentrated near the
// cubes: strong L2, weak L1 at the decomposition level t, and strong Lp at the
// interpolated exponents 4/3 and 3.
struct InterpolationReport {
    Real t = 0.0;
    Real strong2 = 0.0;      // ||T11 f||_2 / ||f||_2
    Real weak1_at_t = 0.0;   // m{|T11 f| > t} * t / ||f||_1
    Real strong_low = 0.0;   // p = 4/3
    Real strong_high = 0.0;  // p = 3
};
InterpolationReport interpolation_endpoint_check(const GridField& f, Real t,
                                                 const KernelSpec& spec, int padding_factor = 2);

}  // namespace frit
