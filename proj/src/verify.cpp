#include "frit/verify.hpp"

#include <algorithm>
#include <cmath>

#include "frit/field_io.hpp"
#include "frit/transform.hpp"

namespace frit {

namespace {

constexpr Real kPi = 3.1415926535897932384626433832795;

std::string format_meta(Real v) { return format_real(v); }
std::string format_meta(int v) { return std::to_string(v); }

Real safe_ratio(Real lhs, Real rhs) {
    if (lhs == 0.0) return 0.0;
    return lhs / rhs;
}

void require_increasing(const std::vector<Real>& grid, const char* what) {
    if (grid.empty()) throw config_error(std::string(what) + ": the parameter grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw config_error(std::string(what) + ": the parameter grid must strictly increase");
}

// The three-term ||f||_1 coefficient of the bracket envelope.
Real bracket_l1_coefficient(int n, Real q, Real beta) {
    if (beta == 0.0) return 0.0;
    const Real denom = n * (q - 1.0) - beta * q;
    return std::pow(beta, n * (q - 1.0) / q) * std::pow(denom, -1.0 / q);
}

}  // namespace

Real SweepReport::max_ratio() const {
    Real v = 0.0;
    for (const SweepRow& row : rows) v = std::max(v, row.ratio);
    return v;
}

Real SweepReport::min_positive_ratio() const {
    Real v = 0.0;
    for (const SweepRow& row : rows)
        if (row.ratio > 0.0 && (v == 0.0 || row.ratio < v)) v = row.ratio;
    return v;
}

Real SweepReport::ratio_spread() const {
    const Real lo = min_positive_ratio();
    if (lo == 0.0) return 0.0;
    return max_ratio() / lo;
}

ConstantEstimate max_ratio_estimate(const SweepReport& report, std::vector<std::string> corpus) {
    ConstantEstimate est;
    est.corpus = std::move(corpus);
    for (const SweepRow& row : report.rows) {
        if (row.ratio > est.value) {
            est.value = row.ratio;
            est.witness = row.parameter;
        }
    }
    return est;
}

Real L_of_beta(int n, Real q, Real beta) {
    if (!(q > 1.0)) throw config_error("L_of_beta: q must exceed 1");
    const Real limit = n * (q - 1.0) / q;
    if (!(beta >= 0.0) || !(beta < limit))
        throw config_error("L_of_beta: beta must lie in [0, n(q-1)/q)");
    if (beta == 0.0) return 0.0;
    const Real denom = n * (q - 1.0) - beta * q;
    return std::pow(beta, n * (q - 1.0) / q) / std::pow(denom, 1.0 / q) +
           beta * q / ((q - 1.0) * n);
}

Real k1_hat_small_y_bound(int n, Real beta) {
    if (!(beta > 0.0)) throw config_error("k1_hat_small_y_bound: beta must be positive");
    return 2.0 * kPi * unit_sphere_area(n) * std::pow(2.0, beta) * std::pow(beta, -beta) /
           (beta + 1.0);
}

Real k1_hat_mid_y_bound(int n, Real beta) {
    if (!(beta > 0.0)) throw config_error("k1_hat_mid_y_bound: beta must be positive");
    return k1_hat_small_y_bound(n, beta) +
           unit_sphere_area(n) * (std::pow(2.0, beta) - 1.0) * std::pow(beta, -beta - 1.0);
}

SweepReport norm_bound_sweep(const GridField& f, Real q, const std::vector<Real>& beta_grid,
                             int j) {
    require_increasing(beta_grid, "norm_bound_sweep");
    if (!(q > 1.0)) throw config_error("norm_bound_sweep: q must exceed 1");
    const int n = f.box.n;

    const Real fq = lq_norm(f, q);
    const Real f1 = lq_norm(f, 1.0);

    SweepReport report;
    report.axis = "beta";
    report.columns = {"beta", "T_f_q_norm", "envelope",  "ratio",
                      "p",    "f_q_norm",   "f_p_norm",  "f_1_norm",
                      "bracket_envelope",   "bracket_ratio"};
    report.meta = {{"q", format_meta(q)}, {"n", format_meta(n)}, {"j", format_meta(j)}};

    for (Real beta : beta_grid) {
        const Real limit = n * (q - 1.0) / q;
        if (!(beta >= 0.0) || !(beta < limit))
            throw config_error("norm_bound_sweep: beta grid leaves [0, n(q-1)/q)");
        const Real inv_p = 1.0 / q + beta / n;
        if (inv_p > 1.0 + 1e-15)
            throw config_error("norm_bound_sweep: scaling relation would need p < 1");
        const Real p = 1.0 / inv_p;

        const GridField tf = apply_spectral(f, KernelSpec(n, j, beta));
        const Real lhs = lq_norm(tf, q);
        const Real fp = lq_norm(f, p);
        const Real rhs = fq + L_of_beta(n, q, beta) * f1;
        const Real bracket = fq + fp + bracket_l1_coefficient(n, q, beta) * f1;

        SweepRow row;
        row.parameter = beta;
        row.lhs = lhs;
        row.rhs = rhs;
        row.ratio = safe_ratio(lhs, rhs);
        row.extra = {p, fq, fp, f1, bracket, safe_ratio(lhs, bracket)};
        report.rows.push_back(std::move(row));
    }
    return report;
}

SweepReport weak_type_check(const GridField& f, Real beta, const std::vector<Real>& t_grid,
                            int j, int padding_factor) {
    require_increasing(t_grid, "weak_type_check");
    const int n = f.box.n;
    if (!(beta >= 0.0) || !(beta < n))
        throw config_error("weak_type_check: beta must lie in [0, n)");
    const Real q = static_cast<Real>(n) / (n - beta);

    const KernelSpec spec(n, j, beta);
    const GridField t1f = apply_T1_via_spectral(f, spec, padding_factor);
    const Real f1 = lq_norm(f, 1.0);

    SweepReport report;
    report.axis = "t";
    report.columns = {"t", "level_set_measure", "envelope", "ratio"};
    report.meta = {{"beta", format_meta(beta)},
                   {"q", format_meta(q)},
                   {"n", format_meta(n)},
                   {"j", format_meta(j)}};

    for (Real t : t_grid) {
        if (!(t > 0.0)) throw config_error("weak_type_check: t grid must be positive");
        const Real lhs = distribution_measure(t1f, t);
        const Real rhs = f1 / t + std::pow(f1, q) / std::pow(t, q);
        SweepRow row;
        row.parameter = t;
        row.lhs = lhs;
        row.rhs = rhs;
        row.ratio = safe_ratio(lhs, rhs);
        report.rows.push_back(std::move(row));
    }
    return report;
}

ConstantEstimate far_field_norm_check(const GridField& f, Real beta, Real q, int j,
                                      int padding_factor) {
    const int n = f.box.n;
    if (!(q > 1.0)) throw config_error("far_field_norm_check: q must exceed 1");
    if (!(beta > 0.0) || !(beta < n * (q - 1.0) / q))
        throw config_error("far_field_norm_check: beta must lie in (0, n(q-1)/q)");

    const GridField t2f = apply_T2_direct(f, KernelSpec(n, j, beta), padding_factor);
    const Real envelope = bracket_l1_coefficient(n, q, beta) * lq_norm(f, 1.0);

    ConstantEstimate est;
    est.value = safe_ratio(lq_norm(t2f, q), envelope);
    est.witness = beta;
    return est;
}

SweepReport near_field_l2_sweep(const GridField& f, const std::vector<Real>& beta_grid, int j,
                                int padding_factor) {
    require_increasing(beta_grid, "near_field_l2_sweep");
    const int n = f.box.n;
    const Real f2 = lq_norm(f, 2.0);

    SweepReport report;
    report.axis = "beta";
    report.columns = {"beta", "T1_f_2_norm", "f_2_norm", "ratio"};
    report.meta = {{"n", format_meta(n)}, {"j", format_meta(j)}};

    for (Real beta : beta_grid) {
        if (!(beta > 0.0) || !(beta < n))
            throw config_error("near_field_l2_sweep: beta grid must lie in (0, n)");
        const GridField t1f = apply_T1_via_spectral(f, KernelSpec(n, j, beta), padding_factor);
        SweepRow row;
        row.parameter = beta;
        row.lhs = lq_norm(t1f, 2.0);
        row.rhs = f2;
        row.ratio = safe_ratio(row.lhs, row.rhs);
        report.rows.push_back(std::move(row));
    }
    return report;
}

SweepReport multiplier_sup_check(int n, const std::vector<Real>& beta_grid,
                                 int points_per_regime, int quadrature_M, int j) {
    require_increasing(beta_grid, "multiplier_sup_check");
    if (points_per_regime < 2)
        throw config_error("multiplier_sup_check: need at least 2 points per regime");

    SweepReport report;
    report.axis = "beta";
    report.columns = {"beta",        "sup_all",      "unit",        "ratio",
                      "small_y_max", "small_y_bound", "mid_y_max",  "mid_y_bound",
                      "large_y_max"};
    report.meta = {{"n", format_meta(n)},
                   {"j", format_meta(j)},
                   {"quadrature_M", format_meta(quadrature_M)},
                   {"points_per_regime", format_meta(points_per_regime)}};

    for (Real beta : beta_grid) {
        if (!(beta > 0.0) || !(beta < n))
            throw config_error("multiplier_sup_check: beta grid must lie in (0, n)");
        const KernelSpec spec(n, j, beta);

        // Log-spaced magnitude grids per regime; the regimes share endpoints.
        auto log_grid = [&](Real lo, Real hi) {
            std::vector<Real> g(points_per_regime);
            const Real step = std::log(hi / lo) / (points_per_regime - 1);
            for (int i = 0; i < points_per_regime; ++i) g[i] = lo * std::exp(step * i);
            return g;
        };
        const std::vector<Real> small = log_grid(beta / 2 * 1e-3, beta / 2);
        const std::vector<Real> mid = log_grid(beta / 2, beta);
        const std::vector<Real> large = log_grid(beta, beta * 1e3);

        // Two probe directions: the kernel axis and the main diagonal.
        Point axis{0.0, 0.0, 0.0};
        axis[j - 1] = 1.0;
        Point diag{0.0, 0.0, 0.0};
        for (int a = 0; a < n; ++a) diag[a] = 1.0 / std::sqrt(static_cast<Real>(n));

        auto regime_max = [&](const std::vector<Real>& mags) {
            Real v = 0.0;
            for (Real m : mags) {
                for (const Point& dir : {axis, diag}) {
                    Point y{0.0, 0.0, 0.0};
                    for (int a = 0; a < n; ++a) y[a] = m * dir[a];
                    v = std::max(v, std::abs(k1_hat_quadrature(y, spec, quadrature_M)));
                }
            }
            return v;
        };

        const Real r1 = regime_max(small);
        const Real r2 = regime_max(mid);
        const Real r3 = regime_max(large);
        const Real sup_all = std::max({r1, r2, r3});

        SweepRow row;
        row.parameter = beta;
        row.lhs = sup_all;
        row.rhs = 1.0;
        row.ratio = sup_all;
        row.extra = {r1, k1_hat_small_y_bound(n, beta), r2, k1_hat_mid_y_bound(n, beta), r3};
        report.rows.push_back(std::move(row));
    }
    return report;
}

SweepReport riesz_potential_comparison(const GridField& f, const std::vector<Real>& beta_grid,
                                       Real p, int j, int padding_factor) {
    require_increasing(beta_grid, "riesz_potential_comparison");
    const int n = f.box.n;
    if (!(p >= 1.0)) throw config_error("riesz_potential_comparison: p must be >= 1");
    const Real fp = lq_norm(f, p);

    SweepReport report;
    report.axis = "beta";
    report.columns = {"beta", "potential_q_norm", "f_p_norm", "ratio", "q", "T_f_q_norm"};
    report.meta = {{"p", format_meta(p)}, {"n", format_meta(n)}, {"j", format_meta(j)}};

    for (Real beta : beta_grid) {
        if (!(beta > 0.0) || !(beta < n))
            throw config_error("riesz_potential_comparison: beta grid must lie in (0, n)");
        const Real inv_q = 1.0 / p - beta / n;
        if (!(inv_q > 0.0))
            throw config_error(
                "riesz_potential_comparison: scaling relation needs beta < n/p");
        const Real q = 1.0 / inv_q;

        const GridField ib = riesz_potential_abs(f, beta, padding_factor);
        const GridField tf = apply_spectral(f, KernelSpec(n, j, beta));

        SweepRow row;
        row.parameter = beta;
        row.lhs = lq_norm(ib, q);
        row.rhs = fp;
        row.ratio = safe_ratio(row.lhs, row.rhs);
        row.extra = {q, lq_norm(tf, q)};
        report.rows.push_back(std::move(row));
    }
    return report;
}

InterpolationReport interpolation_endpoint_check(const GridField& f, Real t,
                                                 const KernelSpec& spec, int padding_factor) {
    const auto parts = split_operator(f, t, spec, padding_factor);
    const GridField& t11 = parts.first;

    InterpolationReport rep;
    rep.t = t;
    rep.strong2 = safe_ratio(lq_norm(t11, 2.0), lq_norm(f, 2.0));
    rep.weak1_at_t = safe_ratio(distribution_measure(t11, t) * t, lq_norm(f, 1.0));
    rep.strong_low = safe_ratio(lq_norm(t11, 4.0 / 3.0), lq_norm(f, 4.0 / 3.0));
    rep.strong_high = safe_ratio(lq_norm(t11, 3.0), lq_norm(f, 3.0));
    return rep;
}

}  // namespace frit
