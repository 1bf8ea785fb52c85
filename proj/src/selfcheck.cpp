#include "frit/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <utility>

#include "frit/corpus.hpp"
#include "frit/czd.hpp"
#include "frit/field_io.hpp"
#include "frit/kernels.hpp"
#include "frit/rng.hpp"
#include "frit/sqg.hpp"
#include "frit/test_fields.hpp"
#include "frit/transform.hpp"
#include "frit/verify.hpp"

namespace frit {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

std::string fmt(Real v) { return format_real(v); }

Real rel_l2(const GridField& a, const GridField& ref) {
    GridField d(a.box);
    d.values = a.values - ref.values;
    const Real rn = lq_norm(ref, 2.0);
    const Real dn = lq_norm(d, 2.0);
    return rn > 0.0 ? dn / rn : dn;
}

// Index into SweepRow::extra for a named column (columns[0..3] are fixed).
std::size_t extra_index(const SweepReport& rep, const std::string& name) {
    for (std::size_t c = 4; c < rep.columns.size(); ++c)
        if (rep.columns[c] == name) return c - 4;
    throw invariant_error("sweep report lacks column " + name);
}

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

template <typename Fn>
void for_each_cube_cell(const BoxDomain& box, const DyadicCube& cube, Fn&& fn) {
    const int m = cube.cells_per_side(box);
    int s[3] = {0, 0, 0};
    for (int a = 0; a < box.n; ++a) s[a] = cube.start(box, a);
    const int e0 = s[0] + m;
    const int e1 = box.n > 1 ? s[1] + m : s[1] + 1;
    const int e2 = box.n > 2 ? s[2] + m : s[2] + 1;
    for (int i0 = s[0]; i0 < e0; ++i0)
        for (int i1 = s[1]; i1 < e1; ++i1)
            for (int i2 = s[2]; i2 < e2; ++i2) {
                std::int64_t id = i0;
                if (box.n > 1) id = id * box.N + i1;
                if (box.n > 2) id = id * box.N + i2;
                fn(id);
            }
}

// ---- criterion 1: closed-form eigenfunction identities ---------------------

CriterionResult check_eigen_identities(const CheckOptions& opt) {
    CriterionResult r{1, "spectral-eigen-identities", false, {}};

    // n = 1: cos(2 pi x) -> -pi sin(2 pi x) on the unit box.
    Real err1 = 0.0;
    {
        BoxDomain box(1, opt.N, 1.0);
        FieldParams p;
        p.mode = {1, 0, 0};
        const GridField f = make_test_field(box, FieldKind::single_mode, p);
        const GridField tf = apply_spectral(f, KernelSpec(1, 1, 0.0));
        for (int i = 0; i < box.N; ++i) {
            const Real x = box.coord(i);
            err1 = std::max(err1, std::abs(tf(i) + kPi * std::sin(2.0 * kPi * x)));
        }
    }

    // n = 2: cos(2 pi x1) -> -2 pi sin(2 pi x1).
    Real err2 = 0.0;
    {
        BoxDomain box(2, opt.N, 1.0);
        FieldParams p;
        p.mode = {1, 0, 0};
        const GridField f = make_test_field(box, FieldKind::single_mode, p);
        const GridField tf = apply_spectral(f, KernelSpec(2, 1, 0.0));
        for (std::int64_t id = 0; id < box.size(); ++id) {
            const Real x1 = box.coord(box.unflatten(id)[0]);
            err2 = std::max(err2, std::abs(tf(id) + 2.0 * kPi * std::sin(2.0 * kPi * x1)));
        }
    }

    r.passed = err1 < opt.eigen_tolerance && err2 < opt.eigen_tolerance;
    r.detail = "n1_err=" + fmt(err1) + " n2_err=" + fmt(err2) + " tol=" + fmt(opt.eigen_tolerance);
    return r;
}

// ---- criterion 2: sampled-kernel and exact-symbol routes agree --------------

CriterionResult check_route_agreement(const CheckOptions& opt) {
    CriterionResult r{2, "route-agreement", false, {}};
    // Compare the box operator's two discretizations over a refinement ladder
    // ending at opt.N: the error must decrease at every doubling and finish
    // below the tolerance.
    std::vector<int> ladder;
    for (int N = std::max(16, opt.N / 4); N <= opt.N; N *= 2) ladder.push_back(N);
    bool ok = true;
    std::string detail;
    for (Real beta : {0.3, 0.5, 0.8}) {
        const KernelSpec spec(2, 1, beta);
        Real prev = std::numeric_limits<Real>::infinity();
        Real err = 0.0;
        bool monotone = true;
        for (int N : ladder) {
            const BoxDomain box(2, N, opt.L);
            const GridField f = make_test_field(box, FieldKind::gaussian_bump);
            GridField direct = apply_T1_direct(f, spec, 2, ConvolutionEdge::periodic_wrap);
            direct.values += apply_T2_direct(f, spec, 2, ConvolutionEdge::periodic_wrap).values;
            const GridField spectral = apply_spectral(f, spec);
            GridField d(box);
            d.values = direct.values - spectral.values;
            err = lq_norm(d, 2.0) / lq_norm(f, 2.0);
            monotone = monotone && err < prev;
            prev = err;
        }
        ok = ok && monotone && err < opt.route_tolerance;
        detail += "beta=" + fmt(beta) + " err=" + fmt(err) +
                  (monotone ? " decreasing; " : " NOT decreasing; ");
    }
    r.passed = ok;
    r.detail = detail + "tol=" + fmt(opt.route_tolerance);
    return r;
}

// ---- criterion 3: norm-bound uniformity in beta plus potential contrast -----

CriterionResult check_norm_uniformity(const CheckOptions& opt) {
    CriterionResult r{3, "norm-bound-uniformity", false, {}};
    const BoxDomain box(2, opt.N, opt.L);
    const auto corpus = standard_corpus(box, opt.seed);

    std::vector<Real> grid;
    for (int i = 0; i <= 19; ++i) grid.push_back(0.05 * i);

    // Per-beta worst case over the corpus of the three-term bracket ratio;
    // uniformity means this envelope-normalized constant has bounded spread.
    std::vector<Real> cmax(grid.size(), 0.0);
    for (const auto& entry : corpus) {
        const SweepReport rep = norm_bound_sweep(entry.field, 2.0, grid);
        const std::size_t ib = extra_index(rep, "bracket_ratio");
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            cmax[i] = std::max(cmax[i], rep.rows[i].extra[ib]);
    }
    Real hi = 0.0;
    Real lo = std::numeric_limits<Real>::infinity();
    for (Real c : cmax) {
        hi = std::max(hi, c);
        if (c > 0.0) lo = std::min(lo, c);
    }
    const Real spread = (lo > 0.0 && std::isfinite(lo)) ? hi / lo : 0.0;

    // The smoothing-potential route constant must blow up as beta decreases
    // while the direct bound stays flat: growth from beta = 0.4 down to 0.05.
    const SweepReport pot =
        riesz_potential_comparison(corpus[0].field, {0.05, 0.4}, opt.potential_p);
    const Real growth =
        pot.rows[1].ratio > 0.0 ? pot.rows[0].ratio / pot.rows[1].ratio : 0.0;

    r.passed = spread > 0.0 && spread <= opt.spread_limit &&
               growth >= opt.potential_growth_required;
    r.detail = "bracket_spread=" + fmt(spread) + " limit=" + fmt(opt.spread_limit) +
               " potential_growth=" + fmt(growth) +
               " required=" + fmt(opt.potential_growth_required) + " p=" + fmt(opt.potential_p);
    return r;
}

// ---- criterion 4: small-beta operator recovers the classical transform ------

CriterionResult check_classical_limit(const CheckOptions& opt) {
    CriterionResult r{4, "classical-limit-recovery", false, {}};
    const BoxDomain box(2, opt.N, opt.L);
    bool ok = true;
    std::string detail;
    for (FieldKind kind : {FieldKind::band_limited_random, FieldKind::single_mode}) {
        FieldParams p;
        p.seed = opt.seed;
        const GridField f = make_test_field(box, kind, p);
        const GridField near_zero = apply_spectral(f, KernelSpec(2, 1, 1e-3));
        const GridField classical = apply_riesz(f, 1);
        const Real rel = rel_l2(near_zero, classical);
        ok = ok && rel < opt.recovery_tolerance;
        detail += std::string(field_kind_name(kind)) + "=" + fmt(rel) + " ";
    }
    r.passed = ok;
    r.detail = detail + "tol=" + fmt(opt.recovery_tolerance);
    return r;
}

// ---- criterion 5: near-field symbol sup and its explicit envelope -----------

CriterionResult check_multiplier_envelope(const CheckOptions& opt) {
    CriterionResult r{5, "near-field-symbol-envelope", false, {}};
    std::vector<Real> grid;
    for (int i = 1; i <= 19; ++i) grid.push_back(0.1 * i);
    const SweepReport rep =
        multiplier_sup_check(2, grid, opt.points_per_regime, opt.multiplier_M);

    const Real spread = rep.ratio_spread();
    const std::size_t ir = extra_index(rep, "small_y_max");
    const std::size_t ib = extra_index(rep, "small_y_bound");
    Real worst = 0.0;
    for (const auto& row : rep.rows) worst = std::max(worst, row.extra[ir] / row.extra[ib]);

    r.passed = spread > 0.0 && spread <= opt.spread_limit && worst <= opt.envelope_slack;
    r.detail = "sup_spread=" + fmt(spread) + " limit=" + fmt(opt.spread_limit) +
               " small_y_worst_fraction=" + fmt(worst) + " slack=" + fmt(opt.envelope_slack);
    return r;
}

// ---- criterion 6: decomposition invariants against an exhaustive scan -------

struct OracleDecomposition {
    std::vector<DyadicCube> cubes;
    std::vector<Real> averages;
};

std::int64_t corner_flat(const std::array<int, 3>& c, int side, int n) {
    std::int64_t id = 0;
    for (int a = 0; a < n; ++a) id = id * side + c[a];
    return id;
}

std::array<int, 3> corner_unflat(std::int64_t id, int side, int n) {
    std::array<int, 3> c{0, 0, 0};
    for (int a = n - 1; a >= 0; --a) {
        c[a] = static_cast<int>(id % side);
        id /= side;
    }
    return c;
}

// Breadth-first scan over every dyadic cube of every level: a cube enters the
// decomposition iff its |f|-average exceeds t and no ancestor entered before
// it. Independent of the depth-first recursion used by decompose(); cube cells
// are summed in the same lexicographic order, so matching averages must agree
// bit for bit.
OracleDecomposition oracle_scan(const GridField& f, Real t) {
    const BoxDomain& box = f.box;
    OracleDecomposition out;

    int levels = 0;
    while ((box.N >> levels) > 1) ++levels;

    std::vector<std::uint8_t> covered(1, 0);  // root: decompose() rejects a selectable root
    for (int level = 1; level <= levels; ++level) {
        const int side = 1 << level;
        const std::int64_t count = int_pow(side, box.n);
        std::vector<std::uint8_t> cov(count, 0);
        for (std::int64_t ci = 0; ci < count; ++ci) {
            const std::array<int, 3> corner = corner_unflat(ci, side, box.n);
            std::array<int, 3> parent{0, 0, 0};
            for (int a = 0; a < box.n; ++a) parent[a] = corner[a] >> 1;
            if (covered[corner_flat(parent, side / 2, box.n)]) {
                cov[ci] = 1;
                continue;
            }
            DyadicCube cube;
            cube.level = level;
            cube.corner = corner;
            const int m = box.N >> level;
            long double acc = 0.0L;
            for_each_cube_cell(box, cube, [&](std::int64_t id) {
                acc += std::fabs(static_cast<long double>(f.values[id]));
            });
            const long double avg = acc / static_cast<long double>(int_pow(m, box.n));
            if (avg > static_cast<long double>(t)) {
                out.cubes.push_back(cube);
                out.averages.push_back(static_cast<Real>(avg));
                cov[ci] = 1;
            }
        }
        covered = std::move(cov);
    }
    return out;  // level-major, lexicographic corners: already (level, corner)-sorted
}

// Empty string when every invariant holds; otherwise the first violation.
std::string czd_case_issues(const GridField& f, Real t, const CZResult& cz) {
    const BoxDomain& box = f.box;
    const Real f1 = lq_norm(f, 1.0);
    const Real fsup = lq_norm(f, std::numeric_limits<Real>::infinity());
    const Real two_n = static_cast<Real>(1 << box.n);
    const Real slack = 1e-12;

    for (Real avg : cz.cube_averages)
        if (!(avg > t) || avg > two_n * t * (1.0 + slack)) return "cube average outside (t, 2^n t]";

    // f = g + b on the grid.
    Real recon = 0.0;
    for (std::int64_t id = 0; id < box.size(); ++id)
        recon = std::max(recon, std::abs(cz.g.values[id] + cz.b.values[id] - f.values[id]));
    if (recon > 1e-12 * std::max(fsup, Real(1e-300))) return "f differs from g + b";

    std::vector<std::uint8_t> in_cube(box.size(), 0);
    for (const DyadicCube& cube : cz.cubes)
        for_each_cube_cell(box, cube, [&](std::int64_t id) { in_cube[id] = 1; });

    for (std::int64_t id = 0; id < box.size(); ++id) {
        if (in_cube[id]) continue;
        if (std::abs(f.values[id]) > t) return "|f| exceeds t on the complement G";
        if (cz.b.values[id] != 0.0) return "b is nonzero on the complement G";
    }

    const Real hn = box.cell_volume();
    for (const DyadicCube& cube : cz.cubes) {
        long double bsum = 0.0L;
        for_each_cube_cell(box, cube, [&](std::int64_t id) {
            bsum += static_cast<long double>(cz.b.values[id]);
        });
        if (std::abs(static_cast<Real>(bsum)) * hn > 1e-12 * f1)
            return "b has nonzero mean on a cube";
    }

    if (lq_norm(cz.g, std::numeric_limits<Real>::infinity()) > two_n * t * (1.0 + slack))
        return "sup of g exceeds 2^n t";

    if (cz.F_measure > f1 / t * (1.0 + slack)) return "m(F) exceeds ||f||_1 / t";

    const Real ball_const = std::pow(static_cast<Real>(box.n), box.n / 2.0) * unit_ball_volume(box.n);
    if (cz.Fstar_measure > ball_const * cz.F_measure + cz.Fstar_slack + slack)
        return "m(F*) exceeds its covering bound";

    const Real g2 = lq_norm(cz.g, 2.0);
    const Real g_const = two_n * two_n * std::pow(static_cast<Real>(box.n), box.n / 2.0) *
                             unit_ball_volume(box.n) +
                         1.0;
    if (g2 * g2 > g_const * t * f1 * (1.0 + slack)) return "squared L2 norm of g exceeds its bound";

    const OracleDecomposition oracle = oracle_scan(f, t);
    if (oracle.cubes.size() != cz.cubes.size()) return "cube count differs from exhaustive scan";
    for (std::size_t i = 0; i < oracle.cubes.size(); ++i) {
        if (!(oracle.cubes[i] == cz.cubes[i])) return "cube set differs from exhaustive scan";
        if (oracle.averages[i] != cz.cube_averages[i])
            return "cube average differs from exhaustive scan";
    }
    return {};
}

CriterionResult check_decomposition_invariants(const CheckOptions& opt) {
    CriterionResult r{6, "cube-decomposition-invariants", false, {}};
    const BoxDomain box(2, opt.N, opt.L);
    const CounterRng rng(opt.seed);

    const FieldKind kinds[4] = {FieldKind::gaussian_bump, FieldKind::multi_bump,
                                FieldKind::indicator_cube, FieldKind::band_limited_random};
    int passed = 0;
    std::size_t total_cubes = 0;
    std::size_t max_cubes = 0;
    std::string first_issue;

    for (int c = 0; c < opt.czd_cases; ++c) {
        const std::uint64_t base = 4096 + 16 * static_cast<std::uint64_t>(c);
        const FieldKind kind = kinds[c % 4];
        FieldParams p;
        p.seed = opt.seed + 101 * static_cast<std::uint64_t>(c) + 7;
        p.amplitude = rng.range(base + 0, 0.5, 2.0);
        switch (kind) {
            case FieldKind::gaussian_bump:
                p.sigma_fraction = rng.range(base + 1, 1.0 / 48.0, 1.0 / 24.0);
                break;
            case FieldKind::multi_bump:
                p.bump_count = 2 + static_cast<int>(rng.uniform(base + 2) * 3.0);
                break;
            case FieldKind::indicator_cube:
                p.indicator_side_fraction = rng.range(base + 3, 1.0 / 16.0, 1.0 / 4.0);
                break;
            default:
                p.band_limit = 2 + static_cast<int>(rng.uniform(base + 4) * 4.0);
                break;
        }
        const GridField f = make_test_field(box, kind, p);

        const Real root = lq_norm(f, 1.0) / box.volume();
        const Real sup = lq_norm(f, std::numeric_limits<Real>::infinity());
        const Real t_lo = 1.2 * root;
        const Real t_hi = 0.9 * sup;
        const Real t =
            t_hi > t_lo ? t_lo * std::pow(t_hi / t_lo, rng.uniform(base + 5)) : t_lo;

        const CZResult cz = decompose(f, t);
        total_cubes += cz.cubes.size();
        max_cubes = std::max(max_cubes, cz.cubes.size());

        const std::string issue = czd_case_issues(f, t, cz);
        if (issue.empty()) {
            ++passed;
        } else if (first_issue.empty()) {
            first_issue = "case " + std::to_string(c) + ": " + issue;
        }
    }

    r.passed = passed == opt.czd_cases;
    r.detail = "cases=" + std::to_string(opt.czd_cases) + " passed=" + std::to_string(passed) +
               " total_cubes=" + std::to_string(total_cubes) +
               " max_cubes=" + std::to_string(max_cubes);
    if (!first_issue.empty()) r.detail += " first_issue=" + first_issue;
    return r;
}

// ---- criterion 7: weak-type ratio stability under refinement ----------------

CriterionResult check_weak_type_stability(const CheckOptions& opt) {
    CriterionResult r{7, "weak-type-stability", false, {}};
    bool ok = true;
    std::string detail;
    for (Real beta : {0.0, 0.3, 0.6}) {
        for (FieldKind kind : {FieldKind::indicator_cube, FieldKind::gaussian_bump}) {
            std::vector<Real> grid;
            Real cmax[2] = {0.0, 0.0};
            for (int s = 0; s < 2; ++s) {
                const BoxDomain box(2, s == 0 ? opt.N / 2 : opt.N, opt.L);
                const GridField f = make_test_field(box, kind);
                if (s == 0) {
                    // Center a fixed 4-decade t grid on the coarse-run mean level.
                    const GridField t1f = apply_T1_via_spectral(f, KernelSpec(2, 1, beta));
                    const Real t0 = lq_norm(t1f, 1.0) / box.volume();
                    for (int i = 0; i <= 40; ++i)
                        grid.push_back(t0 * std::pow(10.0, -2.0 + 4.0 * i / 40.0));
                }
                cmax[s] = weak_type_check(f, beta, grid).max_ratio();
            }
            const Real change =
                cmax[0] > 0.0 ? std::abs(cmax[1] - cmax[0]) / cmax[0]
                              : std::numeric_limits<Real>::infinity();
            ok = ok && change < opt.weak_type_change_tolerance && cmax[1] > 0.0;
            detail += "beta=" + fmt(beta) + " " + field_kind_name(kind) +
                      " max=" + fmt(cmax[1]) + " change=" + fmt(change) + "; ";
        }
    }
    r.passed = ok;
    r.detail = detail + "tol=" + fmt(opt.weak_type_change_tolerance);
    return r;
}

// ---- criterion 8: per-cube tail constant, recorded and refinement-stable ----

CriterionResult check_tail_bound_stability(const CheckOptions& opt) {
    CriterionResult r{8, "tail-bound-stability", false, {}};
    const KernelSpec spec(2, 1, 0.5);
    const Real q = 2.0;
    Real cmax[2] = {0.0, 0.0};

    const BoxDomain coarse(2, opt.N / 2, opt.L);
    const BoxDomain fine(2, opt.N, opt.L);
    const auto corpus_coarse = standard_corpus(coarse, opt.seed);
    const auto corpus_fine = standard_corpus(fine, opt.seed);

    for (std::size_t k = 0; k < corpus_coarse.size(); ++k) {
        const GridField& fc = corpus_coarse[k].field;
        const Real root = lq_norm(fc, 1.0) / coarse.volume();
        const Real sup = lq_norm(fc, std::numeric_limits<Real>::infinity());
        // Level chosen between the mean and the peak; raised when the case
        // would produce an impractical number of per-cube operator applications.
        Real t = std::sqrt(root * sup);
        while (decompose(fc, t).cubes.size() > 96 && t < 0.9 * sup)
            t = std::min(0.95 * sup, 1.5 * t);

        cmax[0] = std::max(cmax[0], tail_bound_check(fc, t, spec, q).max_ratio);
        cmax[1] = std::max(cmax[1], tail_bound_check(corpus_fine[k].field, t, spec, q).max_ratio);
    }

    const Real change = cmax[0] > 0.0 ? std::abs(cmax[1] - cmax[0]) / cmax[0]
                                      : std::numeric_limits<Real>::infinity();
    r.passed = change < opt.tail_change_tolerance && cmax[1] > 0.0 &&
               cmax[1] <= opt.tail_recorded_bound;
    r.detail = "coarse=" + fmt(cmax[0]) + " fine=" + fmt(cmax[1]) + " change=" + fmt(change) +
               " tol=" + fmt(opt.tail_change_tolerance) +
               " recorded_bound=" + fmt(opt.tail_recorded_bound);
    return r;
}

// ---- criterion 9: velocity law ----------------------------------------------

CriterionResult check_velocity_law(const CheckOptions& opt) {
    CriterionResult r{9, "velocity-law", false, {}};
    const BoxDomain box(2, opt.N, opt.L);
    const GridField omega = make_test_field(box, FieldKind::gaussian_bump);

    const VelocityField u = velocity_spectral(omega, 0.3);

    // Divergence residue relative to the largest derivative scale pi N / L.
    const Real div = velocity_divergence_l2(u);
    const Real uscale = lq_norm(u.magnitude(), 2.0) * (kPi * opt.N / opt.L);
    const Real div_rel = uscale > 0.0 ? div / uscale : div;
    const bool div_ok = div_rel <= 1e-10;

    const VelocityField ud = velocity_direct(omega, 0.3);
    GridField d1(box), d2(box);
    d1.values = ud.u1.values - u.u1.values;
    d2.values = ud.u2.values - u.u2.values;
    const Real n1 = lq_norm(d1, 2.0), n2 = lq_norm(d2, 2.0);
    const Real s1 = lq_norm(u.u1, 2.0), s2 = lq_norm(u.u2, 2.0);
    const Real route = std::sqrt(n1 * n1 + n2 * n2) / std::sqrt(s1 * s1 + s2 * s2);
    const bool route_ok = route < opt.sqg_route_tolerance;

    const SweepReport conv = alpha_convergence(omega, {0.3, 0.4, 0.45, 0.49}, 2.0);
    bool monotone = true;
    for (std::size_t i = 1; i < conv.rows.size(); ++i)
        monotone = monotone && conv.rows[i].ratio < conv.rows[i - 1].ratio;
    const Real final_ratio = conv.rows.back().ratio;
    const bool conv_ok = monotone && final_ratio < opt.alpha_final_tolerance;

    const Real c_err = std::abs(bridging_constant(0.5) - 2.0 * kPi);
    const bool c_ok = c_err <= 1e-12;

    r.passed = div_ok && route_ok && conv_ok && c_ok;
    r.detail = "div_rel=" + fmt(div_rel) + " route=" + fmt(route) +
               " route_tol=" + fmt(opt.sqg_route_tolerance) +
               " alpha_monotone=" + (monotone ? "yes" : "no") +
               " alpha_final=" + fmt(final_ratio) + " c_half_err=" + fmt(c_err);
    return r;
}

// ---- criterion 10: determinism and fault detection --------------------------

std::vector<CriterionResult> run_core(const CheckOptions& opt);

struct FaultScaleGuard {
    Real saved = detail::fault_injection_scale;
    ~FaultScaleGuard() { detail::fault_injection_scale = saved; }
};

CriterionResult check_determinism(const CheckOptions& opt) {
    CriterionResult r{10, "determinism-and-fault-detection", false, {}};

    // The reduced-scale engine is what the CLI selftest runs; it must be green,
    // reproduce byte-identically, and detect an injected constant fault.
    CheckOptions q = CheckOptions::quick();
    q.seed = opt.seed;
    const auto run1 = run_core(q);
    const auto run2 = run_core(q);
    const bool identical = render_report(run1) == render_report(run2);
    const bool green = all_passed(run1);

    bool fault_detected = false;
    {
        FaultScaleGuard guard;
        detail::fault_injection_scale = 1.05;
        try {
            fault_detected = !check_eigen_identities(q).passed;
        } catch (const std::exception&) {
            fault_detected = true;  // a raised invariant is also a detection
        }
    }

    r.passed = identical && green && fault_detected;
    r.detail = std::string("byte_identical=") + (identical ? "yes" : "no") +
               " reduced_scale_green=" + (green ? "yes" : "no") +
               " fault_detected=" + (fault_detected ? "yes" : "no");
    return r;
}

std::vector<CriterionResult> run_core(const CheckOptions& opt) {
    std::vector<CriterionResult> out;
    out.push_back(check_eigen_identities(opt));
    out.push_back(check_route_agreement(opt));
    out.push_back(check_norm_uniformity(opt));
    out.push_back(check_classical_limit(opt));
    out.push_back(check_multiplier_envelope(opt));
    out.push_back(check_decomposition_invariants(opt));
    out.push_back(check_weak_type_stability(opt));
    out.push_back(check_tail_bound_stability(opt));
    out.push_back(check_velocity_law(opt));
    return out;
}

}  // namespace

CheckOptions CheckOptions::desk() { return CheckOptions{}; }

CheckOptions CheckOptions::quick() {
    CheckOptions o;
    o.N = 64;
    o.multiplier_M = 256;
    // Resolution-dependent tolerances, widened for the coarse grid; the
    // convention-sensitive ones keep their full-scale values.  The weak-type
    // refinement change compares N=32 vs 64 here, where the indicator field's
    // jump is barely resolved and the level-set maximum genuinely moves ~37%
    // at the most singular kernel setting; the full-scale comparison stays
    // within a few percent, so the widened figure only guards the small grid.
    o.route_tolerance = 0.35;
    o.weak_type_change_tolerance = 0.5;
    o.tail_change_tolerance = 0.35;
    o.tail_recorded_bound = 6.0;
    o.sqg_route_tolerance = 0.20;
    return o;
}

std::vector<CriterionResult> run_acceptance_criteria(const CheckOptions& opt) {
    if (opt.N < 32 || (opt.N & (opt.N - 1)) != 0)
        throw config_error("run_acceptance_criteria: N must be a power of two >= 32");
    if (!(opt.L > 0.0)) throw config_error("run_acceptance_criteria: L must be positive");
    if (opt.czd_cases < 1) throw config_error("run_acceptance_criteria: need at least one case");

    std::vector<CriterionResult> out = run_core(opt);
    out.push_back(check_determinism(opt));
    return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return !results.empty();
}

std::string render_report(const std::vector<CriterionResult>& results) {
    std::string out;
    int passed = 0;
    for (const auto& r : results) {
        char head[32];
        std::snprintf(head, sizeof head, "criterion %02d ", r.index);
        out += head;
        out += r.passed ? "PASS " : "FAIL ";
        out += r.name;
        for (std::size_t i = r.name.size(); i < 34; ++i) out += ' ';
        out += "| ";
        out += r.detail;
        out += '\n';
        if (r.passed) ++passed;
    }
    out += "criteria passed: " + std::to_string(passed) + "/" + std::to_string(results.size()) +
           "\n";
    return out;
}

}  // namespace frit
