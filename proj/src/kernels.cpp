#include "frit/kernels.hpp"

#include <cmath>

#include "frit/parallel.hpp"

namespace frit {

namespace detail {
Real fault_injection_scale = 1.0;
}  // namespace detail

namespace {
constexpr Real kPi = 3.1415926535897932384626433832795;
constexpr Real kTwoPi = 2.0 * kPi;
}  // namespace

Real unit_ball_volume(int n) {
    if (n < 1 || n > 3) throw config_error("unit_ball_volume: dimension must be 1, 2, or 3");
    return std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

Real unit_sphere_area(int n) { return n * unit_ball_volume(n); }

Real point_norm(const Point& x, int n) {
    Real r2 = 0.0;
    for (int a = 0; a < n; ++a) r2 += x[a] * x[a];
    return std::sqrt(r2);
}

KernelSpec::KernelSpec(int n_, int j_, Real beta_) : n(n_), j(j_), beta(beta_) {
    if (n < 1 || n > 3) throw config_error("KernelSpec: dimension n must be 1, 2, or 3");
    if (j < 1 || j > n) throw config_error("KernelSpec: component j must lie in [1, n]");
    if (!(beta >= 0.0) || !(beta < n))
        throw config_error("KernelSpec: beta must lie in [0, n)");
}

Real cutoff_chi(Real s) {
    s = std::fabs(s);
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    const Real c = std::cos(0.5 * kPi * (s - 1.0));
    return c * c;
}

Real cutoff_chi_scaled(Real s, Real lambda) { return cutoff_chi(lambda * s); }

Complex gamma_beta(int n, Real beta) {
    if (n < 1 || n > 3) throw config_error("gamma_beta: dimension n must be 1, 2, or 3");
    if (!(beta >= 0.0) || !(beta < n))
        throw config_error("gamma_beta: beta must lie in [0, n)");
    const Real mag = std::pow(kPi, 0.5 * n - beta) * std::tgamma(0.5 * (beta + 1.0)) /
                     std::tgamma(0.5 * (n + 1.0 - beta));
    return Complex(0.0, mag * detail::fault_injection_scale);
}

Real eval_K(const Point& x, const KernelSpec& spec) {
    const Real r = point_norm(x, spec.n);
    if (r == 0.0) throw config_error("eval_K: kernel is singular at x = 0");
    return x[spec.j - 1] / std::pow(r, spec.n + 1.0 - spec.beta);
}

Real eval_K1(const Point& x, const KernelSpec& spec) {
    if (!spec.has_spatial_split())
        throw config_error("eval_K1: the K1/K2 split requires beta > 0");
    const Real r = point_norm(x, spec.n);
    if (r * spec.beta >= 2.0) return 0.0;  // outside the cutoff support
    if (r == 0.0) throw config_error("eval_K1: kernel is singular at x = 0");
    return eval_K(x, spec) * cutoff_chi(spec.beta * r);
}

Real eval_K2(const Point& x, const KernelSpec& spec) {
    if (!spec.has_spatial_split())
        throw config_error("eval_K2: the K1/K2 split requires beta > 0");
    const Real r = point_norm(x, spec.n);
    if (r * spec.beta <= 1.0) return 0.0;  // chi = 1 there, including x = 0
    return eval_K(x, spec) * (1.0 - cutoff_chi(spec.beta * r));
}

Complex multiplier_symbol(const Point& y, const KernelSpec& spec) {
    const Real r = point_norm(y, spec.n);
    if (r == 0.0) return Complex(0.0, 0.0);
    const Real radial = y[spec.j - 1] / std::pow(r, spec.beta + 1.0);
    return gamma_beta(spec.n, spec.beta) * radial;
}

Complex k1_hat_quadrature(const Point& y, const KernelSpec& spec, int M) {
    if (!spec.has_spatial_split())
        throw config_error("k1_hat_quadrature: requires beta > 0");
    if (M < 64) throw config_error("k1_hat_quadrature: resolution M must be >= 64");
    if (M % 2 != 0) ++M;  // an even grid keeps every midpoint sample off the origin

    const Real R = 2.0 / spec.beta;  // support radius of K1
    const Real step = 2.0 * R / M;
    Real cell = 1.0;
    for (int a = 0; a < spec.n; ++a) cell *= step;

    // Pair x with -x: the paired integrand is K1(x) * (e^{2 pi i x.y} - e^{-2 pi i x.y})
    // = 2i sin(2 pi x.y) K1(x), so only points with x_1 > 0 are visited and the
    // result is exactly imaginary. The midpoint grid is reflection-symmetric and
    // never contains the origin.
    const std::int64_t half = static_cast<std::int64_t>(M / 2);
    const std::int64_t lines = half;  // x_1 ranges over M/2 positive midpoints
    std::int64_t per_line = 1;
    for (int a = 1; a < spec.n; ++a) per_line *= M;

    long double acc = 0.0L;
    Point x{0.0, 0.0, 0.0};
    for (std::int64_t i0 = 0; i0 < lines; ++i0) {
        x[0] = (static_cast<Real>(half + i0) + 0.5) * step - R;
        long double line_acc = 0.0L;
        for (std::int64_t rest = 0; rest < per_line; ++rest) {
            std::int64_t r = rest;
            for (int a = spec.n - 1; a >= 1; --a) {
                const int ia = static_cast<int>(r % M);
                r /= M;
                x[a] = (static_cast<Real>(ia) + 0.5) * step - R;
            }
            const Real k1 = eval_K1(x, spec);
            if (k1 == 0.0) continue;
            Real phase = 0.0;
            for (int a = 0; a < spec.n; ++a) phase += x[a] * y[a];
            line_acc += 2.0L * (long double)std::sin(kTwoPi * phase) * (long double)k1;
        }
        acc += line_acc;
    }
    return Complex(0.0, static_cast<Real>(acc * (long double)cell));
}

}  // namespace frit
