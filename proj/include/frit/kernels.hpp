// Closed-form kernels, the smooth cutoff, the multiplier symbol, and the
// near-field symbol quadrature.
//
// The kernel family is K_j(x) = x_j / |x|^{n+1-beta} with 0 <= beta < n. Its
// Fourier multiplier is gamma(n,beta) * y_j / |y|^{beta+1} where gamma is the
// purely imaginary constant i * pi^{n/2-beta} * Gamma((beta+1)/2) /
// Gamma((n+1-beta)/2); beta = 0 is the classical Riesz transform.
//
// For beta > 0 the kernel splits against a radial cutoff at scale beta:
// K1 = K * chi(beta |x|) is compactly supported in |x| <= 2/beta and keeps the
// singularity; K2 = K - K1 is bounded, supported in |x| >= 1/beta, and decays
// like |x|^{beta-n}. At beta = 0 the cutoff radius is infinite, so the split
// (and anything built on it) is unavailable and only spectral application of
// the operator is defined.
#pragma once

#include <array>
#include <complex>

#include "frit/field.hpp"

namespace frit {

// Spatial or frequency point; only the first n components are used.
using Point = std::array<Real, 3>;

Real point_norm(const Point& x, int n);

struct KernelSpec {
    int n = 2;        // dimension, 1..3
    int j = 1;        // component index, 1..n
    Real beta = 0.5;  // homogeneity shift, in [0, n)

    KernelSpec() = default;
    KernelSpec(int n_, int j_, Real beta_);

    // Cutoff scale lambda; the split kernels use chi(lambda |x|).
    Real cutoff_scale() const { return beta; }
    // Whether the K1/K2 spatial split exists (requires beta > 0).
    bool has_spatial_split() const { return beta > 0.0; }
};

// Smooth radial cutoff: 1 on |s| <= 1, 0 on |s| >= 2, raised-cosine bridge
// cos^2(pi(|s|-1)/2) between; |chi'| <= pi/2 everywhere.
Real cutoff_chi(Real s);
// chi at scale lambda: chi(lambda * s).
Real cutoff_chi_scaled(Real s, Real lambda);

// The multiplier constant gamma(n, beta); purely imaginary, Im > 0.
Complex gamma_beta(int n, Real beta);

// Volume of the unit ball and surface measure of the unit sphere in R^n
// (n in {1,2,3}: 2, pi, 4pi/3 and 2, 2pi, 4pi).
Real unit_ball_volume(int n);
Real unit_sphere_area(int n);

// Kernel values. eval_K requires x != 0; eval_K1/eval_K2 require beta > 0
// (config_error otherwise). eval_K2 is defined for all x (zero near 0).
Real eval_K(const Point& x, const KernelSpec& spec);
Real eval_K1(const Point& x, const KernelSpec& spec);
Real eval_K2(const Point& x, const KernelSpec& spec);

// Fourier multiplier gamma * y_j / |y|^{beta+1}; 0 at y = 0 (the kernel is odd
// and mean-free on spheres, so the operator carries no DC mass).
Complex multiplier_symbol(const Point& y, const KernelSpec& spec);

// Midpoint tensor-product quadrature of the near-field symbol
//   K1_hat(y) = integral over |x| <= 2/beta of (e^{2 pi i x.y} - 1) K1(x) dx,
// with M sample points per axis (M >= 64; rounded up to even). Sample points
// are paired with their reflections, which cancels the odd singular part of
// the integrand analytically; the result is purely imaginary by construction.
Complex k1_hat_quadrature(const Point& y, const KernelSpec& spec, int M);

namespace detail {
// Multiplies gamma_beta's result. Always 1.0 in normal operation; the
// self-test harness perturbs it to prove that verification catches a broken
// constant. Not part of the public API.
extern Real fault_injection_scale;
}  // namespace detail

}  // namespace frit
