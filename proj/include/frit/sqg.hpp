// Velocity reconstruction for the generalized surface quasi-geostrophic
// system: given a scalar vorticity/temperature field omega on a 2-D box, the
// velocity is the perp-rotated operator pair
//
//     u1 = -T_{j=2} omega,   u2 = +T_{j=1} omega,   beta = 1 - 2 alpha,
//
// the grid form of convolving omega against (x-y)^perp / |x-y|^{2+2 alpha}
// with x^perp = (-x2, x1). alpha in (0, 1/2]; alpha = 1/2 is the classical
// Riesz-velocity case (beta = 0), where only the spectral route exists.
//
// The same velocity law written as grad^perp (-Delta)^{-1+alpha} omega differs
// from the kernel normalization by the exact constant
// c_alpha = |gamma(2, 1-2 alpha)| * (2 pi)^{1-2 alpha}; c_{1/2} = 2 pi.
#pragma once

#include "frit/field.hpp"
#include "frit/kernels.hpp"
#include "frit/verify.hpp"

namespace frit {

struct VelocityField {
    GridField u1, u2;

    const BoxDomain& box() const { return u1.box; }
    // Pointwise Euclidean magnitude |u|.
    GridField magnitude() const;
};

// Kernel-normalized velocity via the exact spectral symbol; alpha in (0, 1/2].
VelocityField velocity_spectral(const GridField& omega, Real alpha);

// Kernel-normalized velocity via sampled near+far convolution; alpha in
// (0, 1/2), with alpha = 1/2 routed to the spectral form (the kernel stops
// being locally integrable there).
VelocityField velocity_direct(const GridField& omega, Real alpha, int padding_factor = 2);

// The same law through the grad-perp inverse-Laplacian symbol
// (2 pi i y)^perp (4 pi^2 |y|^2)^{-1+alpha}; equals velocity_spectral / c_alpha.
VelocityField velocity_perp_gradient_form(const GridField& omega, Real alpha);

// Normalization constant between the two forms; real and positive.
Real bridging_constant(Real alpha);

// Grid L2 norm of the spectral divergence of u (exactly 0 for the spectral
// velocity, up to rounding).
Real velocity_divergence_l2(const VelocityField& u);

// Convergence of the velocity law toward the alpha = 1/2 (Riesz) velocity:
// rows of ||u_alpha - u_{1/2}||_q / ||u_{1/2}||_q over an increasing alpha
// grid in (0, 1/2].
SweepReport alpha_convergence(const GridField& omega, const std::vector<Real>& alpha_grid,
                              Real q);

}  // namespace frit
