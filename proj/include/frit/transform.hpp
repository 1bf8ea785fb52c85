// Application of the operator T (and its near/far split) to grid fields.
//
// Orientation. Throughout the library the operator acts as the correlation
//
//     (T f)(x) = sum_z K(z) f(x + z) h^n,
//
// whose Fourier multiplier on the analysis modes is exactly the closed-form
// symbol gamma * y_j / |y|^{beta+1} of kernels.hpp. With this orientation a
// pure cosine maps to minus the scaled sine: for beta = 0, n = 1,
// T cos(2 pi x/L) = -pi sin(2 pi x/L). Both routes below implement the same
// orientation, so they can serve as each other's oracle:
//
//  * apply_spectral multiplies the DFT of f by the EXACT symbol (DC and
//    Nyquist-edge modes are assigned 0, keeping the output real and mean-free);
//  * the *_direct routes convolve with the SAMPLED kernel via FFT correlation
//    — a genuinely different discretization of the same operator.
//
// The direct routes exclude the cell containing the kernel singularity (the
// kernel is odd, so the excluded cell contributes nothing to leading order for
// smooth data). Their edge treatment is selectable: zero_padded pads by
// padding_factor so the discrete correlation is linear — the free-plane
// operator applied to f extended by zero, exact for confined data but
// deliberately blind to box images. periodic_wrap instead samples the
// lattice-periodized kernel sum_m K(z + m L) (evaluated by a Gaussian split:
// short-range image shells in space plus the exact long-range transform on the
// Fourier side) and correlates circularly — the same box operator the spectral
// route diagonalizes, so the two routes then differ only by discretization
// error and can oracle each other under grid refinement.
#pragma once

#include "frit/field.hpp"
#include "frit/kernels.hpp"

namespace frit {

enum class OperatorRoute { spectral, direct };

// How the sampled-kernel correlation treats the box edge. zero_padded treats f
// as compactly supported (the default: the free-plane operator, with the far
// kernel truncated at the padded box); periodic_wrap correlates with the
// lattice-periodized kernel, the box analogue of the spectral route.
enum class ConvolutionEdge { zero_padded, periodic_wrap };

// Far-field application metadata. Under zero_padded the kernel is sampled for
// offsets up to truncation_radius per axis; beyond that radius
// |K_2(z)| <= R^{beta-n}, so the omitted contribution against a unit-L1-mass
// field is at most tail_sup_bound. Under periodic_wrap nothing is omitted
// (truncation_radius = infinity, tail_sup_bound = 0).
struct T2Metadata {
    Real truncation_radius = 0.0;
    Real tail_sup_bound = 0.0;
};

// Exact-symbol route, defined for all beta in [0, n). Output is real (the
// imaginary residue is checked against 1e-8 * ||f||_2 and discarded) and
// mean-free.
GridField apply_spectral(const GridField& f, const KernelSpec& spec);

// Near-field kernel K1 = K * chi(beta |x|), sampled. Requires beta > 0 and the
// support condition 2/beta < L/2.
GridField apply_T1_direct(const GridField& f, const KernelSpec& spec, int padding_factor = 2,
                          ConvolutionEdge edge = ConvolutionEdge::zero_padded);

// Far-field kernel K2 = K - K1, sampled; defined for beta > 0, any geometry.
GridField apply_T2_direct(const GridField& f, const KernelSpec& spec, int padding_factor = 2,
                          ConvolutionEdge edge = ConvolutionEdge::zero_padded,
                          T2Metadata* meta = nullptr);

// Full kernel K, sampled (singular cell excluded); beta > 0.
GridField apply_T_direct(const GridField& f, const KernelSpec& spec, int padding_factor = 2,
                         ConvolutionEdge edge = ConvolutionEdge::zero_padded);

// Classical Riesz transform: apply_spectral at beta = 0.
GridField apply_riesz(const GridField& f, int j);

// The near-field operator T1 as used by the verification harness: the exact
// spectral route minus the sampled far field (beta > 0), or the full spectral
// route at beta = 0 where the far field is identically zero. More accurate
// near the singularity than sampling K1 directly.
GridField apply_T1_via_spectral(const GridField& f, const KernelSpec& spec,
                                int padding_factor = 2);

// Smoothing comparison operator: (I_beta |f|)(x) = sum_z |z|^{beta-n} |f(x+z)| h^n
// computed by the same padded correlation machinery. The kernel is one-signed
// and integrable at 0, so the singular cell is kept: it carries the averaged
// mass of the volume-equivalent ball, which is exactly the term whose
// (n/beta) growth the comparison constant exhibits as beta -> 0.
// Requires 0 < beta < n.
GridField riesz_potential_abs(const GridField& f, Real beta, int padding_factor = 2);

}  // namespace frit
