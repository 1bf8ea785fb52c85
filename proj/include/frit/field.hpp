// Periodic box domains, real grid fields, and spectral fields.
//
// Geometry. A BoxDomain is the cube [-L/2, L/2)^n sampled with N points per
// axis (N a power of two, >= 8; n in {1,2,3}), spacing h = L/N, grid points
// x_i = -L/2 + i*h. Fields are stored flat in row-major order (axis 0 slowest).
//
// Transform convention. The forward transform maps a grid field to coefficients
//
//     coeffs[k] = sum_x exp(+2*pi*i * x.k / L) f(x) h^n ,   k in {-N/2,...,N/2-1}^n,
//
// i.e. a Riemann sum for the integral transform with a PLUS sign in the
// exponent; the inverse is its exact inverse on the grid,
// f(x) = (1/L^n) sum_k exp(-2*pi*i * x.k / L) coeffs[k]. With this scaling
// sum_k |coeffs[k]|^2 / L^n equals the squared grid L2 norm of f (Parseval).
// Spectral coefficients are stored in standard DFT bin order: bin b on an axis
// carries the signed frequency b for b < N/2 and b - N for b >= N/2.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "frit/errors.hpp"

namespace frit {

using Real = double;
using Complex = std::complex<double>;
using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;

struct BoxDomain {
    int n = 2;       // dimension, 1..3
    int N = 256;     // samples per axis, power of two >= 8
    Real L = 16.0;   // box side length

    BoxDomain() = default;
    BoxDomain(int n_, int N_, Real L_);

    Real h() const { return L / N; }
    Real cell_volume() const;
    Real volume() const;
    std::int64_t size() const;  // N^n

    // Coordinate of grid index i on any axis.
    Real coord(int i) const { return -0.5 * L + h() * i; }

    // Signed frequency carried by DFT bin b (b in [0, N)).
    int signed_freq(int b) const { return b < N / 2 ? b : b - N; }

    std::array<int, 3> unflatten(std::int64_t id) const;
    std::int64_t flatten(const std::array<int, 3>& idx) const;

    bool operator==(const BoxDomain& o) const { return n == o.n && N == o.N && L == o.L; }
};

struct GridField {
    BoxDomain box;
    RealArray values;  // size box.size(), row-major

    GridField() = default;
    explicit GridField(const BoxDomain& b) : box(b), values(RealArray::Zero(b.size())) {}
    GridField(const BoxDomain& b, RealArray v);

    Real& operator()(std::int64_t id) { return values[id]; }
    Real operator()(std::int64_t id) const { return values[id]; }
};

struct SpectralField {
    BoxDomain box;
    ComplexArray coeffs;  // size box.size(), DFT bin order per axis

    SpectralField() = default;
    explicit SpectralField(const BoxDomain& b) : box(b), coeffs(ComplexArray::Zero(b.size())) {}

    // Coefficient at signed frequency k (each component in [-N/2, N/2)).
    Complex coeff(const std::array<int, 3>& k) const;
};

// ---- transforms -----------------------------------------------------------

SpectralField forward_transform(const GridField& f);

// Exact inverse of forward_transform. The imaginary part of the reconstruction
// must be negligible (coefficients of a real field); a residue above
// 1e-8 * ||f||_2 raises invariant_error.
GridField inverse_transform(const SpectralField& F);

// ---- norms and measures ----------------------------------------------------

// Grid Lq norm (sum |f|^q h^n)^(1/q); q >= 1, or infinity for the max norm.
Real lq_norm(const GridField& f, Real q);

// Measure of the superlevel set { |f| > t } as (cell count) * h^n; t > 0.
Real distribution_measure(const GridField& f, Real t);

// Mean of f over the box ((1/L^n) * sum f h^n).
Real mean_value(const GridField& f);

}  // namespace frit
