#include "frit/field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "frit/fft.hpp"

namespace frit {

namespace {
bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }
}  // namespace

BoxDomain::BoxDomain(int n_, int N_, Real L_) : n(n_), N(N_), L(L_) {
    if (n < 1 || n > 3) throw config_error("BoxDomain: dimension n must be 1, 2, or 3");
    if (N < 8 || !is_pow2(N)) throw config_error("BoxDomain: N must be a power of two >= 8");
    if (!(L > 0.0) || !std::isfinite(L)) throw config_error("BoxDomain: L must be positive and finite");
}

Real BoxDomain::cell_volume() const {
    Real v = 1.0;
    for (int a = 0; a < n; ++a) v *= h();
    return v;
}

Real BoxDomain::volume() const {
    Real v = 1.0;
    for (int a = 0; a < n; ++a) v *= L;
    return v;
}

std::int64_t BoxDomain::size() const {
    std::int64_t s = 1;
    for (int a = 0; a < n; ++a) s *= N;
    return s;
}

std::array<int, 3> BoxDomain::unflatten(std::int64_t id) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = n - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(id % N);
        id /= N;
    }
    return idx;
}

std::int64_t BoxDomain::flatten(const std::array<int, 3>& idx) const {
    std::int64_t id = 0;
    for (int a = 0; a < n; ++a) id = id * N + idx[a];
    return id;
}

GridField::GridField(const BoxDomain& b, RealArray v) : box(b), values(std::move(v)) {
    if (values.size() != box.size())
        throw config_error("GridField: value array size does not match the domain");
}

Complex SpectralField::coeff(const std::array<int, 3>& k) const {
    std::array<int, 3> bins{0, 0, 0};
    for (int a = 0; a < box.n; ++a) {
        const int ka = k[a];
        if (ka < -box.N / 2 || ka >= box.N / 2)
            throw config_error("SpectralField::coeff: frequency outside [-N/2, N/2)");
        bins[a] = ka >= 0 ? ka : ka + box.N;
    }
    return coeffs[box.flatten(bins)];
}

// ---- transforms -------------------------------------------------------------

// Forward (+) transform. With x_i = -L/2 + i*h the phase splits into the pure
// DFT part and a per-axis factor (-1)^k from the half-box offset:
//   coeffs[k] = L^n * (-1)^(k1+...+kn) * IDFT_normalized(f)[k].
SpectralField forward_transform(const GridField& f) {
    const BoxDomain& box = f.box;
    SpectralField F(box);
    F.coeffs = f.values.cast<Complex>();
    fft_nd(F.coeffs, box, FftDirection::inverse);  // normalized e^{+2 pi i} kernel

    const Real scale = box.volume();
    const std::int64_t total = box.size();
    for (std::int64_t id = 0; id < total; ++id) {
        const auto idx = box.unflatten(id);
        int ksum = 0;
        for (int a = 0; a < box.n; ++a) ksum += box.signed_freq(idx[a]);
        const Real sign = (ksum & 1) ? -1.0 : 1.0;
        F.coeffs[id] *= sign * scale;
    }
    return F;
}

GridField inverse_transform(const SpectralField& F) {
    const BoxDomain& box = F.box;
    ComplexArray work(box.size());
    const std::int64_t total = box.size();
    for (std::int64_t id = 0; id < total; ++id) {
        const auto idx = box.unflatten(id);
        int ksum = 0;
        for (int a = 0; a < box.n; ++a) ksum += box.signed_freq(idx[a]);
        const Real sign = (ksum & 1) ? -1.0 : 1.0;
        work[id] = F.coeffs[id] * sign;
    }
    fft_nd(work, box, FftDirection::forward);  // unscaled e^{-2 pi i} kernel
    work /= box.volume();

    GridField f(box);
    f.values = work.real();
    const Real residue = std::sqrt(work.imag().square().sum() * box.cell_volume());
    const Real ref = std::sqrt(f.values.square().sum() * box.cell_volume());
    if (residue > 1e-8 * std::max(ref, std::numeric_limits<Real>::min()))
        throw invariant_error("inverse_transform: imaginary residue exceeds 1e-8 of field norm");
    return f;
}

// ---- norms and measures ------------------------------------------------------

Real lq_norm(const GridField& f, Real q) {
    if (std::isinf(q)) return f.values.abs().maxCoeff();
    if (!(q >= 1.0)) throw config_error("lq_norm: exponent q must satisfy q >= 1 (or inf)");
    long double acc = 0.0L;
    const std::int64_t total = f.values.size();
    if (q == 1.0) {
        for (std::int64_t i = 0; i < total; ++i) acc += std::abs((long double)f.values[i]);
    } else if (q == 2.0) {
        for (std::int64_t i = 0; i < total; ++i)
            acc += (long double)f.values[i] * (long double)f.values[i];
    } else {
        for (std::int64_t i = 0; i < total; ++i)
            acc += std::pow(std::abs((long double)f.values[i]), (long double)q);
    }
    acc *= (long double)f.box.cell_volume();
    return static_cast<Real>(std::pow(acc, 1.0L / (long double)q));
}

Real distribution_measure(const GridField& f, Real t) {
    if (!(t > 0.0)) throw config_error("distribution_measure: threshold t must be positive");
    std::int64_t count = 0;
    const std::int64_t total = f.values.size();
    for (std::int64_t i = 0; i < total; ++i)
        if (std::abs(f.values[i]) > t) ++count;
    return static_cast<Real>(count) * f.box.cell_volume();
}

Real mean_value(const GridField& f) {
    long double acc = 0.0L;
    for (std::int64_t i = 0; i < f.values.size(); ++i) acc += (long double)f.values[i];
    return static_cast<Real>(acc / (long double)f.values.size());
}

}  // namespace frit
