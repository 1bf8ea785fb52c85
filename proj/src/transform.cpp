#include "frit/transform.hpp"

#include <cmath>
#include <limits>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>

#include "frit/fft.hpp"
#include "frit/parallel.hpp"

namespace frit {

namespace {

constexpr Real kPi = 3.1415926535897932384626433832795;

enum class KernelPart { full, near, far, potential };

// Sample value of the chosen kernel part at offset z. For the odd parts the
// cell containing the singularity is excluded (value 0): the principal value
// cancels it to leading order. The one-signed potential kernel |z|^{beta-n} is
// genuinely integrable at 0 and its cell mass DOMINATES as beta -> 0 (it
// carries the S_{n-1} h^beta / beta blow-up the comparison estimate exhibits),
// so its origin sample instead gets the averaged kernel mass of the
// volume-equivalent ball: (1/h^n) int_{|z| <= r_eq} |z|^{beta-n} dz with
// omega_n r_eq^n = h^n, which simplifies to (n/beta) r_eq^{beta-n}.
Real kernel_sample(const Point& z, const KernelSpec& spec, KernelPart part) {
    const Real r = point_norm(z, spec.n);
    if (r == 0.0) return 0.0;
    switch (part) {
        case KernelPart::full: return eval_K(z, spec);
        case KernelPart::near: return r * spec.beta >= 2.0 ? 0.0 : eval_K1(z, spec);
        case KernelPart::far: return eval_K2(z, spec);
        case KernelPart::potential: return std::pow(r, spec.beta - spec.n);
    }
    return 0.0;
}

Real potential_origin_sample(const KernelSpec& spec, Real h) {
    const Real r_eq = h * std::pow(unit_ball_volume(spec.n), -1.0 / spec.n);
    return (spec.n / spec.beta) * std::pow(r_eq, spec.beta - spec.n);
}

std::int64_t pow_int(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// ---- lattice-periodized kernel via Gaussian splitting ------------------------
//
// The periodic_wrap mode needs samples of the lattice sum
//
//     K_per(z) = sum_{m in Z^n} K(z + m L),   (symmetric principal value)
//
// which converges far too slowly to truncate term by term (the paired tails
// shrink only like M^{beta-1}). Instead split the power law with the
// regularized incomplete gamma Q: with p = (n+1-beta)/2 and a width eta,
//
//     K(x) = K(x) Q(p, eta |x|^2)  +  K(x) (1 - Q(p, eta |x|^2)).
//
// The first (short-range) piece decays like exp(-eta |x|^2), so two image
// shells suffice; the second piece is a superposition of Gaussians whose
// lattice sum is evaluated exactly on the Fourier side: its transform is
//
//     i pi^{n/2+1} y_j (pi^2 |y|^2)^{-a} [Gamma(a) / Gamma(p)] Q(a, pi^2 |y|^2 / eta),
//
// with a = (beta+1)/2, which recovers the full symbol gamma y_j / |y|^{beta+1}
// as eta -> 0. The split width is fixed in box units so both sums converge to
// below 1e-30 with two image shells and |k| <~ 16 Fourier terms.
constexpr Real kEwaldSplitWidth = 6.0;  // eta = (width / L)^2
constexpr int kEwaldShells = 2;

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a) for
// a > 0, x >= 0; series for the lower function on x < a+1, Lentz continued
// fraction above.
Real reg_gamma_q(Real a, Real x) {
    if (!(x > 0.0)) return 1.0;
    if (x > 750.0) return 0.0;  // scaled by exp(-x): below double underflow
    const Real log_prefactor = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        Real ap = a, term = 1.0 / a, sum = term;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-17) break;
        }
        return 1.0 - sum * std::exp(log_prefactor);
    }
    constexpr Real tiny = 1e-300;
    Real b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const Real an = -static_cast<Real>(i) * (static_cast<Real>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Real del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return h * std::exp(log_prefactor);
}

// Short-range piece K(z) Q(p, eta |z|^2); the singular cell is excluded.
Real ewald_short(const Point& z, const KernelSpec& spec, Real eta) {
    const Real r = point_norm(z, spec.n);
    if (r == 0.0) return 0.0;
    return eval_K(z, spec) * reg_gamma_q(0.5 * (spec.n + 1.0 - spec.beta), eta * r * r);
}

// Imaginary magnitude of the long-range piece's Fourier transform at y.
Real ewald_long_hat_imag(const Point& y, const KernelSpec& spec, Real eta) {
    Real y2 = 0.0;
    for (int a = 0; a < spec.n; ++a) y2 += y[a] * y[a];
    if (y2 == 0.0) return 0.0;
    const Real a = 0.5 * (spec.beta + 1.0);
    const Real q = reg_gamma_q(a, kPi * kPi * y2 / eta);
    if (q == 0.0) return 0.0;
    return std::pow(kPi, 0.5 * spec.n + 1.0) * y[spec.j - 1] * std::pow(kPi * kPi * y2, -a) *
           (std::tgamma(a) / std::tgamma(0.5 * (spec.n + 1.0 - spec.beta))) * q;
}

// ---- cached kernel spectra --------------------------------------------------

struct SpectrumKey {
    int n, N, pad, part, edge, j;
    Real L, beta;

    bool operator<(const SpectrumKey& o) const {
        return std::tie(n, N, pad, part, edge, j, L, beta) <
               std::tie(o.n, o.N, o.pad, o.part, o.edge, o.j, o.L, o.beta);
    }
    bool operator==(const SpectrumKey& o) const {
        return std::tie(n, N, pad, part, edge, j, L, beta) ==
               std::tie(o.n, o.N, o.pad, o.part, o.edge, o.j, o.L, o.beta);
    }
};

using SpectrumPtr = std::shared_ptr<const ComplexArray>;

// Conjugated DFT of the sampled kernel: on the padded cube for zero_padded
// (plain kernel samples, linear correlation), or on the box cube for
// periodic_wrap (samples of the lattice-periodized kernel, circular
// correlation). Conjugation makes the multiply-and-invert a cross-correlation:
// the resulting index algebra is out[i] = sum_{i'} K((i'-i) h) f[i'], the
// discrete form of integral K(z) f(x+z) dz.
ComplexArray build_spectrum(const SpectrumKey& key, const KernelSpec& spec) {
    const Real h = key.L / key.N;
    const KernelPart part = static_cast<KernelPart>(key.part);

    if (static_cast<ConvolutionEdge>(key.edge) == ConvolutionEdge::zero_padded) {
        const int P = key.pad * key.N;
        const std::int64_t padded_total = pow_int(P, key.n);
        RealArray samples = RealArray::Zero(padded_total);
        parallel_for(padded_total, [&](std::int64_t b, std::int64_t e) {
            for (std::int64_t id = b; id < e; ++id) {
                std::int64_t rem = id;
                Point z{0.0, 0.0, 0.0};
                for (int a = key.n - 1; a >= 0; --a) {
                    const int m = static_cast<int>(rem % P);
                    rem /= P;
                    z[a] = h * (m < P / 2 ? m : m - P);  // signed offset
                }
                samples[id] = kernel_sample(z, spec, part);
            }
        });
        if (part == KernelPart::potential) samples[0] = potential_origin_sample(spec, h);
        ComplexArray freq = samples.cast<Complex>();
        fft_nd(freq, key.n, P, FftDirection::forward);
        return freq.conjugate();
    }

    // periodic_wrap: sample the periodized kernel on the box grid. The near
    // part has compact support inside the box (enforced by the callers'
    // 2/beta < L/2 precondition), so it has no images at all; the far and full
    // parts get the short-range image sum in space plus the exact long-range
    // transform added on the Fourier side. The one-signed potential kernel has
    // a divergent lattice sum and no principal-value rescue.
    if (part == KernelPart::potential)
        throw config_error(
            "periodic wrap is undefined for the one-signed potential kernel; "
            "use the zero-padded route");

    const Real eta = (kEwaldSplitWidth / key.L) * (kEwaldSplitWidth / key.L);
    const std::int64_t total = pow_int(key.N, key.n);
    const int images = part == KernelPart::near ? 0 : kEwaldShells;

    RealArray samples = RealArray::Zero(total);
    parallel_for(total, [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            std::int64_t rem = id;
            Point z{0.0, 0.0, 0.0};
            for (int a = key.n - 1; a >= 0; --a) {
                const int m = static_cast<int>(rem % key.N);
                rem /= key.N;
                z[a] = h * (m < key.N / 2 ? m : m - key.N);
            }
            if (part == KernelPart::near) {
                samples[id] = kernel_sample(z, spec, part);
                continue;
            }
            long double acc = 0.0L;
            const int span = 2 * images + 1;
            for (int c = 0; c < pow_int(span, key.n); ++c) {
                int rem_m = c;
                Point w = z;
                for (int a = 0; a < key.n; ++a) {
                    w[a] += key.L * (rem_m % span - images);
                    rem_m /= span;
                }
                acc += static_cast<long double>(ewald_short(w, spec, eta));
            }
            if (part == KernelPart::far)
                acc -= static_cast<long double>(kernel_sample(z, spec, KernelPart::near));
            samples[id] = static_cast<Real>(acc);
        }
    });

    ComplexArray freq = samples.cast<Complex>();
    fft_nd(freq, key.n, key.N, FftDirection::forward);

    if (part != KernelPart::near) {
        // Long-range part, exact on the analysis modes: the DFT bin kappa of a
        // band-limited Fourier series with coefficients c_k = hat(k/L)/L^n is
        // N^n c_{-kappa}; aliases are below exp(-pi^2 (N/2)^2 / width^2). DC
        // and unpaired Nyquist rows stay 0, matching the exact-symbol route.
        const Real scale = std::pow(static_cast<Real>(key.N) / key.L, key.n);
        parallel_for(total, [&](std::int64_t b, std::int64_t e) {
            for (std::int64_t id = b; id < e; ++id) {
                std::int64_t rem = id;
                Point y{0.0, 0.0, 0.0};
                bool dc = true, nyquist = false;
                for (int a = key.n - 1; a >= 0; --a) {
                    const int m = static_cast<int>(rem % key.N);
                    rem /= key.N;
                    const int k = m < key.N / 2 ? m : m - key.N;
                    if (k != 0) dc = false;
                    if (k == -key.N / 2) nyquist = true;
                    y[a] = static_cast<Real>(-k) / key.L;
                }
                if (dc || nyquist) continue;
                freq[id] += Complex(0.0, scale * ewald_long_hat_imag(y, spec, eta));
            }
        });
    }
    return freq.conjugate();
}

SpectrumPtr cached_spectrum(const SpectrumKey& key, const KernelSpec& spec) {
    constexpr std::size_t kCapBytes = std::size_t(256) << 20;
    static std::mutex mu;
    static std::map<SpectrumKey, SpectrumPtr> entries;
    static std::list<SpectrumKey> order;  // front = most recently used
    static std::size_t bytes = 0;

    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = entries.find(key);
        if (it != entries.end()) {
            order.remove(key);
            order.push_front(key);
            return it->second;
        }
    }
    // Build outside the lock; building is deterministic, so a concurrent
    // duplicate build produces an identical array and either copy may win.
    auto built = std::make_shared<const ComplexArray>(build_spectrum(key, spec));

    std::lock_guard<std::mutex> lock(mu);
    auto it = entries.find(key);
    if (it != entries.end()) return it->second;
    entries.emplace(key, built);
    order.push_front(key);
    bytes += static_cast<std::size_t>(built->size()) * sizeof(Complex);
    while (bytes > kCapBytes && order.size() > 1) {
        const SpectrumKey& victim = order.back();
        auto vit = entries.find(victim);
        bytes -= static_cast<std::size_t>(vit->second->size()) * sizeof(Complex);
        entries.erase(vit);
        order.pop_back();
    }
    return built;
}

// ---- padded correlation ------------------------------------------------------

GridField correlate_with_kernel(const BoxDomain& box, const RealArray& values,
                                const KernelSpec& spec, KernelPart part, int padding_factor,
                                ConvolutionEdge edge) {
    if (padding_factor < 2)
        throw config_error("direct route: padding_factor must be >= 2 (linear convolution)");

    SpectrumKey key{box.n,
                    box.N,
                    padding_factor,
                    static_cast<int>(part),
                    static_cast<int>(edge),
                    part == KernelPart::potential ? 0 : spec.j,
                    box.L,
                    spec.beta};
    SpectrumPtr spectrum = cached_spectrum(key, spec);

    const int P = edge == ConvolutionEdge::zero_padded ? padding_factor * box.N : box.N;
    const std::int64_t padded_total = pow_int(P, box.n);
    ComplexArray work = ComplexArray::Zero(padded_total);

    const std::int64_t total = box.size();
    if (P == box.N) {
        work = values.cast<Complex>();
    } else {
        parallel_for(total, [&](std::int64_t b, std::int64_t e) {
            for (std::int64_t id = b; id < e; ++id) {
                const auto idx = box.unflatten(id);
                std::int64_t pid = 0;
                for (int a = 0; a < box.n; ++a) pid = pid * P + idx[a];
                work[pid] = values[id];
            }
        });
    }

    fft_nd(work, box.n, P, FftDirection::forward);
    work *= *spectrum;
    fft_nd(work, box.n, P, FftDirection::inverse);

    GridField out(box);
    const Real scale = box.cell_volume();
    parallel_for(total, [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            std::int64_t pid = id;
            if (P != box.N) {
                const auto idx = box.unflatten(id);
                pid = 0;
                for (int a = 0; a < box.n; ++a) pid = pid * P + idx[a];
            }
            out.values[id] = work[pid].real() * scale;
        }
    });
    return out;
}

void check_dimension(const GridField& f, const KernelSpec& spec, const char* where) {
    if (f.box.n != spec.n)
        throw config_error(std::string(where) + ": field dimension does not match the kernel");
}

}  // namespace

// ---- public routes -----------------------------------------------------------

GridField apply_spectral(const GridField& f, const KernelSpec& spec) {
    check_dimension(f, spec, "apply_spectral");
    const BoxDomain& box = f.box;

    ComplexArray work = f.values.cast<Complex>();
    fft_nd(work, box, FftDirection::forward);

    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            Point y{0.0, 0.0, 0.0};
            bool zero_out = true;  // DC
            bool nyquist_edge = false;
            for (int a = 0; a < box.n; ++a) {
                const int k = box.signed_freq(idx[a]);
                if (k != 0) zero_out = false;
                if (k == -box.N / 2) nyquist_edge = true;  // unpaired edge mode
                y[a] = static_cast<Real>(k) / box.L;
            }
            if (zero_out || nyquist_edge)
                work[id] = Complex(0.0, 0.0);
            else
                work[id] *= multiplier_symbol(y, spec);
        }
    });

    fft_nd(work, box, FftDirection::inverse);

    GridField out(box);
    out.values = work.real();
    const Real residue = std::sqrt(work.imag().square().sum() * box.cell_volume());
    const Real ref = std::sqrt(f.values.square().sum() * box.cell_volume());
    if (residue > 1e-8 * std::max(ref, std::numeric_limits<Real>::min()))
        throw invariant_error(
            "apply_spectral: imaginary residue exceeds 1e-8 of the input norm "
            "(multiplier orientation or symmetry violation)");
    out.values -= mean_value(out);  // enforce the mean-free property exactly
    return out;
}

GridField apply_T1_direct(const GridField& f, const KernelSpec& spec, int padding_factor,
                          ConvolutionEdge edge) {
    check_dimension(f, spec, "apply_T1_direct");
    if (!spec.has_spatial_split())
        throw config_error("apply_T1_direct: the near/far split requires beta > 0");
    if (!(2.0 / spec.beta < 0.5 * f.box.L))
        throw config_error(
            "apply_T1_direct: near-field support 2/beta must be smaller than L/2; "
            "enlarge the box or increase beta");
    return correlate_with_kernel(f.box, f.values, spec, KernelPart::near, padding_factor, edge);
}

GridField apply_T2_direct(const GridField& f, const KernelSpec& spec, int padding_factor,
                          ConvolutionEdge edge, T2Metadata* meta) {
    check_dimension(f, spec, "apply_T2_direct");
    if (!spec.has_spatial_split())
        throw config_error("apply_T2_direct: the near/far split requires beta > 0");
    if (meta) {
        if (edge == ConvolutionEdge::periodic_wrap) {
            // The lattice-periodized kernel keeps every image (the split sums
            // both sides to below 1e-30); nothing is discarded.
            meta->truncation_radius = std::numeric_limits<Real>::infinity();
            meta->tail_sup_bound = 0.0;
        } else {
            const Real r_axis = 0.5 * padding_factor * f.box.L;  // per-axis offset reach
            meta->truncation_radius = r_axis;
            meta->tail_sup_bound = r_axis >= 1.0 / spec.beta
                                       ? std::pow(r_axis, spec.beta - spec.n)
                                       : std::pow(spec.beta, spec.n - spec.beta);
        }
    }
    return correlate_with_kernel(f.box, f.values, spec, KernelPart::far, padding_factor, edge);
}

GridField apply_T_direct(const GridField& f, const KernelSpec& spec, int padding_factor,
                         ConvolutionEdge edge) {
    check_dimension(f, spec, "apply_T_direct");
    if (!(spec.beta > 0.0))
        throw config_error("apply_T_direct: sampling the full kernel requires beta > 0");
    return correlate_with_kernel(f.box, f.values, spec, KernelPart::full, padding_factor, edge);
}

GridField apply_riesz(const GridField& f, int j) {
    return apply_spectral(f, KernelSpec(f.box.n, j, 0.0));
}

GridField apply_T1_via_spectral(const GridField& f, const KernelSpec& spec, int padding_factor) {
    GridField out = apply_spectral(f, spec);
    if (spec.has_spatial_split()) {
        const GridField far = apply_T2_direct(f, spec, padding_factor);
        out.values -= far.values;
    }
    return out;
}

GridField riesz_potential_abs(const GridField& f, Real beta, int padding_factor) {
    if (!(beta > 0.0) || !(beta < f.box.n))
        throw config_error("riesz_potential_abs: beta must lie in (0, n)");
    KernelSpec spec(f.box.n, 1, beta);
    return correlate_with_kernel(f.box, f.values.abs(), spec, KernelPart::potential,
                                 padding_factor, ConvolutionEdge::zero_padded);
}

}  // namespace frit
