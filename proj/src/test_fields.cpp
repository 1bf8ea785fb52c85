#include "frit/test_fields.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "frit/parallel.hpp"
#include "frit/rng.hpp"

namespace frit {

namespace {

constexpr Real kTwoPi = 6.283185307179586476925286766559;

// Zero every sample outside the concentric half-side sub-box. In index space
// that sub-box is exactly i in [N/4, 3N/4) per axis, so the window is sharp
// and grid-aligned.
void confine_to_central_quarter(GridField& f) {
    const BoxDomain& box = f.box;
    const int lo = box.N / 4, hi = 3 * box.N / 4;
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            for (int a = 0; a < box.n; ++a) {
                if (idx[a] < lo || idx[a] >= hi) {
                    f.values[id] = 0.0;
                    break;
                }
            }
        }
    });
}

GridField make_gaussian_bump(const BoxDomain& box, const FieldParams& p) {
    if (!(p.sigma_fraction > 0.0) || p.sigma_fraction > 0.125)
        throw config_error("gaussian_bump: sigma_fraction must lie in (0, 1/8]");
    const Real sigma = p.sigma_fraction * box.L;
    const Real inv2s2 = 1.0 / (2.0 * sigma * sigma);
    GridField f(box);
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            Real r2 = 0.0;
            for (int a = 0; a < box.n; ++a) {
                const Real x = box.coord(idx[a]);
                r2 += x * x;
            }
            f.values[id] = p.amplitude * std::exp(-r2 * inv2s2);
        }
    });
    confine_to_central_quarter(f);
    return f;
}

GridField make_multi_bump(const BoxDomain& box, const FieldParams& p) {
    if (p.bump_count < 1 || p.bump_count > 64)
        throw config_error("multi_bump: bump_count must lie in [1, 64]");
    CounterRng rng(p.seed);

    struct Bump {
        Real center[3];
        Real amp;
        Real inv2s2;
    };
    std::vector<Bump> bumps(p.bump_count);
    for (int j = 0; j < p.bump_count; ++j) {
        const std::uint64_t base = static_cast<std::uint64_t>(j) * 16;
        Bump& bp = bumps[j];
        // Centers stay within the central eighth and widths below L/64, so every
        // bump sits at least eight standard deviations inside the quarter window.
        for (int a = 0; a < 3; ++a)
            bp.center[a] = rng.range(base + a, -box.L / 8.0, box.L / 8.0);
        const Real sigma = rng.range(base + 3, box.L / 96.0, box.L / 64.0);
        bp.inv2s2 = 1.0 / (2.0 * sigma * sigma);
        const Real mag = rng.range(base + 4, 0.5, 1.5);
        bp.amp = p.amplitude * (rng.uniform(base + 5) < 0.5 ? -mag : mag);
    }

    GridField f(box);
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            Real x[3] = {0, 0, 0};
            for (int a = 0; a < box.n; ++a) x[a] = box.coord(idx[a]);
            Real v = 0.0;
            for (const Bump& bp : bumps) {
                Real r2 = 0.0;
                for (int a = 0; a < box.n; ++a) {
                    const Real d = x[a] - bp.center[a];
                    r2 += d * d;
                }
                v += bp.amp * std::exp(-r2 * bp.inv2s2);
            }
            f.values[id] = v;
        }
    });
    confine_to_central_quarter(f);
    return f;
}

GridField make_indicator_cube(const BoxDomain& box, const FieldParams& p) {
    if (!(p.indicator_side_fraction > 0.0) || p.indicator_side_fraction > 0.5)
        throw config_error("indicator_cube: indicator_side_fraction must lie in (0, 1/2]");
    // Side length rounded to a whole number of cells, centered on the box.
    int w = static_cast<int>(std::lround(p.indicator_side_fraction * box.N));
    w = std::max(w, 1);
    const int lo = box.N / 2 - w / 2;
    const int hi = lo + w;
    GridField f(box);
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            bool inside = true;
            for (int a = 0; a < box.n; ++a) {
                if (idx[a] < lo || idx[a] >= hi) {
                    inside = false;
                    break;
                }
            }
            f.values[id] = inside ? p.amplitude : 0.0;
        }
    });
    return f;
}

GridField make_band_limited_random(const BoxDomain& box, const FieldParams& p) {
    const int B = p.band_limit;
    if (B < 1 || B >= box.N / 2)
        throw config_error("band_limited_random: band_limit must lie in [1, N/2)");
    CounterRng rng(p.seed);

    struct Mode {
        int k[3];
        Real a, b, weight;
    };
    // One representative per (k, -k) pair: first nonzero component positive.
    std::vector<Mode> modes;
    const int side = 2 * B + 1;
    std::array<int, 3> k{0, 0, 0};
    std::array<int, 3> lohi{B, box.n > 1 ? B : 0, box.n > 2 ? B : 0};
    for (k[0] = -lohi[0]; k[0] <= lohi[0]; ++k[0])
        for (k[1] = -lohi[1]; k[1] <= lohi[1]; ++k[1])
            for (k[2] = -lohi[2]; k[2] <= lohi[2]; ++k[2]) {
                int first = 0;
                for (int a = 0; a < 3; ++a)
                    if (k[a] != 0) {
                        first = k[a];
                        break;
                    }
                if (first <= 0) continue;  // skip zero and the mirrored half
                Mode m;
                Real k2 = 0.0;
                std::uint64_t ctr = 0;
                for (int a = 0; a < 3; ++a) {
                    m.k[a] = k[a];
                    k2 += static_cast<Real>(k[a]) * k[a];
                    ctr = ctr * static_cast<std::uint64_t>(side) +
                          static_cast<std::uint64_t>(k[a] + B);
                }
                m.weight = 1.0 / k2;
                m.a = rng.symmetric(2 * ctr);
                m.b = rng.symmetric(2 * ctr + 1);
                modes.push_back(m);
            }

    GridField f(box);
    const Real scale = kTwoPi / box.L;
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            Real x[3] = {0, 0, 0};
            for (int a = 0; a < box.n; ++a) x[a] = box.coord(idx[a]);
            Real v = 0.0;
            for (const Mode& m : modes) {
                Real phase = 0.0;
                for (int a = 0; a < box.n; ++a) phase += m.k[a] * x[a];
                phase *= scale;
                v += m.weight * (m.a * std::cos(phase) + m.b * std::sin(phase));
            }
            f.values[id] = p.amplitude * v;
        }
    });
    return f;
}

GridField make_single_mode(const BoxDomain& box, const FieldParams& p) {
    bool nonzero = false;
    for (int a = 0; a < box.n; ++a) {
        if (p.mode[a] != 0) nonzero = true;
        if (std::abs(p.mode[a]) >= box.N / 2)
            throw config_error("single_mode: each mode component must satisfy |k| < N/2");
    }
    for (int a = box.n; a < 3; ++a)
        if (p.mode[a] != 0)
            throw config_error("single_mode: mode components beyond the dimension must be zero");
    if (!nonzero) throw config_error("single_mode: the wavevector must be nonzero");

    GridField f(box);
    const Real scale = kTwoPi / box.L;
    parallel_for(box.size(), [&](std::int64_t b, std::int64_t e) {
        for (std::int64_t id = b; id < e; ++id) {
            const auto idx = box.unflatten(id);
            Real phase = 0.0;
            for (int a = 0; a < box.n; ++a) phase += p.mode[a] * box.coord(idx[a]);
            f.values[id] = p.amplitude * std::cos(phase * scale);
        }
    });
    return f;
}

}  // namespace

GridField make_test_field(const BoxDomain& box, FieldKind kind, const FieldParams& params) {
    switch (kind) {
        case FieldKind::gaussian_bump: return make_gaussian_bump(box, params);
        case FieldKind::multi_bump: return make_multi_bump(box, params);
        case FieldKind::indicator_cube: return make_indicator_cube(box, params);
        case FieldKind::band_limited_random: return make_band_limited_random(box, params);
        case FieldKind::single_mode: return make_single_mode(box, params);
    }
    throw config_error("make_test_field: unknown field kind");
}

Real central_quarter_halfwidth(const BoxDomain& box) { return box.L / 4.0; }

Real mass_fraction_outside_quarter(const GridField& f) {
    const BoxDomain& box = f.box;
    const int lo = box.N / 4, hi = 3 * box.N / 4;
    long double inside = 0.0L, outside = 0.0L;
    const std::int64_t total = box.size();
    for (std::int64_t id = 0; id < total; ++id) {
        const auto idx = box.unflatten(id);
        bool in = true;
        for (int a = 0; a < box.n; ++a)
            if (idx[a] < lo || idx[a] >= hi) {
                in = false;
                break;
            }
        (in ? inside : outside) += std::fabs((long double)f.values[id]);
    }
    const long double total_mass = inside + outside;
    if (total_mass <= 0.0L) return 0.0;
    return static_cast<Real>(outside / total_mass);
}

const char* field_kind_name(FieldKind kind) {
    switch (kind) {
        case FieldKind::gaussian_bump: return "gaussian_bump";
        case FieldKind::multi_bump: return "multi_bump";
        case FieldKind::indicator_cube: return "indicator_cube";
        case FieldKind::band_limited_random: return "band_limited_random";
        case FieldKind::single_mode: return "single_mode";
    }
    return "unknown";
}

FieldKind field_kind_from_name(const std::string& name) {
    if (name == "gaussian_bump" || name == "gaussian") return FieldKind::gaussian_bump;
    if (name == "multi_bump" || name == "bumps") return FieldKind::multi_bump;
    if (name == "indicator_cube" || name == "indicator") return FieldKind::indicator_cube;
    if (name == "band_limited_random" || name == "band_limited")
        return FieldKind::band_limited_random;
    if (name == "single_mode" || name == "mode") return FieldKind::single_mode;
    throw config_error("unknown field kind: " + name);
}

}  // namespace frit
