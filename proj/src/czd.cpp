#include "frit/czd.hpp"

#include <algorithm>
#include <cmath>

#include "frit/transform.hpp"

namespace frit {

namespace {

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// Applies fn(flat_index) to every grid point of the cube.
template <typename Fn>
void for_each_cell(const BoxDomain& box, const DyadicCube& cube, Fn&& fn) {
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

long double abs_sum_over(const GridField& f, const DyadicCube& cube) {
    long double acc = 0.0L;
    for_each_cell(f.box, cube, [&](std::int64_t id) { acc += std::fabs((long double)f.values[id]); });
    return acc;
}

long double sum_over(const GridField& f, const DyadicCube& cube) {
    long double acc = 0.0L;
    for_each_cell(f.box, cube, [&](std::int64_t id) { acc += (long double)f.values[id]; });
    return acc;
}

// Depth-first stopping-time recursion in lexicographic child order; selected
// cubes come out already sorted within a level because parents are visited in
// order, but we sort once at the end to fix the (level, corner) order globally.
void select_cubes(const GridField& f, Real t, const DyadicCube& cube,
                  std::vector<DyadicCube>& selected, std::vector<Real>& averages) {
    const BoxDomain& box = f.box;
    const int child_cells = cube.cells_per_side(box) / 2;
    const int children = 1 << box.n;
    for (int c = 0; c < children; ++c) {
        DyadicCube child;
        child.level = cube.level + 1;
        for (int a = 0; a < box.n; ++a)
            child.corner[a] = 2 * cube.corner[a] + ((c >> (box.n - 1 - a)) & 1);
        const std::int64_t cells = int_pow(child_cells, box.n);
        const long double avg = abs_sum_over(f, child) / (long double)cells;
        if (avg > (long double)t) {
            selected.push_back(child);
            averages.push_back(static_cast<Real>(avg));
        } else if (child_cells > 1) {
            select_cubes(f, t, child, selected, averages);
        }
        // child_cells == 1 with avg <= t: the cell belongs to G.
    }
}

}  // namespace

Real DyadicCube::diameter(const BoxDomain& box) const {
    return side(box) * std::sqrt(static_cast<Real>(box.n));
}

GridField CZResult::b_piece(std::size_t l) const {
    if (l >= cubes.size()) throw config_error("b_piece: cube index out of range");
    GridField piece(box);
    for_each_cell(box, cubes[l], [&](std::int64_t id) { piece.values[id] = b.values[id]; });
    return piece;
}

CZResult decompose(const GridField& f, Real t) {
    if (!(t > 0.0)) throw config_error("decompose: level t must be positive");
    const BoxDomain& box = f.box;

    CZResult out;
    out.box = box;
    out.t = t;

    DyadicCube root;
    const long double root_avg = abs_sum_over(f, root) / (long double)box.size();
    if (root_avg > (long double)t)
        throw config_error(
            "decompose: the box average of |f| exceeds t; raise t (or enlarge the box) so the "
            "root cube is not itself selectable");

    if (box.N > 1) select_cubes(f, t, root, out.cubes, out.cube_averages);

    // Sort cubes and averages together by (level, corner).
    std::vector<std::size_t> order(out.cubes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b_) {
        return out.cubes[a] < out.cubes[b_];
    });
    {
        std::vector<DyadicCube> cs(out.cubes.size());
        std::vector<Real> as(out.cubes.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            cs[i] = out.cubes[order[i]];
            as[i] = out.cube_averages[order[i]];
        }
        out.cubes = std::move(cs);
        out.cube_averages = std::move(as);
    }

    // Good part: cube average of f (signed) on each cube, f elsewhere.
    out.g = f;
    out.b = GridField(box);
    for (const DyadicCube& cube : out.cubes) {
        const std::int64_t cells = int_pow(cube.cells_per_side(box), box.n);
        const Real avg = static_cast<Real>(sum_over(f, cube) / (long double)cells);
        for_each_cell(box, cube, [&](std::int64_t id) {
            out.g.values[id] = avg;
            out.b.values[id] = f.values[id] - avg;
        });
    }

    // Measures: F exactly from cube sides; F* by rasterizing the balls.
    long double f_measure = 0.0L;
    out.ball_radii.resize(out.cubes.size());
    out.fstar_mask.assign(static_cast<std::size_t>(box.size()), 0);
    const Real h = box.h();
    long double slack = 0.0L;
    for (std::size_t l = 0; l < out.cubes.size(); ++l) {
        const DyadicCube& cube = out.cubes[l];
        const Real side = cube.side(box);
        Real cube_measure = 1.0;
        for (int a = 0; a < box.n; ++a) cube_measure *= side;
        f_measure += (long double)cube_measure;

        const Real delta = cube.diameter(box);
        out.ball_radii[l] = delta;
        slack += (long double)(2.0 * h * unit_sphere_area(box.n) *
                               std::pow(delta, box.n - 1));

        // Mark grid points within distance delta of the cube center (clipped to
        // the box; nothing wraps).
        Real center[3] = {0, 0, 0};
        int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
        for (int a = 0; a < box.n; ++a) {
            center[a] = cube.center(box, a);
            lo[a] = std::max(0, (int)std::floor((center[a] - delta + 0.5 * box.L) / h));
            hi[a] = std::min(box.N - 1, (int)std::ceil((center[a] + delta + 0.5 * box.L) / h));
        }
        const Real delta2 = delta * delta;
        for (int i0 = lo[0]; i0 <= hi[0]; ++i0)
            for (int i1 = lo[1]; i1 <= (box.n > 1 ? hi[1] : lo[1]); ++i1)
                for (int i2 = lo[2]; i2 <= (box.n > 2 ? hi[2] : lo[2]); ++i2) {
                    Real d2 = 0.0;
                    const int idx[3] = {i0, i1, i2};
                    for (int a = 0; a < box.n; ++a) {
                        const Real d = box.coord(idx[a]) - center[a];
                        d2 += d * d;
                    }
                    if (d2 <= delta2) {
                        std::int64_t id = i0;
                        if (box.n > 1) id = id * box.N + i1;
                        if (box.n > 2) id = id * box.N + i2;
                        out.fstar_mask[static_cast<std::size_t>(id)] = 1;
                    }
                }
    }
    out.F_measure = static_cast<Real>(f_measure);
    out.Fstar_slack = static_cast<Real>(slack);

    std::int64_t marked = 0;
    for (std::uint8_t m : out.fstar_mask) marked += m;
    out.Fstar_measure = static_cast<Real>(marked) * box.cell_volume();
    return out;
}

std::pair<GridField, GridField> split_operator(const CZResult& cz, const KernelSpec& spec,
                                              int padding_factor) {
    const GridField tg = apply_T1_via_spectral(cz.g, spec, padding_factor);
    const GridField tb = apply_T1_via_spectral(cz.b, spec, padding_factor);

    GridField first(cz.box), second(cz.box);
    const std::int64_t total = cz.box.size();
    for (std::int64_t id = 0; id < total; ++id) {
        if (cz.fstar_mask[static_cast<std::size_t>(id)]) {
            first.values[id] = tg.values[id] + tb.values[id];
        } else {
            first.values[id] = tg.values[id];
            second.values[id] = tb.values[id];
        }
    }
    return {std::move(first), std::move(second)};
}

std::pair<GridField, GridField> split_operator(const GridField& f, Real t, const KernelSpec& spec,
                                              int padding_factor) {
    return split_operator(decompose(f, t), spec, padding_factor);
}

TailBoundReport tail_bound_check(const GridField& f, Real t, const KernelSpec& spec, Real q,
                                 int padding_factor) {
    if (!(q >= 1.0)) throw config_error("tail_bound_check: q must be >= 1");
    const Real inv_p = 1.0 / q + spec.beta / spec.n;
    if (inv_p > 1.0 + 1e-15)
        throw config_error(
            "tail_bound_check: the scaling relation 1/q = 1/p - beta/n needs 1/q + beta/n <= 1");
    const Real p = 1.0 / inv_p;

    const CZResult cz = decompose(f, t);

    TailBoundReport report;
    report.t = t;
    report.q = q;
    report.p = p;
    report.ratios.resize(cz.cubes.size(), 0.0);

    for (std::size_t l = 0; l < cz.cubes.size(); ++l) {
        GridField piece = cz.b_piece(l);
        const Real rhs = lq_norm(piece, p);
        if (rhs == 0.0) continue;  // b_l = 0: reported as 0 by convention

        GridField tb = spec.beta > 0.0 ? apply_T_direct(piece, spec, padding_factor)
                                       : apply_spectral(piece, spec);

        // Zero the ball B_l, keep the exterior, then take the Lq norm.
        const DyadicCube& cube = cz.cubes[l];
        Real center[3] = {0, 0, 0};
        for (int a = 0; a < f.box.n; ++a) center[a] = cube.center(f.box, a);
        const Real delta2 = cz.ball_radii[l] * cz.ball_radii[l];
        const std::int64_t total = f.box.size();
        for (std::int64_t id = 0; id < total; ++id) {
            const auto idx = f.box.unflatten(id);
            Real d2 = 0.0;
            for (int a = 0; a < f.box.n; ++a) {
                const Real d = f.box.coord(idx[a]) - center[a];
                d2 += d * d;
            }
            if (d2 <= delta2) tb.values[id] = 0.0;
        }
        report.ratios[l] = lq_norm(tb, q) / rhs;
        report.max_ratio = std::max(report.max_ratio, report.ratios[l]);
    }
    return report;
}

}  // namespace frit
