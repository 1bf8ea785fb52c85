// Level-t cube decomposition of a grid field, the good/bad split f = g + b,
// the enlarged union of balls F*, the induced operator split, and the per-cube
// tail norm check.
//
// Cubes are dyadic: the root cube is the whole box, each cube bisects into 2^n
// children, and the recursion bottoms out at single grid cells (N is a power
// of two). A cube is selected the first time its |f|-average exceeds t along a
// root-to-leaf path; the stopping rule guarantees every selected cube's
// average lies in (t, 2^n t] and |f| <= t on the complement G.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "frit/field.hpp"
#include "frit/kernels.hpp"

namespace frit {

struct DyadicCube {
    int level = 0;                      // 0 = root (whole box)
    std::array<int, 3> corner{0, 0, 0}; // lattice position at this level, each in [0, 2^level)

    Real side(const BoxDomain& box) const { return box.L / static_cast<Real>(1 << level); }
    int cells_per_side(const BoxDomain& box) const { return box.N >> level; }
    // Grid index of the cube's low corner on axis a.
    int start(const BoxDomain& box, int a) const { return corner[a] * (box.N >> level); }
    // Geometric center coordinate on axis a.
    Real center(const BoxDomain& box, int a) const {
        return -0.5 * box.L + (corner[a] + 0.5) * side(box);
    }
    // Diameter side * sqrt(n); also the radius of the enlarging ball B_l.
    Real diameter(const BoxDomain& box) const;

    bool operator<(const DyadicCube& o) const {
        if (level != o.level) return level < o.level;
        return corner < o.corner;
    }
    bool operator==(const DyadicCube& o) const { return level == o.level && corner == o.corner; }
};

struct CZResult {
    BoxDomain box;
    Real t = 0.0;

    std::vector<DyadicCube> cubes;    // selected cubes, sorted by (level, corner)
    std::vector<Real> cube_averages;  // |f|-average per cube, in (t, 2^n t]

    GridField g;  // cube-averaged f on the cubes, f itself on G
    GridField b;  // f - g: supported on the cubes, zero mean on each

    std::vector<Real> ball_radii;          // delta_l = cube diameter
    std::vector<std::uint8_t> fstar_mask;  // 1 where the grid point lies in some ball B_l

    Real F_measure = 0.0;      // sum of exact cube measures
    Real Fstar_measure = 0.0;  // rasterized measure of the union of balls, clipped to the box
    Real Fstar_slack = 0.0;    // rasterization allowance: sum over balls of 2h * perimeter

    // b restricted to cube l (zero elsewhere).
    GridField b_piece(std::size_t l) const;
};

// Stopping-time decomposition at level t (t > 0). The root average of |f| must
// not exceed t; otherwise a config_error instructs the caller to raise t.
CZResult decompose(const GridField& f, Real t);

// Operator split induced by the decomposition: with T1 the near-field operator
// (the full operator when beta = 0),
//   first  = T1 g + (T1 b) restricted to F*,
//   second = (T1 b) restricted to the complement of F*.
// Their sum equals T1 g + T1 b identically.
std::pair<GridField, GridField> split_operator(const CZResult& cz, const KernelSpec& spec,
                                              int padding_factor = 2);
std::pair<GridField, GridField> split_operator(const GridField& f, Real t, const KernelSpec& spec,
                                              int padding_factor = 2);

struct TailBoundReport {
    Real t = 0.0;
    Real q = 0.0;
    Real p = 0.0;  // from the scaling relation 1/q = 1/p - beta/n
    std::vector<Real> ratios;  // per cube: Lq norm of T b_l outside B_l over Lp norm of b_l
    Real max_ratio = 0.0;
};

// Per-cube tail ratio: how much of T b_l leaks outside the enlarging ball,
// relative to the cube-local Lp mass of b_l. Cubes with b_l = 0 report 0.
TailBoundReport tail_bound_check(const GridField& f, Real t, const KernelSpec& spec, Real q,
                                 int padding_factor = 2);

}  // namespace frit
