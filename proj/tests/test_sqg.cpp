#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "frit/errors.hpp"
#include "frit/field.hpp"
#include "frit/kernels.hpp"
#include "frit/sqg.hpp"
#include "frit/test_fields.hpp"

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

frit::GridField vorticity(const frit::BoxDomain& box) {
    frit::FieldParams p;
    p.sigma_fraction = 1.0 / 16.0;
    return frit::make_test_field(box, frit::FieldKind::gaussian_bump, p);
}

double vector_rel_l2(const frit::VelocityField& a, const frit::VelocityField& b) {
    frit::GridField d1(a.box()), d2(a.box());
    d1.values = a.u1.values - b.u1.values;
    d2.values = a.u2.values - b.u2.values;
    const double dn = std::hypot(frit::lq_norm(d1, 2.0), frit::lq_norm(d2, 2.0));
    const double bn = std::hypot(frit::lq_norm(b.u1, 2.0), frit::lq_norm(b.u2, 2.0));
    return dn / bn;
}

}  // namespace

TEST_CASE("velocity of a single mode matches the stream-function calculus") {
    frit::BoxDomain box(2, 64, 8.0);
    frit::FieldParams p;
    p.mode = {1, 2, 0};
    frit::GridField omega = frit::make_test_field(box, frit::FieldKind::single_mode, p);

    const double alpha = 0.35;
    frit::VelocityField u = frit::velocity_perp_gradient_form(omega, alpha);

    // For omega = cos(2 pi k.x / L): psi = lambda cos(...), u = (-d2, d1) psi,
    // with lambda = (4 pi^2 |k|^2 / L^2)^(alpha - 1).
    const double k1 = 1.0, k2 = 2.0;
    const double lambda =
        std::pow(4.0 * kPi * kPi * (k1 * k1 + k2 * k2) / (box.L * box.L), alpha - 1.0);
    double err1 = 0.0, err2 = 0.0;
    for (std::int64_t id = 0; id < box.size(); ++id) {
        const auto idx = box.unflatten(id);
        const double phase =
            2.0 * kPi * (k1 * box.coord(idx[0]) + k2 * box.coord(idx[1])) / box.L;
        const double want1 = lambda * (2.0 * kPi * k2 / box.L) * std::sin(phase);
        const double want2 = -lambda * (2.0 * kPi * k1 / box.L) * std::sin(phase);
        err1 = std::max(err1, std::fabs(u.u1.values[id] - want1));
        err2 = std::max(err2, std::fabs(u.u2.values[id] - want2));
    }
    CHECK(err1 < 1e-10);
    CHECK(err2 < 1e-10);
}

TEST_CASE("spectral velocity is the bridged perpendicular gradient") {
    frit::BoxDomain box(2, 64, 16.0);
    frit::GridField omega = vorticity(box);
    const double alpha = 0.3;

    frit::VelocityField u = frit::velocity_spectral(omega, alpha);
    frit::VelocityField v = frit::velocity_perp_gradient_form(omega, alpha);
    const double c = frit::bridging_constant(alpha);

    CHECK((u.u1.values - c * v.u1.values).abs().maxCoeff() <
          1e-12 * u.u1.values.abs().maxCoeff());
    CHECK((u.u2.values - c * v.u2.values).abs().maxCoeff() <
          1e-12 * u.u2.values.abs().maxCoeff());
}

TEST_CASE("bridging constant hits 2 pi at the classical corner") {
    CHECK(frit::bridging_constant(0.5) == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    // General form: |gamma_{1-2alpha}| (2 pi)^{1-2alpha}.
    for (double alpha : {0.1, 0.3, 0.45}) {
        const double beta = 1.0 - 2.0 * alpha;
        const double expected =
            std::abs(frit::gamma_beta(2, beta)) * std::pow(2.0 * kPi, beta);
        CHECK(frit::bridging_constant(alpha) == doctest::Approx(expected).epsilon(1e-13));
    }
    CHECK_THROWS_AS(frit::bridging_constant(0.0), frit::config_error);
    CHECK_THROWS_AS(frit::bridging_constant(0.6), frit::config_error);
}

TEST_CASE("reconstructed velocity is divergence free") {
    frit::BoxDomain box(2, 64, 16.0);
    frit::GridField omega = vorticity(box);
    for (double alpha : {0.3, 0.5}) {
        frit::VelocityField u = frit::velocity_spectral(omega, alpha);
        const double scale =
            kPi * box.N / box.L * frit::lq_norm(u.magnitude(), 2.0);
        CHECK(frit::velocity_divergence_l2(u) < 1e-12 * scale);
    }
}

TEST_CASE("velocity magnitude is the pointwise euclidean norm") {
    frit::BoxDomain box(2, 32, 16.0);
    frit::GridField omega = vorticity(box);
    frit::VelocityField u = frit::velocity_spectral(omega, 0.4);
    frit::GridField mag = u.magnitude();
    for (std::int64_t id : {std::int64_t(0), std::int64_t(500), box.size() - 1})
        CHECK(mag.values[id] ==
              doctest::Approx(std::hypot(u.u1.values[id], u.u2.values[id])).epsilon(1e-14));
}

TEST_CASE("direct route approaches the spectral route") {
    frit::BoxDomain box(2, 64, 16.0);
    frit::GridField omega = vorticity(box);

    SUBCASE("at the classical corner the routes coincide") {
        frit::VelocityField a = frit::velocity_direct(omega, 0.5);
        frit::VelocityField b = frit::velocity_spectral(omega, 0.5);
        CHECK((a.u1.values == b.u1.values).all());
        CHECK((a.u2.values == b.u2.values).all());
    }
    SUBCASE("away from it they agree to grid accuracy") {
        frit::VelocityField a = frit::velocity_direct(omega, 0.3);
        frit::VelocityField b = frit::velocity_spectral(omega, 0.3);
        CHECK(vector_rel_l2(a, b) < 0.25);  // coarse grid; acceptance tightens this
    }
}

TEST_CASE("smoothing families converge toward the classical corner") {
    frit::BoxDomain box(2, 64, 16.0);
    frit::GridField omega = vorticity(box);
    frit::SweepReport rep = frit::alpha_convergence(omega, {0.3, 0.4, 0.45, 0.49}, 2.0);

    REQUIRE(rep.rows.size() == 4);
    CHECK(rep.axis == "alpha");
    for (const frit::SweepRow& row : rep.rows) {
        CHECK(row.lhs >= 0.0);
        CHECK(row.rhs > 0.0);
    }
    CHECK(rep.rows.back().ratio < rep.rows.front().ratio);

    CHECK_THROWS_AS(frit::alpha_convergence(omega, {0.4, 0.3}, 2.0), frit::config_error);
    CHECK_THROWS_AS(frit::alpha_convergence(omega, {}, 2.0), frit::config_error);
}

TEST_CASE("velocity reconstruction validates its inputs") {
    frit::BoxDomain box1(1, 32, 8.0);
    frit::FieldParams p;
    p.mode = {1, 0, 0};
    frit::GridField line = frit::make_test_field(box1, frit::FieldKind::single_mode, p);
    CHECK_THROWS_AS(frit::velocity_spectral(line, 0.3), frit::config_error);

    frit::BoxDomain box(2, 32, 8.0);
    frit::GridField omega = vorticity(box);
    CHECK_THROWS_AS(frit::velocity_spectral(omega, 0.0), frit::config_error);
    CHECK_THROWS_AS(frit::velocity_spectral(omega, 0.51), frit::config_error);
    CHECK_THROWS_AS(frit::velocity_direct(omega, 0.3, 0), frit::config_error);
}
