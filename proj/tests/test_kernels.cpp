#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "frit/errors.hpp"
#include "frit/kernels.hpp"

namespace {

constexpr double kPi = std::numbers::pi_v<double>;

// Angular reduction of the truncated-kernel transform for n = 2: integrating
// the angle out of int (e^{2 pi i x.y} - 1) K1(x) dx leaves
//     i * 2 pi (y1/|y|) * int_0^{2/beta} r^{beta-1} chi(beta r) J1(2 pi r |y|) dr.
// The radial integral is evaluated with Simpson's rule after r = s^2, which
// removes the r^{beta-1} endpoint singularity for beta in (0,1).
std::complex<double> k1_hat_bessel_oracle(double y1, double y2, double beta) {
    const double ymag = std::hypot(y1, y2);
    if (ymag == 0.0) return {0.0, 0.0};
    const double smax = std::sqrt(2.0 / beta);
    const int segments = 4000;  // even
    const double ds = smax / segments;
    auto integrand = [&](double s) {
        const double r = s * s;
        if (r == 0.0) return 0.0;
        return 2.0 * std::pow(s, 2.0 * beta - 1.0) * frit::cutoff_chi(beta * r) *
               std::cyl_bessel_j(1, 2.0 * kPi * r * ymag);
    };
    double acc = integrand(0.0) + integrand(smax);
    for (int i = 1; i < segments; ++i)
        acc += integrand(i * ds) * (i % 2 == 1 ? 4.0 : 2.0);
    const double radial = acc * ds / 3.0;
    return {0.0, 2.0 * kPi * (y1 / ymag) * radial};
}

}  // namespace

TEST_CASE("kernel constant is purely imaginary with the classical values") {
    const std::complex<double> g1 = frit::gamma_beta(1, 0.0);
    CHECK(g1.real() == 0.0);
    CHECK(g1.imag() == doctest::Approx(kPi).epsilon(1e-14));

    const std::complex<double> g2 = frit::gamma_beta(2, 0.0);
    CHECK(g2.real() == 0.0);
    CHECK(g2.imag() == doctest::Approx(2.0 * kPi).epsilon(1e-14));

    // Half-integer gamma functions collapse to rationals at beta = 1.
    CHECK(frit::gamma_beta(2, 1.0).imag() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(frit::gamma_beta(3, 1.0).imag() == doctest::Approx(2.0).epsilon(1e-14));

    for (double beta : {0.0, 0.3, 0.9, 1.7}) {
        for (int n = 1; n <= 3; ++n) {
            if (beta >= n) continue;
            const std::complex<double> g = frit::gamma_beta(n, beta);
            CHECK(g.real() == 0.0);
            CHECK(g.imag() > 0.0);
        }
    }
}

TEST_CASE("smooth cutoff has the prescribed plateau, ramp, and support") {
    CHECK(frit::cutoff_chi(0.0) == 1.0);
    CHECK(frit::cutoff_chi(1.0) == 1.0);
    CHECK(frit::cutoff_chi(-0.7) == 1.0);
    CHECK(frit::cutoff_chi(2.0) == 0.0);
    CHECK(frit::cutoff_chi(5.0) == 0.0);
    CHECK(frit::cutoff_chi(1.5) == doctest::Approx(0.5).epsilon(1e-14));
    const double c = std::cos(kPi * 0.25 / 2.0);
    CHECK(frit::cutoff_chi(1.25) == doctest::Approx(c * c).epsilon(1e-14));

    double prev = 1.0;
    for (int i = 1; i <= 20; ++i) {
        const double v = frit::cutoff_chi(1.0 + i / 20.0);
        CHECK(v <= prev);
        prev = v;
    }
    CHECK(frit::cutoff_chi_scaled(3.0, 0.5) == doctest::Approx(frit::cutoff_chi(1.5)));
}

TEST_CASE("kernel spec validates its parameters") {
    CHECK_THROWS_AS(frit::KernelSpec(2, 0, 0.5), frit::config_error);
    CHECK_THROWS_AS(frit::KernelSpec(2, 3, 0.5), frit::config_error);
    CHECK_THROWS_AS(frit::KernelSpec(2, 1, -0.1), frit::config_error);
    CHECK_THROWS_AS(frit::KernelSpec(2, 1, 2.0), frit::config_error);

    const frit::KernelSpec classical(2, 1, 0.0);
    CHECK_FALSE(classical.has_spatial_split());
    const frit::KernelSpec shifted(2, 2, 0.5);
    CHECK(shifted.has_spatial_split());
    CHECK(shifted.cutoff_scale() == doctest::Approx(0.5));
}

TEST_CASE("kernel is odd and homogeneous of degree beta - n") {
    const frit::KernelSpec spec(2, 1, 0.7);
    const frit::Point x{0.8, -1.3, 0.0};
    const frit::Point mx{-0.8, 1.3, 0.0};
    const double k = frit::eval_K(x, spec);
    CHECK(frit::eval_K(mx, spec) == doctest::Approx(-k).epsilon(1e-14));

    const double c = 3.0;
    const frit::Point cx{c * x[0], c * x[1], 0.0};
    CHECK(frit::eval_K(cx, spec) ==
          doctest::Approx(std::pow(c, spec.beta - 2.0) * k).epsilon(1e-13));

    // Classical limit: x_j / |x|^{n+1}.
    const frit::KernelSpec r(2, 2, 0.0);
    const double expected = x[1] / std::pow(frit::point_norm(x, 2), 3.0);
    CHECK(frit::eval_K(x, r) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("near and far kernel pieces partition the kernel") {
    const frit::KernelSpec spec(2, 1, 0.5);
    // Support boundaries sit at |x| = 1/beta = 2 and |x| = 2/beta = 4.
    for (double r : {0.3, 1.5, 2.5, 3.7, 5.0}) {
        const frit::Point x{r * 0.6, r * 0.8, 0.0};
        const double k1 = frit::eval_K1(x, spec);
        const double k2 = frit::eval_K2(x, spec);
        CHECK(k1 + k2 == doctest::Approx(frit::eval_K(x, spec)).epsilon(1e-13));
        if (r <= 2.0) CHECK(k2 == 0.0);
        if (r >= 4.0) CHECK(k1 == 0.0);
    }
    CHECK_THROWS_AS(frit::eval_K1({1.0, 0.0, 0.0}, frit::KernelSpec(2, 1, 0.0)),
                    frit::config_error);
    CHECK_THROWS_AS(frit::eval_K2({1.0, 0.0, 0.0}, frit::KernelSpec(2, 1, 0.0)),
                    frit::config_error);
}

TEST_CASE("unit ball and sphere constants") {
    CHECK(frit::unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(frit::unit_ball_volume(2) == doctest::Approx(kPi));
    CHECK(frit::unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0));
    CHECK(frit::unit_sphere_area(1) == doctest::Approx(2.0));
    CHECK(frit::unit_sphere_area(2) == doctest::Approx(2.0 * kPi));
    CHECK(frit::unit_sphere_area(3) == doctest::Approx(4.0 * kPi));
}

TEST_CASE("multiplier symbol is imaginary, odd, and homogeneous of degree -beta") {
    const frit::KernelSpec spec(2, 1, 0.4);
    const frit::Point y{0.7, -0.2, 0.0};
    const std::complex<double> m = frit::multiplier_symbol(y, spec);
    CHECK(m.real() == 0.0);
    CHECK(std::abs(m) > 0.0);

    const frit::Point my{-0.7, 0.2, 0.0};
    CHECK(std::abs(frit::multiplier_symbol(my, spec) + m) < 1e-15);

    const double c = 2.5;
    const frit::Point cy{c * y[0], c * y[1], 0.0};
    const std::complex<double> mc = frit::multiplier_symbol(cy, spec);
    CHECK(std::abs(mc - m * std::pow(c, -spec.beta)) < 1e-14 * std::abs(m));

    CHECK(std::abs(frit::multiplier_symbol({0.0, 0.0, 0.0}, spec)) == 0.0);

    // Classical symbol magnitude: |gamma_0| |y_j| / |y|.
    const frit::KernelSpec classical(2, 1, 0.0);
    const double mag = std::abs(frit::multiplier_symbol(y, classical));
    CHECK(mag ==
          doctest::Approx(2.0 * kPi * std::abs(y[0]) / frit::point_norm(y, 2)).epsilon(1e-13));
}

TEST_CASE("truncated-kernel transform quadrature agrees with a Bessel reduction") {
    const frit::KernelSpec spec(2, 1, 0.5);

    for (auto [y1, y2] : {std::pair{0.3, 0.2}, std::pair{0.15, 0.0}, std::pair{-0.4, 0.7}}) {
        const std::complex<double> got = frit::k1_hat_quadrature({y1, y2, 0.0}, spec, 512);
        const std::complex<double> want = k1_hat_bessel_oracle(y1, y2, 0.5);
        CHECK(got.real() == 0.0);  // half-space pairing is exactly imaginary
        CHECK(got.imag() ==
              doctest::Approx(want.imag()).epsilon(0.02).scale(std::abs(want.imag()) + 1e-9));
    }

    // Zero frequency integrates e^0 - 1 = 0.
    CHECK(std::abs(frit::k1_hat_quadrature({0.0, 0.0, 0.0}, spec, 128)) == 0.0);

    CHECK_THROWS_AS(frit::k1_hat_quadrature({0.1, 0.0, 0.0}, spec, 63), frit::config_error);
    CHECK_THROWS_AS(frit::k1_hat_quadrature({0.1, 0.0, 0.0}, spec, 32), frit::config_error);
}
