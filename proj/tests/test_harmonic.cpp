#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "trojan/harmonic.hpp"
#include "trojan/root_finding.hpp"

using namespace trojan;
using doctest::Approx;

namespace {

constexpr double kBorder = 8.0 / 9.0;

} // namespace

TEST_CASE("bracketed root finder") {
    const double root =
        find_root_bracketed([](double x) { return std::cos(x); }, 0.0, 2.0);
    CHECK(root == Approx(2.0 * std::atan(1.0)).epsilon(1e-13));

    CHECK(find_root_bracketed([](double x) { return x; }, 0.0, 1.0) == 0.0);
    CHECK(find_root_bracketed([](double x) { return x - 1.0; }, 0.0, 1.0) == 1.0);

    CHECK_THROWS_AS(find_root_bracketed([](double x) { return 1.0 + x * x; }, 0.0, 1.0),
                    std::invalid_argument);

    // steep cubic: secant alone would crawl, bisection interleave keeps it fast
    const double steep = find_root_bracketed(
        [](double x) { return x * x * x - 1e-9; }, 0.0, 1.0);
    CHECK(steep == Approx(1e-3).epsilon(1e-10));
}

TEST_CASE("stability window") {
    const StabilityWindow win = stability_window();
    CHECK(win.q_min == kBorder);
    CHECK(win.q_max == 1.0);
    CHECK(win.scaled_field_max == Approx(0.115560212392).epsilon(1e-10));
}

TEST_CASE("f(q)") {
    CHECK(f_of_q(1.0) == 3.0);
    CHECK(f_of_q(0.0) == 0.0);
    CHECK(f_of_q(0.9562) == Approx(2.24188040766).epsilon(1e-10));
    CHECK_THROWS_AS(f_of_q(-0.01), std::domain_error);
    CHECK_THROWS_AS(f_of_q(1.01), std::domain_error);
}

TEST_CASE("shape set at the circular-orbit point q = 1") {
    const ShapeSet s = shape_set(1.0);
    CHECK(s.f == 3.0);
    CHECK(s.A == 1.0);
    CHECK(s.B == 0.0);
    CHECK(s.C == 1.0);
    CHECK(s.D == 1.0);
    CHECK(s.theta == 0.0);
    CHECK(s.omega_plus_ratio == 1.0);
    CHECK(s.omega_z_ratio == 1.0);
    CHECK(s.lambda == 2.0);
    CHECK(s.alpha_tilde_sq == 0.0);
}

TEST_CASE("shape set at the best-confined point") {
    const ShapeSet s = shape_set(0.9562);
    CHECK(s.f == Approx(2.24188040766).epsilon(1e-10));
    CHECK(s.A == Approx(0.511300874162).epsilon(1e-10));
    CHECK(s.B == Approx(0.062702965251).epsilon(1e-10));
    CHECK(s.C == Approx(0.781524230517).epsilon(1e-10));
    CHECK(s.D == Approx(0.977854794947).epsilon(1e-10));
    CHECK(s.theta == Approx(0.375968591014).epsilon(1e-10));
    CHECK(s.omega_plus_ratio == Approx(0.949972430427).epsilon(1e-10));
    CHECK(s.omega_z_ratio == Approx(std::sqrt(0.9562)).epsilon(1e-14));
    CHECK(s.lambda == Approx(2.00787280577).epsilon(1e-10));
    CHECK(s.alpha_tilde_sq == Approx(0.041958447279).epsilon(1e-10));
}

TEST_CASE("the two in-plane modes degenerate towards sqrt(5)/3 at the border") {
    const ShapeSet s = shape_set(kBorder + 1e-12);
    CHECK(s.theta == Approx(0.7453559925).epsilon(1e-5));
    CHECK(s.omega_plus_ratio == Approx(0.7453559925).epsilon(1e-5));
}

TEST_CASE("shape set domain") {
    CHECK_THROWS_AS(shape_set(kBorder), border_singularity_error);
    CHECK_THROWS_AS(shape_set(0.88), stability_domain_error);
    CHECK_THROWS_AS(shape_set(0.5), stability_domain_error);
    CHECK_THROWS_AS(shape_set(1.0000001), stability_domain_error);

    try {
        shape_set(0.5);
        FAIL("expected stability_domain_error");
    } catch (const stability_domain_error& e) {
        CHECK(std::string(e.what()).find("stability window") != std::string::npos);
    }
}

TEST_CASE("mode frequency identities on a dense grid") {
    for (int i = 0; i < 500; ++i) {
        const double q = (kBorder + 1e-9) + (1.0 - kBorder - 1e-9) * i / 499.0;
        const ShapeSet s = shape_set(q);
        const double p2 = s.omega_plus_ratio * s.omega_plus_ratio;
        const double m2 = s.theta * s.theta;
        CHECK(std::abs(p2 + m2 - (2.0 - q)) < 1e-12);
        CHECK(std::abs(p2 * m2 - (1.0 + 2.0 * q) * (1.0 - q)) < 1e-12);
        CHECK(s.A >= 0.0);
        CHECK(s.B >= 0.0);
    }
}

TEST_CASE("theta decreases strictly with q") {
    double prev = shape_set(0.89).theta;
    for (int i = 1; i <= 200; ++i) {
        const double q = 0.89 + (1.0 - 0.89) * i / 200.0;
        const double theta = shape_set(q).theta;
        CHECK(theta < prev);
        prev = theta;
    }
}

TEST_CASE("dimensional mode frequencies") {
    const double omega = 2.0e15;
    const ModeFrequencies modes = mode_frequencies(0.9562, omega);
    CHECK(modes.omega_minus == Approx(0.375968591014 * omega).epsilon(1e-10));
    CHECK(modes.omega_plus == Approx(0.949972430427 * omega).epsilon(1e-10));
    CHECK(modes.omega_z == Approx(std::sqrt(0.9562) * omega).epsilon(1e-10));

    const ModeFrequencies circular = mode_frequencies(1.0, omega);
    CHECK(circular.omega_plus == omega);
    CHECK(circular.omega_minus == 0.0);
    CHECK(circular.omega_z == omega);

    CHECK_THROWS_AS(mode_frequencies(0.9562, 0.0), std::domain_error);
}

TEST_CASE("scaled field map") {
    CHECK(scaled_field_of_q(1.0) == 0.0);
    CHECK(scaled_field_of_q(kBorder) == Approx(0.115560212392).epsilon(1e-10));
    CHECK(scaled_field_of_q(0.9562) == Approx(0.0444588130721).epsilon(1e-10));
    CHECK_THROWS_AS(scaled_field_of_q(0.0), std::domain_error);
    CHECK_THROWS_AS(scaled_field_of_q(-0.5), std::domain_error);
    CHECK_THROWS_AS(scaled_field_of_q(1.1), std::domain_error);
}

TEST_CASE("scaled field inverse") {
    CHECK(q_of_scaled_field(0.0) == 1.0);
    CHECK(q_of_scaled_field(0.0444588130721) == Approx(0.9562).epsilon(1e-9));

    for (int i = 1; i < 40; ++i) {
        const double q = kBorder + (1.0 - kBorder) * i / 40.0;
        CHECK(q_of_scaled_field(scaled_field_of_q(q)) == Approx(q).epsilon(1e-12));
    }

    // the border value itself is excluded, anything below it is accepted
    const double border_field = stability_window().scaled_field_max;
    CHECK_THROWS_AS(q_of_scaled_field(border_field), stability_domain_error);
    CHECK_THROWS_AS(q_of_scaled_field(0.1156), stability_domain_error);
    CHECK_THROWS_AS(q_of_scaled_field(-1e-12), stability_domain_error);
    CHECK(q_of_scaled_field(0.1155) > kBorder);
}

TEST_CASE("equilibrium radius at zero field") {
    const EquilibriumPoint pt = equilibrium_radius(kepler_frequency(1, muon()), 0.0, muon());
    CHECK(pt.q == 1.0);
    CHECK(pt.x0 == Approx(2.5592763023e-13).epsilon(1e-10));
    CHECK(pt.field_amplitude == 0.0);

    // in particle atomic units the zero-field radius is exactly n^2
    const UnitContext units(muon());
    const EquilibriumPoint pt12 =
        equilibrium_radius(kepler_frequency(12, muon()), 0.0, muon());
    CHECK(units.from_si(pt12.x0, Quantity::Length) == Approx(144.0).epsilon(1e-13));
}

TEST_CASE("equilibrium radius with drive") {
    const double omega = kepler_frequency(12, muon());

    const EquilibriumPoint pt = equilibrium_radius(omega, 47135739936.7, muon());
    CHECK(pt.q == Approx(0.9562).epsilon(1e-9));
    CHECK(pt.x0 == Approx(3.7407907964e-11).epsilon(1e-9));

    const UnitContext units(muon());
    CHECK(units.from_si(pt.x0, Quantity::Length) == Approx(146.165960785).epsilon(1e-9));

    // the rounded reference field still lands within 1e-4 of the target q
    const EquilibriumPoint rounded = equilibrium_radius(omega, 4.719e10, muon());
    CHECK(std::abs(rounded.q - 0.9562) < 1e-4);
}

TEST_CASE("equilibrium radius rejects fields beyond the border") {
    const double omega = kepler_frequency(12, muon());
    const double near_border = field_from_q(kBorder + 1e-9, omega, muon());
    CHECK_THROWS_AS(equilibrium_radius(omega, 1.001 * near_border, muon()),
                    stability_domain_error);
    CHECK_THROWS_AS(equilibrium_radius(omega, 100.0 * near_border, muon()),
                    stability_domain_error);
    CHECK_THROWS_AS(equilibrium_radius(0.0, 1e9, muon()), std::domain_error);
    CHECK_THROWS_AS(equilibrium_radius(omega, -1.0, muon()), std::domain_error);
}

TEST_CASE("field from q") {
    const double omega = kepler_frequency(12, muon());
    CHECK(field_from_q(1.0, omega, muon()) == 0.0);
    CHECK(field_from_q(0.9562, omega, muon()) == Approx(47135739936.7).epsilon(1e-9));
    CHECK_THROWS_AS(field_from_q(0.5, omega, muon()), stability_domain_error);
    CHECK_THROWS_AS(field_from_q(kBorder, omega, muon()), border_singularity_error);
    CHECK_THROWS_AS(field_from_q(0.9562, -omega, muon()), std::domain_error);
}

TEST_CASE("field and equilibrium round trip, consistent with the scaled field") {
    const UnitContext units(muon());
    for (double q : {0.90, 0.93, 0.9562, 0.99, 0.999}) {
        for (int n : {1, 12}) {
            const double omega = kepler_frequency(n, muon());
            const double field = field_from_q(q, omega, muon());
            const EquilibriumPoint pt = equilibrium_radius(omega, field, muon());
            CHECK(pt.q == Approx(q).epsilon(1e-10));

            const double et = units.from_si(field, Quantity::Field);
            const double wt = units.from_si(omega, Quantity::Frequency);
            CHECK(et * std::pow(wt, -4.0 / 3.0) ==
                  Approx(scaled_field_of_q(q)).epsilon(1e-12));
        }
    }
}
