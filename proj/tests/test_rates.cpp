#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "trojan/rates.hpp"

using namespace trojan;
using doctest::Approx;

TEST_CASE("convention names") {
    CHECK(convention_from_string("calibrated") == Convention::Calibrated);
    CHECK(convention_from_string("printed") == Convention::AsPrinted);
    CHECK_THROWS_AS(convention_from_string("bogus"), std::invalid_argument);
    CHECK(std::string(to_string(Convention::Calibrated)) == "calibrated");
    CHECK(std::string(to_string(Convention::AsPrinted)) == "printed");
}

TEST_CASE("dimensionless rate shapes at the best-confined point") {
    CHECK(gamma_ud_shape(0.9562) == Approx(0.251304917804).epsilon(1e-10));
    CHECK(gamma_sp_shape(0.9562) == Approx(0.418997046755).epsilon(1e-10));
}

TEST_CASE("rate shapes at the borders") {
    CHECK(gamma_ud_shape(1.0) == 0.0);
    CHECK_THROWS_AS(gamma_sp_shape(1.0), border_singularity_error);
    CHECK_THROWS_AS(gamma_ud_shape(0.5), stability_domain_error);
    CHECK_THROWS_AS(gamma_sp_shape(8.0 / 9.0), border_singularity_error);
}

TEST_CASE("rate ratio") {
    CHECK(ratio_ud_sp(0.9562, Convention::AsPrinted) ==
          Approx(0.599777300939).epsilon(1e-10));
    CHECK(ratio_ud_sp(0.9562, Convention::Calibrated) ==
          Approx(0.190915044398).epsilon(1e-10));

    // reference values quoted alongside the figures
    CHECK(std::abs(ratio_ud_sp(0.9562, Convention::Calibrated) / 0.190686 - 1.0) <
          0.005);
    CHECK(std::abs(ratio_ud_sp(0.9562, Convention::AsPrinted) / 0.5998 - 1.0) < 0.005);

    CHECK(ratio_ud_sp(0.9562, Convention::AsPrinted) /
              ratio_ud_sp(0.9562, Convention::Calibrated) ==
          Approx(constants::pi).epsilon(1e-12));
}

TEST_CASE("dimensional rates at the n = 12 muon resonance") {
    const double omega = kepler_frequency(12, muon());
    CHECK(rate_prefactor(omega, muon()) == Approx(13979358.2472).epsilon(1e-10));

    const double printed = gamma_ud(0.9562, omega, muon(), Convention::AsPrinted);
    const double calibrated = gamma_ud(0.9562, omega, muon(), Convention::Calibrated);
    CHECK(printed == Approx(3513081.47527).epsilon(1e-10));
    CHECK(calibrated == Approx(1118248.56455).epsilon(1e-10));
    CHECK(std::abs(calibrated / 1.11784e6 - 1.0) < 0.005);
    CHECK(printed / calibrated == Approx(constants::pi).epsilon(1e-12));

    CHECK(gamma_sp(0.9562, omega, muon()) == Approx(5857309.82112).epsilon(1e-10));

    // a muon survives a couple of emission lifetimes
    CHECK(calibrated * *muon().mean_lifetime == Approx(2.4567921).epsilon(1e-7));

    CHECK_THROWS_AS(rate_prefactor(0.0, muon()), std::domain_error);
}

TEST_CASE("rates scale with the square of the drive frequency") {
    const double omega = kepler_frequency(12, muon());
    for (Convention convention : {Convention::AsPrinted, Convention::Calibrated}) {
        CHECK(gamma_ud(0.9562, 2.0 * omega, muon(), convention) /
                  gamma_ud(0.9562, omega, muon(), convention) ==
              Approx(4.0).epsilon(1e-12));
    }
    CHECK(gamma_sp(0.9562, 3.0 * omega, muon()) / gamma_sp(0.9562, omega, muon()) ==
          Approx(9.0).epsilon(1e-12));
}

TEST_CASE("the ratio depends on q alone") {
    const double reference =
        *resonance_report(1, 0.9562, muon(), Convention::Calibrated).ratio;
    for (const ParticleSpec& particle : particle_registry()) {
        for (int n : {1, 5, 12}) {
            const RateReport report =
                resonance_report(n, 0.9562, particle, Convention::Calibrated);
            CHECK(*report.ratio == Approx(reference).epsilon(1e-13));
        }
    }
}

TEST_CASE("transition dipole elements") {
    const double omega = kepler_frequency(12, muon());
    const DipoleElements d = dipole_matrix_elements(0.9562, omega, muon());
    CHECK(d.x == Approx(6.051226558e-12).epsilon(1e-9));
    CHECK(d.y == Approx(2.45751213714e-11).epsilon(1e-10));
    CHECK_THROWS_AS(dipole_matrix_elements(1.0, omega, muon()), border_singularity_error);
    CHECK_THROWS_AS(dipole_matrix_elements(0.9562, 0.0, muon()), std::domain_error);
}

TEST_CASE("drive parameters at the n = 12 muon resonance") {
    const double omega = kepler_frequency(12, muon());
    const DriveParameters drive = drive_parameters(0.9562, omega, muon());
    CHECK(drive.omega == omega);
    CHECK(drive.q == 0.9562);
    CHECK(drive.field_amplitude == Approx(47135739936.7).epsilon(1e-9));
    CHECK(drive.x0 == Approx(3.7407907964e-11).epsilon(1e-9));
    CHECK(drive.scaled_field == Approx(0.0444588130721).epsilon(1e-10));
    CHECK(drive.wavelength == Approx(3.80781159521e-7).epsilon(1e-10));
    CHECK(drive.intensity == Approx(5.89752907791e18).epsilon(1e-9));

    // quoted working point: 380.782 nm, 5.89e14 W/cm^2
    CHECK(std::abs(drive.wavelength / 380.782e-9 - 1.0) < 1e-4);
    CHECK(std::abs(drive.intensity * 1e-4 / 5.89e14 - 1.0) < 0.01);
}

TEST_CASE("resonance report") {
    const RateReport report =
        resonance_report(12, 0.9562, muon(), Convention::Calibrated);
    CHECK(report.n == 12);
    CHECK(report.q == 0.9562);
    CHECK(report.particle.name == "muon");
    CHECK(report.convention == Convention::Calibrated);
    CHECK(report.omega == Approx(4.94680873833e15).epsilon(1e-10));
    CHECK(report.gamma_ud == Approx(1118248.56455).epsilon(1e-10));
    REQUIRE(report.gamma_sp.has_value());
    CHECK(*report.gamma_sp == Approx(5857309.82112).epsilon(1e-10));
    REQUIRE(report.ratio.has_value());
    CHECK(*report.ratio == Approx(0.190915044398).epsilon(1e-10));
    CHECK(report.energy_gap ==
          Approx(constants::reduced_planck * 4.94680873833e15 * 0.375968591014)
              .epsilon(1e-9));
}

TEST_CASE("resonance report at the circular-orbit point") {
    const RateReport report = resonance_report(12, 1.0, muon(), Convention::Calibrated);
    CHECK(report.gamma_ud == 0.0);
    CHECK_FALSE(report.gamma_sp.has_value());
    CHECK_FALSE(report.ratio.has_value());
    CHECK(report.energy_gap == 0.0);
    CHECK(report.drive.field_amplitude == 0.0);
    CHECK(report.drive.intensity == 0.0);
    CHECK(report.drive.scaled_field == 0.0);
}
