#pragma once

#include <optional>

#include "trojan/constants.hpp"
#include "trojan/harmonic.hpp"

namespace trojan {

/// Normalization of the Unruh-Davies rate. AsPrinted evaluates the closed
/// form verbatim; Calibrated divides it by pi, which reproduces the
/// quoted reference numerics. The spontaneous rate is identical under both.
enum class Convention { AsPrinted, Calibrated };

const char* to_string(Convention c);
Convention convention_from_string(const std::string& name);

/// q of the best-confined packet (reference value, not re-derived here).
inline constexpr double best_confined_q = 0.9562;

/// Drive/laser parameters realizing a given (q, omega) working point.
struct DriveParameters {
    double omega;            // rad/s
    double field_amplitude;  // V/m
    double x0;               // m
    double q;                // dimensionless
    double scaled_field;     // dimensionless, (1-q)/q^(1/3)
    double wavelength;       // m
    double intensity;        // W/m^2, eps0 c E^2 (rotating field, both quadratures)
};

/// Full resonance summary for one (particle, n, q) working point. gamma_sp
/// and ratio are absent at q = 1 where the spontaneous closed form diverges
/// (border singularity); gamma_ud is 0 there by its limit.
struct RateReport {
    ParticleSpec particle;
    int n;
    double q;
    double omega;      // rad/s
    double gamma_ud;   // 1/s
    std::optional<double> gamma_sp;  // 1/s
    std::optional<double> ratio;     // gamma_ud / gamma_sp
    double energy_gap;  // J, hbar * omega_-
    Convention convention;
    DriveParameters drive;
};

/// Dimensionless Unruh-Davies shape (1/3) sqrt(pi/2) at^2 (l^2/A^2 + 1/B^2) th^3.
/// Returns the limit 0 at q = 1.
double gamma_ud_shape(double q);

/// Dimensionless spontaneous shape
/// (1/(4 pi)) (1/3) (l/A - 1/B)^2 / (l^2/A + 1/B) (1 + th)^3.
/// Diverges at q = 1 (border_singularity_error, B = 0).
double gamma_sp_shape(double q);

/// Common dimensional prefactor e^2 omega^2 / (eps0 mu c^3), in 1/s.
double rate_prefactor(double omega, const ParticleSpec& particle);

/// Unruh-Davies emission rate, 1/s.
double gamma_ud(double q, double omega, const ParticleSpec& particle, Convention convention);

/// Spontaneous (Larmor-limit) emission rate, 1/s.
double gamma_sp(double q, double omega, const ParticleSpec& particle);

/// gamma_ud / gamma_sp; a pure function of q (and convention) only.
double ratio_ud_sp(double q, Convention convention);

struct DipoleElements {
    double x;  // m, <psi1|x|psi0>
    double y;  // m, <psi1|y|psi0>
};

/// Transition dipole matrix elements between the Trojan state and its first
/// deexcited partner.
DipoleElements dipole_matrix_elements(double q, double omega, const ParticleSpec& particle);

/// Drive parameters for a given q at a given omega.
DriveParameters drive_parameters(double q, double omega, const ParticleSpec& particle);

/// Full report at the Kepler resonance omega = kepler_frequency(n, particle).
RateReport resonance_report(int n, double q, const ParticleSpec& particle,
                            Convention convention);

} // namespace trojan
