#pragma once

#include "trojan/constants.hpp"
#include "trojan/errors.hpp"

namespace trojan {

/// Dimensionless harmonic-theory quantities at a given q. A, B, C, D are the
/// Gaussian wavepacket parameters; theta = omega_-/omega is the soft-mode
/// ratio. All are functions of q alone.
struct ShapeSet {
    double q;
    double f;
    double A;
    double B;
    double C;
    double D;
    double theta;             // omega_- / omega
    double omega_plus_ratio;  // omega_+ / omega
    double omega_z_ratio;     // omega_z / omega = sqrt(q)
    double lambda;            // (1 + C) / (A + theta)
    double alpha_tilde_sq;    // 1 / (lambda^2/A + 1/B); limit 0 at q = 1
};

/// Classical center of the driven packet: radius x0 at which the Coulomb
/// attraction plus the drive force balance the centrifugal force.
struct EquilibriumPoint {
    double x0;               // m
    double q;                // dimensionless
    double omega;            // rad/s
    double field_amplitude;  // V/m
};

/// Confinement window of the harmonic theory.
struct StabilityWindow {
    double q_min;             // 8/9, excluded
    double q_max;             // 1, included
    double scaled_field_max;  // (1/9) / (8/9)^(1/3), excluded
};

StabilityWindow stability_window();

/// f(q) = 2 + q - 2 sqrt((1-q)(1+2q)), defined on [0, 1].
double f_of_q(double q);

/// All shape quantities at q. Domain 8/9 < q <= 1; q = 8/9 exactly raises
/// border_singularity_error (A = B = 0 there), anything else outside raises
/// stability_domain_error.
ShapeSet shape_set(double q);

struct ModeFrequencies {
    double omega_plus;   // rad/s
    double omega_minus;  // rad/s
    double omega_z;      // rad/s
};

/// Dimensional normal-mode frequencies omega * (ratios from shape_set).
ModeFrequencies mode_frequencies(double q, double omega);

/// Scaled drive field E = E_f * omega^(-4/3) in particle atomic units,
/// equal to (1-q)/q^(1/3). Domain 0 < q <= 1.
double scaled_field_of_q(double q);

/// Inverse of scaled_field_of_q on the stability window (8/9, 1]. Accepts
/// 0 <= scaled_field < scaled_field_max; the border value itself is excluded.
double q_of_scaled_field(double scaled_field);

/// Solves the force balance e^2/(4 pi eps0 x0^2) + e E_f = mu omega^2 x0
/// jointly with the q definition for the Trojan branch (the root continuously
/// connected to the zero-field radius). Throws stability_domain_error when the
/// field pushes q at or below 8/9.
EquilibriumPoint equilibrium_radius(double omega, double field_amplitude,
                                    const ParticleSpec& particle);

/// Drive amplitude that realizes a given q at a given omega:
/// E_f = (1-q) mu omega^2 x0 / e with x0 from the q definition.
double field_from_q(double q, double omega, const ParticleSpec& particle);

} // namespace trojan
