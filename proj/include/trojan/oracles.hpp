#pragma once

#include <array>
#include <complex>

#include "trojan/constants.hpp"
#include "trojan/harmonic.hpp"

namespace trojan {

/// Linearized rotating-frame dynamics about the equilibrium, first order in
/// the displacements, with time in units of 1/omega. State order is
/// (dx, dy, dvx, dvy); the axial motion decouples with frequency sqrt(q).
struct LinearizedSystem {
    double q = 0.0;
    std::array<std::array<double, 4>, 4> dynamics_matrix{};
};

LinearizedSystem linearized_system(double q);

/// Mode frequencies recovered numerically from the eigenvalues of the
/// linearized dynamics, in units of the drive frequency. Valid for any q > 0;
/// outside the stability window the motion acquires a growing mode, reported
/// through `stable` and `max_real_part` instead of an error.
struct OracleModes {
    double omega_plus = 0.0;   // larger |Im| eigenvalue pair
    double omega_minus = 0.0;  // smaller |Im| eigenvalue pair
    double omega_z = 0.0;      // sqrt(q) from the decoupled axial equation
    double max_real_part = 0.0;
    bool stable = false;
};

OracleModes linearized_mode_frequencies(double q);

/// Brackets the q below which the linearized motion grows, by bisection on
/// the stability flag. Returns the bracket midpoint once its width is below
/// q_tol.
double locate_stability_border(double q_tol = 1e-6);

/// Gaussian wavepacket of the harmonic theory. A, B, D are the real widths
/// of the density; C and x0 enter only through phases.
struct WavepacketGaussian {
    double A = 1.0;
    double B = 1.0;
    double C = 0.0;
    double D = 1.0;
    double x0 = 0.0;             // m
    double mass = 0.0;           // kg
    double omega = 0.0;          // rad/s
    double normalization = 0.0;  // (mass*omega/(pi hbar))^(3/4) (ABD)^(1/4), m^-3/2
};

WavepacketGaussian make_wavepacket(double q, double omega, const ParticleSpec& particle);

struct GaussianMoments {
    double x2 = 0.0;   // <(x - x0)^2>, m^2
    double y2 = 0.0;   // <y^2>, m^2
    double z2 = 0.0;   // <z^2>, m^2
    double norm = 0.0; // integral of the density, dimensionless
};

/// Quadrature of the wavepacket density and its second moments. The density
/// is evaluated as the squared modulus of the complex amplitude, so the
/// phase parameters genuinely enter the arithmetic and must cancel.
GaussianMoments gaussian_moments(const WavepacketGaussian& pkt);

/// Relative force-balance residual |mu w^2 x0 - e^2/(4 pi eps0 x0^2) - e E_f|
/// normalized by mu w^2 x0, evaluated in particle atomic units.
double equilibrium_residual(const EquilibriumPoint& pt, const ParticleSpec& particle);

/// Fourier probe of the regularized correlation kernel 1/(tau - i eps)^4.
/// Times and gaps are in reciprocal units of each other; the probe is a
/// qualitative oracle for the cubic law, not a rate ingredient.
struct SpectrumProbe {
    double epsilon = 0.1;        // kernel regularization, > 0
    double truncation = 500.0;   // half width of the integration window
    double prefactor = 1.0;      // scales the returned value
};

/// Numeric integral of e^{-i gap tau} / (tau - i eps)^4 over the window.
std::complex<double> spectrum_probe(const SpectrumProbe& probe, double omega_gap);

/// Closed form of the window-free transform: -(pi/3) gap^3 e^{gap eps} on
/// the responding side (gap < 0, one pole enclosed), zero on the other.
double spectrum_probe_analytic(const SpectrumProbe& probe, double omega_gap);

/// Sign of the gap that produces the nonzero response, measured by comparing
/// the probe at +/- the same magnitude. Returns -1 or +1.
int emission_side(const SpectrumProbe& probe);

} // namespace trojan
