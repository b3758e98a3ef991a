#pragma once

#include <optional>

#include "trojan/constants.hpp"

namespace trojan {

/// Centripetal acceleration of a circular Kepler orbit with principal
/// quantum number n, in m/s^2. Scales exactly as 1/n^4.
double orbital_acceleration(int n, const ParticleSpec& particle);

/// Equilibrium temperature seen by a detector undergoing the orbital
/// acceleration: T = hbar a / (2 pi k_B c), in kelvin.
double unruh_temperature(int n, const ParticleSpec& particle);

/// Orbital speed as a fraction of c. Mass independent: beta = alpha / n.
double orbital_beta(int n);

/// Lorentz factor of the orbit. Close to 1 for all n >= 1, which is why
/// rates and temperatures here carry no relativistic correction.
double orbital_lorentz_gamma(int n);

/// Number of drive periods within the particle's mean lifetime, or
/// nullopt for a stable particle.
std::optional<double> revolutions_per_lifetime(int n, const ParticleSpec& particle);

struct KinematicsReport {
    ParticleSpec particle;
    int n = 1;
    double omega = 0.0;             // Kepler resonance drive frequency, rad/s
    double acceleration = 0.0;      // m/s^2
    double acceleration_g = 0.0;    // multiples of standard gravity
    double temperature = 0.0;       // K
    double beta = 0.0;
    double lorentz_gamma = 1.0;
    std::optional<double> revolutions;  // drive periods per mean lifetime
};

KinematicsReport kinematics_report(int n, const ParticleSpec& particle);

} // namespace trojan
