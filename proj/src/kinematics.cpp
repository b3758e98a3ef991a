#include "trojan/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace trojan {

namespace {

using namespace constants;

void require_level(int n) {
    if (n < 1) throw std::invalid_argument("principal quantum number must be >= 1");
}

// Ground-level (n = 1) centripetal acceleration. The orbit radius scales as
// n^2 a_p with a_p = a0 / mass_ratio, so a_n = a_1 / n^4 exactly.
double ground_acceleration(const ParticleSpec& particle) {
    const double mu = particle.mass_ratio * electron_mass;
    const double radius = bohr_radius / particle.mass_ratio;
    return coulomb_constant * elementary_charge * elementary_charge /
           (mu * radius * radius);
}

} // namespace

double orbital_acceleration(int n, const ParticleSpec& particle) {
    require_level(n);
    const double n2 = static_cast<double>(n) * n;
    return ground_acceleration(particle) / (n2 * n2);
}

double unruh_temperature(int n, const ParticleSpec& particle) {
    const double a = orbital_acceleration(n, particle);
    return reduced_planck * a / (2.0 * pi * boltzmann * light_speed);
}

double orbital_beta(int n) {
    require_level(n);
    return fine_structure / n;
}

double orbital_lorentz_gamma(int n) {
    const double beta = orbital_beta(n);
    return 1.0 / std::sqrt(1.0 - beta * beta);
}

std::optional<double> revolutions_per_lifetime(int n, const ParticleSpec& particle) {
    require_level(n);
    if (!particle.mean_lifetime) return std::nullopt;
    return *particle.mean_lifetime * kepler_frequency(n, particle) / (2.0 * pi);
}

KinematicsReport kinematics_report(int n, const ParticleSpec& particle) {
    require_level(n);
    KinematicsReport report;
    report.particle = particle;
    report.n = n;
    report.omega = kepler_frequency(n, particle);
    report.acceleration = orbital_acceleration(n, particle);
    report.acceleration_g = report.acceleration / standard_gravity;
    report.temperature = unruh_temperature(n, particle);
    report.beta = orbital_beta(n);
    report.lorentz_gamma = orbital_lorentz_gamma(n);
    report.revolutions = revolutions_per_lifetime(n, particle);
    return report;
}

} // namespace trojan
