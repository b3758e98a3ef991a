#include "trojan/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace trojan {

namespace {
using namespace constants;
}

const char* to_string(Convention c) {
    return c == Convention::AsPrinted ? "printed" : "calibrated";
}

Convention convention_from_string(const std::string& name) {
    if (name == "printed") return Convention::AsPrinted;
    if (name == "calibrated") return Convention::Calibrated;
    throw std::invalid_argument("unknown convention \"" + name +
                                "\"; expected calibrated or printed");
}

double gamma_ud_shape(double q) {
    const ShapeSet s = shape_set(q);
    if (q == 1.0) return 0.0;  // theta^3/B -> 0 limit
    const double brackets =
        s.lambda * s.lambda / (s.A * s.A) + 1.0 / (s.B * s.B);
    return (1.0 / 3.0) * std::sqrt(pi / 2.0) * s.alpha_tilde_sq * brackets *
           s.theta * s.theta * s.theta;
}

double gamma_sp_shape(double q) {
    const ShapeSet s = shape_set(q);
    if (q == 1.0)
        throw border_singularity_error(
            "spontaneous rate diverges at q = 1: border singularity (B = 0)");
    const double diff = s.lambda / s.A - 1.0 / s.B;
    const double denom = s.lambda * s.lambda / s.A + 1.0 / s.B;
    const double cube = (1.0 + s.theta) * (1.0 + s.theta) * (1.0 + s.theta);
    return (1.0 / (4.0 * pi)) * (1.0 / 3.0) * diff * diff / denom * cube;
}

double rate_prefactor(double omega, const ParticleSpec& particle) {
    if (!(omega > 0.0)) throw std::domain_error("rate prefactor requires omega > 0");
    const double mu = particle.mass_ratio * electron_mass;
    const double e2 = elementary_charge * elementary_charge;
    return e2 * omega * omega / (vacuum_permittivity * mu * light_speed * light_speed * light_speed);
}

double gamma_ud(double q, double omega, const ParticleSpec& particle, Convention convention) {
    double rate = rate_prefactor(omega, particle) * gamma_ud_shape(q);
    if (convention == Convention::Calibrated) rate /= pi;
    return rate;
}

double gamma_sp(double q, double omega, const ParticleSpec& particle) {
    return rate_prefactor(omega, particle) * gamma_sp_shape(q);
}

double ratio_ud_sp(double q, Convention convention) {
    double r = gamma_ud_shape(q) / gamma_sp_shape(q);
    if (convention == Convention::Calibrated) r /= pi;
    return r;
}

DipoleElements dipole_matrix_elements(double q, double omega, const ParticleSpec& particle) {
    if (!(omega > 0.0)) throw std::domain_error("dipole elements require omega > 0");
    const ShapeSet s = shape_set(q);
    if (q == 1.0)
        throw border_singularity_error(
            "y dipole element diverges at q = 1: border singularity (B = 0)");
    const double mu = particle.mass_ratio * electron_mass;
    // alpha = alpha_tilde sqrt(2 mu omega / hbar); element = alpha_tilde *
    // (lambda/A or 1/B) * sqrt(hbar / (2 mu omega)) after folding the
    // fluctuation hbar/(2 {A,B} mu omega).
    const double sigma = std::sqrt(reduced_planck / (2.0 * mu * omega));
    const double alpha_tilde = std::sqrt(s.alpha_tilde_sq);
    return DipoleElements{alpha_tilde * (s.lambda / s.A) * sigma,
                          alpha_tilde * (1.0 / s.B) * sigma};
}

DriveParameters drive_parameters(double q, double omega, const ParticleSpec& particle) {
    const double field = field_from_q(q, omega, particle);
    const UnitContext units(particle);
    const double wt = units.from_si(omega, Quantity::Frequency);
    const double x0 = units.to_si(std::cbrt(1.0 / q) * std::pow(wt, -2.0 / 3.0),
                                  Quantity::Length);
    return DriveParameters{
        omega,
        field,
        x0,
        q,
        scaled_field_of_q(q),
        wavelength_of(omega),
        vacuum_permittivity * light_speed * field * field,
    };
}

RateReport resonance_report(int n, double q, const ParticleSpec& particle,
                            Convention convention) {
    const double omega = kepler_frequency(n, particle);
    const ShapeSet s = shape_set(q);

    RateReport report;
    report.particle = particle;
    report.n = n;
    report.q = q;
    report.omega = omega;
    report.gamma_ud = gamma_ud(q, omega, particle, convention);
    if (q < 1.0) {
        report.gamma_sp = gamma_sp(q, omega, particle);
        report.ratio = report.gamma_ud / *report.gamma_sp;
    }
    report.energy_gap = reduced_planck * omega * s.theta;
    report.convention = convention;
    report.drive = drive_parameters(q, omega, particle);
    return report;
}

} // namespace trojan
