#include "trojan/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trojan/quadrature.hpp"

namespace trojan {

namespace {

using namespace constants;

double squared_modulus(double v) { return v * v; }
double squared_modulus(const std::complex<double>& v) { return std::norm(v); }

} // namespace

LinearizedSystem linearized_system(double q) {
    LinearizedSystem sys;
    sys.q = q;
    sys.dynamics_matrix = {{
        {{0.0, 0.0, 1.0, 0.0}},
        {{0.0, 0.0, 0.0, 1.0}},
        {{1.0 + 2.0 * q, 0.0, 0.0, 2.0}},
        {{0.0, 1.0 - q, -2.0, 0.0}},
    }};
    return sys;
}

OracleModes linearized_mode_frequencies(double q) {
    const LinearizedSystem sys = linearized_system(q);
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = sys.dynamics_matrix[r][c];

    const Eigen::EigenSolver<Eigen::Matrix4d> solver(m);
    std::array<double, 4> magnitudes{};
    double max_real = 0.0;
    for (int i = 0; i < 4; ++i) {
        magnitudes[i] = std::abs(solver.eigenvalues()[i].imag());
        max_real = std::max(max_real, std::abs(solver.eigenvalues()[i].real()));
    }
    std::sort(magnitudes.begin(), magnitudes.end());

    OracleModes modes;
    // purely imaginary eigenvalues come in conjugate pairs; average each pair
    modes.omega_minus = 0.5 * (magnitudes[0] + magnitudes[1]);
    modes.omega_plus = 0.5 * (magnitudes[2] + magnitudes[3]);
    modes.omega_z = std::sqrt(std::max(q, 0.0));
    modes.max_real_part = max_real;
    modes.stable = max_real < 1e-8;
    return modes;
}

double locate_stability_border(double q_tol) {
    if (!(q_tol > 0.0))
        throw std::invalid_argument("border bisection needs a positive tolerance");
    double lo = 0.85;
    double hi = 0.93;
    if (linearized_mode_frequencies(lo).stable ||
        !linearized_mode_frequencies(hi).stable)
        throw std::logic_error("stability bisection bracket is invalid");
    while (hi - lo > q_tol) {
        const double mid = 0.5 * (lo + hi);
        (linearized_mode_frequencies(mid).stable ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

WavepacketGaussian make_wavepacket(double q, double omega, const ParticleSpec& particle) {
    if (!(omega > 0.0)) throw std::domain_error("wavepacket requires omega > 0");
    const ShapeSet s = shape_set(q);
    const UnitContext units(particle);
    const double wt = units.from_si(omega, Quantity::Frequency);

    WavepacketGaussian pkt;
    pkt.A = s.A;
    pkt.B = s.B;
    pkt.C = s.C;
    pkt.D = s.D;
    pkt.x0 = units.to_si(std::cbrt(1.0 / q) * std::pow(wt, -2.0 / 3.0), Quantity::Length);
    pkt.mass = particle.mass_ratio * electron_mass;
    pkt.omega = omega;
    pkt.normalization = std::pow(pkt.mass * omega / (pi * reduced_planck), 0.75) *
                        std::pow(s.A * s.B * s.D, 0.25);
    return pkt;
}

GaussianMoments gaussian_moments(const WavepacketGaussian& pkt) {
    if (!(pkt.A > 0.0) || !(pkt.B > 0.0) || !(pkt.D > 0.0))
        throw std::domain_error("gaussian moments require positive widths A, B, D");
    if (!(pkt.mass > 0.0) || !(pkt.omega > 0.0))
        throw std::domain_error("gaussian moments require positive mass and omega");

    // length scale of the dimensionless coordinate u = x sqrt(mass*omega/hbar)
    const double scale = reduced_planck / (pkt.mass * pkt.omega);
    const double drift_phase = pkt.x0 / std::sqrt(scale);
    const double probe_x = 1.0 / std::sqrt(pkt.A);

    auto fx = [&](double u) { return std::exp(-0.5 * pkt.A * u * u); };
    // The y factor carries every phase: the C cross term (evaluated one x
    // sigma off axis) and the x0 drift. Both must drop out of the density.
    auto fy = [&](double v) {
        return std::exp(std::complex<double>(-0.5 * pkt.B * v * v,
                                             (pkt.C * probe_x + drift_phase) * v));
    };
    auto fz = [&](double w) { return std::exp(-0.5 * pkt.D * w * w); };

    auto axis_integrals = [](auto&& factor, double width) {
        const double limit = 8.0 / std::sqrt(width);
        auto density = [&](double u) { return squared_modulus(factor(u)); };
        auto weighted = [&](double u) { return u * u * squared_modulus(factor(u)); };
        const double i0 = integrate_adaptive(density, -limit, limit, 1e-12).value;
        const double i2 = integrate_adaptive(weighted, -limit, limit, 1e-12).value;
        return std::pair<double, double>(i0, i2);
    };

    const auto [ix0, ix2] = axis_integrals(fx, pkt.A);
    const auto [iy0, iy2] = axis_integrals(fy, pkt.B);
    const auto [iz0, iz2] = axis_integrals(fz, pkt.D);

    GaussianMoments m;
    m.x2 = scale * ix2 / ix0;
    m.y2 = scale * iy2 / iy0;
    m.z2 = scale * iz2 / iz0;
    m.norm = pkt.normalization * pkt.normalization * scale * std::sqrt(scale) *
             ix0 * iy0 * iz0;
    return m;
}

double equilibrium_residual(const EquilibriumPoint& pt, const ParticleSpec& particle) {
    if (!(pt.x0 > 0.0) || !(pt.omega > 0.0))
        throw std::domain_error("equilibrium residual requires x0 > 0 and omega > 0");
    const UnitContext units(particle);
    const double x = units.from_si(pt.x0, Quantity::Length);
    const double wt = units.from_si(pt.omega, Quantity::Frequency);
    const double et = units.from_si(pt.field_amplitude, Quantity::Field);
    const double centripetal = wt * wt * x;
    return std::abs(centripetal - 1.0 / (x * x) - et) / centripetal;
}

std::complex<double> spectrum_probe(const SpectrumProbe& probe, double omega_gap) {
    if (!(probe.epsilon > 0.0))
        throw std::domain_error("spectrum probe requires epsilon > 0");
    if (omega_gap == 0.0)
        throw std::domain_error("spectrum probe requires a nonzero gap");
    if (!(probe.truncation > 1.0))
        throw std::domain_error("spectrum probe window is too small");

    const std::complex<double> i(0.0, 1.0);
    auto kernel = [&](double tau) {
        const std::complex<double> d(tau, -probe.epsilon);
        const std::complex<double> d2 = d * d;
        return std::exp(-i * omega_gap * tau) / (d2 * d2);
    };

    // split at +/-1 so the sharp feature at tau = 0 sits in its own segment
    const double breaks[4] = {-probe.truncation, -1.0, 1.0, probe.truncation};
    std::complex<double> total;
    for (int s = 0; s < 3; ++s)
        total += integrate_adaptive(kernel, breaks[s], breaks[s + 1], 1e-10, 1e-10).value;
    return probe.prefactor * total;
}

double spectrum_probe_analytic(const SpectrumProbe& probe, double omega_gap) {
    if (!(probe.epsilon > 0.0))
        throw std::domain_error("spectrum probe requires epsilon > 0");
    if (omega_gap >= 0.0) return 0.0;
    // contour closes around the order-4 pole at tau = i eps
    const double cube = omega_gap * omega_gap * omega_gap;
    return -probe.prefactor * (pi / 3.0) * cube * std::exp(omega_gap * probe.epsilon);
}

int emission_side(const SpectrumProbe& probe) {
    const double positive = std::abs(spectrum_probe(probe, 3.0));
    const double negative = std::abs(spectrum_probe(probe, -3.0));
    return negative >= positive ? -1 : +1;
}

} // namespace trojan
