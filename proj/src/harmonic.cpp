#include "trojan/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "trojan/root_finding.hpp"

namespace trojan {

namespace {

constexpr double kQMin = 8.0 / 9.0;
constexpr double kQMax = 1.0;

std::string window_message(double q) {
    std::ostringstream msg;
    msg << "q = " << q << " outside stability window (8/9, 1]";
    return msg.str();
}

void require_window(double q) {
    if (q == kQMin)
        throw border_singularity_error(
            "border singularity at q = 8/9 (A = B = 0); stability window is (8/9, 1]");
    if (!(q > kQMin) || !(q <= kQMax))
        throw stability_domain_error(window_message(q));
}

} // namespace

StabilityWindow stability_window() {
    return StabilityWindow{kQMin, kQMax, (1.0 / 9.0) / std::cbrt(kQMin)};
}

double f_of_q(double q) {
    if (!(q >= 0.0) || !(q <= 1.0))
        throw std::domain_error("f(q) requires 0 <= q <= 1");
    return 2.0 + q - 2.0 * std::sqrt((1.0 - q) * (1.0 + 2.0 * q));
}

ShapeSet shape_set(double q) {
    require_window(q);

    ShapeSet s;
    s.q = q;
    s.f = f_of_q(q);

    // 4f - 9q^2 and 9q^2 - 8q both vanish at the q = 8/9 border; clamp the
    // rounding residue so sqrt stays defined arbitrarily close to it.
    const double disc = std::max(4.0 * s.f - 9.0 * q * q, 0.0);
    const double rad = std::sqrt(std::max(9.0 * q * q - 8.0 * q, 0.0));

    s.A = std::sqrt((1.0 + 2.0 * q) * disc) / (3.0 * q);
    s.B = std::sqrt((1.0 - q) * disc) / (3.0 * q);
    s.C = s.f / (3.0 * q);
    s.D = std::sqrt(q);
    s.theta = std::sqrt((2.0 - q - rad) / 2.0);
    s.omega_plus_ratio = std::sqrt((2.0 - q + rad) / 2.0);
    s.omega_z_ratio = std::sqrt(q);
    s.lambda = (1.0 + s.C) / (s.A + s.theta);
    // 1/B diverges at q = 1; alpha_tilde^2 takes its limit value there.
    s.alpha_tilde_sq =
        (q == kQMax) ? 0.0 : 1.0 / (s.lambda * s.lambda / s.A + 1.0 / s.B);
    return s;
}

ModeFrequencies mode_frequencies(double q, double omega) {
    if (!(omega > 0.0)) throw std::domain_error("mode_frequencies requires omega > 0");
    const ShapeSet s = shape_set(q);
    return ModeFrequencies{omega * s.omega_plus_ratio, omega * s.theta,
                           omega * s.omega_z_ratio};
}

double scaled_field_of_q(double q) {
    if (!(q > 0.0) || !(q <= 1.0))
        throw std::domain_error("scaled field requires 0 < q <= 1");
    return (1.0 - q) / std::cbrt(q);
}

double q_of_scaled_field(double scaled_field) {
    const StabilityWindow win = stability_window();
    if (!(scaled_field >= 0.0) || !(scaled_field < win.scaled_field_max)) {
        std::ostringstream msg;
        msg << "scaled field " << scaled_field << " outside [0, " << win.scaled_field_max
            << "); stability window is q in (8/9, 1]";
        throw stability_domain_error(msg.str());
    }
    if (scaled_field == 0.0) return 1.0;
    // scaled_field_of_q is strictly decreasing on [8/9, 1], so the bracket
    // [8/9, 1] holds exactly one root.
    return find_root_bracketed(
        [scaled_field](double q) { return scaled_field_of_q(q) - scaled_field; },
        kQMin, 1.0, 1e-15);
}

EquilibriumPoint equilibrium_radius(double omega, double field_amplitude,
                                    const ParticleSpec& particle) {
    if (!(omega > 0.0)) throw std::domain_error("equilibrium requires omega > 0");
    if (!(field_amplitude >= 0.0))
        throw std::domain_error("field amplitude must be nonnegative");

    const UnitContext units(particle);
    const double wt = units.from_si(omega, Quantity::Frequency);
    const double et = units.from_si(field_amplitude, Quantity::Field);
    const double x_zero_field = std::pow(wt, -2.0 / 3.0);

    double xt, q;
    if (et == 0.0) {
        xt = x_zero_field;
        q = 1.0;
    } else {
        // Particle atomic units: the balance reads wt^2 x - 1/x^2 = et, whose
        // left side is strictly increasing, so the Trojan branch is the unique
        // positive root. It sits at x_zero_field for et = 0 and moves outward
        // with the field.
        const auto balance = [wt, et](double x) { return wt * wt * x - 1.0 / (x * x) - et; };
        const double lo = 0.5 * x_zero_field;
        const double hi = 10.0 * x_zero_field;
        if (!(balance(hi) > 0.0))
            throw stability_domain_error(
                "field too strong: no equilibrium with q > 8/9 (outside stability window)");
        xt = find_root_bracketed(balance, lo, hi, 1e-14);
        q = 1.0 / (wt * wt * xt * xt * xt);
        if (q > 1.0 && q < 1.0 + 1e-12) q = 1.0;  // zero-field rounding
        if (!(q > kQMin))
            throw stability_domain_error(
                "field too strong: equilibrium has q <= 8/9 (outside stability window)");
    }

    return EquilibriumPoint{units.to_si(xt, Quantity::Length), q, omega, field_amplitude};
}

double field_from_q(double q, double omega, const ParticleSpec& particle) {
    require_window(q);
    if (!(omega > 0.0)) throw std::domain_error("field_from_q requires omega > 0");
    const UnitContext units(particle);
    const double wt = units.from_si(omega, Quantity::Frequency);
    const double et = scaled_field_of_q(q) * std::pow(wt, 4.0 / 3.0);
    return units.to_si(et, Quantity::Field);
}

} // namespace trojan
