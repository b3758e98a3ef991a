#include "trojan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "trojan/constants.hpp"
#include "trojan/harmonic.hpp"
#include "trojan/kinematics.hpp"
#include "trojan/oracles.hpp"
#include "trojan/rates.hpp"

namespace trojan {

namespace {

using namespace constants;

struct Recorder {
    std::vector<CheckResult>& out;
    const VerifyOptions& options;

    void add(std::string name, double measured, double threshold) {
        const double applied = options.tolerance.value_or(threshold);
        out.push_back({std::move(name), measured, applied, measured <= applied});
    }
};

std::vector<double> q_grid(double lo, double hi, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    grid.back() = hi;
    return grid;
}

double rel_err(double value, double reference) {
    if (reference == 0.0) return std::abs(value - reference) == 0.0 ? 0.0 : 1.0;
    return std::abs(value - reference) / std::abs(reference);
}

void check_constants(Recorder& rec) {
    const double alpha_built =
        elementary_charge * elementary_charge /
        (4.0 * pi * vacuum_permittivity * reduced_planck * light_speed);
    rec.add("fine-structure-consistency", rel_err(alpha_built, fine_structure), 1e-9);

    double worst = 0.0;
    const double sample = 3.7;
    const Quantity quantities[] = {Quantity::Length, Quantity::Time,
                                   Quantity::Frequency, Quantity::Field,
                                   Quantity::Energy};
    for (const auto& particle : particle_registry()) {
        const UnitContext units(particle);
        for (Quantity kind : quantities) {
            worst = std::max(worst,
                             rel_err(units.from_si(units.to_si(sample, kind), kind), sample));
            worst = std::max(worst,
                             rel_err(units.to_si(units.from_si(sample, kind), kind), sample));
        }
    }
    rec.add("unit-round-trip", worst, 1e-14);
}

void check_harmonic(Recorder& rec) {
    const auto grid = q_grid(8.0 / 9.0 + 1e-6, 1.0, 1000);

    double sum_err = 0.0, prod_err = 0.0;
    double theta_rise = 0.0, field_rise = 0.0, negativity = 0.0, roundtrip = 0.0;
    double prev_theta = 0.0, prev_field = 0.0;
    bool first = true;
    for (double q : grid) {
        const ShapeSet s = shape_set(q);
        const double p2 = s.omega_plus_ratio * s.omega_plus_ratio;
        const double m2 = s.theta * s.theta;
        sum_err = std::max(sum_err, std::abs(p2 + m2 - (2.0 - q)));
        prod_err = std::max(prod_err, std::abs(p2 * m2 - (1.0 + 2.0 * q) * (1.0 - q)));
        negativity = std::max(negativity, std::max(-s.A, -s.B));

        const double field = scaled_field_of_q(q);
        if (!first) {
            theta_rise = std::max(theta_rise, s.theta - prev_theta);
            field_rise = std::max(field_rise, field - prev_field);
        }
        prev_theta = s.theta;
        prev_field = field;
        first = false;

        roundtrip = std::max(roundtrip, std::abs(q_of_scaled_field(field) - q));
    }
    rec.add("mode-identity-sum", sum_err, 1e-12);
    rec.add("mode-identity-product", prod_err, 1e-12);
    rec.add("theta-strictly-decreasing", std::max(theta_rise, 0.0), 0.0);
    rec.add("scaled-field-strictly-decreasing", std::max(field_rise, 0.0), 0.0);
    rec.add("shape-nonnegative", std::max(negativity, 0.0), 0.0);
    rec.add("q-scaled-field-roundtrip", roundtrip, 1e-12);
}

void check_equilibrium(Recorder& rec) {
    double worst_residual = 0.0, worst_q = 0.0;
    for (const auto& particle : particle_registry()) {
        for (int n : {1, 12}) {
            const double omega = kepler_frequency(n, particle);
            for (double q : {0.90, best_confined_q, 0.99}) {
                const double field = field_from_q(q, omega, particle);
                const EquilibriumPoint pt = equilibrium_radius(omega, field, particle);
                worst_residual = std::max(worst_residual, equilibrium_residual(pt, particle));
                worst_q = std::max(worst_q, std::abs(pt.q - q));
            }
        }
    }
    rec.add("equilibrium-solver-residual", worst_residual, 1e-10);
    rec.add("equilibrium-q-roundtrip", worst_q, 1e-10);

    const ParticleSpec muon_spec = muon();
    const double omega = kepler_frequency(12, muon_spec);
    const double q = best_confined_q;
    EquilibriumPoint pt =
        equilibrium_radius(omega, field_from_q(q, omega, muon_spec), muon_spec);
    pt.x0 *= 1.01;
    const double residual = equilibrium_residual(pt, muon_spec);
    const double predicted = (1.0 + 2.0 * q) * 0.01;
    rec.add("equilibrium-residual-sensitivity", rel_err(residual, predicted), 0.05);
}

void check_eigen_oracle(Recorder& rec) {
    const auto grid = q_grid(8.0 / 9.0 + 1e-6, 1.0, 1000);
    double worst = 0.0;
    for (double q : grid) {
        const ShapeSet s = shape_set(q);
        const OracleModes modes = linearized_mode_frequencies(q);
        worst = std::max(worst, rel_err(modes.omega_plus, s.omega_plus_ratio));
        worst = std::max(worst, rel_err(modes.omega_minus, s.theta));
    }
    rec.add("eigenvalue-oracle-agreement", worst, 1e-10);

    int misflagged = 0;
    for (double q : {0.5, 0.80, 0.85, 8.0 / 9.0 - 1e-3, 8.0 / 9.0 - 1e-6})
        if (linearized_mode_frequencies(q).stable) ++misflagged;
    for (double q : {8.0 / 9.0 + 1e-3, 0.9, best_confined_q, 1.0})
        if (!linearized_mode_frequencies(q).stable) ++misflagged;
    rec.add("instability-flagging", static_cast<double>(misflagged), 0.0);

    rec.add("stability-border-bisection",
            std::abs(locate_stability_border(1e-6) - 8.0 / 9.0), 1e-5);
}

void check_moments(Recorder& rec) {
    const ParticleSpec muon_spec = muon();
    const double omega = kepler_frequency(12, muon_spec);
    const double mass = muon_spec.mass_ratio * electron_mass;
    const double fluctuation = reduced_planck / (2.0 * mass * omega);

    double worst_moment = 0.0, worst_norm = 0.0;
    for (double q : q_grid(0.90, 0.9995, 50)) {
        const WavepacketGaussian pkt = make_wavepacket(q, omega, muon_spec);
        const GaussianMoments m = gaussian_moments(pkt);
        worst_moment = std::max(worst_moment, rel_err(m.x2, fluctuation / pkt.A));
        worst_moment = std::max(worst_moment, rel_err(m.y2, fluctuation / pkt.B));
        worst_moment = std::max(worst_moment, rel_err(m.z2, fluctuation / pkt.D));
        worst_norm = std::max(worst_norm, std::abs(m.norm - 1.0));
    }
    rec.add("gaussian-moment-oracle", worst_moment, 1e-8);
    rec.add("gaussian-normalization", worst_norm, 1e-8);

    WavepacketGaussian pkt = make_wavepacket(best_confined_q, omega, muon_spec);
    const GaussianMoments base = gaussian_moments(pkt);
    double spread = 0.0;
    for (double c : {0.0, 10.0 * pkt.C}) {
        WavepacketGaussian variant = pkt;
        variant.C = c;
        const GaussianMoments m = gaussian_moments(variant);
        spread = std::max({spread, rel_err(m.x2, base.x2), rel_err(m.y2, base.y2),
                           rel_err(m.z2, base.z2), rel_err(m.norm, base.norm)});
    }
    rec.add("moment-phase-invariance", spread, 1e-10);
}

void check_rates(Recorder& rec) {
    const ParticleSpec muon_spec = muon();
    const double omega = kepler_frequency(12, muon_spec);
    const double q = best_confined_q;

    const double printed = gamma_ud(q, omega, muon_spec, Convention::AsPrinted);
    const double calibrated = gamma_ud(q, omega, muon_spec, Convention::Calibrated);
    rec.add("convention-pi-ledger", rel_err(printed / calibrated, pi), 1e-12);

    const double base_ratio =
        *resonance_report(1, q, muon_spec, Convention::Calibrated).ratio;
    double spread = 0.0;
    for (const auto& particle : particle_registry())
        for (int n : {1, 12})
            spread = std::max(
                spread,
                rel_err(*resonance_report(n, q, particle, Convention::Calibrated).ratio,
                        base_ratio));
    rec.add("ratio-drive-independence", spread, 1e-13);

    rec.add("ud-rate-vanishes-at-unity", gamma_ud_shape(1.0), 0.0);

    double rise = 0.0;
    double prev = gamma_ud_shape(0.995);
    for (double qq : q_grid(0.995, 1.0, 101)) {
        const double value = gamma_ud_shape(qq);
        rise = std::max(rise, value - prev);
        prev = value;
    }
    rec.add("ud-rate-monotone-near-unity", std::max(rise, 0.0), 0.0);

    rec.add("rate-frequency-squared-scaling",
            rel_err(gamma_ud(q, 2.0 * omega, muon_spec, Convention::AsPrinted) /
                        gamma_ud(q, omega, muon_spec, Convention::AsPrinted),
                    4.0),
            1e-12);
}

void check_kinematics(Recorder& rec) {
    const ParticleSpec muon_spec = muon();
    const ParticleSpec electron_spec = electron();

    double scaling = 0.0;
    for (int n : {2, 3, 5, 12}) {
        const double n2 = static_cast<double>(n) * n;
        scaling = std::max(scaling,
                           rel_err(orbital_acceleration(n, muon_spec) * n2 * n2,
                                   orbital_acceleration(1, muon_spec)));
    }
    rec.add("acceleration-quartic-scaling", scaling, 1e-13);

    rec.add("temperature-quartic-scaling",
            rel_err(unruh_temperature(3, muon_spec) * 81.0,
                    unruh_temperature(1, muon_spec)),
            1e-13);

    const double revs_1 = *revolutions_per_lifetime(1, muon_spec);
    const double revs_12 = *revolutions_per_lifetime(12, muon_spec);
    rec.add("revolutions-cubic-scaling", rel_err(revs_12 * 1728.0, revs_1), 1e-13);

    rec.add("stable-particle-has-no-lifetime",
            revolutions_per_lifetime(1, electron_spec).has_value() ? 1.0 : 0.0, 0.0);
}

void check_spectrum(Recorder& rec) {
    const SpectrumProbe probe;

    double cubic = 0.0;
    for (double gap : {-1.0, -1.778, -3.162, -5.623, -10.0}) {
        const std::complex<double> value = spectrum_probe(probe, gap);
        const double analytic = spectrum_probe_analytic(probe, gap);
        cubic = std::max(cubic, std::abs(value - analytic) / std::abs(analytic));
    }
    rec.add("spectrum-cubic-law", cubic, 0.01);

    const std::complex<double> half = spectrum_probe(probe, -2.0);
    const std::complex<double> doubled = spectrum_probe(probe, -4.0);
    rec.add("spectrum-doubling-quotient",
            std::abs(doubled / half / (8.0 * std::exp(-2.0 * probe.epsilon)) - 1.0),
            0.01);

    rec.add("spectrum-absorption-side",
            std::abs(spectrum_probe(probe, 3.0)) / std::abs(spectrum_probe(probe, -3.0)),
            1e-6);

    SpectrumProbe doubled_eps = probe;
    doubled_eps.epsilon = 2.0 * probe.epsilon;
    rec.add("spectrum-regularization-decay",
            std::abs(spectrum_probe(doubled_eps, -3.0) / spectrum_probe(probe, -3.0) /
                         std::exp(-3.0 * probe.epsilon) -
                     1.0),
            0.01);

    rec.add("spectrum-emission-side-negative",
            emission_side(probe) == -1 ? 0.0 : 1.0, 0.0);
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Recorder rec{results, options};
    check_constants(rec);
    check_harmonic(rec);
    check_equilibrium(rec);
    check_eigen_oracle(rec);
    check_moments(rec);
    check_rates(rec);
    check_kinematics(rec);
    check_spectrum(rec);
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace trojan
