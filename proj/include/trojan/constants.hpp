#pragma once

#include <optional>
#include <string>
#include <vector>

namespace trojan {

/// Pinned CODATA-2018 values in SI units. All derived quantities in the
/// library trace back to this single table.
struct PhysicalConstants {
    double elementary_charge;    // C
    double electron_mass;        // kg
    double reduced_planck;       // J*s
    double vacuum_permittivity;  // F/m
    double light_speed;          // m/s
    double boltzmann;            // J/K
    double standard_gravity;     // m/s^2
    double fine_structure;       // dimensionless
};

namespace constants {

inline constexpr double elementary_charge   = 1.602176634e-19;
inline constexpr double electron_mass       = 9.1093837015e-31;
inline constexpr double reduced_planck      = 1.054571817e-34;
inline constexpr double vacuum_permittivity = 8.8541878128e-12;
inline constexpr double light_speed         = 299792458.0;
inline constexpr double boltzmann           = 1.380649e-23;
inline constexpr double standard_gravity    = 9.80665;
inline constexpr double fine_structure      = 7.2973525693e-3;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Electron-scale atomic units derived from the pins above.
inline constexpr double coulomb_constant =
    1.0 / (4.0 * pi * vacuum_permittivity);  // 1/(4 pi eps0), N*m^2/C^2
inline constexpr double bohr_radius =
    reduced_planck * reduced_planck /
    (coulomb_constant * electron_mass * elementary_charge * elementary_charge);  // m
inline constexpr double hartree_energy =
    reduced_planck * reduced_planck / (electron_mass * bohr_radius * bohr_radius);  // J
inline constexpr double atomic_frequency = hartree_energy / reduced_planck;  // rad/s
inline constexpr double atomic_field =
    hartree_energy / (elementary_charge * bohr_radius);  // V/m
inline constexpr double atomic_time = reduced_planck / hartree_energy;  // s

} // namespace constants

/// The full pinned table as one value (used by dumps and reports).
PhysicalConstants physical_constants();

/// Charged particle orbiting the proton. Mass enters as the ratio to the
/// electron mass, charge as a magnitude in units of e; sign conventions are
/// handled downstream.
struct ParticleSpec {
    std::string name;
    double mass_ratio;        // m / m_e
    double charge_magnitude;  // |z| in units of e
    std::optional<double> mean_lifetime;  // s; nullopt = stable
};

/// Validates and returns a particle spec. Throws std::invalid_argument on
/// nonpositive mass ratio or charge.
ParticleSpec make_particle(std::string name, double mass_ratio, double charge_magnitude,
                           std::optional<double> mean_lifetime);

const ParticleSpec& electron();
const ParticleSpec& muon();

/// Built-in particles, in registry order.
const std::vector<ParticleSpec>& particle_registry();

/// Case-sensitive registry lookup; throws std::invalid_argument for unknown
/// names (the message lists the known ones).
const ParticleSpec& find_particle(const std::string& name);

enum class Quantity { Length, Time, Frequency, Field, Energy };

/// Atomic units scaled to a particle of the given mass ratio: lengths shrink
/// as 1/mr, frequencies grow as mr, fields as mr^2.
class UnitContext {
public:
    explicit UnitContext(const ParticleSpec& particle);

    double length_unit() const { return length_; }      // m
    double time_unit() const { return time_; }          // s
    double frequency_unit() const { return frequency_; }  // rad/s
    double field_unit() const { return field_; }        // V/m
    double energy_unit() const { return energy_; }      // J

    double unit(Quantity kind) const;
    double to_si(double value, Quantity kind) const { return value * unit(kind); }
    double from_si(double value, Quantity kind) const { return value / unit(kind); }

private:
    double length_, time_, frequency_, field_, energy_;
};

/// Kepler resonance drive frequency for circular orbit n: omega = 1/n^3 in
/// particle atomic units, returned in rad/s. Throws for n < 1.
double kepler_frequency(int n, const ParticleSpec& particle);

/// Vacuum wavelength 2 pi c / omega. Throws for omega <= 0.
double wavelength_of(double omega);

} // namespace trojan
