#include "trojan/constants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trojan {

PhysicalConstants physical_constants() {
    return PhysicalConstants{
        constants::elementary_charge,
        constants::electron_mass,
        constants::reduced_planck,
        constants::vacuum_permittivity,
        constants::light_speed,
        constants::boltzmann,
        constants::standard_gravity,
        constants::fine_structure,
    };
}

ParticleSpec make_particle(std::string name, double mass_ratio, double charge_magnitude,
                           std::optional<double> mean_lifetime) {
    if (!(mass_ratio > 0.0))
        throw std::invalid_argument("particle mass ratio must be positive");
    if (!(charge_magnitude > 0.0))
        throw std::invalid_argument("particle charge magnitude must be positive");
    if (mean_lifetime && !(*mean_lifetime > 0.0))
        throw std::invalid_argument("particle mean lifetime must be positive");
    return ParticleSpec{std::move(name), mass_ratio, charge_magnitude, mean_lifetime};
}

const ParticleSpec& electron() {
    static const ParticleSpec p = make_particle("electron", 1.0, 1.0, std::nullopt);
    return p;
}

const ParticleSpec& muon() {
    static const ParticleSpec p = make_particle("muon", 206.7683, 1.0, 2.1970e-6);
    return p;
}

const std::vector<ParticleSpec>& particle_registry() {
    static const std::vector<ParticleSpec> reg = {electron(), muon()};
    return reg;
}

const ParticleSpec& find_particle(const std::string& name) {
    for (const auto& p : particle_registry())
        if (p.name == name) return p;
    std::ostringstream msg;
    msg << "unknown particle \"" << name << "\"; known:";
    for (const auto& p : particle_registry()) msg << ' ' << p.name;
    throw std::invalid_argument(msg.str());
}

UnitContext::UnitContext(const ParticleSpec& particle) {
    const double mr = particle.mass_ratio;
    length_ = constants::bohr_radius / mr;
    frequency_ = mr * constants::atomic_frequency;
    time_ = 1.0 / frequency_;
    field_ = mr * mr * constants::atomic_field;
    energy_ = mr * constants::hartree_energy;
}

double UnitContext::unit(Quantity kind) const {
    switch (kind) {
        case Quantity::Length: return length_;
        case Quantity::Time: return time_;
        case Quantity::Frequency: return frequency_;
        case Quantity::Field: return field_;
        case Quantity::Energy: return energy_;
    }
    throw std::logic_error("unreachable quantity kind");
}

double kepler_frequency(int n, const ParticleSpec& particle) {
    if (n < 1) throw std::invalid_argument("Rydberg number n must be >= 1");
    const double nd = static_cast<double>(n);
    return particle.mass_ratio * constants::atomic_frequency / (nd * nd * nd);
}

double wavelength_of(double omega) {
    if (!(omega > 0.0)) throw std::domain_error("wavelength requires omega > 0");
    return 2.0 * constants::pi * constants::light_speed / omega;
}

} // namespace trojan
