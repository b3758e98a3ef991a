#include <algorithm>
#include <clocale>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trojan/constants.hpp"
#include "trojan/harmonic.hpp"
#include "trojan/kinematics.hpp"
#include "trojan/rates.hpp"
#include "trojan/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace trojan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

std::string sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", value);
    return buf;
}

std::string sci_or_empty(const std::optional<double>& value) {
    return value ? sci(*value) : std::string();
}

ordered_json json_or_null(const std::optional<double>& value) {
    if (value) return *value;
    return nullptr;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return kExitOk;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        std::fprintf(stderr, "error: cannot open output file '%s'\n", out_path.c_str());
        return kExitUsage;
    }
    file << text;
    return file ? kExitOk : kExitUsage;
}

// ---------------------------------------------------------------- key/value

struct Field {
    std::string key;
    std::string value;      // already formatted; empty string means "no value"
    ordered_json as_json;   // typed value for the json renderer
};

Field field(std::string key, double value) { return {std::move(key), sci(value), value}; }
Field field(std::string key, int value) { return {std::move(key), std::to_string(value), value}; }
Field field(std::string key, const std::string& value) { return {std::move(key), value, value}; }
Field field(std::string key, const std::optional<double>& value) {
    return {std::move(key), sci_or_empty(value), json_or_null(value)};
}

std::string render_fields_text(const std::vector<Field>& fields) {
    std::size_t width = 0;
    for (const auto& f : fields) width = std::max(width, f.key.size());
    std::string out;
    for (const auto& f : fields) {
        out += f.key;
        out.append(width - f.key.size(), ' ');
        out += " = ";
        out += f.value;
        out += '\n';
    }
    return out;
}

std::string render_fields_csv(const std::vector<Field>& fields) {
    std::string out = "field,value\n";
    for (const auto& f : fields) out += f.key + "," + f.value + "\n";
    return out;
}

std::string render_fields_json(const std::vector<Field>& fields) {
    ordered_json object;
    for (const auto& f : fields) object[f.key] = f.as_json;
    return object.dump(2) + "\n";
}

std::string render_fields(const std::vector<Field>& fields, const std::string& format) {
    if (format == "json") return render_fields_json(fields);
    if (format == "csv") return render_fields_csv(fields);
    return render_fields_text(fields);
}

// ------------------------------------------------------------------ config

struct CommonConfig {
    std::string particle_name = "muon";
    int n = 1;
    double q = best_confined_q;
    bool q_given = false;
    double scaled_field = 0.0;
    bool scaled_field_given = false;
    std::string convention_name = "calibrated";
    std::string format = "text";
    std::string out_path;
};

double resolve_q(const CommonConfig& config) {
    if (config.scaled_field_given) return q_of_scaled_field(config.scaled_field);
    return config.q;
}

// ------------------------------------------------------------------ report

int run_report(const CommonConfig& config) {
    const ParticleSpec particle = find_particle(config.particle_name);
    const Convention convention = convention_from_string(config.convention_name);
    const double q = resolve_q(config);

    const RateReport rate = resonance_report(config.n, q, particle, convention);
    const KinematicsReport kin = kinematics_report(config.n, particle);
    const ShapeSet shape = shape_set(q);

    std::vector<Field> fields;
    fields.push_back(field("particle", particle.name));
    fields.push_back(field("mass_ratio", particle.mass_ratio));
    fields.push_back(field("n", config.n));
    fields.push_back(field("convention", std::string(to_string(convention))));
    fields.push_back(field("q", rate.q));
    fields.push_back(field("scaled_field", rate.drive.scaled_field));
    fields.push_back(field("omega_rad_per_s", rate.omega));
    fields.push_back(field("wavelength_m", rate.drive.wavelength));
    fields.push_back(field("field_v_per_m", rate.drive.field_amplitude));
    fields.push_back(field("intensity_w_per_m2", rate.drive.intensity));
    fields.push_back(field("x0_m", rate.drive.x0));
    fields.push_back(field("theta", shape.theta));
    fields.push_back(field("energy_gap_j", rate.energy_gap));
    fields.push_back(field("gamma_ud_per_s", rate.gamma_ud));
    fields.push_back(field("gamma_sp_per_s", rate.gamma_sp));
    fields.push_back(field("ratio", rate.ratio));
    fields.push_back(field("acceleration_m_per_s2", kin.acceleration));
    fields.push_back(field("acceleration_g", kin.acceleration_g));
    fields.push_back(field("temperature_k", kin.temperature));
    fields.push_back(field("beta", kin.beta));
    fields.push_back(field("lorentz_gamma", kin.lorentz_gamma));
    fields.push_back(field("revolutions_per_lifetime", kin.revolutions));

    return emit(render_fields(fields, config.format), config.out_path);
}

// ------------------------------------------------------------------- sweep

struct SweepConfig {
    CommonConfig common;
    double q_from = 0.89;
    double q_to = 0.9999;
    int points = 400;
    std::string grid = "q";
};

struct SweepRow {
    double q;
    double scaled_field;
    ShapeSet shape;
    double gamma_ud_value;
    std::optional<double> gamma_sp_value;
    std::optional<double> ratio_value;
};

const char* const kSweepColumns[] = {
    "q",        "scaled_field",   "theta",          "A",
    "B",        "C",              "lambda",         "alpha_tilde_sq",
    "gamma_ud_per_s", "gamma_sp_per_s", "ratio",
};

std::vector<std::string> row_cells(const SweepRow& row) {
    return {
        sci(row.q),
        sci(row.scaled_field),
        sci(row.shape.theta),
        sci(row.shape.A),
        sci(row.shape.B),
        sci(row.shape.C),
        sci(row.shape.lambda),
        sci(row.shape.alpha_tilde_sq),
        sci(row.gamma_ud_value),
        sci_or_empty(row.gamma_sp_value),
        sci_or_empty(row.ratio_value),
    };
}

int run_sweep(const SweepConfig& config) {
    const ParticleSpec particle = find_particle(config.common.particle_name);
    const Convention convention = convention_from_string(config.common.convention_name);
    const double q_min = stability_window().q_min;

    if (config.points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (!(config.q_from < config.q_to))
        throw std::invalid_argument("sweep needs --q-from < --q-to");
    if (!(config.q_from > q_min) || !(config.q_to <= 1.0))
        throw std::invalid_argument(
            "sweep range must lie inside the stability window (8/9, 1]");
    if (config.grid != "q" && config.grid != "scaled-field")
        throw std::invalid_argument("sweep grid must be 'q' or 'scaled-field'");

    std::vector<double> qs(config.points);
    const int last = config.points - 1;
    if (config.grid == "q") {
        for (int i = 0; i <= last; ++i)
            qs[i] = config.q_from +
                    (config.q_to - config.q_from) * static_cast<double>(i) / last;
        qs.back() = config.q_to;
    } else {
        const double sf_hi = scaled_field_of_q(config.q_from);
        const double sf_lo = scaled_field_of_q(config.q_to);
        for (int i = 0; i <= last; ++i) {
            const double sf = sf_hi + (sf_lo - sf_hi) * static_cast<double>(i) / last;
            qs[i] = q_of_scaled_field(sf);
        }
        qs.back() = q_of_scaled_field(sf_lo);
    }

    const double omega = kepler_frequency(config.common.n, particle);
    std::vector<SweepRow> rows;
    rows.reserve(qs.size());
    for (double q : qs) {
        SweepRow row;
        row.q = q;
        row.scaled_field = scaled_field_of_q(q);
        row.shape = shape_set(q);
        row.gamma_ud_value = gamma_ud(q, omega, particle, convention);
        if (q < 1.0) {
            row.gamma_sp_value = gamma_sp(q, omega, particle);
            row.ratio_value = row.gamma_ud_value / *row.gamma_sp_value;
        }
        rows.push_back(row);
    }

    std::string rendered;
    if (config.common.format == "json") {
        ordered_json doc;
        doc["config"] = {{"particle", particle.name},
                         {"n", config.common.n},
                         {"convention", to_string(convention)},
                         {"grid", config.grid},
                         {"q_from", config.q_from},
                         {"q_to", config.q_to},
                         {"points", config.points}};
        ordered_json array = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["q"] = row.q;
            r["scaled_field"] = row.scaled_field;
            r["theta"] = row.shape.theta;
            r["A"] = row.shape.A;
            r["B"] = row.shape.B;
            r["C"] = row.shape.C;
            r["lambda"] = row.shape.lambda;
            r["alpha_tilde_sq"] = row.shape.alpha_tilde_sq;
            r["gamma_ud_per_s"] = row.gamma_ud_value;
            r["gamma_sp_per_s"] = json_or_null(row.gamma_sp_value);
            r["ratio"] = json_or_null(row.ratio_value);
            array.push_back(std::move(r));
        }
        doc["rows"] = std::move(array);
        rendered = doc.dump(2) + "\n";
    } else if (config.common.format == "text") {
        std::vector<std::vector<std::string>> table;
        table.emplace_back(std::begin(kSweepColumns), std::end(kSweepColumns));
        for (const auto& row : rows) table.push_back(row_cells(row));
        std::array<std::size_t, 11> widths{};
        for (const auto& cells : table)
            for (std::size_t c = 0; c < cells.size(); ++c)
                widths[c] = std::max(widths[c], cells[c].size());
        for (const auto& cells : table) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                rendered += cells[c];
                if (c + 1 < cells.size())
                    rendered.append(widths[c] - cells[c].size() + 2, ' ');
            }
            rendered += '\n';
        }
    } else {
        for (std::size_t c = 0; c < std::size(kSweepColumns); ++c) {
            rendered += kSweepColumns[c];
            rendered += (c + 1 < std::size(kSweepColumns)) ? ',' : '\n';
        }
        for (const auto& row : rows) {
            const auto cells = row_cells(row);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                rendered += cells[c];
                rendered += (c + 1 < cells.size()) ? ',' : '\n';
            }
        }
    }
    return emit(rendered, config.common.out_path);
}

// -------------------------------------------------------------- kinematics

int run_kinematics(const CommonConfig& config) {
    const ParticleSpec particle = find_particle(config.particle_name);
    const KinematicsReport kin = kinematics_report(config.n, particle);

    std::vector<Field> fields;
    fields.push_back(field("particle", particle.name));
    fields.push_back(field("mass_ratio", particle.mass_ratio));
    fields.push_back(field("n", config.n));
    fields.push_back(field("omega_rad_per_s", kin.omega));
    fields.push_back(field("acceleration_m_per_s2", kin.acceleration));
    fields.push_back(field("acceleration_g", kin.acceleration_g));
    fields.push_back(field("temperature_k", kin.temperature));
    fields.push_back(field("beta", kin.beta));
    fields.push_back(field("lorentz_gamma", kin.lorentz_gamma));
    fields.push_back(field("revolutions_per_lifetime", kin.revolutions));

    return emit(render_fields(fields, config.format), config.out_path);
}

// --------------------------------------------------------------- constants

int run_constants(const std::string& format, const std::string& out_path) {
    using namespace constants;

    std::vector<Field> pins;
    pins.push_back(field("elementary_charge_c", elementary_charge));
    pins.push_back(field("electron_mass_kg", electron_mass));
    pins.push_back(field("reduced_planck_j_s", reduced_planck));
    pins.push_back(field("vacuum_permittivity_f_per_m", vacuum_permittivity));
    pins.push_back(field("light_speed_m_per_s", light_speed));
    pins.push_back(field("boltzmann_j_per_k", boltzmann));
    pins.push_back(field("standard_gravity_m_per_s2", standard_gravity));
    pins.push_back(field("fine_structure", fine_structure));
    pins.push_back(field("bohr_radius_m", bohr_radius));
    pins.push_back(field("hartree_energy_j", hartree_energy));
    pins.push_back(field("atomic_frequency_rad_per_s", atomic_frequency));
    pins.push_back(field("atomic_field_v_per_m", atomic_field));
    pins.push_back(field("atomic_time_s", atomic_time));

    struct ParticleFields {
        std::string name;
        std::vector<Field> fields;
    };
    std::vector<ParticleFields> sections;
    for (const auto& particle : particle_registry()) {
        const UnitContext units(particle);
        ParticleFields section;
        section.name = particle.name;
        section.fields.push_back(field("mass_ratio", particle.mass_ratio));
        section.fields.push_back(field("charge_magnitude_e", particle.charge_magnitude));
        if (particle.mean_lifetime)
            section.fields.push_back(field("mean_lifetime_s", *particle.mean_lifetime));
        else
            section.fields.push_back(
                Field{"mean_lifetime_s", "stable", ordered_json(nullptr)});
        section.fields.push_back(field("unit_length_m", units.unit(Quantity::Length)));
        section.fields.push_back(field("unit_time_s", units.unit(Quantity::Time)));
        section.fields.push_back(
            field("unit_frequency_rad_per_s", units.unit(Quantity::Frequency)));
        section.fields.push_back(field("unit_field_v_per_m", units.unit(Quantity::Field)));
        section.fields.push_back(field("unit_energy_j", units.unit(Quantity::Energy)));
        sections.push_back(std::move(section));
    }

    std::string rendered;
    if (format == "json") {
        ordered_json doc;
        for (const auto& f : pins) doc["constants"][f.key] = f.as_json;
        ordered_json particles = ordered_json::array();
        for (const auto& section : sections) {
            ordered_json p;
            p["name"] = section.name;
            for (const auto& f : section.fields) p[f.key] = f.as_json;
            particles.push_back(std::move(p));
        }
        doc["particles"] = std::move(particles);
        rendered = doc.dump(2) + "\n";
    } else if (format == "csv") {
        rendered = "section,field,value\n";
        for (const auto& f : pins) rendered += "constants," + f.key + "," + f.value + "\n";
        for (const auto& section : sections)
            for (const auto& f : section.fields)
                rendered += "particle:" + section.name + "," + f.key + "," + f.value + "\n";
    } else {
        rendered = "[constants]\n" + render_fields_text(pins);
        for (const auto& section : sections) {
            rendered += "\n[particle " + section.name + "]\n";
            rendered += render_fields_text(section.fields);
        }
    }
    return emit(rendered, out_path);
}

// ------------------------------------------------------------------ verify

int run_verify(const std::optional<double>& tolerance, const std::string& format,
               const std::string& out_path) {
    VerifyOptions options;
    options.tolerance = tolerance;
    const std::vector<CheckResult> results = run_verification(options);
    const bool ok = all_passed(results);

    std::string rendered;
    if (format == "json") {
        ordered_json doc;
        ordered_json checks = ordered_json::array();
        for (const auto& r : results) {
            ordered_json c;
            c["name"] = r.name;
            c["measured"] = r.measured;
            c["threshold"] = r.threshold;
            c["passed"] = r.passed;
            checks.push_back(std::move(c));
        }
        doc["checks"] = std::move(checks);
        doc["all_passed"] = ok;
        rendered = doc.dump(2) + "\n";
    } else if (format == "csv") {
        rendered = "name,measured,threshold,status\n";
        for (const auto& r : results)
            rendered += r.name + "," + sci(r.measured) + "," + sci(r.threshold) + "," +
                        (r.passed ? "pass" : "fail") + "\n";
    } else {
        std::size_t width = 0;
        for (const auto& r : results) width = std::max(width, r.name.size());
        std::size_t passed = 0;
        for (const auto& r : results) {
            rendered += r.passed ? "PASS  " : "FAIL  ";
            rendered += r.name;
            rendered.append(width - r.name.size() + 2, ' ');
            rendered += "measured=" + sci(r.measured) + "  threshold=" + sci(r.threshold) + "\n";
            if (r.passed) ++passed;
        }
        rendered += (ok ? "all checks passed (" : "FAILURES: passed ") +
                    std::to_string(passed) + (ok ? "/" : " of ") +
                    std::to_string(results.size()) + (ok ? ")\n" : " checks\n");
    }
    const int emit_code = emit(rendered, out_path);
    if (emit_code != kExitOk) return emit_code;
    return ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"Trojan wavepacket harmonic theory: drive parameters, vacuum "
                 "excitation and spontaneous decay rates, orbit kinematics"};
    app.require_subcommand(1);

    const auto format_validator = CLI::IsMember({"csv", "json", "text"});
    const auto convention_validator = CLI::IsMember({"calibrated", "printed"});

    CommonConfig report_config;
    CLI::App* report_cmd =
        app.add_subcommand("report", "single-point rate and kinematics report");
    report_cmd->add_option("--particle", report_config.particle_name, "particle name");
    report_cmd->add_option("--n", report_config.n, "principal quantum number");
    CLI::Option* q_opt =
        report_cmd->add_option("--q", report_config.q, "confinement parameter q");
    CLI::Option* sf_opt = report_cmd->add_option("--scaled-field", report_config.scaled_field,
                                                 "scaled drive field (1-q)/q^(1/3)");
    q_opt->excludes(sf_opt);
    sf_opt->excludes(q_opt);
    report_cmd->add_option("--convention", report_config.convention_name,
                           "rate convention")->transform(convention_validator);
    report_cmd->add_option("--format", report_config.format, "output format")
        ->transform(format_validator);
    report_cmd->add_option("--out", report_config.out_path, "write output to file");

    SweepConfig sweep_config;
    sweep_config.common.format = "csv";
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "table of shape functions and "
                                                      "rates over a q range");
    sweep_cmd->add_option("--particle", sweep_config.common.particle_name, "particle name");
    sweep_cmd->add_option("--n", sweep_config.common.n, "principal quantum number");
    sweep_cmd->add_option("--q-from", sweep_config.q_from, "lower q bound");
    sweep_cmd->add_option("--q-to", sweep_config.q_to, "upper q bound");
    sweep_cmd->add_option("--points", sweep_config.points, "grid size");
    sweep_cmd->add_option("--grid", sweep_config.grid, "grid spacing: q | scaled-field")
        ->transform(CLI::IsMember({"q", "scaled-field"}));
    sweep_cmd->add_option("--convention", sweep_config.common.convention_name,
                          "rate convention")->transform(convention_validator);
    sweep_cmd->add_option("--format", sweep_config.common.format, "output format")
        ->transform(format_validator);
    sweep_cmd->add_option("--out", sweep_config.common.out_path, "write output to file");

    CommonConfig kin_config;
    CLI::App* kin_cmd =
        app.add_subcommand("kinematics", "orbit acceleration, temperature, revolutions");
    kin_cmd->add_option("--particle", kin_config.particle_name, "particle name");
    kin_cmd->add_option("--n", kin_config.n, "principal quantum number");
    kin_cmd->add_option("--format", kin_config.format, "output format")
        ->transform(format_validator);
    kin_cmd->add_option("--out", kin_config.out_path, "write output to file");

    std::string constants_format = "text";
    std::string constants_out;
    CLI::App* constants_cmd =
        app.add_subcommand("constants", "pinned constants and particle registry");
    constants_cmd->add_option("--format", constants_format, "output format")
        ->transform(format_validator);
    constants_cmd->add_option("--out", constants_out, "write output to file");

    double verify_tolerance = 0.0;
    std::string verify_format = "text";
    std::string verify_out;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run every numerical oracle and invariant");
    CLI::Option* tol_opt = verify_cmd->add_option("--tolerance", verify_tolerance,
                                                  "override every check threshold");
    verify_cmd->add_option("--format", verify_format, "output format")
        ->transform(format_validator);
    verify_cmd->add_option("--out", verify_out, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (report_cmd->parsed()) {
            report_config.q_given = q_opt->count() > 0;
            report_config.scaled_field_given = sf_opt->count() > 0;
            return run_report(report_config);
        }
        if (sweep_cmd->parsed()) return run_sweep(sweep_config);
        if (kin_cmd->parsed()) return run_kinematics(kin_config);
        if (constants_cmd->parsed()) return run_constants(constants_format, constants_out);
        if (verify_cmd->parsed()) {
            std::optional<double> tolerance;
            if (tol_opt->count() > 0) tolerance = verify_tolerance;
            return run_verify(tolerance, verify_format, verify_out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
