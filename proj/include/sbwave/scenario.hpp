#ifndef SBWAVE_SCENARIO_HPP
#define SBWAVE_SCENARIO_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <string>

#include "sbwave/kinematics.hpp"
#include "sbwave/mp_bessel.hpp"

namespace sbwave {

/// Electron mass in eV; the boundary between the file format (eV) and
/// the internal m = 1 unit system.
constexpr double electron_mass_ev = 510998.95;

/// Raw, eV-based scenario fields exactly as given in the file.
/// Kept separate from the derived objects so that a scenario
/// round-trips through dump_scenario/parse_scenario without loss.
struct ScenarioInput {
    double wave1_omega_ev = 0.0;
    double wave1_eta = 0.0;
    bool wave1_eta_given = false;
    double wave1_field_crit = 0.0;  ///< field strength as a fraction of m^2/e
    bool wave1_field_given = false;
    Eigen::Vector2d wave1_pol = Eigen::Vector2d(1.0, 0.0);

    double wave2_omega_ev = 0.0;
    double wave2_eta = 0.0;
    bool wave2_eta_given = false;
    double wave2_field_crit = 0.0;
    bool wave2_field_given = false;
    Eigen::Vector2d wave2_pol = Eigen::Vector2d(1.0, 0.0);

    double electron_kinetic_ev = 0.0;
    Eigen::Vector3d electron_direction = Eigen::Vector3d(0.0, 0.0, 1.0);
    Eigen::Vector3d electron_final_direction = Eigen::Vector3d::Zero();
    bool final_direction_given = false;
    Eigen::Vector3d electron_final_momentum_ev = Eigen::Vector3d::Zero();
    bool final_momentum_given = false;

    int nucleus_z = 1;

    double photon_omega_ev = 0.0;
    Eigen::Vector3d photon_direction = Eigen::Vector3d(0.0, 0.0, 1.0);

    double opt_tol = 1e-10;
    double opt_tail_tol = 1e-4;
    std::string opt_mode = "auto";  ///< auto|noninterference|factorized|interference

    bool operator==(const ScenarioInput&) const = default;
};

/// Validated scenario in internal units (m = 1).
struct Scenario {
    ScenarioInput input;
    WaveConfig wave1, wave2;
    ScatteringKinematics kin;
    int z = 1;
    Tolerance tol;
    double tail_tol = 1e-4;
    std::string mode = "auto";
};

/// Parses the key = value scenario format and validates the physics.
/// ParseError carries line/field context; ValidationError names the
/// violated invariant.
Scenario parse_scenario(std::istream& in, const std::string& name);
Scenario load_scenario(const std::string& path);

/// Builds the derived objects from raw input (also used by tests to
/// construct scenarios programmatically).
Scenario make_scenario(const ScenarioInput& input, const std::string& name);

/// Canonical key = value text; parse_scenario(dump_scenario(s)) restores
/// the input fields exactly.
std::string dump_scenario(const Scenario& s);

}  // namespace sbwave

#endif
