#ifndef EVACSIM_SCENARIO_IO_HPP
#define EVACSIM_SCENARIO_IO_HPP

#include <stdexcept>
#include <string>

#include "evacsim/scenarios.hpp"

namespace evacsim {

/// Raised on malformed scenario documents; the message carries the
/// offending key path or parse location.
class ScenarioParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses the JSON scenario document. Unknown keys are rejected (a typo
/// in an experiment config must not silently fall back to a default);
/// missing keys take the documented defaults.
///
/// Schema:
///   {
///     "label": string, "seed": u64,
///     "room": {"width": num, "height": num},
///     "layout": {"exits": "four_corners"|"six_exits",
///                "restriction": "unrestricted"|"split_access",
///                "restricted_openings_solid": bool},
///     "population": {"n_total": int, "n_disabled": int,
///                    "placement": "none"|"front"|"middle"|"random"},
///     "bodies": {"able": {"radius": num, "mass": num},
///                "disabled": {"radius": num, "mass": num},
///                "base_speed": num},
///     "sim": {"p_fall": num, "p_recover": num, "max_steps": int,
///             "solver_iterations": int, "penetration_tolerance": num,
///             "target_midpoint": bool, "can_fall": bool}
///   }
ScenarioConfig parse_scenario_json(const std::string& text);

ScenarioConfig load_scenario_file(const std::string& path);

/// Serializes a recipe back to the schema above (round-trips through
/// parse_scenario_json to an identical config).
std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace evacsim

#endif  // EVACSIM_SCENARIO_IO_HPP
