/**
 * @file run_config.hpp
 * @brief Run configuration documents: explicit defects, row generators for
 *        defect channels, solver and diagram settings.
 *
 * The document is JSON. Angles may be given as numbers (radians) or as
 * strings with a "deg" suffix ("135deg"). Example:
 *
 *   {
 *     "material": {"mu_plus": 1, "mu_minus": 1},
 *     "load": {"force": 1, "a": 0.5},
 *     "tip": {"x": 0.5},
 *     "alpha": "135deg",
 *     "arrays": [
 *       {"kind": "microcrack", "side": "upper", "count": 9, "x_start": 1,
 *        "spacing": 1, "standoff": 1.2, "half_length": 0.1},
 *       {"kind": "microcrack", "side": "lower", "count": 9, "x_start": 1,
 *        "spacing": 1, "standoff": 1.2, "half_length": 0.1,
 *        "angle_offset": "-90deg"}
 *     ]
 *   }
 */
#ifndef CRACKCHANNEL_RUN_CONFIG_HPP
#define CRACKCHANNEL_RUN_CONFIG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crackchannel/core_model.hpp"
#include "crackchannel/unperturbed_field.hpp"

namespace crackchannel {

/// One row of equally spaced, equally inclined defects.
struct ArrayGenerator {
    DefectKind kind = DefectKind::Microcrack;
    Side side = Side::Upper;
    std::size_t count = 0;
    double x_start = 0.0;
    double spacing = 1.0;    ///< w
    double standoff = 1.0;   ///< h, distance of the centres from the bond line
    double half_length = 0.1;
    /// Row inclination; the run-level alpha when unset.
    std::optional<double> angle;
    /// Added to the inclination, e.g. -pi/2 for a perpendicular row.
    double angle_offset = 0.0;
};

struct DiagramSettings {
    std::optional<double> x_min;   ///< distance from the load point; default: initial a
    std::optional<double> x_max;   ///< default: last defect column + one spacing
    std::optional<double> x_step;  ///< default: spacing / 50
    std::size_t alpha_count = 181;
    double neutral_tol = 1e-12;
};

struct RunConfig {
    Bimaterial material;
    LoadCase load;
    double tip_x = 0.0;
    double alpha = 0.0;  ///< channel inclination shared by generators without an explicit angle
    SolverSettings solver;
    std::vector<Defect> defects;
    std::vector<ArrayGenerator> arrays;
    DiagramSettings diagram;
};

/// Parse a run configuration; throws ConfigError naming the line or field.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::string& path);

/// Canonical JSON (radians, explicit load_x); parse(serialize(r)) == r.
std::string serialize_run_config(const RunConfig& run);

bool operator==(const ArrayGenerator& a, const ArrayGenerator& b);
bool operator==(const RunConfig& a, const RunConfig& b);

/// Effective inclination of a generator's defects for a channel angle.
double generator_angle(const ArrayGenerator& gen, double alpha);

/// Explicit defects followed by generated ones; generated defects are
/// ordered column by column left to right, upper row first in a column.
/// The result is validated; violations throw ConfigError with the source
/// of each offending defect (defects[i] or arrays[g] column k).
Configuration expand_arrays(const RunConfig& run);

/// expand_arrays() with every generator set to channel angle alpha.
Configuration expand_arrays(const RunConfig& run, double alpha);

/// Parse an angle literal: radians, or degrees with a "deg" suffix.
std::optional<double> parse_angle(std::string_view text);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_RUN_CONFIG_HPP
