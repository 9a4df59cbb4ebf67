/**
 * @file core_model.hpp
 * @brief Domain types and configuration validation for an interfacial
 *        Mode III crack interacting with small line defects.
 *
 * Frame: the bond line between the two half-planes is the x-axis. The main
 * crack occupies x < x_tip on that line, the upper half-plane (y > 0) has
 * shear modulus mu_plus and the lower one mu_minus. The two symmetric point
 * forces act on the crack faces at a fixed global abscissa load_x, so the
 * load-tip distance a = x_tip - load_x grows as the crack advances.
 *
 * Defects are stored in global coordinates. Their physical half-length s
 * enters all formulas directly (the small parameter and the normalised
 * length never appear separately).
 */
#ifndef CRACKCHANNEL_CORE_MODEL_HPP
#define CRACKCHANNEL_CORE_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crackchannel {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Bimaterial {
    double mu_plus = 1.0;   ///< shear modulus of the upper half-plane
    double mu_minus = 1.0;  ///< shear modulus of the lower half-plane

    /// eta = (mu_minus - mu_plus) / (mu_minus + mu_plus), in (-1, 1).
    double contrast() const { return (mu_minus - mu_plus) / (mu_minus + mu_plus); }

    /// Moduli with mu_plus + mu_minus = 2 reproducing a given contrast.
    static Bimaterial from_contrast(double eta);
};

enum class DefectKind { Microcrack, RigidLineInclusion };

std::string_view to_string(DefectKind kind);
std::optional<DefectKind> parse_defect_kind(std::string_view text);

struct Defect {
    DefectKind kind = DefectKind::Microcrack;
    Point centre;
    double half_length = 0.0;  ///< s
    double angle = 0.0;        ///< inclination to the x-axis, radians
};

/// Reduce an inclination to [0, pi); line defects have period pi.
double reduce_angle(double alpha);

/// Checked construction: throws DomainError on a violated defect invariant.
/// The returned defect carries its angle reduced modulo pi.
Defect make_defect(DefectKind kind, Point centre, double half_length, double angle);

/// Tip-relative polar position of a defect centre.
struct DefectPolar {
    double d = 0.0;    ///< distance from the tip
    double phi = 0.0;  ///< angle in (-pi, pi] measured from the bond line ahead of the tip
};

struct LoadCase {
    double force = 1.0;   ///< F
    double load_x = 0.0;  ///< global abscissa of the two point forces
};

struct TipState {
    double x_tip = 0.0;
    double a = 0.0;  ///< x_tip - load_x

    static TipState at(double x_tip, const LoadCase& load) { return {x_tip, x_tip - load.load_x}; }
};

struct SolverSettings {
    std::size_t max_steps = 1000000;
    /// Arrest when the computed advance is <= arrest_tol (length units).
    double arrest_tol = 1e-10;
    /// Cap on a single advance; resolved by validate() to a tenth of the
    /// smallest defect standoff when unset.
    std::optional<double> max_increment;
    /// Defects closer than validity_ratio * s to the tip are rejected.
    double validity_ratio = 2.0;
};

struct Configuration {
    Bimaterial material;
    LoadCase load;
    TipState tip;
    std::vector<Defect> defects;
    SolverSettings solver;
};

/// Throws SingularityError("defect at tip") when the centre coincides with the tip.
DefectPolar to_polar(const Defect& defect, const TipState& tip);
DefectPolar to_polar(Point centre, const TipState& tip);

struct Issue {
    std::optional<std::size_t> defect_index;
    std::string rule;
    std::string message;
};

std::string describe(const Issue& issue);

struct ValidationResult {
    std::optional<Configuration> config;  ///< set only when there are no errors
    std::vector<Issue> errors;
    std::vector<Issue> warnings;

    bool ok() const { return errors.empty(); }
};

/// Distance multiple of s below which validate() warns.
inline constexpr double kWarnRatio = 10.0;

/// Check every configuration invariant. The accepted configuration has its
/// defect angles reduced, its tip distance recomputed from load_x and its
/// max_increment resolved.
ValidationResult validate(const Configuration& config);

/// validate() that throws ConfigError listing every violation.
Configuration validated(const Configuration& config);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_CORE_MODEL_HPP
