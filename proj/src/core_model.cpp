#include "crackchannel/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "crackchannel/errors.hpp"

namespace crackchannel {

Bimaterial Bimaterial::from_contrast(double eta) {
    if (!(eta > -1.0 && eta < 1.0)) {
        throw DomainError("contrast parameter must lie in (-1, 1)");
    }
    return {1.0 - eta, 1.0 + eta};
}

std::string_view to_string(DefectKind kind) {
    switch (kind) {
    case DefectKind::Microcrack:
        return "microcrack";
    case DefectKind::RigidLineInclusion:
        return "rigid";
    }
    return "unknown";
}

std::optional<DefectKind> parse_defect_kind(std::string_view text) {
    if (text == "microcrack" || text == "crack") {
        return DefectKind::Microcrack;
    }
    if (text == "rigid" || text == "rigid_line_inclusion" || text == "inclusion") {
        return DefectKind::RigidLineInclusion;
    }
    return std::nullopt;
}

double reduce_angle(double alpha) {
    constexpr double pi = std::numbers::pi;
    double r = std::fmod(alpha, pi);
    if (r < 0.0) {
        r += pi;
    }
    // fmod of a value just below a negative multiple of pi can round up to pi
    return r >= pi ? 0.0 : r;
}

namespace {

void check_defect(const Defect& d, std::size_t index, std::vector<Issue>& errors) {
    auto fail = [&](std::string rule, std::string message) {
        errors.push_back({index, std::move(rule), std::move(message)});
    };
    if (!std::isfinite(d.centre.x) || !std::isfinite(d.centre.y) || !std::isfinite(d.half_length) ||
        !std::isfinite(d.angle)) {
        fail("non-finite value", "defect fields must be finite");
        return;
    }
    if (!(d.half_length > 0.0)) {
        fail("non-positive half-length", "half_length must be > 0");
    }
    if (d.centre.y == 0.0) {
        fail("defect on interface", "defect centre lies on the bond line (y = 0)");
        return;
    }
    if (d.half_length > 0.0 && std::abs(d.centre.y) <= d.half_length * std::abs(std::sin(d.angle))) {
        fail("defect crosses interface", "segment reaches the bond line: |y| <= s |sin(alpha)|");
    }
}

}  // namespace

Defect make_defect(DefectKind kind, Point centre, double half_length, double angle) {
    Defect d{kind, centre, half_length, angle};
    std::vector<Issue> errors;
    check_defect(d, 0, errors);
    if (!errors.empty()) {
        throw DomainError(errors.front().rule + ": " + errors.front().message);
    }
    d.angle = reduce_angle(angle);
    return d;
}

DefectPolar to_polar(Point centre, const TipState& tip) {
    const double dx = centre.x - tip.x_tip;
    const double dy = centre.y;
    if (dx == 0.0 && dy == 0.0) {
        throw SingularityError("defect at tip");
    }
    return {std::hypot(dx, dy), std::atan2(dy, dx)};
}

DefectPolar to_polar(const Defect& defect, const TipState& tip) { return to_polar(defect.centre, tip); }

std::string describe(const Issue& issue) {
    std::ostringstream os;
    if (issue.defect_index) {
        os << "defect " << *issue.defect_index << ": ";
    }
    os << issue.rule;
    if (!issue.message.empty()) {
        os << " (" << issue.message << ")";
    }
    return os.str();
}

ValidationResult validate(const Configuration& config) {
    ValidationResult result;
    auto& errors = result.errors;
    auto global = [&](std::string rule, std::string message) {
        errors.push_back({std::nullopt, std::move(rule), std::move(message)});
    };

    const auto& m = config.material;
    if (!(m.mu_plus > 0.0) || !(m.mu_minus > 0.0) || !std::isfinite(m.mu_plus) || !std::isfinite(m.mu_minus)) {
        global("non-positive modulus", "mu_plus and mu_minus must be finite and > 0");
    }
    if (!(config.load.force != 0.0) || !std::isfinite(config.load.force)) {
        global("zero force", "load force must be finite and non-zero");
    }
    if (!std::isfinite(config.load.load_x) || !std::isfinite(config.tip.x_tip)) {
        global("non-finite value", "load and tip positions must be finite");
    } else if (!(config.load.load_x < config.tip.x_tip)) {
        global("load ahead of tip", "load_x must be strictly behind the initial tip");
    }

    const auto& s = config.solver;
    if (s.max_steps == 0) {
        global("invalid solver setting", "max_steps must be >= 1");
    }
    if (!(s.arrest_tol >= 0.0)) {
        global("invalid solver setting", "arrest_tol must be >= 0");
    }
    if (s.max_increment && !(*s.max_increment > 0.0)) {
        global("invalid solver setting", "max_increment must be > 0");
    }
    if (!(s.validity_ratio > 0.0)) {
        global("invalid solver setting", "validity_ratio must be > 0");
    }

    const TipState tip = TipState::at(config.tip.x_tip, config.load);
    for (std::size_t i = 0; i < config.defects.size(); ++i) {
        const Defect& d = config.defects[i];
        const std::size_t before = errors.size();
        check_defect(d, i, errors);
        if (errors.size() != before) {
            continue;
        }
        const double dist = std::hypot(d.centre.x - tip.x_tip, d.centre.y);
        if (dist <= s.validity_ratio * d.half_length) {
            errors.push_back({i, "defect too close to tip",
                              "distance " + std::to_string(dist) + " <= validity_ratio * s"});
        } else if (dist < kWarnRatio * d.half_length) {
            result.warnings.push_back(
                {i, "defect near tip", "distance " + std::to_string(dist) + " < 10 s; asymptotics may degrade"});
        }
    }

    if (!errors.empty()) {
        return result;
    }

    Configuration accepted = config;
    accepted.tip = tip;
    double min_standoff = std::numeric_limits<double>::infinity();
    for (auto& d : accepted.defects) {
        d.angle = reduce_angle(d.angle);
        min_standoff = std::min(min_standoff, std::abs(d.centre.y));
    }
    if (!accepted.solver.max_increment) {
        accepted.solver.max_increment = std::isfinite(min_standoff) ? min_standoff / 10.0 : 0.1 * tip.a;
    }
    result.config = std::move(accepted);
    return result;
}

Configuration validated(const Configuration& config) {
    auto result = validate(config);
    if (!result.ok()) {
        std::string message = "invalid configuration:";
        for (const auto& e : result.errors) {
            message += "\n  " + describe(e);
        }
        throw ConfigError(message);
    }
    return *result.config;
}

}  // namespace crackchannel
