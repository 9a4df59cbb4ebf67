#include "crackchannel/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crackchannel/errors.hpp"
#include "crackchannel/tip_perturbation.hpp"
#include "crackchannel/unperturbed_field.hpp"

namespace crackchannel {

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::Arrested:
        return "Arrested";
    case Outcome::MaxStepsReached:
        return "MaxStepsReached";
    case Outcome::ImmediateArrest:
        return "ImmediateArrest";
    }
    return "Unknown";
}

namespace {

double advance_from(double total_delta_k, double force, double a) {
    return -2.0 * total_delta_k / second_order_coefficient(force, a);
}

void check_clearance(const Configuration& config, const TipState& tip, std::size_t step) {
    for (std::size_t j = 0; j < config.defects.size(); ++j) {
        const Defect& d = config.defects[j];
        const double dist = std::hypot(d.centre.x - tip.x_tip, d.centre.y);
        if (dist <= config.solver.validity_ratio * d.half_length) {
            throw PropagationError(step, "defect " + std::to_string(j) + " overlaps the tip region (d = " +
                                             std::to_string(dist) + ")");
        }
    }
}

}  // namespace

double step_advance(const Configuration& config, const TipState& tip) {
    if (config.defects.empty()) {
        return 0.0;
    }
    const PerturbationResult p = relative_perturbation(config, tip);
    return advance_from(p.total, config.load.force, tip.a);
}

PropagationTrace propagate(const Configuration& config) {
    const SolverSettings& settings = config.solver;
    const double cap = settings.max_increment.value_or(std::numeric_limits<double>::infinity());

    PropagationTrace trace;
    TipState tip = TipState::at(config.tip.x_tip, config.load);
    double elongation = 0.0;

    for (std::size_t i = 0; i < settings.max_steps; ++i) {
        check_clearance(config, tip, i);

        PropagationStep step;
        step.index = i;
        step.x_tip = tip.x_tip;
        step.a = tip.a;
        if (!config.defects.empty()) {
            const PerturbationResult p = relative_perturbation(config, tip);
            step.relative = p.relative;
            step.computed = advance_from(p.total, config.load.force, tip.a);
        }

        if (!(step.computed > settings.arrest_tol)) {
            trace.steps.push_back(step);
            trace.outcome = i == 0 ? Outcome::ImmediateArrest : Outcome::Arrested;
            trace.total_elongation = elongation;
            return trace;
        }

        step.capped = step.computed > cap;
        step.increment = step.capped ? cap : step.computed;
        trace.steps.push_back(step);
        elongation += step.increment;

        tip = TipState::at(tip.x_tip + step.increment, config.load);
    }

    trace.outcome = Outcome::MaxStepsReached;
    trace.total_elongation = elongation;
    return trace;
}

std::vector<double> speed_scaling_probe(const Configuration& config, std::span<const double> a_values) {
    std::vector<double> out;
    out.reserve(a_values.size());
    for (double a : a_values) {
        Configuration probe = config;
        probe.load.load_x = config.tip.x_tip - a;
        out.push_back(step_advance(probe, TipState::at(config.tip.x_tip, probe.load)));
    }
    return out;
}

}  // namespace crackchannel
