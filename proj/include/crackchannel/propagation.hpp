/**
 * @file propagation.hpp
 * @brief Quasi-static growth of the main crack through a field of defects.
 *
 * At constant critical K the first-order bracket of the SIF expansion
 * vanishes, giving the advance
 *
 *   delta = -2 sum_j Delta K^(j) / A^(0) = 2 a sum_j Delta K^(j) / K^(0).
 *
 * The tip moves by delta (capped at max_increment), the load stays put, and
 * the loop stops at the first state whose computed advance is <= arrest_tol.
 */
#ifndef CRACKCHANNEL_PROPAGATION_HPP
#define CRACKCHANNEL_PROPAGATION_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "crackchannel/core_model.hpp"

namespace crackchannel {

struct PropagationStep {
    std::size_t index = 0;
    double x_tip = 0.0;
    double a = 0.0;
    double relative = 0.0;   ///< sum_j Delta K^(j) / K^(0) at this state
    double computed = 0.0;   ///< advance from the stationarity condition
    double increment = 0.0;  ///< advance actually applied (0 on the arrest record)
    bool capped = false;     ///< increment was limited by max_increment
};

enum class Outcome { Arrested, MaxStepsReached, ImmediateArrest };

std::string_view to_string(Outcome outcome);

struct PropagationTrace {
    std::vector<PropagationStep> steps;
    Outcome outcome = Outcome::ImmediateArrest;
    double total_elongation = 0.0;  ///< sum of applied increments
};

/// Uncapped quasi-static advance at a tip state.
double step_advance(const Configuration& config, const TipState& tip);

/// Iterate from config.tip until arrest or max_steps recorded states.
/// The configuration must already be validated (max_increment resolved).
/// Throws PropagationError when a defect comes within validity_ratio * s of
/// the moving tip.
PropagationTrace propagate(const Configuration& config);

/// Initial advance for each load-tip distance, keeping the tip and defects fixed.
std::vector<double> speed_scaling_probe(const Configuration& config, std::span<const double> a_values);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_PROPAGATION_HPP
