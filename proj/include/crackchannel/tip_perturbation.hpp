/**
 * @file tip_perturbation.hpp
 * @brief First-order perturbation of the stress intensity factor of the main
 *        crack by small defects and by a small advance of its tip.
 *
 * All Delta K values are physical: the dipole matrix is built with the
 * physical half-length s, so the squared small parameter is already folded
 * in and a quasi-static advance is a length, not a normalised coefficient.
 */
#ifndef CRACKCHANNEL_TIP_PERTURBATION_HPP
#define CRACKCHANNEL_TIP_PERTURBATION_HPP

#include <vector>

#include "crackchannel/core_model.hpp"

namespace crackchannel {

struct WeightVector {
    double c1 = 0.0;
    double c2 = 0.0;
};

struct PerturbationResult {
    std::vector<double> per_defect;  ///< Delta K_III^(j), input order
    double total = 0.0;              ///< sum of per_defect, summed in input order
    double k0 = 0.0;                 ///< K_III^(0) at the evaluated tip
    double relative = 0.0;           ///< total / k0; > 0 amplification, < 0 shielding
};

/// c = (-sin(3 phi/2), cos(3 phi/2)) / (2 d^(3/2)). Throws DomainError for d <= 0.
WeightVector weight_vector(const DefectPolar& polar);

/// Delta K_III^(j) = -sqrt(2/pi) mu+ mu- / (mu+ + mu-) grad u0(Y) . M c.
double delta_k_defect(const Defect& defect, const TipState& tip, const Bimaterial& material, const LoadCase& load);

/// Delta K_III^phi = advance * a0 / 2.
inline double delta_k_advance(double advance, double a0) { return advance * a0 / 2.0; }

/// Per-defect perturbations at an arbitrary tip position of a configuration.
/// Errors from individual defects are rethrown as DefectEvaluationError.
PerturbationResult relative_perturbation(const Configuration& config, const TipState& tip);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_TIP_PERTURBATION_HPP
