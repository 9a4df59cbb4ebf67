#include "crackchannel/tip_perturbation.hpp"

#include <cmath>
#include <numbers>

#include "crackchannel/defect_dipole.hpp"
#include "crackchannel/errors.hpp"
#include "crackchannel/unperturbed_field.hpp"

namespace crackchannel {

WeightVector weight_vector(const DefectPolar& polar) {
    if (!(polar.d > 0.0)) {
        throw DomainError("weight vector needs d > 0");
    }
    const double scale = 1.0 / (2.0 * polar.d * std::sqrt(polar.d));
    return {-std::sin(1.5 * polar.phi) * scale, std::cos(1.5 * polar.phi) * scale};
}

double delta_k_defect(const Defect& defect, const TipState& tip, const Bimaterial& material, const LoadCase& load) {
    const DefectPolar polar = to_polar(defect, tip);
    const WeightVector c = weight_vector(polar);
    const Side side = defect.centre.y < 0.0 ? Side::Lower : Side::Upper;
    const FieldGradient grad = grad_u0(defect.centre, side, material, load, tip);
    const DipoleMatrix m = dipole_matrix(defect);

    const double reduced = material.mu_plus * material.mu_minus / (material.mu_plus + material.mu_minus);
    return -std::sqrt(2.0 / std::numbers::pi) * reduced * m.bilinear({grad.gx, grad.gy}, {c.c1, c.c2});
}

PerturbationResult relative_perturbation(const Configuration& config, const TipState& tip) {
    PerturbationResult result;
    result.k0 = unperturbed_sif(config.load.force, tip.a);
    result.per_defect.reserve(config.defects.size());
    for (std::size_t j = 0; j < config.defects.size(); ++j) {
        double value = 0.0;
        try {
            value = delta_k_defect(config.defects[j], tip, config.material, config.load);
        } catch (const DomainError& e) {
            throw DefectEvaluationError(j, e.what());
        }
        result.per_defect.push_back(value);
        result.total += value;
    }
    result.relative = result.total / result.k0;
    return result;
}

}  // namespace crackchannel
