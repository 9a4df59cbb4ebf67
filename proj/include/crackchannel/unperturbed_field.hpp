/**
 * @file unperturbed_field.hpp
 * @brief Defect-free Mode III field of a bimaterial interface crack loaded by
 *        two symmetric point forces on its faces.
 *
 * In tip-relative complex coordinates zeta = (x - x_tip) + i y the field is
 * generated by the auxiliary potential
 *
 *   f(zeta) = -(2 i F / pi) * atan( sqrt(zeta) / sqrt(a) ),
 *   g(zeta) = f'(zeta) = -(F / pi) i sqrt(a) / ( sqrt(zeta) (zeta + a) ),
 *
 * with the principal square root (branch cut along the crack faces). The
 * out-of-plane displacement is
 *
 *   upper half-plane:  u =  Re f(zeta)      / mu_plus
 *   lower half-plane:  u = -Re f(conj zeta) / mu_minus
 *
 * so u vanishes on the bonded line, the traction sigma_yz = -Im g is
 * continuous across it and the faces are free except at x = -a. The stress
 * field does not depend on the moduli.
 */
#ifndef CRACKCHANNEL_UNPERTURBED_FIELD_HPP
#define CRACKCHANNEL_UNPERTURBED_FIELD_HPP

#include <complex>

#include "crackchannel/core_model.hpp"

namespace crackchannel {

using Complex = std::complex<double>;

struct UnperturbedTip {
    double k0 = 0.0;  ///< stress intensity factor K_III^(0)
    double a0 = 0.0;  ///< second-order coefficient A_III^(0) = -k0 / a

    static UnperturbedTip evaluate(double force, double a);
};

struct FieldGradient {
    double gx = 0.0;
    double gy = 0.0;
};

/// K_III^(0) = F sqrt(2 / (pi a)). Throws DomainError for a <= 0.
double unperturbed_sif(double force, double a);

/// A_III^(0) = -K_III^(0) / a. Throws DomainError for a <= 0.
double second_order_coefficient(double force, double a);

/// g(zeta). Throws SingularityError at zeta = 0 or zeta = -a.
/// A point on the negative real axis is read on the side selected by the
/// sign of its (possibly signed-zero) imaginary part.
Complex potential_derivative(Complex zeta, double force, double a);

/// f(zeta) with f = 0 on the bonded line; exposed for gradient checks.
Complex potential(Complex zeta, double force, double a);

/// Half-plane on which a point is evaluated.
enum class Side { Upper, Lower };

/// Out-of-plane displacement u^(0) at a global point; for finite-difference checks.
double displacement(Point point, Side side, const Bimaterial& material, const LoadCase& load, const TipState& tip);

/// Gradient of u^(0) at a global point on an explicit side.
FieldGradient grad_u0(Point point, Side side, const Bimaterial& material, const LoadCase& load, const TipState& tip);

/// Gradient of u^(0) with the side taken from the sign of y. Points on the
/// bonded line (y = 0, x > x_tip) are read from the upper side; points on the
/// crack line (y = 0, x < x_tip) need an explicit side and throw DomainError.
FieldGradient grad_u0(Point point, const Bimaterial& material, const LoadCase& load, const TipState& tip);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_UNPERTURBED_FIELD_HPP
