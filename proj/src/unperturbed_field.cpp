#include "crackchannel/unperturbed_field.hpp"

#include <cmath>
#include <numbers>

#include "crackchannel/errors.hpp"

namespace crackchannel {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive_distance(double a) {
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw DomainError("load-tip distance a must be finite and > 0");
    }
}

Complex tip_relative(Point point, Side side, const TipState& tip) {
    // the lower half-plane is evaluated through the conjugate coordinate, so
    // a face point gets the +0 imaginary part that selects the upper bank
    const double dy = side == Side::Upper ? point.y : -point.y;
    return {point.x - tip.x_tip, dy == 0.0 ? 0.0 : dy};
}

}  // namespace

UnperturbedTip UnperturbedTip::evaluate(double force, double a) {
    return {unperturbed_sif(force, a), second_order_coefficient(force, a)};
}

double unperturbed_sif(double force, double a) {
    require_positive_distance(a);
    return force * std::sqrt(2.0 / (pi * a));
}

double second_order_coefficient(double force, double a) { return -unperturbed_sif(force, a) / a; }

Complex potential_derivative(Complex zeta, double force, double a) {
    require_positive_distance(a);
    if (zeta == Complex{0.0, 0.0}) {
        throw SingularityError("field evaluated at the crack tip");
    }
    if (zeta == Complex{-a, 0.0}) {
        throw SingularityError("field evaluated at the load point");
    }
    const Complex i{0.0, 1.0};
    return -(force / pi) * i * std::sqrt(a) / (std::sqrt(zeta) * (zeta + a));
}

Complex potential(Complex zeta, double force, double a) {
    require_positive_distance(a);
    if (zeta == Complex{-a, 0.0}) {
        throw SingularityError("potential evaluated at the load point");
    }
    const Complex i{0.0, 1.0};
    return -(2.0 * force / pi) * i * std::atan(std::sqrt(zeta) / std::sqrt(a));
}

double displacement(Point point, Side side, const Bimaterial& material, const LoadCase& load, const TipState& tip) {
    const Complex zeta = tip_relative(point, side, tip);
    const Complex f = potential(zeta, load.force, tip.a);
    return side == Side::Upper ? f.real() / material.mu_plus : -f.real() / material.mu_minus;
}

FieldGradient grad_u0(Point point, Side side, const Bimaterial& material, const LoadCase& load, const TipState& tip) {
    const Complex zeta = tip_relative(point, side, tip);
    const Complex g = potential_derivative(zeta, load.force, tip.a);
    if (side == Side::Upper) {
        return {g.real() / material.mu_plus, -g.imag() / material.mu_plus};
    }
    return {-g.real() / material.mu_minus, -g.imag() / material.mu_minus};
}

FieldGradient grad_u0(Point point, const Bimaterial& material, const LoadCase& load, const TipState& tip) {
    if (point.y == 0.0 && point.x < tip.x_tip) {
        throw DomainError("point on the crack line needs an explicit side");
    }
    return grad_u0(point, point.y < 0.0 ? Side::Lower : Side::Upper, material, load, tip);
}

}  // namespace crackchannel
