/**
 * @file defect_dipole.hpp
 * @brief Dipole matrices of small line defects under antiplane shear.
 *
 * For a defect of half-length s inclined at alpha, with unit tangent
 * t = (cos alpha, sin alpha) and unit normal n = (-sin alpha, cos alpha):
 *
 *   microcrack:              M = -pi s^2 n n^T
 *   rigid line inclusion:    M = +pi s^2 t t^T
 *
 * Both are rank one, symmetric and stored in the global frame.
 */
#ifndef CRACKCHANNEL_DEFECT_DIPOLE_HPP
#define CRACKCHANNEL_DEFECT_DIPOLE_HPP

#include <array>

#include "crackchannel/core_model.hpp"

namespace crackchannel {

struct DipoleMatrix {
    double m11 = 0.0;
    double m12 = 0.0;  ///< also m21
    double m22 = 0.0;

    double trace() const { return m11 + m22; }
    double determinant() const { return m11 * m22 - m12 * m12; }

    /// M v
    std::array<double, 2> apply(const std::array<double, 2>& v) const {
        return {m11 * v[0] + m12 * v[1], m12 * v[0] + m22 * v[1]};
    }

    /// u . M v
    double bilinear(const std::array<double, 2>& u, const std::array<double, 2>& v) const {
        const auto mv = apply(v);
        return u[0] * mv[0] + u[1] * mv[1];
    }
};

/// Throws DomainError when s <= 0.
DipoleMatrix dipole_matrix(DefectKind kind, double half_length, double alpha);

inline DipoleMatrix dipole_matrix(const Defect& defect) {
    return dipole_matrix(defect.kind, defect.half_length, defect.angle);
}

}  // namespace crackchannel

#endif  // CRACKCHANNEL_DEFECT_DIPOLE_HPP
