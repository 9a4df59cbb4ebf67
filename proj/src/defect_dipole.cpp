#include "crackchannel/defect_dipole.hpp"

#include <cmath>
#include <numbers>

#include "crackchannel/errors.hpp"

namespace crackchannel {

DipoleMatrix dipole_matrix(DefectKind kind, double half_length, double alpha) {
    if (!(half_length > 0.0) || !std::isfinite(half_length)) {
        throw DomainError("defect half-length must be finite and > 0");
    }
    const double scale = std::numbers::pi * half_length * half_length / 2.0;
    const double c = std::cos(2.0 * alpha);
    const double s = std::sin(2.0 * alpha);
    switch (kind) {
    case DefectKind::Microcrack:
        return {-scale * (1.0 - c), scale * s, -scale * (1.0 + c)};
    case DefectKind::RigidLineInclusion:
        return {scale * (1.0 + c), scale * s, scale * (1.0 - c)};
    }
    throw DomainError("unknown defect kind");
}

}  // namespace crackchannel
