#include "crackchannel/far_field.hpp"

#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "crackchannel/errors.hpp"

namespace crackchannel {

namespace {

constexpr double pi = std::numbers::pi;

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(what) + " must be finite and > 0");
    }
}

double opposite_weight(const Bimaterial& m, Side side) {
    const double other = side == Side::Upper ? m.mu_minus : m.mu_plus;
    return other / (m.mu_plus + m.mu_minus);
}

void require_identical(const Bimaterial& m) {
    if (std::abs(m.mu_plus - m.mu_minus) > 1e-12 * (m.mu_plus + m.mu_minus)) {
        throw DomainError("channel formula holds only for identical materials (mu_plus == mu_minus)");
    }
}

void require_geometry(const ChannelSpec& spec) {
    require_positive(spec.h, "standoff h");
    require_positive(spec.w, "spacing w");
    require_positive(spec.s, "half-length s");
}

double t_of(std::size_t j, double h, double w) {
    const double jw = static_cast<double>(j) * w;
    return (h * h) / (jw * jw);
}

// Hurwitz zeta sum_{k >= 0} (k + x)^-p for integer p >= 2
double hurwitz_zeta(int p, double x) {
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    return sign * boost::math::polygamma(p - 1, x) / boost::math::factorial<double>(p - 1);
}

constexpr int kTailOrder = 12;

}  // namespace

double far_single_microcrack(double d, double phi, double alpha, double half_length, const Bimaterial& material,
                             Side side) {
    require_positive(d, "distance d");
    const double ratio = half_length / d;
    return 0.5 * ratio * ratio * opposite_weight(material, side) * std::cos(1.5 * phi - alpha) *
           std::cos(0.5 * phi - alpha);
}

double far_single_rigid(double d, double phi, double alpha, double half_length, const Bimaterial& material,
                        Side side) {
    require_positive(d, "distance d");
    const double ratio = half_length / d;
    return -0.5 * ratio * ratio * opposite_weight(material, side) * std::sin(1.5 * phi - alpha) *
           std::sin(0.5 * phi - alpha);
}

double far_single(const Defect& defect, const TipState& tip, const Bimaterial& material) {
    const DefectPolar p = to_polar(defect, tip);
    const Side side = defect.centre.y < 0.0 ? Side::Lower : Side::Upper;
    if (defect.kind == DefectKind::Microcrack) {
        return far_single_microcrack(p.d, p.phi, defect.angle, defect.half_length, material, side);
    }
    return far_single_rigid(p.d, p.phi, defect.angle, defect.half_length, material, side);
}

std::string_view to_string(Arrangement arrangement) {
    switch (arrangement) {
    case Arrangement::MicrocrackPerpendicularRows:
        return "microcracks";
    case Arrangement::RigidAboveMicrocrackBelow:
        return "mixed";
    }
    return "unknown";
}

std::optional<Arrangement> parse_arrangement(std::string_view text) {
    if (text == "microcracks" || text == "microcrack") {
        return Arrangement::MicrocrackPerpendicularRows;
    }
    if (text == "mixed") {
        return Arrangement::RigidAboveMicrocrackBelow;
    }
    return std::nullopt;
}

std::vector<Defect> ChannelSpec::defects(double x_tip) const {
    std::vector<Defect> out;
    const auto n_behind_i = static_cast<long>(n_behind);
    const auto n_ahead_i = static_cast<long>(n_ahead);
    for (long j = -n_behind_i; j <= n_ahead_i; ++j) {
        const double x = x_tip + static_cast<double>(j) * w;
        if (arrangement == Arrangement::MicrocrackPerpendicularRows) {
            out.push_back({DefectKind::Microcrack, {x, h}, s, reduce_angle(alpha)});
            out.push_back({DefectKind::Microcrack, {x, -h}, s, reduce_angle(alpha - pi / 2.0)});
        } else {
            out.push_back({DefectKind::RigidLineInclusion, {x, h}, s, reduce_angle(alpha)});
            out.push_back({DefectKind::Microcrack, {x, -h}, s, reduce_angle(alpha)});
        }
    }
    return out;
}

double microcrack_summand(double t, double alpha) {
    const double q = 1.0 + t;
    return t / (q * q) * (std::sqrt(q) + 2.0 * std::sqrt(t) * std::sin(2.0 * alpha));
}

double mixed_summand(double t) {
    const double q = 1.0 + t;
    return (1.0 - t) * t / (q * q);
}

double microcrack_bracket(const ChannelSpec& spec) {
    require_geometry(spec);
    double ahead = 0.0;
    for (std::size_t j = 1; j <= spec.n_ahead; ++j) {
        ahead += microcrack_summand(t_of(j, spec.h, spec.w), spec.alpha);
    }
    double behind = 0.0;
    for (std::size_t j = 1; j <= spec.n_behind; ++j) {
        behind += microcrack_summand(t_of(j, spec.h, spec.w), spec.alpha);
    }
    return ahead - behind;
}

double mixed_bracket(const ChannelSpec& spec) {
    require_geometry(spec);
    double sum = -1.0;
    for (std::size_t j = 1; j <= spec.n_ahead; ++j) {
        sum += mixed_summand(t_of(j, spec.h, spec.w));
    }
    for (std::size_t j = 1; j <= spec.n_behind; ++j) {
        sum += mixed_summand(t_of(j, spec.h, spec.w));
    }
    return sum;
}

double channel_microcracks(const ChannelSpec& spec, const Bimaterial& material, double a) {
    require_identical(material);
    require_positive(a, "load-tip distance a");
    if (spec.arrangement != Arrangement::MicrocrackPerpendicularRows) {
        throw DomainError("microcrack channel formula needs perpendicular microcrack rows");
    }
    return a * spec.s * spec.s / (2.0 * spec.h * spec.h) * microcrack_bracket(spec);
}

double channel_mixed(const ChannelSpec& spec, const Bimaterial& material, double a) {
    require_identical(material);
    require_positive(a, "load-tip distance a");
    if (spec.arrangement != Arrangement::RigidAboveMicrocrackBelow) {
        throw DomainError("mixed channel formula needs rigid inclusions above and microcracks below");
    }
    return a * spec.s * spec.s * std::cos(2.0 * spec.alpha) / (2.0 * spec.h * spec.h) * mixed_bracket(spec);
}

double sinh_term(double x) {
    x = std::abs(x);
    if (x == 0.0) {
        return 0.5;
    }
    if (x < 20.0) {
        const double r = x / std::sinh(x);
        return 0.5 * r * r;
    }
    // log sinh x = x + log1p(-e^{-2x}) - log 2
    const double log_sinh = x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
    return std::exp(2.0 * std::log(x) - 2.0 * log_sinh - std::numbers::ln2);
}

double mixed_series_limit(double h, double w) {
    require_positive(h, "standoff h");
    require_positive(w, "spacing w");
    return 0.5 - sinh_term(pi * h / w);
}

double mixed_infinite_bracket(std::size_t n_behind, double h, double w) {
    require_positive(h, "standoff h");
    require_positive(w, "spacing w");
    double sum = -0.5 - sinh_term(pi * h / w);
    for (std::size_t j = 1; j <= n_behind; ++j) {
        sum += mixed_summand(t_of(j, h, w));
    }
    return sum;
}

double channel_mixed_infinite(std::size_t n_behind, double h, double w, double alpha, double s, double a) {
    require_positive(s, "half-length s");
    require_positive(a, "load-tip distance a");
    return a * s * s * std::cos(2.0 * alpha) / (2.0 * h * h) * mixed_infinite_bracket(n_behind, h, w);
}

double microcrack_series_infinite(double h, double w, double alpha, double tol) {
    require_positive(h, "standoff h");
    require_positive(w, "spacing w");
    const double b = h / w;
    const double sigma = std::sin(2.0 * alpha);

    // Beyond J the summand is expanded in u = b / j:
    //   t (1+t)^{-3/2}            = sum_k c_k u^{2k+2},  c_0 = 1, c_{k+1} = c_k (-3/2 - k) / (k+1)
    //   2 sigma t^{3/2} (1+t)^-2  = sum_k 2 sigma (-1)^k (k+1) u^{2k+3}
    // and each power u^p sums to b^p zeta(p, J + 1). The first neglected
    // power is kTailOrder + 1, bounded by ~ b^p J^{1-p}.
    std::size_t J = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(8.0 * b)));
    while (std::pow(b / static_cast<double>(J), kTailOrder + 1) * static_cast<double>(J) * 4.0 > tol) {
        J *= 2;
    }

    double prefix = 0.0;
    for (std::size_t j = 1; j <= J; ++j) {
        prefix += microcrack_summand(t_of(j, h, w), alpha);
    }

    const double x = static_cast<double>(J) + 1.0;
    double tail = 0.0;
    double c = 1.0;
    for (int k = 0; 2 * k + 2 <= kTailOrder; ++k) {
        tail += c * std::pow(b, 2 * k + 2) * hurwitz_zeta(2 * k + 2, x);
        c *= (-1.5 - k) / (k + 1.0);
    }
    for (int k = 0; 2 * k + 3 <= kTailOrder; ++k) {
        const double coeff = 2.0 * sigma * ((k % 2 == 0) ? 1.0 : -1.0) * (k + 1.0);
        tail += coeff * std::pow(b, 2 * k + 3) * hurwitz_zeta(2 * k + 3, x);
    }
    return prefix + tail;
}

double channel_microcracks_infinite(std::size_t n_behind, double h, double w, double alpha, double s, double a) {
    require_positive(s, "half-length s");
    require_positive(a, "load-tip distance a");
    double behind = 0.0;
    for (std::size_t j = 1; j <= n_behind; ++j) {
        behind += microcrack_summand(t_of(j, h, w), alpha);
    }
    return a * s * s / (2.0 * h * h) * (microcrack_series_infinite(h, w, alpha) - behind);
}

}  // namespace crackchannel
