#include "crackchannel/self_check.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "crackchannel/defect_dipole.hpp"
#include "crackchannel/far_field.hpp"
#include "crackchannel/propagation.hpp"
#include "crackchannel/tip_perturbation.hpp"
#include "crackchannel/unperturbed_field.hpp"

namespace crackchannel {

namespace {

constexpr double pi = std::numbers::pi;

double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

std::string show(double value) {
    std::ostringstream os;
    os.precision(3);
    os << value;
    return os.str();
}

// Largest relative deviation of a check, with its pass threshold.
CheckResult bounded(std::string name, double worst, double limit) {
    return {std::move(name), worst <= limit, "max error " + show(worst) + " (limit " + show(limit) + ")"};
}

Configuration single(const Defect& d, const Bimaterial& m, double force, double a) {
    Configuration c;
    c.material = m;
    c.load = {force, d.centre.x - 1.0 - a};
    c.tip = TipState::at(d.centre.x - 1.0, c.load);
    c.defects = {d};
    return c;
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    out.push_back(bounded("unperturbed SIF at a = 2/pi", rel_err(unperturbed_sif(1.0, 2.0 / pi), 1.0), 1e-15));
    out.push_back(bounded("A0 = -K0 / a", rel_err(second_order_coefficient(1.0, 0.5), -2.0 * std::sqrt(4.0 / pi)),
                          1e-15));

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double s = 0.05 + unit(rng);
            const double alpha = pi * unit(rng);
            const auto mc = dipole_matrix(DefectKind::Microcrack, s, alpha + pi / 2.0);
            const auto ri = dipole_matrix(DefectKind::RigidLineInclusion, s, alpha);
            const double scale = pi * s * s;
            worst = std::max({worst, std::abs(ri.m11 + mc.m11) / scale, std::abs(ri.m12 + mc.m12) / scale,
                              std::abs(ri.m22 + mc.m22) / scale, std::abs(ri.determinant()) / (scale * scale),
                              std::abs(mc.trace() + scale) / scale});
        }
        out.push_back(bounded("dipole duality, rank one and trace", worst, 1e-12));
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double d = 0.5 + 2.0 * unit(rng);
            const double phi = (unit(rng) < 0.5 ? 1.0 : -1.0) * (0.05 + (pi - 0.1) * unit(rng));
            const double alpha = pi * unit(rng);
            const Bimaterial m{0.2 + unit(rng), 0.2 + unit(rng)};
            const DefectKind kind = i % 2 == 0 ? DefectKind::Microcrack : DefectKind::RigidLineInclusion;
            const Defect def{kind, {100.0 + d * std::cos(phi), d * std::sin(phi)}, 1e-3, alpha};
            const TipState tip{100.0, 1e6 * d};
            const LoadCase load{1.0, tip.x_tip - tip.a};
            const double full = delta_k_defect(def, tip, m, load) / unperturbed_sif(1.0, tip.a);
            const double far = far_single(def, tip, m);
            const double scale = 0.5 * (def.half_length / d) * (def.half_length / d);
            worst = std::max(worst, std::abs(full - far) / scale);
        }
        out.push_back(bounded("far-load single defect limit", worst, 1e-4));
    }

    {
        double worst = 0.0;
        for (double b : {0.3, 1.2, 3.0}) {
            ChannelSpec spec;
            spec.h = b;
            spec.w = 1.0;
            spec.n_ahead = 20000;
            spec.arrangement = Arrangement::RigidAboveMicrocrackBelow;
            // partial sum to J plus its leading tail b^2 / J
            const double partial = mixed_bracket(spec) + 1.0 + b * b / 20000.5;
            worst = std::max(worst, rel_err(partial, mixed_series_limit(b, 1.0)));
        }
        out.push_back(bounded("sinh series identity", worst, 1e-9));
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Bimaterial m{0.2 + unit(rng), 0.2 + unit(rng)};
            const double y = (unit(rng) < 0.5 ? 1.0 : -1.0) * (0.5 + unit(rng));
            const Defect d{i % 2 == 0 ? DefectKind::Microcrack : DefectKind::RigidLineInclusion,
                           {3.0 * unit(rng), y},
                           0.1,
                           pi * unit(rng)};
            const double a = 0.5 + 5.0 * unit(rng);
            const auto base = single(d, m, 1.0, a);
            auto flipped = base;
            flipped.load.force = -1.0;
            auto mirrored = base;
            mirrored.material = {m.mu_minus, m.mu_plus};
            mirrored.defects[0].centre.y = -y;
            mirrored.defects[0].angle = -d.angle;
            auto scaled = base;
            scaled.material = {7.0 * m.mu_plus, 7.0 * m.mu_minus};
            const double r0 = relative_perturbation(base, base.tip).relative;
            const double k0 = relative_perturbation(base, base.tip).total;
            worst = std::max({worst, rel_err(relative_perturbation(flipped, flipped.tip).relative, r0),
                              rel_err(relative_perturbation(mirrored, mirrored.tip).total, k0),
                              rel_err(relative_perturbation(scaled, scaled.tip).total, k0)});
        }
        out.push_back(bounded("load-sign, mirror-swap and stiffness-scale invariance", worst, 1e-12));
    }

    {
        ChannelSpec spec;
        spec.n_ahead = 4;
        spec.n_behind = 2;
        spec.h = 1.2;
        spec.alpha = 2.0;
        Configuration c;
        c.load = {1.0, -1.0};
        c.tip = TipState::at(0.3, c.load);
        c.defects = spec.defects(c.tip.x_tip);
        const double delta = step_advance(c, c.tip);
        const double total = relative_perturbation(c, c.tip).total;
        const double residual = delta_k_advance(delta, second_order_coefficient(1.0, c.tip.a)) + total;
        out.push_back(bounded("stationarity of the advance", std::abs(residual) / std::abs(total), 1e-12));
    }

    {
        Configuration c;
        c.load = {1.0, 0.0};
        c.tip = TipState::at(0.5, c.load);
        const auto trace = propagate(c);
        const bool ok = trace.outcome == Outcome::ImmediateArrest && trace.total_elongation == 0.0;
        out.push_back({"empty channel arrests immediately", ok, std::string(to_string(trace.outcome))});
    }
    return out;
}

}  // namespace crackchannel
