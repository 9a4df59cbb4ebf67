/**
 * @file far_field.hpp
 * @brief Leading-order relative perturbations when the loading point is far
 *        from the tip (a -> infinity), and the channel sums built from them.
 *
 * A channel is a two-row array of defects at standoff h above and below the
 * bond line, with columns spaced by w. Columns are indexed relative to the
 * tip: j = 0 is directly above and below it, j = 1..n_ahead lie ahead and
 * j = 1..n_behind lie behind. With t_j = h^2 / (j w)^2 the channel advances
 * for identical materials are
 *
 *   perpendicular microcrack rows (upper alpha, lower alpha - pi/2):
 *     delta ~ a s^2 / (2 h^2) { sum_ahead T_j - sum_behind T_j },
 *     T_j = t_j / (1 + t_j)^2 ( sqrt(1 + t_j) + 2 sqrt(t_j) sin 2 alpha )
 *
 *   rigid inclusions above, microcracks below (both at alpha):
 *     delta ~ a s^2 cos 2 alpha / (2 h^2) { -1 + sum_ahead S_j + sum_behind S_j },
 *     S_j = (1 - t_j) t_j / (1 + t_j)^2
 *
 * and sum_{j >= 1} S_j = 1/2 - (pi h/w)^2 / (2 sinh^2(pi h/w)).
 */
#ifndef CRACKCHANNEL_FAR_FIELD_HPP
#define CRACKCHANNEL_FAR_FIELD_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "crackchannel/core_model.hpp"
#include "crackchannel/unperturbed_field.hpp"

namespace crackchannel {

/// Far-load Delta K / K^(0) of one microcrack at tip-relative (d, phi).
/// The modulus of the half-plane opposite to `side` weights the result.
double far_single_microcrack(double d, double phi, double alpha, double half_length, const Bimaterial& material,
                             Side side);

/// Far-load Delta K / K^(0) of one rigid line inclusion.
double far_single_rigid(double d, double phi, double alpha, double half_length, const Bimaterial& material,
                        Side side);

/// Dispatch on kind; side from the sign of sin(phi).
double far_single(const Defect& defect, const TipState& tip, const Bimaterial& material);

enum class Arrangement { MicrocrackPerpendicularRows, RigidAboveMicrocrackBelow };

std::string_view to_string(Arrangement arrangement);
std::optional<Arrangement> parse_arrangement(std::string_view text);

struct ChannelSpec {
    std::size_t n_ahead = 0;
    std::size_t n_behind = 0;
    double h = 1.0;
    double w = 1.0;
    double s = 0.1;
    double alpha = 0.0;
    Arrangement arrangement = Arrangement::MicrocrackPerpendicularRows;

    /// Global defects of the channel with column j = 0 at x_tip.
    std::vector<Defect> defects(double x_tip) const;
};

/// T_j as a function of t_j.
double microcrack_summand(double t, double alpha);
/// S_j as a function of t_j.
double mixed_summand(double t);

/// { sum_ahead T_j - sum_behind T_j }
double microcrack_bracket(const ChannelSpec& spec);
/// { -1 + sum_ahead S_j + sum_behind S_j }
double mixed_bracket(const ChannelSpec& spec);

/// Leading-order advance for the perpendicular microcrack channel.
/// Throws DomainError unless the materials are identical and the
/// arrangement is MicrocrackPerpendicularRows.
double channel_microcracks(const ChannelSpec& spec, const Bimaterial& material, double a);

/// Leading-order advance for the rigid/microcrack channel.
double channel_mixed(const ChannelSpec& spec, const Bimaterial& material, double a);

/// x^2 / (2 sinh^2 x), stable for small and large x.
double sinh_term(double x);

/// sum_{j >= 1} S_j in closed form.
double mixed_series_limit(double h, double w);

/// { -1/2 - (pi h/w)^2 / (2 sinh^2(pi h/w)) + sum_behind S_j }
double mixed_infinite_bracket(std::size_t n_behind, double h, double w);

/// Leading-order advance of the rigid/microcrack channel with infinitely many columns ahead.
double channel_mixed_infinite(std::size_t n_behind, double h, double w, double alpha, double s, double a);

/// sum_{j >= 1} T_j with an asymptotic tail beyond an explicit prefix;
/// absolute error below `tol`.
double microcrack_series_infinite(double h, double w, double alpha, double tol = 1e-12);

/// Perpendicular-microcrack channel with infinitely many columns ahead.
double channel_microcracks_infinite(std::size_t n_behind, double h, double w, double alpha, double s, double a);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_FAR_FIELD_HPP
