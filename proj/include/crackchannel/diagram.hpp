/**
 * @file diagram.hpp
 * @brief Shielding-amplification map over tip position and channel angle.
 */
#ifndef CRACKCHANNEL_DIAGRAM_HPP
#define CRACKCHANNEL_DIAGRAM_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "crackchannel/run_config.hpp"

namespace crackchannel {

enum class CellClass { Amplification, Shielding, Neutral, Error };

std::string_view to_string(CellClass cls);

/// Amplification iff relative > tol, Shielding iff relative < -tol.
CellClass classify(double relative, double neutral_tol);

struct DiagramCell {
    double relative = 0.0;  ///< NaN for Error cells
    CellClass cls = CellClass::Neutral;
};

struct DiagramGrid {
    std::vector<double> x_values;      ///< tip distance from the load point (x == a)
    std::vector<double> alpha_values;  ///< in (0, pi)
    std::vector<DiagramCell> cells;    ///< alpha-major: cells[ia * x_values.size() + ix]

    const DiagramCell& at(std::size_t ia, std::size_t ix) const { return cells[ia * x_values.size() + ix]; }
};

/// kπ/(n+1) for k = 1..n.
std::vector<double> alpha_grid(std::size_t count);

/// x grid resolved from the run's diagram settings and defect layout.
std::vector<double> x_grid(const RunConfig& run);

/// Thread count from CRACKCHANNEL_THREADS, else the hardware concurrency.
std::size_t default_thread_count();

/// Evaluate every (alpha, x) cell. Cells are independent, so the grid is
/// identical for any thread count; `threads == 0` picks the default.
/// Cells closer than validity_ratio * s to a defect, or hitting a singular
/// point, are kept as Error cells.
DiagramGrid diagram(const RunConfig& run, std::size_t threads = 0);

/// Same, on explicit axes.
DiagramGrid diagram(const RunConfig& run, std::vector<double> x_values, std::vector<double> alpha_values,
                    std::size_t threads = 0);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_DIAGRAM_HPP
