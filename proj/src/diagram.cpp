#include "crackchannel/diagram.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include "crackchannel/errors.hpp"
#include "crackchannel/tip_perturbation.hpp"

namespace crackchannel {

std::string_view to_string(CellClass cls) {
    switch (cls) {
    case CellClass::Amplification:
        return "amplification";
    case CellClass::Shielding:
        return "shielding";
    case CellClass::Neutral:
        return "neutral";
    case CellClass::Error:
        return "error";
    }
    return "unknown";
}

CellClass classify(double relative, double neutral_tol) {
    if (std::isnan(relative)) {
        return CellClass::Error;
    }
    if (relative > neutral_tol) {
        return CellClass::Amplification;
    }
    if (relative < -neutral_tol) {
        return CellClass::Shielding;
    }
    return CellClass::Neutral;
}

std::vector<double> alpha_grid(std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = std::numbers::pi * static_cast<double>(k + 1) / static_cast<double>(count + 1);
    }
    return out;
}

std::vector<double> x_grid(const RunConfig& run) {
    const double a0 = run.tip_x - run.load.load_x;
    double spacing = 0.0;
    double last_x = -std::numeric_limits<double>::infinity();
    for (const auto& g : run.arrays) {
        if (g.count == 0) {
            continue;
        }
        if (spacing == 0.0) {
            spacing = g.spacing;
        }
        last_x = std::max(last_x, g.x_start + static_cast<double>(g.count - 1) * g.spacing);
    }
    for (const auto& d : run.defects) {
        last_x = std::max(last_x, d.centre.x);
    }

    const double x_min = run.diagram.x_min.value_or(a0);
    double x_max = run.diagram.x_max.value_or(std::isfinite(last_x) ? last_x - run.load.load_x + (spacing > 0.0 ? spacing : 1.0)
                                                                      : x_min);
    x_max = std::max(x_max, x_min);
    double step = run.diagram.x_step.value_or(spacing > 0.0 ? spacing / 50.0 : (x_max - x_min) / 100.0);
    if (!(step > 0.0)) {
        step = 1.0;
    }

    const auto n = static_cast<std::size_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = x_min + static_cast<double>(i) * step;
    }
    return xs;
}

std::size_t default_thread_count() {
    if (const char* env = std::getenv("CRACKCHANNEL_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n > 0) {
                return static_cast<std::size_t>(n);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DiagramGrid diagram(const RunConfig& run, std::size_t threads) {
    return diagram(run, x_grid(run), alpha_grid(run.diagram.alpha_count), threads);
}

namespace {

DiagramCell evaluate_cell(const Configuration& config, double x) {
    const TipState tip = TipState::at(config.load.load_x + x, config.load);
    if (!(tip.a > 0.0)) {
        return {std::numeric_limits<double>::quiet_NaN(), CellClass::Error};
    }
    for (const auto& d : config.defects) {
        if (std::hypot(d.centre.x - tip.x_tip, d.centre.y) <= config.solver.validity_ratio * d.half_length) {
            return {std::numeric_limits<double>::quiet_NaN(), CellClass::Error};
        }
    }
    try {
        return {relative_perturbation(config, tip).relative, CellClass::Neutral};
    } catch (const DomainError&) {
        return {std::numeric_limits<double>::quiet_NaN(), CellClass::Error};
    }
}

}  // namespace

DiagramGrid diagram(const RunConfig& run, std::vector<double> x_values, std::vector<double> alpha_values,
                    std::size_t threads) {
    DiagramGrid grid;
    grid.x_values = std::move(x_values);
    grid.alpha_values = std::move(alpha_values);
    const std::size_t nx = grid.x_values.size();
    const std::size_t na = grid.alpha_values.size();
    grid.cells.resize(nx * na);

    // Expanding up front surfaces configuration errors before any work starts.
    std::vector<Configuration> rows;
    rows.reserve(na);
    for (double alpha : grid.alpha_values) {
        rows.push_back(expand_arrays(run, alpha));
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t ia = next++; ia < na; ia = next++) {
            for (std::size_t ix = 0; ix < nx; ++ix) {
                DiagramCell cell = evaluate_cell(rows[ia], grid.x_values[ix]);
                if (cell.cls != CellClass::Error) {
                    cell.cls = classify(cell.relative, run.diagram.neutral_tol);
                }
                grid.cells[ia * nx + ix] = cell;
            }
        }
    };

    const std::size_t n_threads = std::min(threads == 0 ? default_thread_count() : threads, std::max<std::size_t>(na, 1));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    return grid;
}

}  // namespace crackchannel
