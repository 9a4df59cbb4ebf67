/**
 * @file report.hpp
 * @brief CSV tables for traces, diagrams and per-defect breakdowns.
 *
 * Floating values carry 17 significant digits so a table reproduces the
 * doubles it was written from.
 */
#ifndef CRACKCHANNEL_REPORT_HPP
#define CRACKCHANNEL_REPORT_HPP

#include <ostream>
#include <string>

#include "crackchannel/core_model.hpp"
#include "crackchannel/diagram.hpp"
#include "crackchannel/propagation.hpp"
#include "crackchannel/tip_perturbation.hpp"

namespace crackchannel {

std::string format_number(double value);

/// step,x_tip,a,relative,increment,cumulative then "# outcome=...,total_elongation=..."
void write_trace_csv(std::ostream& os, const PropagationTrace& trace);

/// x,alpha,relative,class, alpha-major
void write_diagram_csv(std::ostream& os, const DiagramGrid& grid);

/// index,kind,x,y,half_length,alpha,d,phi,delta_k,relative then a total line
void write_deltak_csv(std::ostream& os, const Configuration& config, const TipState& tip,
                      const PerturbationResult& result);

}  // namespace crackchannel

#endif  // CRACKCHANNEL_REPORT_HPP
