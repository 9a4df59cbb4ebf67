#include "crackchannel/report.hpp"

#include <cmath>
#include <cstdio>

namespace crackchannel {

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_trace_csv(std::ostream& os, const PropagationTrace& trace) {
    os << "step,x_tip,a,relative,increment,cumulative\n";
    double cumulative = 0.0;
    for (const auto& s : trace.steps) {
        cumulative += s.increment;
        os << s.index << ',' << format_number(s.x_tip) << ',' << format_number(s.a) << ','
           << format_number(s.relative) << ',' << format_number(s.increment) << ',' << format_number(cumulative)
           << '\n';
    }
    os << "# outcome=" << to_string(trace.outcome) << ",total_elongation=" << format_number(trace.total_elongation)
       << '\n';
}

void write_diagram_csv(std::ostream& os, const DiagramGrid& grid) {
    os << "x,alpha,relative,class\n";
    for (std::size_t ia = 0; ia < grid.alpha_values.size(); ++ia) {
        for (std::size_t ix = 0; ix < grid.x_values.size(); ++ix) {
            const DiagramCell& c = grid.at(ia, ix);
            os << format_number(grid.x_values[ix]) << ',' << format_number(grid.alpha_values[ia]) << ','
               << format_number(c.relative) << ',' << to_string(c.cls) << '\n';
        }
    }
}

void write_deltak_csv(std::ostream& os, const Configuration& config, const TipState& tip,
                      const PerturbationResult& result) {
    os << "index,kind,x,y,half_length,alpha,d,phi,delta_k,relative\n";
    for (std::size_t j = 0; j < config.defects.size(); ++j) {
        const Defect& d = config.defects[j];
        const DefectPolar p = to_polar(d, tip);
        os << j << ',' << to_string(d.kind) << ',' << format_number(d.centre.x) << ',' << format_number(d.centre.y)
           << ',' << format_number(d.half_length) << ',' << format_number(d.angle) << ',' << format_number(p.d) << ','
           << format_number(p.phi) << ',' << format_number(result.per_defect[j]) << ','
           << format_number(result.per_defect[j] / result.k0) << '\n';
    }
    os << "# x_tip=" << format_number(tip.x_tip) << ",a=" << format_number(tip.a)
       << ",k0=" << format_number(result.k0) << ",total=" << format_number(result.total)
       << ",relative=" << format_number(result.relative) << '\n';
}

}  // namespace crackchannel
