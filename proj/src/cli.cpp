#include "crackchannel/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "crackchannel/diagram.hpp"
#include "crackchannel/errors.hpp"
#include "crackchannel/far_field.hpp"
#include "crackchannel/propagation.hpp"
#include "crackchannel/report.hpp"
#include "crackchannel/run_config.hpp"
#include "crackchannel/self_check.hpp"
#include "crackchannel/tip_perturbation.hpp"

namespace crackchannel {

namespace {

struct AsymOptions {
    std::string formula;
    std::optional<double> d, s, a, h, w, mu_plus, mu_minus;
    std::optional<std::string> phi, alpha, side;
    std::size_t n_ahead = 0;
    std::size_t n_behind = 0;
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) {
        throw ConfigError(std::string("missing ") + flag);
    }
    return *v;
}

double need_angle(const std::optional<std::string>& v, const char* flag) {
    if (!v) {
        throw ConfigError(std::string("missing ") + flag);
    }
    auto angle = parse_angle(*v);
    if (!angle) {
        throw ConfigError(std::string("bad angle for ") + flag + ": '" + *v + "'");
    }
    return *angle;
}

void warn_issues(const Configuration& config, std::ostream& err) {
    for (const auto& w : validate(config).warnings) {
        err << "warning: " << describe(w) << '\n';
    }
}

// Writes to --out when given, else to stdout.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ConfigError("cannot open output file '" + path + "'");
    }
    body(file);
}

int run_asym(const AsymOptions& o, std::ostream& out) {
    const Bimaterial material{o.mu_plus.value_or(1.0), o.mu_minus.value_or(1.0)};
    if (o.formula == "microcrack" || o.formula == "rigid") {
        Side side = Side::Upper;
        if (o.side) {
            if (*o.side == "lower") {
                side = Side::Lower;
            } else if (*o.side != "upper") {
                throw ConfigError("--side must be upper or lower");
            }
        }
        const double d = need(o.d, "--d");
        const double phi = need_angle(o.phi, "--phi");
        const double alpha = need_angle(o.alpha, "--alpha");
        const double s = o.s.value_or(1.0);
        const double value = o.formula == "microcrack" ? far_single_microcrack(d, phi, alpha, s, material, side)
                                                       : far_single_rigid(d, phi, alpha, s, material, side);
        out << "relative=" << format_number(value) << '\n';
        return kExitOk;
    }

    const double h = need(o.h, "--h");
    const double w = need(o.w, "--w");
    const double alpha = need_angle(o.alpha, "--alpha");
    const double s = o.s.value_or(1.0);
    const double a = o.a.value_or(1.0);

    if (o.formula == "channel-microcracks" || o.formula == "channel-mixed") {
        ChannelSpec spec{o.n_ahead, o.n_behind, h, w, s, alpha,
                         o.formula == "channel-mixed" ? Arrangement::RigidAboveMicrocrackBelow
                                                      : Arrangement::MicrocrackPerpendicularRows};
        if (o.formula == "channel-mixed") {
            out << "bracket=" << format_number(mixed_bracket(spec)) << '\n';
            out << "delta=" << format_number(channel_mixed(spec, material, a)) << '\n';
        } else {
            out << "bracket=" << format_number(microcrack_bracket(spec)) << '\n';
            out << "delta=" << format_number(channel_microcracks(spec, material, a)) << '\n';
        }
        return kExitOk;
    }
    if (o.formula == "mixed-infinite") {
        out << "series_limit=" << format_number(mixed_series_limit(h, w)) << '\n';
        out << "bracket=" << format_number(mixed_infinite_bracket(o.n_behind, h, w)) << '\n';
        out << "delta=" << format_number(channel_mixed_infinite(o.n_behind, h, w, alpha, s, a)) << '\n';
        return kExitOk;
    }
    if (o.formula == "microcrack-infinite") {
        const double series = microcrack_series_infinite(h, w, alpha);
        const double delta = channel_microcracks_infinite(o.n_behind, h, w, alpha, s, a);
        out << "series=" << format_number(series) << '\n';
        out << "bracket=" << format_number(delta * 2.0 * h * h / (a * s * s)) << '\n';
        out << "delta=" << format_number(delta) << '\n';
        return kExitOk;
    }
    throw ConfigError("unknown formula '" + o.formula +
                      "' (microcrack, rigid, channel-microcracks, channel-mixed, mixed-infinite, microcrack-infinite)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quasi-static Mode III interfacial crack growth through channels of small line defects",
                 "crackchannel"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;

    auto* propagate_cmd = app.add_subcommand("propagate", "Run the quasi-static growth loop and print the trace");
    propagate_cmd->add_option("config", config_path, "Run configuration (JSON)")->required();
    propagate_cmd->add_option("--out", out_path, "Write the CSV here instead of stdout");

    std::size_t threads = 0;
    auto* diagram_cmd = app.add_subcommand("diagram", "Shielding-amplification map over (x, alpha)");
    diagram_cmd->add_option("config", config_path, "Run configuration (JSON)")->required();
    diagram_cmd->add_option("--out", out_path, "Write the CSV here instead of stdout");
    diagram_cmd->add_option("--threads", threads, "Worker threads (default: CRACKCHANNEL_THREADS or all cores)");

    std::optional<double> tip_x;
    std::optional<double> tip_a;
    auto* deltak_cmd = app.add_subcommand("deltak", "Per-defect SIF perturbation at one tip position");
    deltak_cmd->add_option("config", config_path, "Run configuration (JSON)")->required();
    auto* tip_opt = deltak_cmd->add_option("--tip", tip_x, "Global tip abscissa");
    deltak_cmd->add_option("--a", tip_a, "Tip distance from the load point")->excludes(tip_opt);

    AsymOptions asym;
    auto* asym_cmd = app.add_subcommand("asym", "Evaluate far-load closed forms");
    asym_cmd->set_help_flag("--help", "Print this help message and exit");
    asym_cmd->add_option("formula", asym.formula,
                         "microcrack | rigid | channel-microcracks | channel-mixed | mixed-infinite | "
                         "microcrack-infinite")
        ->required();
    asym_cmd->add_option("--d", asym.d, "Tip-defect distance");
    asym_cmd->add_option("--phi", asym.phi, "Polar angle of the defect (radians or NNdeg)");
    asym_cmd->add_option("--alpha", asym.alpha, "Defect inclination (radians or NNdeg)");
    asym_cmd->add_option("--side", asym.side, "Half-plane of the defect: upper | lower");
    asym_cmd->add_option("--s", asym.s, "Defect half-length (default 1)");
    asym_cmd->add_option("--mu-plus", asym.mu_plus, "Upper shear modulus (default 1)");
    asym_cmd->add_option("--mu-minus", asym.mu_minus, "Lower shear modulus (default 1)");
    asym_cmd->add_option("--h", asym.h, "Row standoff from the bond line");
    asym_cmd->add_option("--w", asym.w, "Column spacing");
    asym_cmd->add_option("--n-ahead", asym.n_ahead, "Columns ahead of the tip");
    asym_cmd->add_option("--n-behind", asym.n_behind, "Columns behind the tip");
    asym_cmd->add_option("--a", asym.a, "Load-tip distance (default 1)");

    auto* check_cmd = app.add_subcommand("check", "Run the built-in identity and invariant checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();  // program name
    }
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (propagate_cmd->parsed()) {
            const Configuration config = expand_arrays(load_run_config(config_path));
            warn_issues(config, err);
            const PropagationTrace trace = propagate(config);
            emit(out_path, out, [&](std::ostream& os) { write_trace_csv(os, trace); });
        } else if (diagram_cmd->parsed()) {
            const RunConfig run = load_run_config(config_path);
            const DiagramGrid grid = diagram(run, threads);
            emit(out_path, out, [&](std::ostream& os) { write_diagram_csv(os, grid); });
        } else if (deltak_cmd->parsed()) {
            const Configuration config = expand_arrays(load_run_config(config_path));
            warn_issues(config, err);
            TipState tip = config.tip;
            if (tip_x) {
                tip = TipState::at(*tip_x, config.load);
            } else if (tip_a) {
                tip = TipState::at(config.load.load_x + *tip_a, config.load);
            }
            const PerturbationResult result = relative_perturbation(config, tip);
            write_deltak_csv(out, config, tip, result);
        } else if (asym_cmd->parsed()) {
            return run_asym(asym, out);
        } else if (check_cmd->parsed()) {
            bool all = true;
            for (const auto& r : run_self_checks()) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                all = all && r.passed;
            }
            return all ? kExitOk : kExitCheckFailed;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}

}  // namespace crackchannel
