#include "crackchannel/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "crackchannel/errors.hpp"

namespace crackchannel {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ConfigError("config field '" + path + "': " + what);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            field_error(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
        }
    }
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        field_error(path, "expected an object");
    }
    return j;
}

double get_number(const json& obj, const std::string& key, const std::string& path) {
    const json& v = obj.at(key);
    if (!v.is_number()) {
        field_error(path + "." + key, "expected a number");
    }
    return v.get<double>();
}

std::optional<double> opt_number(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.contains(key)) {
        return std::nullopt;
    }
    return get_number(obj, key, path);
}

double get_angle(const json& v, const std::string& path) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        if (auto a = parse_angle(v.get<std::string>())) {
            return *a;
        }
    }
    field_error(path, "expected an angle (radians, or a string with a 'deg' suffix)");
}

std::size_t get_count(const json& v, const std::string& path) {
    if (v.is_number_unsigned()) {
        return v.get<std::size_t>();
    }
    if (v.is_number_integer() && v.get<long long>() >= 0) {
        return static_cast<std::size_t>(v.get<long long>());
    }
    field_error(path, "expected a non-negative integer");
}

DefectKind get_kind(const json& v, const std::string& path) {
    if (v.is_string()) {
        if (auto k = parse_defect_kind(v.get<std::string>())) {
            return *k;
        }
    }
    field_error(path, "expected \"microcrack\" or \"rigid\"");
}

Side get_side(const json& v, const std::string& path) {
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "upper") {
            return Side::Upper;
        }
        if (s == "lower") {
            return Side::Lower;
        }
    }
    field_error(path, "expected \"upper\" or \"lower\"");
}

Defect parse_defect(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path, {"kind", "x", "y", "half_length", "angle"});
    for (const char* key : {"kind", "x", "y", "half_length"}) {
        if (!j.contains(key)) {
            field_error(path + "." + key, "missing");
        }
    }
    Defect d;
    d.kind = get_kind(j.at("kind"), path + ".kind");
    d.centre = {get_number(j, "x", path), get_number(j, "y", path)};
    d.half_length = get_number(j, "half_length", path);
    d.angle = j.contains("angle") ? get_angle(j.at("angle"), path + ".angle") : 0.0;
    return d;
}

ArrayGenerator parse_generator(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown(j, path,
                   {"kind", "side", "count", "x_start", "spacing", "standoff", "half_length", "angle", "angle_offset"});
    for (const char* key : {"kind", "side", "count", "x_start", "spacing", "standoff", "half_length"}) {
        if (!j.contains(key)) {
            field_error(path + "." + key, "missing");
        }
    }
    ArrayGenerator g;
    g.kind = get_kind(j.at("kind"), path + ".kind");
    g.side = get_side(j.at("side"), path + ".side");
    g.count = get_count(j.at("count"), path + ".count");
    g.x_start = get_number(j, "x_start", path);
    g.spacing = get_number(j, "spacing", path);
    g.standoff = get_number(j, "standoff", path);
    g.half_length = get_number(j, "half_length", path);
    if (j.contains("angle")) {
        g.angle = get_angle(j.at("angle"), path + ".angle");
    }
    if (j.contains("angle_offset")) {
        g.angle_offset = get_angle(j.at("angle_offset"), path + ".angle_offset");
    }
    if (!(g.spacing > 0.0)) {
        field_error(path + ".spacing", "must be > 0");
    }
    if (!(g.standoff > 0.0)) {
        field_error(path + ".standoff", "must be > 0");
    }
    return g;
}

RunConfig from_json(const json& root) {
    require_object(root, "<root>");
    reject_unknown(root, "", {"material", "load", "tip", "alpha", "solver", "defects", "arrays", "diagram"});
    RunConfig run;

    if (root.contains("material")) {
        const json& m = require_object(root.at("material"), "material");
        reject_unknown(m, "material", {"mu_plus", "mu_minus", "eta"});
        if (m.contains("eta")) {
            if (m.contains("mu_plus") || m.contains("mu_minus")) {
                field_error("material.eta", "give either eta or the two moduli");
            }
            const double eta = get_number(m, "eta", "material");
            if (!(eta > -1.0 && eta < 1.0)) {
                field_error("material.eta", "must lie in (-1, 1)");
            }
            run.material = Bimaterial::from_contrast(eta);
        } else {
            run.material.mu_plus = opt_number(m, "mu_plus", "material").value_or(1.0);
            run.material.mu_minus = opt_number(m, "mu_minus", "material").value_or(1.0);
        }
    }

    if (!root.contains("tip")) {
        field_error("tip", "missing");
    }
    const json& tip = require_object(root.at("tip"), "tip");
    reject_unknown(tip, "tip", {"x"});
    if (!tip.contains("x")) {
        field_error("tip.x", "missing");
    }
    run.tip_x = get_number(tip, "x", "tip");

    if (!root.contains("load")) {
        field_error("load", "missing");
    }
    const json& load = require_object(root.at("load"), "load");
    reject_unknown(load, "load", {"force", "x", "a"});
    run.load.force = opt_number(load, "force", "load").value_or(1.0);
    if (load.contains("x") == load.contains("a")) {
        field_error("load", "give exactly one of 'x' (global position) or 'a' (distance behind the tip)");
    }
    run.load.load_x = load.contains("x") ? get_number(load, "x", "load") : run.tip_x - get_number(load, "a", "load");

    if (root.contains("alpha")) {
        run.alpha = get_angle(root.at("alpha"), "alpha");
    }

    if (root.contains("solver")) {
        const json& s = require_object(root.at("solver"), "solver");
        reject_unknown(s, "solver", {"max_steps", "arrest_tol", "max_increment", "validity_ratio"});
        if (s.contains("max_steps")) {
            run.solver.max_steps = get_count(s.at("max_steps"), "solver.max_steps");
        }
        run.solver.arrest_tol = opt_number(s, "arrest_tol", "solver").value_or(run.solver.arrest_tol);
        run.solver.max_increment = opt_number(s, "max_increment", "solver");
        run.solver.validity_ratio = opt_number(s, "validity_ratio", "solver").value_or(run.solver.validity_ratio);
    }

    if (root.contains("defects")) {
        const json& list = root.at("defects");
        if (!list.is_array()) {
            field_error("defects", "expected a list");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            run.defects.push_back(parse_defect(list[i], "defects[" + std::to_string(i) + "]"));
        }
    }

    if (root.contains("arrays")) {
        const json& list = root.at("arrays");
        if (!list.is_array()) {
            field_error("arrays", "expected a list");
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            run.arrays.push_back(parse_generator(list[i], "arrays[" + std::to_string(i) + "]"));
        }
    }

    if (root.contains("diagram")) {
        const json& d = require_object(root.at("diagram"), "diagram");
        reject_unknown(d, "diagram", {"x_min", "x_max", "x_step", "alpha_count", "neutral_tol"});
        run.diagram.x_min = opt_number(d, "x_min", "diagram");
        run.diagram.x_max = opt_number(d, "x_max", "diagram");
        run.diagram.x_step = opt_number(d, "x_step", "diagram");
        if (d.contains("alpha_count")) {
            run.diagram.alpha_count = get_count(d.at("alpha_count"), "diagram.alpha_count");
        }
        run.diagram.neutral_tol = opt_number(d, "neutral_tol", "diagram").value_or(run.diagram.neutral_tol);
        if (run.diagram.x_step && !(*run.diagram.x_step > 0.0)) {
            field_error("diagram.x_step", "must be > 0");
        }
        if (run.diagram.alpha_count == 0) {
            field_error("diagram.alpha_count", "must be >= 1");
        }
    }
    return run;
}

const char* side_name(Side side) { return side == Side::Upper ? "upper" : "lower"; }

struct Provenance {
    std::string source;
    double column_x = 0.0;
    int row = 0;  // 0 upper, 1 lower
};

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
    std::string s = trim(text);
    bool degrees = false;
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, "deg") == 0) {
        degrees = true;
        s = trim(std::string_view(s).substr(0, s.size() - 3));
    }
    if (s.empty()) {
        return std::nullopt;
    }
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
        return std::nullopt;
    }
    return degrees ? value * std::numbers::pi / 180.0 : value;
}

RunConfig parse_run_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    try {
        return from_json(root);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str());
}

std::string serialize_run_config(const RunConfig& run) {
    json root;
    root["material"] = {{"mu_plus", run.material.mu_plus}, {"mu_minus", run.material.mu_minus}};
    root["load"] = {{"force", run.load.force}, {"x", run.load.load_x}};
    root["tip"] = {{"x", run.tip_x}};
    root["alpha"] = run.alpha;

    json solver = {{"max_steps", run.solver.max_steps},
                   {"arrest_tol", run.solver.arrest_tol},
                   {"validity_ratio", run.solver.validity_ratio}};
    if (run.solver.max_increment) {
        solver["max_increment"] = *run.solver.max_increment;
    }
    root["solver"] = solver;

    json defects = json::array();
    for (const auto& d : run.defects) {
        defects.push_back({{"kind", std::string(to_string(d.kind))},
                           {"x", d.centre.x},
                           {"y", d.centre.y},
                           {"half_length", d.half_length},
                           {"angle", d.angle}});
    }
    root["defects"] = defects;

    json arrays = json::array();
    for (const auto& g : run.arrays) {
        json entry = {{"kind", std::string(to_string(g.kind))},
                      {"side", side_name(g.side)},
                      {"count", g.count},
                      {"x_start", g.x_start},
                      {"spacing", g.spacing},
                      {"standoff", g.standoff},
                      {"half_length", g.half_length},
                      {"angle_offset", g.angle_offset}};
        if (g.angle) {
            entry["angle"] = *g.angle;
        }
        arrays.push_back(entry);
    }
    root["arrays"] = arrays;

    json diagram = {{"alpha_count", run.diagram.alpha_count}, {"neutral_tol", run.diagram.neutral_tol}};
    if (run.diagram.x_min) {
        diagram["x_min"] = *run.diagram.x_min;
    }
    if (run.diagram.x_max) {
        diagram["x_max"] = *run.diagram.x_max;
    }
    if (run.diagram.x_step) {
        diagram["x_step"] = *run.diagram.x_step;
    }
    root["diagram"] = diagram;
    return root.dump(2) + "\n";
}

bool operator==(const ArrayGenerator& a, const ArrayGenerator& b) {
    return a.kind == b.kind && a.side == b.side && a.count == b.count && a.x_start == b.x_start &&
           a.spacing == b.spacing && a.standoff == b.standoff && a.half_length == b.half_length && a.angle == b.angle &&
           a.angle_offset == b.angle_offset;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    auto same_defect = [](const Defect& x, const Defect& y) {
        return x.kind == y.kind && x.centre.x == y.centre.x && x.centre.y == y.centre.y &&
               x.half_length == y.half_length && x.angle == y.angle;
    };
    return a.material.mu_plus == b.material.mu_plus && a.material.mu_minus == b.material.mu_minus &&
           a.load.force == b.load.force && a.load.load_x == b.load.load_x && a.tip_x == b.tip_x &&
           a.alpha == b.alpha && a.solver.max_steps == b.solver.max_steps &&
           a.solver.arrest_tol == b.solver.arrest_tol && a.solver.max_increment == b.solver.max_increment &&
           a.solver.validity_ratio == b.solver.validity_ratio &&
           std::equal(a.defects.begin(), a.defects.end(), b.defects.begin(), b.defects.end(), same_defect) &&
           a.arrays == b.arrays && a.diagram.x_min == b.diagram.x_min && a.diagram.x_max == b.diagram.x_max &&
           a.diagram.x_step == b.diagram.x_step && a.diagram.alpha_count == b.diagram.alpha_count &&
           a.diagram.neutral_tol == b.diagram.neutral_tol;
}

double generator_angle(const ArrayGenerator& gen, double alpha) { return gen.angle.value_or(alpha) + gen.angle_offset; }

Configuration expand_arrays(const RunConfig& run) { return expand_arrays(run, run.alpha); }

Configuration expand_arrays(const RunConfig& run, double alpha) {
    Configuration config;
    config.material = run.material;
    config.load = run.load;
    config.tip = TipState::at(run.tip_x, run.load);
    config.solver = run.solver;

    std::vector<Provenance> sources;
    for (std::size_t i = 0; i < run.defects.size(); ++i) {
        config.defects.push_back(run.defects[i]);
        sources.push_back({"defects[" + std::to_string(i) + "]"});
    }

    struct Generated {
        Defect defect;
        Provenance source;
    };
    std::vector<Generated> generated;
    for (std::size_t g = 0; g < run.arrays.size(); ++g) {
        const ArrayGenerator& gen = run.arrays[g];
        const double y = gen.side == Side::Upper ? gen.standoff : -gen.standoff;
        const double angle = generator_angle(gen, alpha);
        for (std::size_t k = 0; k < gen.count; ++k) {
            const double x = gen.x_start + static_cast<double>(k) * gen.spacing;
            std::ostringstream src;
            src.precision(17);
            src << "arrays[" << g << "] column " << k << " at (" << x << ", " << y << ")";
            generated.push_back(
                {{gen.kind, {x, y}, gen.half_length, angle}, {src.str(), x, gen.side == Side::Upper ? 0 : 1}});
        }
    }
    std::stable_sort(generated.begin(), generated.end(), [](const Generated& l, const Generated& r) {
        if (l.source.column_x != r.source.column_x) {
            return l.source.column_x < r.source.column_x;
        }
        return l.source.row < r.source.row;
    });
    for (auto& item : generated) {
        config.defects.push_back(item.defect);
        sources.push_back(std::move(item.source));
    }

    ValidationResult result = validate(config);
    if (!result.ok()) {
        std::string message = "invalid configuration:";
        for (const auto& e : result.errors) {
            message += "\n  ";
            if (e.defect_index) {
                message += sources[*e.defect_index].source + ": " + e.rule;
                if (!e.message.empty()) {
                    message += " (" + e.message + ")";
                }
            } else {
                message += describe(e);
            }
        }
        throw ConfigError(message);
    }
    return *result.config;
}

}  // namespace crackchannel
