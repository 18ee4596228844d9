#include "uavnoma/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "uavnoma/errors.hpp"

namespace uavnoma {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw ConfigError(field + ": " + msg);
}

const json* child(const json& obj, const char* section) {
    auto it = obj.find(section);
    return it == obj.end() ? nullptr : &*it;
}

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) {
            fail(where + "." + it.key(), "unknown field");
        }
    }
}

double number(const json& obj, const std::string& where, const char* key, double fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        fail(where + "." + key, "expected a number");
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
        fail(where + "." + key, "must be finite");
    }
    return v;
}

int integer(const json& obj, const std::string& where, const char* key, int fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_integer()) {
        fail(where + "." + key, "expected an integer");
    }
    return it->get<int>();
}

std::uint64_t unsigned64(const json& obj, const std::string& where, const char* key, std::uint64_t fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_number_unsigned()) {
        fail(where + "." + key, "expected a non-negative integer");
    }
    return it->get<std::uint64_t>();
}

std::string text(const json& obj, const std::string& where, const char* key, const std::string& fallback) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        fail(where + "." + key, "expected a string");
    }
    return it->get<std::string>();
}

SweepAxis parse_axis(const json& obj, const std::string& where) {
    check_keys(obj, where, {"axis", "values"});
    SweepAxis a;
    a.name = text(obj, where, "axis", "");
    const auto& names = sweep_axes();
    if (std::find(names.begin(), names.end(), a.name) == names.end()) {
        fail(where + ".axis", "unknown sweep axis '" + a.name + "'");
    }
    auto it = obj.find("values");
    if (it == obj.end() || !it->is_array() || it->empty()) {
        fail(where + ".values", "expected a non-empty array of numbers");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& v = (*it)[i];
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            fail(where + ".values[" + std::to_string(i) + "]", "expected a finite number");
        }
        a.values.push_back(v.get<double>());
    }
    // Domain check on a scratch configuration.
    NetworkConfig cfg;
    NomaLink link;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        try {
            apply_axis(cfg, link, a.name, a.values[i]);
        } catch (const ConfigError& e) {
            fail(where + ".values[" + std::to_string(i) + "]", e.what());
        }
    }
    return a;
}

std::string line_col(std::string_view textv, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < textv.size(); ++i) {
        if (textv[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

const std::vector<std::string>& sweep_axes() {
    static const std::vector<std::string> axes = {
        "tx_power_dbm", "rate_near", "rate_far",    "ipsic",        "uav_density",
        "fixed_user_dist", "power_split_far", "alpha", "m", "m_interf"};
    return axes;
}

void apply_axis(NetworkConfig& cfg, NomaLink& link, std::string_view axis, double value) {
    auto need = [&](bool ok, const char* what) {
        if (!ok) {
            throw ConfigError(std::string(axis) + " " + what);
        }
    };
    need(std::isfinite(value), "must be finite");
    if (axis == "tx_power_dbm") {
        cfg.tx_power = dbm_to_watts(value);
    } else if (axis == "rate_near") {
        need(value >= 0.0, "must be non-negative");
        link.rate_near = value;
    } else if (axis == "rate_far") {
        need(value >= 0.0, "must be non-negative");
        link.rate_far = value;
    } else if (axis == "ipsic") {
        need(value >= 0.0 && value <= 1.0, "must lie in [0, 1]");
        link.ipsic = value;
    } else if (axis == "uav_density") {
        need(value > 0.0, "must be positive");
        cfg.uav_density = value;
    } else if (axis == "fixed_user_dist") {
        need(value >= 0.0, "must be non-negative");
        link.fixed_user_horiz_dist = value;
    } else if (axis == "power_split_far") {
        need(value >= 0.0 && value <= 1.0, "must lie in [0, 1]");
        link.pw_far = value;
        link.pw_near = 1.0 - value;
    } else if (axis == "alpha") {
        need(value > 0.0, "must be positive");
        cfg.alpha_desired = value;
    } else if (axis == "m" || axis == "m_interf") {
        need(value >= 1.0 && value == std::floor(value) && value <= 12.0, "must be an integer in [1, 12]");
        (axis == "m" ? cfg.m_desired : cfg.m_interf) = static_cast<int>(value);
    } else {
        throw ConfigError("unknown sweep axis '" + std::string(axis) + "'");
    }
}

Experiment parse_experiment(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text.begin(), json_text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError("syntax error at " + line_col(json_text, e.byte > 0 ? e.byte - 1 : 0) + ": " +
                          e.what());
    }
    check_keys(doc, "config", {"network", "link", "run", "sweep"});

    Experiment ex;
    NetworkConfig& n = ex.network;
    if (const json* net = child(doc, "network")) {
        const std::string w = "network";
        check_keys(*net, w,
                   {"uav_density", "uav_height_m", "tx_power_dbm", "alpha", "alpha_interf", "m", "m_interf",
                    "bandwidth_hz", "noise_dbm", "sim_disc_radius_m", "hole_halfwidth_m", "user_density"});
        n.uav_density = number(*net, w, "uav_density", n.uav_density);
        n.uav_height = number(*net, w, "uav_height_m", n.uav_height);
        n.tx_power = dbm_to_watts(number(*net, w, "tx_power_dbm", watts_to_dbm(n.tx_power)));
        n.alpha_desired = number(*net, w, "alpha", n.alpha_desired);
        n.alpha_interf = number(*net, w, "alpha_interf", n.alpha_interf);
        n.m_desired = integer(*net, w, "m", n.m_desired);
        n.m_interf = integer(*net, w, "m_interf", n.m_interf);
        if (net->contains("bandwidth_hz") && net->contains("noise_dbm")) {
            fail(w, "give either bandwidth_hz or noise_dbm, not both");
        }
        if (net->contains("bandwidth_hz")) {
            const double bw = number(*net, w, "bandwidth_hz", 0.0);
            if (!(bw > 0.0)) {
                fail(w + ".bandwidth_hz", "must be positive");
            }
            n.noise_power = noise_from_bandwidth(bw);
        } else if (net->contains("noise_dbm")) {
            n.noise_power = dbm_to_watts(number(*net, w, "noise_dbm", 0.0));
        }
        n.sim_disc_radius = number(*net, w, "sim_disc_radius_m", n.sim_disc_radius);
        n.hole_halfwidth = number(*net, w, "hole_halfwidth_m", n.hole_halfwidth);
        n.user_density = number(*net, w, "user_density", n.user_density);
    }
    NomaLink& l = ex.link;
    if (const json* link = child(doc, "link")) {
        const std::string w = "link";
        check_keys(*link, w,
                   {"power_split_far", "rate_near", "rate_far", "ipsic", "fixed_user_dist_m", "first_stage_residue"});
        l.pw_far = number(*link, w, "power_split_far", l.pw_far);
        l.pw_near = 1.0 - l.pw_far;
        l.rate_near = number(*link, w, "rate_near", l.rate_near);
        l.rate_far = number(*link, w, "rate_far", l.rate_far);
        l.ipsic = number(*link, w, "ipsic", l.ipsic);
        l.fixed_user_horiz_dist = number(*link, w, "fixed_user_dist_m", l.fixed_user_horiz_dist);
        const std::string fs = text(*link, w, "first_stage_residue", "full");
        if (fs == "full") {
            l.first_stage = FirstStageResidue::full;
        } else if (fs == "ipsic") {
            l.first_stage = FirstStageResidue::ipsic;
        } else {
            fail(w + ".first_stage_residue", "expected \"full\" or \"ipsic\"");
        }
    }
    RunSpec& r = ex.run;
    if (const json* run = child(doc, "run")) {
        const std::string w = "run";
        check_keys(*run, w, {"strategy", "access", "mode", "trials", "seed", "laplace_method", "fixed_user_model"});
        try {
            r.strategy = parse_strategy(text(*run, w, "strategy", std::string(to_string(r.strategy))));
        } catch (const DomainError& e) {
            fail(w + ".strategy", e.what());
        }
        try {
            r.access = parse_access(text(*run, w, "access", std::string(to_string(r.access))));
        } catch (const DomainError& e) {
            fail(w + ".access", e.what());
        }
        const std::string mode = text(*run, w, "mode", "both");
        if (mode == "analytic") {
            r.mode = RunMode::analytic;
        } else if (mode == "mc") {
            r.mode = RunMode::mc;
        } else if (mode == "both") {
            r.mode = RunMode::both;
        } else {
            fail(w + ".mode", "expected analytic, mc or both");
        }
        r.trials = unsigned64(*run, w, "trials", r.trials);
        if (r.trials == 0) {
            fail(w + ".trials", "must be positive");
        }
        r.seed = unsigned64(*run, w, "seed", r.seed);
        const std::string method = text(*run, w, "laplace_method", "automatic");
        if (method == "automatic") {
            r.method = LaplaceMethod::automatic;
        } else if (method == "series") {
            r.method = LaplaceMethod::series;
        } else if (method == "quadrature") {
            r.method = LaplaceMethod::quadrature;
        } else {
            fail(w + ".laplace_method", "expected automatic, series or quadrature");
        }
        const std::string fm = text(*run, w, "fixed_user_model", "exact_void");
        if (fm == "exact_void") {
            r.fixed_model = FixedUserModel::exact_void;
        } else if (fm == "shared_laplace") {
            r.fixed_model = FixedUserModel::shared_laplace;
        } else {
            fail(w + ".fixed_user_model", "expected exact_void or shared_laplace");
        }
    }
    if (const json* sw = child(doc, "sweep")) {
        check_keys(*sw, "sweep", {"axis", "values", "series"});
        json main_axis = json::object();
        main_axis["axis"] = sw->value("axis", json());
        if (sw->contains("values")) {
            main_axis["values"] = (*sw)["values"];
        }
        ex.sweep = parse_axis(main_axis, "sweep");
        if (const json* se = child(*sw, "series")) {
            ex.series = parse_axis(*se, "sweep.series");
            if (ex.series->name == ex.sweep->name) {
                fail("sweep.series.axis", "must differ from sweep.axis");
            }
        }
    }

    try {
        n.validate();
    } catch (const DomainError& e) {
        fail("network", e.what());
    }
    try {
        l.validate();
    } catch (const DomainError& e) {
        fail("link", e.what());
    }
    return ex;
}

Experiment load_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path + ": cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_experiment(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

}  // namespace uavnoma
