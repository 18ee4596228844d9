#pragma once

// JSON experiment descriptions: sections network / link / run / sweep.
// Powers are given in dBm and converted to watts once, here.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uavnoma/laplace.hpp"
#include "uavnoma/scenario.hpp"
#include "uavnoma/user_centric.hpp"

namespace uavnoma {

/// Malformed or out-of-domain configuration; the message names the field
/// (or the line and column for syntax errors).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RunMode { analytic, mc, both };

struct RunSpec {
    Strategy strategy = Strategy::user_centric;
    Access access = Access::noma;
    RunMode mode = RunMode::both;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    LaplaceMethod method = LaplaceMethod::automatic;
    FixedUserModel fixed_model = FixedUserModel::exact_void;
};

struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct Experiment {
    NetworkConfig network;
    NomaLink link;
    RunSpec run;
    std::optional<SweepAxis> sweep;
    std::optional<SweepAxis> series;  // optional outer axis, one curve per value
};

/// Parameters a sweep may vary.
const std::vector<std::string>& sweep_axes();

/// Sets one sweep parameter; throws ConfigError for unknown axes or values
/// outside the parameter's domain.
void apply_axis(NetworkConfig& cfg, NomaLink& link, std::string_view axis, double value);

Experiment parse_experiment(std::string_view json_text);
Experiment load_experiment(const std::string& path);

}  // namespace uavnoma
