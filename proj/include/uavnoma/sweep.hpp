#pragma once

// Sweep orchestration and CSV output. Rows come out in input order, whatever
// order the workers finish in.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "uavnoma/config.hpp"
#include "uavnoma/montecarlo.hpp"

namespace uavnoma {

struct SweepRow {
    Strategy strategy = Strategy::user_centric;
    Access access = Access::noma;
    std::string user_role;
    std::string axis;  // empty for single-point runs
    std::optional<double> value;
    std::optional<double> p_analytic;
    std::optional<CoverageEstimate> mc;
};

/// Analytic and/or MC evaluation of both users at one parameter point.
std::vector<SweepRow> evaluate_point(const NetworkConfig& cfg, const NomaLink& link, const RunSpec& run,
                                     unsigned mc_threads = 0);

/// Every point of the experiment's sweep (and series), two rows per point.
std::vector<SweepRow> run_sweep(const Experiment& ex, unsigned threads = 0);

inline constexpr const char* kCsvHeader =
    "strategy,access,user_role,axis,value,p_analytic,p_mc,ci_low,ci_high,trials,seed";

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace uavnoma
