#pragma once

// Seeded Monte Carlo estimation of the coverage probabilities. Every trial
// owns an independent random stream derived from (seed, trial index), so the
// estimates are bit-identical for any worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "uavnoma/scenario.hpp"

namespace uavnoma {

struct CoverageEstimate {
    double p_hat = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    Strategy strategy = Strategy::user_centric;
    Access access = Access::noma;
    std::string user_role;
    std::uint64_t seed = 0;
    // Trials where the max-coefficient test and the two-SINR test disagree.
    std::uint64_t identity_mismatches = 0;
};

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double confidence = 0.99);

struct McOptions {
    unsigned threads = 0;  // 0: default_thread_count()
    // Pin the serving distance (user-centric: r, UAV-centric: R); the other
    // UAVs are then drawn beyond it.
    std::optional<double> serving_dist;
    // UAV-centric only: pin the near / far user's horizontal distance.
    std::optional<double> near_user_dist;
    std::optional<double> far_user_dist;
};

struct TrialOutcome {
    bool first = false;   // typical (user-centric) or near user
    bool second = false;  // fixed (user-centric) or far user
    bool first_mismatch = false;
    bool second_mismatch = false;
};

/// One user-centric trial.
TrialOutcome user_centric_trial(const NetworkConfig& cfg, const NomaLink& link, Access access,
                                std::uint64_t seed, std::uint64_t trial, const McOptions& opts = {});

/// One UAV-centric trial.
TrialOutcome uav_centric_trial(const NetworkConfig& cfg, const NomaLink& link, Access access,
                               std::uint64_t seed, std::uint64_t trial, const McOptions& opts = {});

struct PairEstimate {
    CoverageEstimate first;   // typical / near_w
    CoverageEstimate second;  // fixed / far_v
};

PairEstimate run_user_centric(const NetworkConfig& cfg, const NomaLink& link, Access access,
                              std::uint64_t trials, std::uint64_t seed, const McOptions& opts = {});

PairEstimate run_uav_centric(const NetworkConfig& cfg, const NomaLink& link, Access access,
                             std::uint64_t trials, std::uint64_t seed, const McOptions& opts = {});

}  // namespace uavnoma
