#pragma once

// Coverage of the UAV-centric strategy: the UAV at the origin serves a near
// user in the disc of radius R/4 and a far user in the ring R/4..R/2, where R
// is the horizontal distance to the nearest other UAV.

#include <functional>

#include "uavnoma/coverage.hpp"
#include "uavnoma/laplace.hpp"
#include "uavnoma/scenario.hpp"

namespace uavnoma {

enum class PairUser { near_w, far_v, oma_w, oma_v };

struct UavCentricOptions {
    LaplaceMethod method = LaplaceMethod::automatic;
    bool include_hole = true;  // false drops the nearest-interferer factor
};

/// Coverage of one user at horizontal distance r from its UAV, given R.
double coverage_cond_pair(double r, double R, PairUser user, const NetworkConfig& cfg,
                          const NomaLink& link, const UavCentricOptions& opts = {});

/// Inner average of `cond(r)` over the placement law of `user` given R.
double average_over_placement(const std::function<double(double)>& cond, double R, bool near_user);

/// Coverage of the near (near_w) or far (far_v) user, marginalized over the
/// user position and R.
double coverage_pair(PairUser user, const NetworkConfig& cfg, const NomaLink& link, Access access,
                     const UavCentricOptions& opts = {});

}  // namespace uavnoma
