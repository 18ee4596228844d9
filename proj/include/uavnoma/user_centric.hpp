#pragma once

// Coverage of the user-centric strategy: the typical user at the origin is
// served by its nearest UAV and paired with a fixed user at horizontal
// distance r_k from that UAV.

#include "uavnoma/coverage.hpp"
#include "uavnoma/laplace.hpp"
#include "uavnoma/scenario.hpp"

namespace uavnoma {

enum class UcCase { near, far, oma };

/// Role of the fixed user: far when the typical user is closer to the UAV.
enum class FixedRole { as_far, as_near, oma };

/// How the fixed user's interference is modelled.
///   exact_void     - PPP outside the typical user's empty disc, seen from the
///                    fixed user's own position (matches the simulator).
///   shared_laplace - reuse the typical user's Laplace transform with the
///                    fixed user's serving distance substituted.
enum class FixedUserModel { exact_void, shared_laplace };

struct UcOptions {
    LaplaceMethod method = LaplaceMethod::automatic;
    FixedUserModel fixed_model = FixedUserModel::exact_void;
};

/// Typical-user coverage given the horizontal serving distance r.
double coverage_cond(double r, UcCase c, const NetworkConfig& cfg, const NomaLink& link,
                     const UcOptions& opts = {});

/// Fixed-user coverage given the typical user's serving distance r and the
/// angle phi at the UAV between the typical and the fixed user.
double coverage_cond_fixed(double r, double phi, FixedRole role, const NetworkConfig& cfg,
                           const NomaLink& link, const UcOptions& opts = {});

/// coverage_cond_fixed averaged over phi uniform on [0, pi].
double coverage_cond_fixed_avg(double r, FixedRole role, const NetworkConfig& cfg,
                               const NomaLink& link, const UcOptions& opts = {});

/// Typical-user coverage, marginalized over the nearest-UAV distance.
double coverage_typical(const NetworkConfig& cfg, const NomaLink& link, Access access,
                        const UcOptions& opts = {});

double coverage_fixed(const NetworkConfig& cfg, const NomaLink& link, Access access,
                      const UcOptions& opts = {});

}  // namespace uavnoma
