#include "uavnoma/uav_centric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uavnoma/errors.hpp"
#include "uavnoma/quadrature.hpp"

namespace uavnoma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr quad::Tolerance kOuterTol{1e-10, 1e-9, 15};
constexpr quad::Tolerance kInnerTol{1e-12, 1e-10, 12};

}  // namespace

double coverage_cond_pair(double r, double R, PairUser user, const NetworkConfig& cfg,
                          const NomaLink& link, const UavCentricOptions& opts) {
    if (!(R > 0.0) || !(r >= 0.0)) {
        throw DomainError("coverage_cond_pair: need R > 0 and r >= 0");
    }
    const bool near = user == PairUser::near_w || user == PairUser::oma_w;
    const double slack = 1e-9 * R;
    if (near ? r > 0.25 * R + slack : (r < 0.25 * R - slack || r > 0.5 * R + slack)) {
        throw DomainError("coverage_cond_pair: user distance outside its placement ring");
    }
    const bool oma = user == PairUser::oma_w || user == PairUser::oma_v;
    const ThresholdSet th = thresholds(link, cfg, Strategy::uav_centric, oma ? Access::oma : Access::noma);
    const DecodeCoeff M = near ? th.near : th.far;
    if (!M) {
        return 0.0;
    }
    HoleLaplaceExponent eta = laplace_exponent_ucav(cfg, R, opts.method);
    eta.include_hole = opts.include_hole;
    const LinkGeometry geo{std::sqrt(r * r + cfg.uav_height * cfg.uav_height), cfg.alpha_desired,
                           cfg.m_desired, cfg.noise_power};
    return conditional_coverage(M, geo, eta.combined());
}

double average_over_placement(const std::function<double(double)>& cond, double R, bool near_user) {
    // v is the placement CDF value, so both laws become uniform on [0, 1].
    auto f = [&](double v) {
        const double r = near_user ? 0.25 * R * std::sqrt(v) : 0.25 * R * std::sqrt(1.0 + 3.0 * v);
        return cond(r);
    };
    return quad::integrate(f, 0.0, 1.0, kInnerTol, "placement average");
}

double coverage_pair(PairUser user, const NetworkConfig& cfg, const NomaLink& link, Access access,
                     const UavCentricOptions& opts) {
    cfg.validate();
    link.validate();
    const bool near = user == PairUser::near_w || user == PairUser::oma_w;
    PairUser effective = near ? PairUser::near_w : PairUser::far_v;
    if (access == Access::oma) {
        effective = near ? PairUser::oma_w : PairUser::oma_v;
    }
    const ThresholdSet th = thresholds(link, cfg, Strategy::uav_centric, access);
    if (!(near ? th.near : th.far)) {
        return 0.0;
    }
    const double lam = cfg.uav_density;
    auto outer = [&](double u) {
        const double R = std::sqrt(u / (kPi * lam));
        return average_over_placement(
            [&](double r) { return coverage_cond_pair(r, R, effective, cfg, link, opts); }, R, near);
    };
    const double p = quad::integrate_exp_weighted(outer, 0.0, INFINITY, kOuterTol, "UAV-centric outer");
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace uavnoma
