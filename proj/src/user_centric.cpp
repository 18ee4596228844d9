#include "uavnoma/user_centric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uavnoma/errors.hpp"
#include "uavnoma/quadrature.hpp"

namespace uavnoma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr quad::Tolerance kOuterTol{1e-10, 1e-9, 15};
constexpr quad::Tolerance kPhiTol{1e-11, 1e-9, 12};

DecodeCoeff typical_coeff(const ThresholdSet& th, UcCase c) {
    return c == UcCase::far ? th.typical_far : th.typical_near;
}

DecodeCoeff fixed_coeff(const ThresholdSet& th, FixedRole role) {
    return role == FixedRole::as_near ? th.fixed_as_near : th.fixed_as_far;
}

Access access_of(UcCase c) { return c == UcCase::oma ? Access::oma : Access::noma; }
Access access_of(FixedRole r) { return r == FixedRole::oma ? Access::oma : Access::noma; }

double r_of_u(double u, double density) { return std::sqrt(u / (kPi * density)); }

}  // namespace

double coverage_cond(double r, UcCase c, const NetworkConfig& cfg, const NomaLink& link,
                     const UcOptions& opts) {
    if (!(r >= 0.0)) {
        throw DomainError("coverage_cond: r must be non-negative");
    }
    const ThresholdSet th = thresholds(link, cfg, Strategy::user_centric, access_of(c));
    const DecodeCoeff M = typical_coeff(th, c);
    if (!M) {
        return 0.0;
    }
    const double r_t = std::sqrt(r * r + cfg.uav_height * cfg.uav_height);
    const LinkGeometry geo{r_t, cfg.alpha_desired, cfg.m_desired, cfg.noise_power};
    return conditional_coverage(M, geo, laplace_exponent_uc(cfg, r_t, opts.method));
}

double coverage_cond_fixed(double r, double phi, FixedRole role, const NetworkConfig& cfg,
                           const NomaLink& link, const UcOptions& opts) {
    if (!(r >= 0.0)) {
        throw DomainError("coverage_cond_fixed: r must be non-negative");
    }
    const ThresholdSet th = thresholds(link, cfg, Strategy::user_centric, access_of(role));
    const DecodeCoeff M = fixed_coeff(th, role);
    if (!M) {
        return 0.0;
    }
    const double h = cfg.uav_height;
    const double rk = link.fixed_user_horiz_dist;
    const LinkGeometry geo{std::sqrt(rk * rk + h * h), cfg.alpha_desired, cfg.m_desired,
                           cfg.noise_power};
    if (opts.fixed_model == FixedUserModel::shared_laplace) {
        return conditional_coverage(M, geo, laplace_exponent_uc(cfg, std::sqrt(r * r + h * h), opts.method));
    }
    VoidDisc g;
    g.plane = PppTail::from(cfg, h);
    g.height = h;
    g.void_radius = r;
    g.receiver_offset = std::sqrt(std::max(0.0, r * r + rk * rk + 2.0 * r * rk * std::cos(phi)));
    const LaplaceMethod method = opts.method;
    const LaplaceExponent eta([g, method](double s, int n) { return void_exponent(g, s, n, method); },
                              method);
    return conditional_coverage(M, geo, eta);
}

double coverage_cond_fixed_avg(double r, FixedRole role, const NetworkConfig& cfg,
                               const NomaLink& link, const UcOptions& opts) {
    if (opts.fixed_model == FixedUserModel::shared_laplace || r == 0.0 ||
        link.fixed_user_horiz_dist == 0.0) {
        return coverage_cond_fixed(r, 0.0, role, cfg, link, opts);
    }
    const double total = quad::integrate(
        [&](double phi) { return coverage_cond_fixed(r, phi, role, cfg, link, opts); }, 0.0, kPi,
        kPhiTol, "fixed-user azimuth average");
    return total / kPi;
}

double coverage_typical(const NetworkConfig& cfg, const NomaLink& link, Access access,
                        const UcOptions& opts) {
    cfg.validate();
    link.validate();
    const double lam = cfg.uav_density;
    const double uk = kPi * lam * link.fixed_user_horiz_dist * link.fixed_user_horiz_dist;
    const UcCase near = access == Access::oma ? UcCase::oma : UcCase::near;
    const UcCase far = access == Access::oma ? UcCase::oma : UcCase::far;
    auto branch = [&](UcCase c) {
        return [&, c](double u) { return coverage_cond(r_of_u(u, lam), c, cfg, link, opts); };
    };
    double p = quad::integrate_exp_weighted(branch(near), 0.0, uk, kOuterTol, "typical near branch");
    p += quad::integrate_exp_weighted(branch(far), uk, INFINITY, kOuterTol, "typical far branch");
    return std::clamp(p, 0.0, 1.0);
}

double coverage_fixed(const NetworkConfig& cfg, const NomaLink& link, Access access,
                      const UcOptions& opts) {
    cfg.validate();
    link.validate();
    const double lam = cfg.uav_density;
    const double uk = kPi * lam * link.fixed_user_horiz_dist * link.fixed_user_horiz_dist;
    // Typical user nearer than r_k: the fixed user is the far user.
    const FixedRole when_typical_near = access == Access::oma ? FixedRole::oma : FixedRole::as_far;
    const FixedRole when_typical_far = access == Access::oma ? FixedRole::oma : FixedRole::as_near;
    auto branch = [&](FixedRole role) {
        return [&, role](double u) { return coverage_cond_fixed_avg(r_of_u(u, lam), role, cfg, link, opts); };
    };
    double p = quad::integrate_exp_weighted(branch(when_typical_near), 0.0, uk, kOuterTol,
                                            "fixed user, typical near");
    p += quad::integrate_exp_weighted(branch(when_typical_far), uk, INFINITY, kOuterTol,
                                      "fixed user, typical far");
    return std::clamp(p, 0.0, 1.0);
}

}  // namespace uavnoma
