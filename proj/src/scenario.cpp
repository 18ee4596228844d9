#include "uavnoma/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavnoma/errors.hpp"

namespace uavnoma {

std::string_view to_string(Strategy s) {
    return s == Strategy::user_centric ? "user-centric" : "uav-centric";
}

std::string_view to_string(Access a) { return a == Access::noma ? "noma" : "oma"; }

Strategy parse_strategy(std::string_view text) {
    if (text == "user-centric" || text == "user_centric") {
        return Strategy::user_centric;
    }
    if (text == "uav-centric" || text == "uav_centric") {
        return Strategy::uav_centric;
    }
    throw DomainError("unknown strategy '" + std::string(text) + "'");
}

Access parse_access(std::string_view text) {
    if (text == "noma") {
        return Access::noma;
    }
    if (text == "oma") {
        return Access::oma;
    }
    throw DomainError("unknown access scheme '" + std::string(text) + "'");
}

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw DomainError(message);
    }
}

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

// eps / (P * den), infeasible when den <= 0.
// eps / (P (own - leak)); infeasible when the margin vanishes to round-off,
// so that exact ties such as 0.4 - (2/3) 0.6 count as infeasible.
DecodeCoeff coeff(double eps, double tx_power, double own, double leak) {
    const double den = own - leak;
    if (!(den > 1e-12 * own)) {
        return std::nullopt;
    }
    return eps / (tx_power * den);
}

}  // namespace

void NetworkConfig::validate() const {
    require(positive_finite(uav_density), "uav_density must be positive");
    require(uav_height >= 1.0 && std::isfinite(uav_height), "uav_height must be at least 1 m");
    require(positive_finite(tx_power), "tx_power must be positive");
    require(positive_finite(alpha_desired), "alpha_desired must be positive");
    require(alpha_interf > 2.0 && std::isfinite(alpha_interf),
            "alpha_interf must exceed 2 so that 2/alpha_interf < 1");
    require(m_desired >= 1, "m_desired must be a positive integer");
    require(m_interf >= 1, "m_interf must be a positive integer");
    require(positive_finite(noise_power), "noise_power must be positive");
    require(positive_finite(sim_disc_radius), "sim_disc_radius must be positive");
    require(positive_finite(hole_halfwidth), "hole_halfwidth must be positive");
    require(user_density >= 0.0, "user_density must be non-negative");
}

void NomaLink::validate() const {
    require(pw_far >= 0.0 && pw_near >= 0.0, "power fractions must be non-negative");
    require(std::abs(pw_far + pw_near - 1.0) <= 1e-9, "power fractions must sum to one");
    require(rate_near >= 0.0 && std::isfinite(rate_near), "rate_near must be non-negative");
    require(rate_far >= 0.0 && std::isfinite(rate_far), "rate_far must be non-negative");
    require(ipsic >= 0.0 && ipsic <= 1.0, "ipsic must lie in [0, 1]");
    require(fixed_user_horiz_dist >= 0.0 && std::isfinite(fixed_user_horiz_dist),
            "fixed_user_horiz_dist must be non-negative");
}

DecodeCoeff max_coeff(DecodeCoeff a, DecodeCoeff b) {
    if (!a || !b) {
        return std::nullopt;
    }
    return std::max(*a, *b);
}

double sinr_threshold(double rate, Access access) {
    const double r = access == Access::oma ? 2.0 * rate : rate;
    return std::exp2(r) - 1.0;
}

ThresholdSet thresholds(const NomaLink& link, const NetworkConfig& cfg, Strategy strategy,
                        Access access) {
    ThresholdSet t;
    t.strategy = strategy;
    t.access = access;
    t.eps_own = sinr_threshold(link.rate_near, access);
    t.eps_other = sinr_threshold(link.rate_far, access);

    const double p = cfg.tx_power;
    const double av = link.pw_far;
    const double aw = link.pw_near;
    const double beta = link.ipsic;

    if (access == Access::oma) {
        // Each user gets the full power in its own slot and no intra-cell term.
        const DecodeCoeff own = coeff(t.eps_own, p, 1.0, 0.0);
        const DecodeCoeff other = coeff(t.eps_other, p, 1.0, 0.0);
        if (strategy == Strategy::user_centric) {
            t.typical_near = t.typical_far = own;
            t.fixed_as_far = t.fixed_as_near = other;
        } else {
            t.near = own;
            t.far = other;
        }
        return t;
    }

    if (strategy == Strategy::user_centric) {
        const double et = t.eps_own;
        const double ef = t.eps_other;
        t.typical_own_after_sic = coeff(et, p, aw, beta * et * av);
        t.typical_decode_fixed = coeff(ef, p, av, ef * aw);
        t.typical_near = max_coeff(t.typical_own_after_sic, t.typical_decode_fixed);
        t.typical_far = coeff(et, p, av, et * aw);

        t.fixed_as_far = coeff(ef, p, av, ef * aw);
        t.fixed_own_after_sic = coeff(ef, p, aw, beta * ef * av);
        t.fixed_decode_typical = coeff(et, p, av, et * aw);
        t.fixed_as_near = max_coeff(t.fixed_own_after_sic, t.fixed_decode_typical);
    } else {
        const double ew = t.eps_own;
        const double ev = t.eps_other;
        const double residue = link.first_stage == FirstStageResidue::full ? 1.0 : beta;
        t.near_own = coeff(ew, p, aw, beta * ew * av);
        t.near_decode = coeff(ev, p, av, residue * ev * aw);
        t.near = max_coeff(t.near_own, t.near_decode);
        t.far = coeff(ev, p, av, ev * aw);
    }
    return t;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double noise_from_bandwidth(double bw_hz) {
    if (!(bw_hz > 0.0)) {
        throw DomainError("noise_from_bandwidth: bandwidth must be positive");
    }
    return dbm_to_watts(-174.0 + 10.0 * std::log10(bw_hz));
}

}  // namespace uavnoma
