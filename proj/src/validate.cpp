#include "uavnoma/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "uavnoma/laplace.hpp"
#include "uavnoma/montecarlo.hpp"
#include "uavnoma/specfun.hpp"
#include "uavnoma/uav_centric.hpp"
#include "uavnoma/user_centric.hpp"

namespace uavnoma {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

McOptions with_threads(unsigned threads) {
    McOptions o;
    o.threads = threads;
    return o;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

NetworkConfig base_network() {
    NetworkConfig cfg;
    cfg.noise_power = noise_from_bandwidth(300e3);
    return cfg;
}

CheckResult check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r{name, false, ""};
    try {
        auto [ok, detail] = body();
        r.pass = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

// analytic inside the MC interval widened by `slack`.
std::pair<bool, std::string> agrees(double analytic, const CoverageEstimate& e, double slack) {
    const bool ok = analytic >= e.ci_low - slack && analytic <= e.ci_high + slack;
    return {ok, "analytic " + num(analytic) + ", MC " + num(e.p_hat) + " [" + num(e.ci_low) + ", " +
                    num(e.ci_high) + "], " + std::to_string(e.trials) + " trials"};
}

}  // namespace

std::vector<CheckResult> run_validation(bool quick, unsigned threads) {
    std::vector<CheckResult> out;
    const NetworkConfig cfg = base_network();

    out.push_back(check("arctan form vs general tail exponent", [&] {
        PppTail t = PppTail::from(cfg, 150.0);
        double worst = 0.0;
        for (double s = 1e8; s <= 1e14; s *= std::sqrt(10.0)) {
            worst = std::max(worst, rel_err(tail_exponent(t, s, 0).front(), tail_exponent_rayleigh_alpha4(t, s)));
            worst = std::max(worst, rel_err(tail_exponent_incomplete_beta(t, s), tail_exponent_rayleigh_alpha4(t, s)));
        }
        return std::pair{worst < 1e-8, "max rel error " + num(worst)};
    }));

    out.push_back(check("series vs quadrature tail (m_I=2, alpha_I=3.5)", [&] {
        NetworkConfig c = cfg;
        c.m_interf = 2;
        c.alpha_interf = 3.5;
        PppTail t = PppTail::from(c, 200.0);
        const double kappa = t.tx_power / (2.0 * std::pow(200.0, 3.5));
        double worst = 0.0;
        for (double z : {1e-4, 0.01, 0.1, 0.4, 0.7}) {
            const auto a = tail_exponent(t, z / kappa, 2, LaplaceMethod::series);
            const auto b = tail_exponent(t, z / kappa, 2, LaplaceMethod::quadrature);
            for (int k = 0; k <= 2; ++k) {
                worst = std::max(worst, rel_err(a[k], b[k]));
            }
        }
        return std::pair{worst < 1e-8, "max rel error " + num(worst)};
    }));

    out.push_back(check("2F1 form vs arctan form", [&] {
        PppTail t = PppTail::from(cfg, 120.0);
        double worst = 0.0;
        for (double s : {1e9, 1e11, 1e13, 1e15}) {
            worst = std::max(worst, rel_err(tail_exponent_rayleigh_2f1(t, s), tail_exponent_rayleigh_alpha4(t, s)));
        }
        return std::pair{worst < 1e-10, "max rel error " + num(worst)};
    }));

    out.push_back(check("Rayleigh hole factor vs elementary form", [&] {
        const HoleTerm h = HoleTerm::from(cfg, 400.0);
        double worst = 0.0;
        for (double s : {1e8, 1e10, 1e12, 1e14}) {
            const double a = hole_factor_rayleigh(h, s);
            const double b = std::exp(-hole_exponent(h, s, 0).front());
            worst = std::max(worst, std::abs(a - b));
        }
        return std::pair{worst < 1e-12, "max abs error " + num(worst)};
    }));

    out.push_back(check("hole annulus construction independent of eps", [&] {
        const HoleTerm h = HoleTerm::from(cfg, 400.0);
        const double ref = hole_exponent(h, 3e12, 0).front();
        double worst = 0.0;
        for (double eps : {0.01, 0.1, 1.0, 10.0}) {
            worst = std::max(worst, rel_err(hole_exponent_annulus(h, 3e12, eps), ref));
        }
        return std::pair{worst < 1e-10, "max rel error " + num(worst)};
    }));

    out.push_back(check("Newton series converges to the hole exponent", [&] {
        NetworkConfig c = cfg;
        c.m_interf = 2;
        const HoleTerm h = HoleTerm::from(c, 300.0);
        const double s = 0.5 * c.m_interf * std::pow(h.l_interf, c.alpha_interf) / c.tx_power;
        const double err = rel_err(hole_exponent_newton(h, s, 80), hole_exponent(h, s, 0).front());
        return std::pair{err < 1e-10, "rel error after 80 terms " + num(err)};
    }));

    out.push_back(check("Faa di Bruno derivatives vs finite differences", [&] {
        NetworkConfig c = cfg;
        c.m_interf = 2;
        c.alpha_interf = 3.5;
        const LaplaceExponent eta = laplace_exponent_uc(c, 150.0);
        const double s0 = 2e11;
        const auto d = specfun::exp_composition_derivatives(eta.derivatives(s0, 2), 2);
        const double hstep = 1e-3 * s0;
        auto L = [&](double s) { return eta.laplace(s); };
        const double fd1 = (L(s0 + hstep) - L(s0 - hstep)) / (2 * hstep);
        const double fd2 = (L(s0 + hstep) - 2 * L(s0) + L(s0 - hstep)) / (hstep * hstep);
        const double worst = std::max(rel_err(d[1], fd1), rel_err(d[2], fd2));
        return std::pair{worst < 1e-4, "max rel error " + num(worst)};
    }));

    out.push_back(check("infeasible links give exactly zero", [&] {
        NetworkConfig c = cfg;
        NomaLink uc;
        uc.ipsic = 2.0 / 3.0;
        NomaLink ucav;
        ucav.rate_near = 1.5;
        ucav.ipsic = 0.5;
        const double a = coverage_cond(50.0, UcCase::near, c, uc);
        const double b = coverage_pair(PairUser::near_w, c, ucav, Access::noma);
        const auto mc = run_uav_centric(c, ucav, Access::noma, 2000, 7, with_threads(threads));
        const bool ok = a == 0.0 && b == 0.0 && mc.first.successes == 0;
        return std::pair{ok, "user-centric near " + num(a) + ", UAV-centric near " + num(b) + ", MC successes " +
                                 std::to_string(mc.first.successes)};
    }));

    const std::uint64_t pinned_trials = quick ? 20000 : 1000000;
    const double pinned_slack = quick ? 0.005 : 0.0;

    out.push_back(check("user-centric conditional coverage vs pinned MC (m=2)", [&] {
        NetworkConfig c = cfg;
        c.m_desired = 2;
        const NomaLink link;
        const double r = 300.0;
        McOptions mo;
        mo.threads = threads;
        mo.serving_dist = r;
        NomaLink far_link = link;
        far_link.fixed_user_horiz_dist = 200.0;  // typical user is the far user here
        const auto e = run_user_centric(c, far_link, Access::noma, pinned_trials, 11, mo);
        const double a = coverage_cond(r, UcCase::far, c, far_link);
        auto [ok, d] = agrees(a, e.first, pinned_slack);
        if (!quick) {
            ok = ok && std::abs(a - e.first.p_hat) <= 0.01;
        }
        return std::pair{ok, d};
    }));

    out.push_back(check("UAV-centric conditional coverage vs pinned MC (m=2)", [&] {
        NetworkConfig c = cfg;
        c.m_desired = 2;
        c.alpha_desired = 3.5;
        NomaLink link;
        link.rate_near = 1.5;
        link.rate_far = 1.0;
        const double R = 600.0;
        McOptions mo;
        mo.threads = threads;
        mo.serving_dist = R;
        mo.near_user_dist = 100.0;
        mo.far_user_dist = 220.0;
        const auto e = run_uav_centric(c, link, Access::noma, pinned_trials, 13, mo);
        const double a = coverage_cond_pair(100.0, R, PairUser::near_w, c, link);
        const double b = coverage_cond_pair(220.0, R, PairUser::far_v, c, link);
        auto [ok1, d1] = agrees(a, e.first, pinned_slack);
        auto [ok2, d2] = agrees(b, e.second, pinned_slack);
        bool ok = ok1 && ok2;
        if (!quick) {
            ok = ok && std::abs(a - e.first.p_hat) <= 0.01 && std::abs(b - e.second.p_hat) <= 0.01;
        }
        return std::pair{ok, "near: " + d1 + "; far: " + d2};
    }));

    if (!quick) {
        out.push_back(check("user-centric marginal coverage vs MC", [&] {
            NetworkConfig c = cfg;
            c.tx_power = dbm_to_watts(-30.0);
            const NomaLink link;
            const auto e = run_user_centric(c, link, Access::noma, 100000, 17, with_threads(threads));
            auto [ok1, d1] = agrees(coverage_typical(c, link, Access::noma), e.first, 0.0);
            auto [ok2, d2] = agrees(coverage_fixed(c, link, Access::noma), e.second, 0.0);
            return std::pair{ok1 && ok2, "typical: " + d1 + "; fixed: " + d2};
        }));
        out.push_back(check("UAV-centric marginal coverage vs MC", [&] {
            NetworkConfig c = cfg;
            c.tx_power = dbm_to_watts(-30.0);
            c.alpha_desired = 3.5;
            NomaLink link;
            link.rate_near = 1.5;
            link.rate_far = 1.0;
            const auto e = run_uav_centric(c, link, Access::noma, 100000, 19, with_threads(threads));
            auto [ok1, d1] = agrees(coverage_pair(PairUser::near_w, c, link, Access::noma), e.first, 0.0);
            auto [ok2, d2] = agrees(coverage_pair(PairUser::far_v, c, link, Access::noma), e.second, 0.0);
            return std::pair{ok1 && ok2, "near: " + d1 + "; far: " + d2};
        }));
    }
    return out;
}

}  // namespace uavnoma
