#include <doctest.h>

#include <cmath>
#include <numbers>

#include "uavnoma/montecarlo.hpp"
#include "uavnoma/spatial.hpp"
#include "uavnoma/user_centric.hpp"

using namespace uavnoma;

namespace {

NetworkConfig baseline_network(double dbm = -30.0) {
    NetworkConfig cfg;
    cfg.tx_power = dbm_to_watts(dbm);
    cfg.noise_power = noise_from_bandwidth(300e3);
    return cfg;
}

// Plain composite Simpson in r against the nearest-distance density.
template <class F>
double simpson_marginal(F&& cond, double lambda, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int i = 0; i <= panels; ++i) {
        const double r = lo + i * h;
        const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        sum += w * cond(r) * nearest_distance_pdf(r, lambda);
    }
    return sum * h / 3.0;
}

}  // namespace

TEST_CASE("Rayleigh collapse of the conditional coverage") {
    const auto cfg = baseline_network();
    const NomaLink link;
    const double r = 180.0;
    const double rt = std::hypot(r, cfg.uav_height);
    const double M = *thresholds(link, cfg, Strategy::user_centric, Access::noma).typical_near;
    const double s = M * std::pow(rt, cfg.alpha_desired);
    const double expect = std::exp(-s * cfg.noise_power) * laplace_exponent_uc(cfg, rt).laplace(s);
    CHECK(coverage_cond(r, UcCase::near, cfg, link) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("infeasible coefficients give exactly zero") {
    const auto cfg = baseline_network();
    NomaLink link;
    link.ipsic = 2.0 / 3.0;
    CHECK(coverage_cond(120.0, UcCase::near, cfg, link) == 0.0);
    NomaLink dead;
    dead.rate_near = 3.0;
    dead.rate_far = 3.0;
    CHECK(coverage_typical(cfg, dead, Access::noma) == 0.0);
    CHECK(coverage_fixed(cfg, dead, Access::noma) == 0.0);
}

TEST_CASE("decomposition limits in r_k") {
    const auto cfg = baseline_network();
    NomaLink link;
    link.fixed_user_horiz_dist = 0.0;
    const double all_far = simpson_marginal(
        [&](double r) { return coverage_cond(r, UcCase::far, cfg, link); }, cfg.uav_density, 0.0, 3000.0, 600);
    CHECK(coverage_typical(cfg, link, Access::noma) == doctest::Approx(all_far).epsilon(1e-6));

    link.fixed_user_horiz_dist = 5000.0;
    const double all_near = simpson_marginal(
        [&](double r) { return coverage_cond(r, UcCase::near, cfg, link); }, cfg.uav_density, 0.0, 3000.0, 600);
    CHECK(coverage_typical(cfg, link, Access::noma) == doctest::Approx(all_near).epsilon(1e-6));
}

TEST_CASE("fixed user: ipSIC has no effect at R_f = 0.5") {
    const auto cfg = baseline_network(-20.0);
    NomaLink link;
    const double ref = coverage_fixed(cfg, link, Access::noma);
    for (double beta : {0.1, 0.3, 0.5}) {
        link.ipsic = beta;
        CHECK(coverage_fixed(cfg, link, Access::noma) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("fixed user far away is never covered") {
    const auto cfg = baseline_network();
    NomaLink link;
    link.fixed_user_horiz_dist = 1e5;
    CHECK(coverage_fixed(cfg, link, Access::noma) < 1e-6);
}

TEST_CASE("series and quadrature routes give the same coverage") {
    NetworkConfig cfg = baseline_network();
    cfg.m_desired = 2;
    cfg.m_interf = 2;
    const NomaLink link;
    const double a = coverage_typical(cfg, link, Access::noma, {LaplaceMethod::automatic});
    const double b = coverage_typical(cfg, link, Access::noma, {LaplaceMethod::quadrature});
    CHECK(a == doctest::Approx(b).epsilon(1e-7));
}

TEST_CASE("coverage is non-increasing in rates and ipSIC") {
    const auto cfg = baseline_network();
    NomaLink link;
    double prev = 2.0;
    for (double beta : {0.0, 0.1, 0.2, 0.4}) {
        link.ipsic = beta;
        const double p = coverage_typical(cfg, link, Access::noma);
        CHECK(p <= prev + 1e-9);
        CHECK(p >= 0.0);
        prev = p;
    }
    link = NomaLink{};
    prev = 2.0;
    for (double rate : {0.1, 0.5, 1.0, 1.2}) {
        link.rate_near = rate;
        const double p = coverage_typical(cfg, link, Access::noma);
        CHECK(p <= prev + 1e-9);
        prev = p;
    }
}

TEST_CASE("conditional coverage vs pinned-distance simulation (m = 2)") {
    NetworkConfig cfg = baseline_network();
    cfg.m_desired = 2;
    const NomaLink link;  // r = 300 equals r_k: the typical user is the far user
    const double r = 300.0;
    McOptions mo;
    mo.serving_dist = r;
    const auto e = run_user_centric(cfg, link, Access::noma, 200000, 2024, mo);
    const double a = coverage_cond(r, UcCase::far, cfg, link);
    CHECK(std::abs(a - e.first.p_hat) < 0.01);
    CHECK(e.first.identity_mismatches == 0);
}

TEST_CASE("marginal coverage of both users vs simulation") {
    const auto cfg = baseline_network(-30.0);
    NomaLink link;
    link.ipsic = 0.1;
    const auto e = run_user_centric(cfg, link, Access::noma, 100000, 99);
    CHECK(std::abs(coverage_typical(cfg, link, Access::noma) - e.first.p_hat) < 0.01);
    CHECK(std::abs(coverage_fixed(cfg, link, Access::noma) - e.second.p_hat) < 0.01);
}
