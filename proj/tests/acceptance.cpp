// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "uavnoma/channel.hpp"
#include "uavnoma/laplace.hpp"
#include "uavnoma/montecarlo.hpp"
#include "uavnoma/parallel.hpp"
#include "uavnoma/quadrature.hpp"
#include "uavnoma/spatial.hpp"
#include "uavnoma/specfun.hpp"
#include "uavnoma/uav_centric.hpp"
#include "uavnoma/user_centric.hpp"

using namespace uavnoma;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kTrials = 100000;

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<double> power_points() {
    std::vector<double> p;
    for (int i = 0; i < 8; ++i) {
        p.push_back(-60.0 + 60.0 * i / 7.0);
    }
    return p;
}

NetworkConfig baseline_network(double dbm, double alpha) {
    NetworkConfig cfg;
    cfg.uav_density = 1.0 / (500.0 * 500.0 * std::numbers::pi);
    cfg.uav_height = 100.0;
    cfg.alpha_interf = 4.0;
    cfg.tx_power = dbm_to_watts(dbm);
    cfg.noise_power = noise_from_bandwidth(300e3);
    cfg.alpha_desired = alpha;
    return cfg;
}

NomaLink fig3_link(double beta) {
    NomaLink l;
    l.rate_near = 1.0;
    l.rate_far = 0.5;
    l.fixed_user_horiz_dist = 300.0;
    l.ipsic = beta;
    return l;
}

NomaLink fig6_link(double beta) {
    NomaLink l;
    l.rate_near = 1.5;
    l.rate_far = 1.0;
    l.ipsic = beta;
    return l;
}

McOptions mc_threads() {
    McOptions o;
    o.threads = default_thread_count();
    return o;
}

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

void guarded(int id, const std::string& what, const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        report(id, ok, what, detail);
    } catch (const std::exception& e) {
        report(id, false, what, std::string("exception: ") + e.what());
    }
}

// Criterion 1: user-centric analytic vs MC over the power sweep.
std::pair<bool, std::string> criterion1() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::string where;
    for (double beta : {0.0, 0.1, 0.3}) {
        for (double dbm : power_points()) {
            const auto cfg = baseline_network(dbm, 3.0);
            const auto link = fig3_link(beta);
            const auto mc = run_user_centric(cfg, link, Access::noma, kTrials, 1000 + static_cast<int>(dbm), mc_threads());
            const double gt = std::abs(coverage_typical(cfg, link, Access::noma) - mc.first.p_hat);
            const double gf = std::abs(coverage_fixed(cfg, link, Access::noma) - mc.second.p_hat);
            if (std::max(gt, gf) > worst) {
                worst = std::max(gt, gf);
                where = "beta=" + fmt("%.1f", beta) + ", " + fmt("%.1f dBm", dbm) + (gt >= gf ? " typical" : " fixed");
            }
        }
    }
    const double secs = seconds_since(t0);
    const bool ok = worst <= 0.02 && secs <= 300.0;
    return {ok, "max |analytic - MC| = " + fmt("%.4f", worst) + " at " + where + "; runtime " + fmt("%.0f s", secs) +
                    " on " + std::to_string(default_thread_count()) + " thread(s)"};
}

// Criterion 2: UAV-centric analytic vs MC over the power sweep.
std::pair<bool, std::string> criterion2() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    std::string where;
    for (double beta : {0.0, 0.1}) {
        for (double dbm : power_points()) {
            const auto cfg = baseline_network(dbm, 3.5);
            const auto link = fig6_link(beta);
            const auto mc = run_uav_centric(cfg, link, Access::noma, kTrials, 2000 + static_cast<int>(dbm), mc_threads());
            const double gn = std::abs(coverage_pair(PairUser::near_w, cfg, link, Access::noma) - mc.first.p_hat);
            const double gf = std::abs(coverage_pair(PairUser::far_v, cfg, link, Access::noma) - mc.second.p_hat);
            if (std::max(gn, gf) > worst) {
                worst = std::max(gn, gf);
                where = "beta=" + fmt("%.1f", beta) + ", " + fmt("%.1f dBm", dbm) + (gn >= gf ? " near" : " far");
            }
        }
    }
    const double secs = seconds_since(t0);
    const bool ok = worst <= 0.02 && secs <= 300.0;
    return {ok, "max |analytic - MC| = " + fmt("%.4f", worst) + " at " + where + "; runtime " + fmt("%.0f s", secs) +
                    " on " + std::to_string(default_thread_count()) + " thread(s)"};
}

// Criterion 3: arctan form vs the general evaluators; Rayleigh hole factor.
std::pair<bool, std::string> criterion3() {
    const auto cfg = baseline_network(-30.0, 3.0);
    double worst = 0.0;
    for (double rt : {100.0, 300.0, 1500.0}) {
        const PppTail t = PppTail::from(cfg, rt);
        // s spans 1e8 .. 1e14, six orders of magnitude.
        for (int i = 0; i <= 24; ++i) {
            const double s = std::pow(10.0, 8.0 + 0.25 * i);
            const double ref = tail_exponent_rayleigh_alpha4(t, s);
            for (double v : {tail_exponent(t, s, 0).front(), tail_exponent(t, s, 0, LaplaceMethod::quadrature).front(),
                             tail_exponent_incomplete_beta(t, s)}) {
                worst = std::max(worst, std::abs(v - ref) / ref);
            }
        }
    }
    double hole_worst = 0.0;
    for (double R : {50.0, 400.0, 3000.0}) {
        const HoleTerm h = HoleTerm::from(cfg, R);
        for (int i = 0; i <= 24; ++i) {
            const double s = std::pow(10.0, 8.0 + 0.25 * i);
            hole_worst = std::max(hole_worst,
                                  std::abs(hole_factor_rayleigh(h, s) - std::exp(-hole_exponent(h, s, 0).front())));
        }
    }
    return {worst <= 1e-8 && hole_worst <= 1e-12,
            "tail max rel error " + fmt("%.2e", worst) + ", hole factor max abs error " + fmt("%.2e", hole_worst)};
}

// Criterion 4: infeasible links are exactly zero on both paths.
std::pair<bool, std::string> criterion4() {
    const auto cfg = baseline_network(-30.0, 3.0);
    NomaLink uc = fig3_link(2.0 / 3.0);
    double analytic_max = 0.0;
    for (double r = 0.0; r <= 3000.0; r += 150.0) {
        analytic_max = std::max(analytic_max, coverage_cond(r, UcCase::near, cfg, uc));
    }
    // Every trial in the near branch: push the fixed user beyond any serving distance.
    uc.fixed_user_horiz_dist = 1e5;
    const auto mc_uc = run_user_centric(cfg, uc, Access::noma, 20000, 41, mc_threads());

    const auto cfg6 = baseline_network(-30.0, 3.5);
    const NomaLink ucav = fig6_link(0.5);
    const double a6 = coverage_pair(PairUser::near_w, cfg6, ucav, Access::noma);
    const auto mc6 = run_uav_centric(cfg6, ucav, Access::noma, 20000, 42, mc_threads());
    const bool ok = analytic_max == 0.0 && mc_uc.first.successes == 0 && a6 == 0.0 && mc6.first.successes == 0;
    return {ok, "user-centric near: analytic max " + fmt("%g", analytic_max) + ", MC successes " +
                    std::to_string(mc_uc.first.successes) + "; UAV-centric near: analytic " + fmt("%g", a6) +
                    ", MC successes " + std::to_string(mc6.first.successes)};
}

// Reference tail exponent on a fixed composite Gauss-Legendre grid, so that it
// is smooth in s. With u = lower x^(-1/(aI-2)) the integrand is bounded on (0, 1].
double tail_reference(const PppTail& t, double s) {
    const double a = t.alpha_interf;
    const double m = t.m_interf;
    const double k = s * t.tx_power * std::pow(t.lower, -a) / m;
    auto g = [&](double x) {
        const double y = k * std::pow(x, a / (a - 2.0));
        return y < 1e-300 ? m : -std::expm1(-m * std::log1p(y)) / y;
    };
    double sum = 0.0;
    double hi = 1.0;
    for (int j = 0; j < 60; ++j) {
        const double lo = j == 59 ? 0.0 : 0.5 * hi;
        sum += boost::math::quadrature::gauss<double, 30>::integrate(g, lo, hi);
        hi = lo;
    }
    return 2.0 * std::numbers::pi * t.density * std::pow(t.lower, 2.0 - a) * s * t.tx_power / (m * (a - 2.0)) * sum;
}

double hole_reference(const HoleTerm& h, double s) {
    const double x = s * h.tx_power / (h.m_interf * std::pow(h.l_interf, h.alpha_interf));
    return h.l_interf / h.serving_dist * -std::expm1(-h.m_interf * std::log1p(x));
}

// Criterion 5: derivatives of L = exp(-eta) vs finite differences of an
// independently evaluated L.
std::pair<bool, std::string> criterion5() {
    std::mt19937_64 rng(20240521);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0;
    double worst_value = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        NetworkConfig cfg = baseline_network(-60.0 + 60.0 * U(rng), 3.0);
        cfg.uav_density = std::pow(10.0, -7.0 + 1.5 * U(rng));
        cfg.alpha_interf = 2.5 + 2.0 * U(rng);
        cfg.m_interf = 1 + static_cast<int>(3.0 * U(rng));
        const double lower = 100.0 + 900.0 * U(rng);
        const bool with_hole = draw % 2 == 1;
        const HoleLaplaceExponent ucav = laplace_exponent_ucav(cfg, lower);
        const PppTail tail = with_hole ? ucav.tail : PppTail::from(cfg, lower);
        const LaplaceExponent eta = with_hole ? ucav.combined() : laplace_exponent_uc(cfg, lower);
        auto L = [&](double x) {
            return std::exp(-(tail_reference(tail, x) + (with_hole ? hole_reference(ucav.hole, x) : 0.0)));
        };
        // s where eta is of order one.
        double s = 1.0;
        while (eta.value_at(s) < 0.05) {
            s *= 2.0;
        }
        s *= 0.5 + U(rng);
        const auto d = specfun::exp_composition_derivatives(eta.derivatives(s, 3), 3);
        worst_value = std::max(worst_value, std::abs(d[0] - L(s)) / L(s));
        auto fd = [&](double h, int k) {
            switch (k) {
                case 1: return (L(s + h) - L(s - h)) / (2 * h);
                case 2: return (L(s + h) - 2 * L(s) + L(s - h)) / (h * h);
                default: return (L(s + 2 * h) - 2 * L(s + h) + 2 * L(s - h) - L(s - 2 * h)) / (2 * h * h * h);
            }
        };
        for (int k = 1; k <= 3; ++k) {
            const double h = 0.02 * s;
            const double rich = (4.0 * fd(h / 2, k) - fd(h, k)) / 3.0;
            worst = std::max(worst, std::abs(d[k] - rich) / std::abs(d[k]));
        }
    }
    return {worst <= 1e-4, "20 draws, orders 1..3, max rel error " + fmt("%.2e", worst) +
                               " (L itself agrees to " + fmt("%.1e", worst_value) + ")"};
}

// Criterion 6: m = 2 beats m = 1 on the criterion-1 sweep at beta = 0.
std::pair<bool, std::string> criterion6() {
    int violations = 0;
    std::string detail;
    for (double dbm : power_points()) {
        auto c1 = baseline_network(dbm, 3.0);
        auto c2 = c1;
        c2.m_desired = 2;
        const auto link = fig3_link(0.0);
        const double t1 = coverage_typical(c1, link, Access::noma);
        const double t2 = coverage_typical(c2, link, Access::noma);
        const double f1 = coverage_fixed(c1, link, Access::noma);
        const double f2 = coverage_fixed(c2, link, Access::noma);
        if (!(t2 > t1) || !(f2 > f1)) {
            ++violations;
            detail += " " + fmt("%.1f dBm", dbm) + ": typical " + fmt("%.5f", t1) + " -> " + fmt("%.5f", t2) +
                      ", fixed " + fmt("%.5f", f1) + " -> " + fmt("%.5f", f2) + ";";
        }
    }
    return {violations == 0, std::to_string(violations) + " of 8 points violate" + detail};
}

// Criterion 7: NOMA vs OMA on the (alpha_v, R_t) grid.
std::pair<bool, std::string> criterion7() {
    const std::vector<double> av = {0.75, 0.80, 0.85, 0.90, 0.95};
    const std::vector<double> rates = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
    NetworkConfig cfg = baseline_network(-30.0, 3.0);
    cfg.m_desired = 3;
    cfg.m_interf = 2;

    std::vector<CoverageEstimate> oma;
    for (double rt : rates) {
        NomaLink l = fig3_link(0.0);
        l.rate_near = rt;
        oma.push_back(run_user_centric(cfg, l, Access::oma, kTrials, 7000 + static_cast<int>(10 * rt), mc_threads()).first);
    }
    bool exists_beta0 = false;
    double best_gain0 = -1.0;
    double worst_excess = -1.0;
    std::string excess_at;
    for (double a : av) {
        for (std::size_t j = 0; j < rates.size(); ++j) {
            NomaLink l = fig3_link(0.0);
            l.pw_far = a * a;
            l.pw_near = 1.0 - a * a;
            l.rate_near = rates[j];
            const double n0 = coverage_typical(cfg, l, Access::noma);
            l.ipsic = 0.15;
            const double n15 = coverage_typical(cfg, l, Access::noma);
            const double half = oma[j].ci_high - oma[j].p_hat;
            exists_beta0 = exists_beta0 || n0 > oma[j].ci_high;
            best_gain0 = std::max(best_gain0, n0 - oma[j].p_hat);
            const double excess = n15 - oma[j].p_hat - half;
            if (excess > worst_excess) {
                worst_excess = excess;
                excess_at = "alpha_v=" + fmt("%.2f", a) + ", R_t=" + fmt("%.1f", rates[j]) + " (NOMA " +
                            fmt("%.4f", n15) + " vs OMA " + fmt("%.4f", oma[j].p_hat) + ")";
            }
        }
    }
    const bool ok = exists_beta0 && worst_excess <= 0.0;
    return {ok, std::string("beta=0: NOMA above OMA somewhere: ") + (exists_beta0 ? "yes" : "no") + " (best gain " +
                    fmt("%.4f", best_gain0) + "); beta=0.15: largest excess over OMA beyond the MC CI " +
                    fmt("%.4f", worst_excess) + " at " + excess_at};
}

// Criterion 8: distribution sanity.
std::pair<bool, std::string> criterion8() {
    const double lam = 1.0 / (500.0 * 500.0 * std::numbers::pi);
    Rng rng = trial_stream(8, 0);
    const int n = 100000;
    std::vector<double> xs(n);
    for (auto& x : xs) {
        x = nearest_distance_sample(lam, rng);
    }
    std::sort(xs.begin(), xs.end());
    double dmax = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = nearest_distance_cdf(xs[i], lam);
        dmax = std::max({dmax, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
    }
    const double ks = dmax * std::sqrt(static_cast<double>(n));

    double norm_err = 0.0;
    for (double R : {20.0, 500.0, 5000.0}) {
        const double a = quad::integrate([&](double r) { return near_user_pdf(r, R); }, 0.0, R / 4);
        const double b = quad::integrate([&](double r) { return far_user_pdf(r, R); }, R / 4, R / 2);
        norm_err = std::max({norm_err, std::abs(a - 1.0), std::abs(b - 1.0)});
    }

    const int draws = 1000000;
    double worst_z = 0.0;
    for (int m : {1, 2, 3}) {
        double sum = 0.0;
        for (int i = 0; i < draws; ++i) {
            sum += sample_nakagami_power(m, rng);
        }
        const double zscore = std::abs(sum / draws - 1.0) * std::sqrt(static_cast<double>(m) * draws);
        worst_z = std::max(worst_z, zscore);
    }
    const bool ok = ks < 1.628 && norm_err <= 1e-12 && worst_z < 3.0;
    return {ok, "KS sqrt(n) D = " + fmt("%.3f", ks) + " (< 1.628), pdf normalization error " + fmt("%.1e", norm_err) +
                    ", Nakagami mean |z| max " + fmt("%.2f", worst_z)};
}

// Criterion 9: monotone in beta and in the target rate.
std::pair<bool, std::string> criterion9() {
    const std::vector<double> betas = {0.0, 0.1, 0.2, 0.3, 0.4};
    const std::vector<double> rates = {0.25, 0.5, 0.75, 1.0, 1.25};
    const std::vector<double> powers = {-50.0, -40.0, -30.0, -20.0, -10.0};
    constexpr double slack = 1e-9;
    int violations = 0;
    double worst = 0.0;
    for (Strategy st : {Strategy::user_centric, Strategy::uav_centric}) {
        for (double dbm : powers) {
            const auto cfg = baseline_network(dbm, st == Strategy::user_centric ? 3.0 : 3.5);
            // grid[b][r] = coverage of both users
            std::vector<std::vector<std::pair<double, double>>> grid(betas.size(),
                                                                     std::vector<std::pair<double, double>>(rates.size()));
            for (std::size_t b = 0; b < betas.size(); ++b) {
                for (std::size_t r = 0; r < rates.size(); ++r) {
                    NomaLink l = st == Strategy::user_centric ? fig3_link(betas[b]) : fig6_link(betas[b]);
                    l.rate_near = rates[r];
                    if (st == Strategy::user_centric) {
                        grid[b][r] = {coverage_typical(cfg, l, Access::noma), coverage_fixed(cfg, l, Access::noma)};
                    } else {
                        grid[b][r] = {coverage_pair(PairUser::near_w, cfg, l, Access::noma),
                                      coverage_pair(PairUser::far_v, cfg, l, Access::noma)};
                    }
                }
            }
            auto check = [&](std::pair<double, double> lo, std::pair<double, double> hi) {
                for (double inc : {hi.first - lo.first, hi.second - lo.second}) {
                    if (inc > slack) {
                        ++violations;
                    }
                    worst = std::max(worst, inc);
                }
            };
            for (std::size_t b = 0; b < betas.size(); ++b) {
                for (std::size_t r = 0; r < rates.size(); ++r) {
                    if (b + 1 < betas.size()) check(grid[b][r], grid[b + 1][r]);
                    if (r + 1 < rates.size()) check(grid[b][r], grid[b][r + 1]);
                }
            }
        }
    }
    return {violations == 0, "2 strategies x 5x5x5 grid, violations " + std::to_string(violations) +
                                 ", largest increase " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
    std::printf("acceptance suite, %u worker thread(s)\n", default_thread_count());
    guarded(1, "user-centric analytic vs MC within 0.02 (fig 3a setup)", criterion1);
    guarded(2, "UAV-centric analytic vs MC within 0.02 (fig 6a setup)", criterion2);
    guarded(3, "special-case identities", criterion3);
    guarded(4, "infeasible links give exactly zero", criterion4);
    guarded(5, "Faa di Bruno derivatives vs finite differences", criterion5);
    guarded(6, "m=2 coverage above m=1 at every sweep point (beta=0)", criterion6);
    guarded(7, "NOMA vs OMA on the (alpha_v, R_t) grid", criterion7);
    guarded(8, "distribution sanity", criterion8);
    guarded(9, "monotone in ipSIC and target rate", criterion9);
    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
