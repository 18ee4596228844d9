#include "uavnoma/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "uavnoma/channel.hpp"
#include "uavnoma/errors.hpp"
#include "uavnoma/parallel.hpp"
#include "uavnoma/spatial.hpp"

namespace uavnoma {

namespace {

constexpr std::uint64_t kBlock = 2048;

struct Received {
    double gain;
    double dist3d;
    double interference;
};

SinrInputs stage(const NetworkConfig& cfg, const Received& rx, double own, double other, double residue) {
    return SinrInputs{rx.gain, rx.dist3d, cfg.alpha_desired, cfg.tx_power, rx.interference,
                      cfg.noise_power, own, other, residue};
}

bool coeff_test(DecodeCoeff M, const NetworkConfig& cfg, const Received& rx) {
    return M && rx.gain > *M * std::pow(rx.dist3d, cfg.alpha_desired) * (rx.interference + cfg.noise_power);
}

// Decodes the other user's message first (first_residue scales the own
// signal in that stage), then its own message with ipSIC residue beta.
bool sic_success(const NetworkConfig& cfg, const NomaLink& link, const Received& rx, double eps_own,
                 double eps_other, double first_residue) {
    return sinr(stage(cfg, rx, link.pw_far, link.pw_near, first_residue)) > eps_other &&
           sinr(stage(cfg, rx, link.pw_near, link.pw_far, link.ipsic)) > eps_own;
}

bool direct_success(const NetworkConfig& cfg, const NomaLink& link, const Received& rx, double eps) {
    return sinr(stage(cfg, rx, link.pw_far, link.pw_near, 1.0)) > eps;
}

bool oma_success(const NetworkConfig& cfg, const Received& rx, double eps) {
    return sinr(stage(cfg, rx, 1.0, 0.0, 0.0)) > eps;
}

Point2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

Received receive(const NetworkConfig& cfg, const Scene& interferers, Point2 where, double dist3d, Rng& rng) {
    Received rx;
    rx.gain = sample_nakagami_power(cfg.m_desired, rng);
    rx.dist3d = dist3d;
    rx.interference = aggregate_interference(interferers, where, cfg.uav_height, 0.0, cfg.alpha_interf,
                                             cfg.m_interf, cfg.tx_power, rng);
    return rx;
}

CoverageEstimate make_estimate(std::uint64_t successes, std::uint64_t mismatches, std::uint64_t trials,
                               Strategy strategy, Access access, std::string role, std::uint64_t seed) {
    CoverageEstimate e;
    e.successes = successes;
    e.trials = trials;
    e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(successes, trials);
    e.strategy = strategy;
    e.access = access;
    e.user_role = std::move(role);
    e.seed = seed;
    e.identity_mismatches = mismatches;
    return e;
}

template <class Trial>
std::array<std::uint64_t, 4> run_trials(std::uint64_t trials, unsigned threads, Trial&& trial) {
    const std::size_t blocks = static_cast<std::size_t>((trials + kBlock - 1) / kBlock);
    std::vector<std::array<std::uint64_t, 4>> counts(blocks, {0, 0, 0, 0});
    parallel_for(blocks, threads, [&](std::size_t b) {
        const std::uint64_t lo = b * kBlock;
        const std::uint64_t hi = std::min(trials, lo + kBlock);
        auto& c = counts[b];
        for (std::uint64_t t = lo; t < hi; ++t) {
            const TrialOutcome o = trial(t);
            c[0] += o.first;
            c[1] += o.second;
            c[2] += o.first_mismatch;
            c[3] += o.second_mismatch;
        }
    });
    std::array<std::uint64_t, 4> total{0, 0, 0, 0};
    for (const auto& c : counts) {
        for (int i = 0; i < 4; ++i) {
            total[i] += c[i];
        }
    }
    return total;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (trials == 0) {
        throw DomainError("wilson_interval: trials must be positive");
    }
    if (successes > trials) {
        throw DomainError("wilson_interval: successes exceed trials");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw DomainError("wilson_interval: confidence must lie in (0, 1)");
    }
    const double z = boost::math::quantile(boost::math::normal(), 0.5 + 0.5 * confidence);
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2n = z * z / n;
    const double centre = (p + 0.5 * z2n) / (1.0 + z2n);
    const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
    double lo = successes == 0 ? 0.0 : std::clamp(centre - half, 0.0, p);
    double hi = successes == trials ? 1.0 : std::clamp(centre + half, p, 1.0);
    return {lo, hi};
}

TrialOutcome user_centric_trial(const NetworkConfig& cfg, const NomaLink& link, Access access,
                                std::uint64_t seed, std::uint64_t trial, const McOptions& opts) {
    Rng rng = trial_stream(seed, trial);
    const ThresholdSet th = thresholds(link, cfg, Strategy::user_centric, access);
    const double h = cfg.uav_height;

    Scene others;
    Point2 serving;
    if (opts.serving_dist) {
        serving = polar(*opts.serving_dist, sample_azimuth(rng));
        others.uav_horiz_positions =
            sample_hppp_annulus(cfg.uav_density, *opts.serving_dist, cfg.sim_disc_radius, rng);
    } else {
        auto pts = sample_hppp_disc(cfg.uav_density, cfg.sim_disc_radius, rng);
        if (pts.empty()) {
            return {};  // nobody to associate with: outage for both users
        }
        auto nearest = std::min_element(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
            return a.x * a.x + a.y * a.y < b.x * b.x + b.y * b.y;
        });
        serving = *nearest;
        *nearest = pts.back();
        pts.pop_back();
        others.uav_horiz_positions = std::move(pts);
    }
    const double r = std::hypot(serving.x, serving.y);
    const double rk = link.fixed_user_horiz_dist;
    const Point2 fixed_pos = [&] {
        const Point2 off = polar(rk, sample_azimuth(rng));
        return Point2{serving.x + off.x, serving.y + off.y};
    }();

    const Received t = receive(cfg, others, {0.0, 0.0}, std::sqrt(r * r + h * h), rng);
    const Received f = receive(cfg, others, fixed_pos, std::sqrt(rk * rk + h * h), rng);

    TrialOutcome out;
    bool t_coeff = false;
    bool f_coeff = false;
    if (access == Access::oma) {
        out.first = oma_success(cfg, t, th.eps_own);
        out.second = oma_success(cfg, f, th.eps_other);
        t_coeff = coeff_test(th.typical_near, cfg, t);
        f_coeff = coeff_test(th.fixed_as_far, cfg, f);
    } else if (r < rk) {
        out.first = sic_success(cfg, link, t, th.eps_own, th.eps_other, 1.0);
        out.second = direct_success(cfg, link, f, th.eps_other);
        t_coeff = coeff_test(th.typical_near, cfg, t);
        f_coeff = coeff_test(th.fixed_as_far, cfg, f);
    } else {
        out.first = direct_success(cfg, link, t, th.eps_own);
        out.second = sic_success(cfg, link, f, th.eps_other, th.eps_own, 1.0);
        t_coeff = coeff_test(th.typical_far, cfg, t);
        f_coeff = coeff_test(th.fixed_as_near, cfg, f);
    }
    out.first_mismatch = out.first != t_coeff;
    out.second_mismatch = out.second != f_coeff;
    return out;
}

TrialOutcome uav_centric_trial(const NetworkConfig& cfg, const NomaLink& link, Access access,
                               std::uint64_t seed, std::uint64_t trial, const McOptions& opts) {
    Rng rng = trial_stream(seed, trial);
    const ThresholdSet th = thresholds(link, cfg, Strategy::uav_centric, access);
    const double h = cfg.uav_height;

    Scene others;
    double R = 0.0;
    if (opts.serving_dist) {
        R = *opts.serving_dist;
        const Point2 nearest = polar(R, sample_azimuth(rng));
        others.uav_horiz_positions = sample_hppp_annulus(cfg.uav_density, R, cfg.sim_disc_radius, rng);
        others.uav_horiz_positions.push_back(nearest);
    } else {
        others.uav_horiz_positions = sample_hppp_disc(cfg.uav_density, cfg.sim_disc_radius, rng);
        R = cfg.sim_disc_radius;
        for (const auto& p : others.uav_horiz_positions) {
            R = std::min(R, std::hypot(p.x, p.y));
        }
    }
    const double rw = opts.near_user_dist ? *opts.near_user_dist : sample_near_user(R, rng);
    const double rv = opts.far_user_dist ? *opts.far_user_dist : sample_far_user(R, rng);
    const Point2 wpos = polar(rw, sample_azimuth(rng));
    const Point2 vpos = polar(rv, sample_azimuth(rng));

    const Received w = receive(cfg, others, wpos, std::sqrt(rw * rw + h * h), rng);
    const Received v = receive(cfg, others, vpos, std::sqrt(rv * rv + h * h), rng);

    TrialOutcome out;
    if (access == Access::oma) {
        out.first = oma_success(cfg, w, th.eps_own);
        out.second = oma_success(cfg, v, th.eps_other);
    } else {
        const double first_residue = link.first_stage == FirstStageResidue::full ? 1.0 : link.ipsic;
        out.first = sic_success(cfg, link, w, th.eps_own, th.eps_other, first_residue);
        out.second = direct_success(cfg, link, v, th.eps_other);
    }
    out.first_mismatch = out.first != coeff_test(th.near, cfg, w);
    out.second_mismatch = out.second != coeff_test(th.far, cfg, v);
    return out;
}

PairEstimate run_user_centric(const NetworkConfig& cfg, const NomaLink& link, Access access,
                              std::uint64_t trials, std::uint64_t seed, const McOptions& opts) {
    if (trials == 0) {
        throw DomainError("run_user_centric: trials must be positive");
    }
    cfg.validate();
    link.validate();
    const auto c = run_trials(trials, opts.threads, [&](std::uint64_t t) {
        return user_centric_trial(cfg, link, access, seed, t, opts);
    });
    return {make_estimate(c[0], c[2], trials, Strategy::user_centric, access, "typical", seed),
            make_estimate(c[1], c[3], trials, Strategy::user_centric, access, "fixed", seed)};
}

PairEstimate run_uav_centric(const NetworkConfig& cfg, const NomaLink& link, Access access,
                             std::uint64_t trials, std::uint64_t seed, const McOptions& opts) {
    if (trials == 0) {
        throw DomainError("run_uav_centric: trials must be positive");
    }
    cfg.validate();
    link.validate();
    const auto c = run_trials(trials, opts.threads, [&](std::uint64_t t) {
        return uav_centric_trial(cfg, link, access, seed, t, opts);
    });
    return {make_estimate(c[0], c[2], trials, Strategy::uav_centric, access, "near", seed),
            make_estimate(c[1], c[3], trials, Strategy::uav_centric, access, "far", seed)};
}

}  // namespace uavnoma
