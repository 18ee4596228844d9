#include "uavnoma/channel.hpp"

#include <cmath>

#include "uavnoma/errors.hpp"
#include "uavnoma/specfun.hpp"

namespace uavnoma {

namespace {

// d2^(-alpha/2) with a fast path for the common alpha = 4.
double inv_pow_sq(double d2, double alpha) {
    if (alpha == 4.0) {
        return 1.0 / (d2 * d2);
    }
    return std::pow(d2, -0.5 * alpha);
}

}  // namespace

double sample_nakagami_power(int m, Rng& rng) {
    if (m < 1) {
        throw DomainError("sample_nakagami_power: m must be a positive integer");
    }
    std::exponential_distribution<double> expo(1.0);
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        sum += expo(rng);
    }
    return sum / m;
}

double nakagami_power_pdf(double x, int m) {
    if (m < 1) {
        throw DomainError("nakagami_power_pdf: m must be a positive integer");
    }
    if (x < 0.0) {
        return 0.0;
    }
    if (x == 0.0) {
        return m == 1 ? 1.0 : 0.0;
    }
    const double md = m;
    return std::exp(md * std::log(md) + (md - 1.0) * std::log(x) - md * x -
                    specfun::ln_gamma(md));
}

double path_gain(double dist3d, double alpha) {
    if (!(dist3d >= 1.0)) {
        throw DomainError("path_gain: distance below 1 m");
    }
    return std::pow(dist3d, -alpha);
}

double distance3d(Point2 uav, Point2 receiver, double height) {
    const double dx = uav.x - receiver.x;
    const double dy = uav.y - receiver.y;
    return std::sqrt(dx * dx + dy * dy + height * height);
}

double aggregate_interference(const Scene& scene, Point2 receiver, double height,
                              double exclusion_dist3d, double alpha_interf, int m_interf,
                              double tx_power, Rng& rng) {
    const double h2 = height * height;
    const double excl2 = exclusion_dist3d * exclusion_dist3d;
    double sum = 0.0;
    for (const auto& p : scene.uav_horiz_positions) {
        const double dx = p.x - receiver.x;
        const double dy = p.y - receiver.y;
        const double d2 = dx * dx + dy * dy + h2;
        if (d2 <= excl2) {
            continue;
        }
        sum += sample_nakagami_power(m_interf, rng) * inv_pow_sq(d2, alpha_interf);
    }
    return tx_power * sum;
}

double aggregate_interference_except(const Scene& scene, Point2 receiver, double height,
                                     std::size_t exclude_index, double alpha_interf,
                                     int m_interf, double tx_power, Rng& rng) {
    const double h2 = height * height;
    double sum = 0.0;
    const auto& pts = scene.uav_horiz_positions;
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == exclude_index) {
            continue;
        }
        const double dx = pts[j].x - receiver.x;
        const double dy = pts[j].y - receiver.y;
        sum += sample_nakagami_power(m_interf, rng) * inv_pow_sq(dx * dx + dy * dy + h2, alpha_interf);
    }
    return tx_power * sum;
}

double sinr(const SinrInputs& in) {
    const double rx = in.desired_gain * std::pow(in.serving_dist3d, -in.alpha) * in.tx_power;
    const double den = in.noise + in.residue * rx * in.split_other + in.interference;
    if (den <= 0.0) {
        return kSinrMax;
    }
    return rx * in.split_own / den;
}

}  // namespace uavnoma
