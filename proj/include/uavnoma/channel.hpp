#pragma once

// Fading, path loss, aggregate interference and the unified SINR expression.

#include <cstddef>
#include <limits>

#include "uavnoma/spatial.hpp"

namespace uavnoma {

/// Returned by sinr() when the denominator vanishes.
inline constexpr double kSinrMax = std::numeric_limits<double>::max();

/// Power gain |h|^2 of a Nakagami-m channel: Gamma(shape m, mean 1), drawn as
/// the mean of m unit exponentials.
double sample_nakagami_power(int m, Rng& rng);

/// Density m^m x^(m-1) e^(-m x) / Gamma(m) of the power gain.
double nakagami_power_pdf(double x, int m);

/// dist3d^(-alpha); throws DomainError for dist3d < 1.
double path_gain(double dist3d, double alpha);

/// 3-D distance between a receiver on the ground and a UAV at height h.
double distance3d(Point2 uav, Point2 receiver, double height);

/// Sum of P * |g_j|^2 * d_j^(-alpha_I) over UAVs whose 3-D distance to the
/// receiver exceeds exclusion_dist3d, with i.i.d. Nakagami-m_I gains.
double aggregate_interference(const Scene& scene, Point2 receiver, double height,
                              double exclusion_dist3d, double alpha_interf, int m_interf,
                              double tx_power, Rng& rng);

/// Same sum over every UAV except the one at exclude_index.
double aggregate_interference_except(const Scene& scene, Point2 receiver, double height,
                                     std::size_t exclude_index, double alpha_interf,
                                     int m_interf, double tx_power, Rng& rng);

/// One SINR of a NOMA decoding stage:
///   g L P a_own / (noise + residue g L P a_other + I),  L = d^(-alpha).
/// Decode-other stages use residue 1 with (own, other) = (a_v^2, a_w^2); own
/// decoding after SIC uses residue beta with (a_w^2, a_v^2); OMA uses residue 0
/// with the full power as split_own.
struct SinrInputs {
    double desired_gain = 1.0;
    double serving_dist3d = 1.0;
    double alpha = 3.0;
    double tx_power = 1.0;
    double interference = 0.0;
    double noise = 0.0;
    double split_own = 1.0;
    double split_other = 0.0;
    double residue = 0.0;
};

double sinr(const SinrInputs& in);

}  // namespace uavnoma
