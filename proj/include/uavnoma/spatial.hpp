#pragma once

// Point-process sampling and the distance distributions of the network model.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace uavnoma {

using Rng = std::mt19937_64;

/// Independent generator for one Monte Carlo trial. The stream depends only on
/// (seed, trial), so results do not depend on how trials are split across
/// workers.
Rng trial_stream(std::uint64_t seed, std::uint64_t trial);

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

double horizontal_distance(Point2 a, Point2 b);

/// One realization of UAV horizontal positions. For the user-centric strategy
/// the serving UAV is the one nearest to the typical user at the origin; for
/// the UAV-centric strategy it is the UAV at the origin.
struct Scene {
    std::vector<Point2> uav_horiz_positions;
    std::size_t serving_index = 0;
    std::uint64_t realization_seed = 0;
};

/// HPPP of the given density restricted to a disc centred at the origin.
std::vector<Point2> sample_hppp_disc(double density, double radius, Rng& rng);

/// HPPP restricted to the annulus inner <= |x| <= outer.
std::vector<Point2> sample_hppp_annulus(double density, double inner, double outer, Rng& rng);

/// Nearest-UAV horizontal distance: f(r) = 2 pi lambda r exp(-pi lambda r^2).
double nearest_distance_pdf(double r, double density);
double nearest_distance_cdf(double r, double density);
double nearest_distance_sample(double density, Rng& rng);

/// Conditional user-placement laws of the UAV-centric cell of radius R/2:
/// near users on [0, R/4] with pdf 32 r / R^2, far users on [R/4, R/2] with
/// pdf 32 r / (3 R^2).
double near_user_pdf(double r, double R);
double far_user_pdf(double r, double R);
double sample_near_user(double R, Rng& rng);
double sample_far_user(double R, Rng& rng);

double sample_azimuth(Rng& rng);

}  // namespace uavnoma
