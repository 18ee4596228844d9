#include "uavnoma/spatial.hpp"

#include <cmath>
#include <numbers>

#include "uavnoma/errors.hpp"

namespace uavnoma {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

}  // namespace

Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(~trial)));
}

double horizontal_distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Point2> sample_hppp_annulus(double density, double inner, double outer, Rng& rng) {
    if (density < 0.0 || !(outer > inner) || inner < 0.0) {
        throw DomainError("sample_hppp_annulus: need density >= 0 and 0 <= inner < outer");
    }
    if (density == 0.0) {
        return {};
    }
    const double area = std::numbers::pi * (outer * outer - inner * inner);
    const auto count = std::poisson_distribution<long long>(density * area)(rng);
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(count));
    const double in2 = inner * inner;
    const double span = outer * outer - in2;
    for (long long i = 0; i < count; ++i) {
        const double rho = std::sqrt(in2 + span * uniform01(rng));
        const double th = sample_azimuth(rng);
        pts.push_back({rho * std::cos(th), rho * std::sin(th)});
    }
    return pts;
}

std::vector<Point2> sample_hppp_disc(double density, double radius, Rng& rng) {
    if (!(radius > 0.0)) {
        throw DomainError("sample_hppp_disc: radius must be positive");
    }
    return sample_hppp_annulus(density, 0.0, radius, rng);
}

double nearest_distance_pdf(double r, double density) {
    if (r < 0.0) {
        return 0.0;
    }
    return 2.0 * std::numbers::pi * density * r * std::exp(-std::numbers::pi * density * r * r);
}

double nearest_distance_cdf(double r, double density) {
    if (r <= 0.0) {
        return 0.0;
    }
    return -std::expm1(-std::numbers::pi * density * r * r);
}

double nearest_distance_sample(double density, Rng& rng) {
    if (!(density > 0.0)) {
        throw DomainError("nearest_distance_sample: density must be positive");
    }
    // 1 - u keeps the argument of log in (0, 1].
    const double u = 1.0 - uniform01(rng);
    return std::sqrt(-std::log(u) / (std::numbers::pi * density));
}

double near_user_pdf(double r, double R) {
    if (r < 0.0 || r > R / 4.0) {
        return 0.0;
    }
    return 32.0 * r / (R * R);
}

double far_user_pdf(double r, double R) {
    if (r < R / 4.0 || r > R / 2.0) {
        return 0.0;
    }
    return 32.0 * r / (3.0 * R * R);
}

double sample_near_user(double R, Rng& rng) {
    if (!(R > 0.0)) {
        throw DomainError("sample_near_user: R must be positive");
    }
    return 0.25 * R * std::sqrt(uniform01(rng));
}

double sample_far_user(double R, Rng& rng) {
    if (!(R > 0.0)) {
        throw DomainError("sample_far_user: R must be positive");
    }
    // CDF (16 r^2 / R^2 - 1) / 3 on [R/4, R/2].
    return 0.25 * R * std::sqrt(1.0 + 3.0 * uniform01(rng));
}

double sample_azimuth(Rng& rng) { return 2.0 * std::numbers::pi * uniform01(rng); }

}  // namespace uavnoma
