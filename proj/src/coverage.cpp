#include "uavnoma/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "uavnoma/errors.hpp"
#include "uavnoma/specfun.hpp"

namespace uavnoma {

double conditional_coverage(DecodeCoeff M, const LinkGeometry& link, const LaplaceExponent& eta) {
    if (!M) {
        return 0.0;
    }
    if (*M == 0.0) {
        return 1.0;  // zero threshold: any positive gain decodes
    }
    if (!(*M > 0.0) || link.m < 1 || !(link.dist3d > 0.0) || link.noise < 0.0) {
        throw DomainError("conditional_coverage: need M > 0, m >= 1, d > 0, noise >= 0");
    }
    const int m = link.m;
    const double x = m * *M * std::pow(link.dist3d, link.alpha);
    const std::vector<double> eta_d = eta.derivatives(x, m - 1);
    const std::vector<double> lap = specfun::exp_composition_derivatives(eta_d, m - 1);
    const double sigma2 = link.noise;
    const double noise_term = std::exp(-x * sigma2);

    // sum_n (-x)^n / n! d^n/dx^n [exp(-x sigma^2) L(x)]; every term is non-negative.
    double total = 0.0;
    double xpow = 1.0;  // (-x)^n / n!
    for (int n = 0; n < m; ++n) {
        double dn = 0.0;
        double spow = 1.0;  // (-sigma^2)^p
        for (int p = 0; p <= n; ++p) {
            dn += specfun::binomial(n, p) * spow * lap[n - p];
            spow *= -sigma2;
        }
        total += xpow * noise_term * dn;
        xpow *= -x / (n + 1);
    }
    if (!std::isfinite(total)) {
        throw NumericalError("conditional_coverage: non-finite result", total);
    }
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace uavnoma
