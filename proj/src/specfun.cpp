#include "uavnoma/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "uavnoma/errors.hpp"
#include "uavnoma/quadrature.hpp"

namespace uavnoma::specfun {

int PartitionMultiset::order() const noexcept {
    int p = 0;
    for (std::size_t j = 0; j < multiplicities.size(); ++j) {
        p += static_cast<int>(j + 1) * multiplicities[j];
    }
    return p;
}

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma: argument must be positive and finite");
    }
    // Shift small arguments up; the Lanczos sum is most accurate for x >= 0.5.
    if (x < 0.5) {
        return ln_gamma(x + 1.0) - std::log(x);
    }
    static constexpr std::array<double, 9> kCoef = {
        0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
        771.32342877765313,   -176.61502916214059,   12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double kG = 7.0;
    const double z = x - 1.0;
    double sum = kCoef[0];
    for (std::size_t i = 1; i < kCoef.size(); ++i) {
        sum += kCoef[i] / (z + static_cast<double>(i));
    }
    const double t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

double rising_pochhammer(double a, int n) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) {
        prod *= a + k;
    }
    return prod;
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return std::round(c);
}

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void enumerate_partitions(int remaining, int max_part, std::vector<int>& q,
                          std::vector<PartitionMultiset>& out) {
    if (remaining == 0) {
        out.push_back(PartitionMultiset{q});
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++q[part - 1];
        enumerate_partitions(remaining - part, part, q, out);
        --q[part - 1];
    }
}

std::vector<PartitionMultiset> build_partitions(int p) {
    std::vector<int> q(static_cast<std::size_t>(p), 0);
    std::vector<PartitionMultiset> out;
    enumerate_partitions(p, p, q, out);
    return out;
}

// The engine asks for the same few orders millions of times inside quadrature
// loops, so small orders are tabulated once.
constexpr int kTabulated = 24;

const std::vector<PartitionMultiset>& cached_partitions(int p) {
    static const auto table = [] {
        std::vector<std::vector<PartitionMultiset>> t;
        for (int k = 0; k <= kTabulated; ++k) {
            t.push_back(build_partitions(k));
        }
        return t;
    }();
    return table.at(static_cast<std::size_t>(p));
}

}  // namespace

std::vector<PartitionMultiset> partitions(int p, int cap) {
    if (p < 0) {
        throw DomainError("partitions: order must be non-negative");
    }
    if (p > cap) {
        throw LimitError("partitions: order " + std::to_string(p) + " exceeds cap " +
                         std::to_string(cap));
    }
    if (p <= kTabulated) {
        return cached_partitions(p);
    }
    return build_partitions(p);
}

double incomplete_beta_neg_series(double x, double a, double b) {
    if (!(a > 0.0)) {
        throw DomainError("incomplete_beta_neg: a must be positive");
    }
    if (x > 0.0) {
        throw DomainError("incomplete_beta_neg: x must be non-positive");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double z = -x;
    if (z >= 1.0) {
        throw NumericalError("incomplete_beta_neg: power series diverges for |x| >= 1", z);
    }
    // int_0^z tau^(a-1) (1+tau)^(b-1) = sum_k (1-b)_k (-1)^k z^(a+k) / (k! (a+k))
    constexpr int kMaxTerms = 100000;
    double coef = 1.0;  // (1-b)_k (-z)^k / k!
    double sum = 0.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        const double term = coef / (a + k);
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) || term == 0.0) {
            return -std::pow(z, a) * sum;
        }
        coef *= (1.0 - b + k) * (-z) / (k + 1);
    }
    throw NumericalError("incomplete_beta_neg: series did not converge", std::abs(coef));
}

double incomplete_beta_neg_quadrature(double x, double a, double b) {
    if (!(a > 0.0)) {
        throw DomainError("incomplete_beta_neg: a must be positive");
    }
    if (x > 0.0) {
        throw DomainError("incomplete_beta_neg: x must be non-positive");
    }
    if (x == 0.0) {
        return 0.0;
    }
    const double z = -x;
    // tau = v^(1/a) removes the tau^(a-1) endpoint singularity:
    // int_0^z tau^(a-1) f(tau) dtau = (1/a) int_0^(z^a) f(v^(1/a)) dv.
    const double upper = std::pow(z, a);
    auto f = [a, b](double v) { return std::pow(1.0 + std::pow(v, 1.0 / a), b - 1.0); };
    const double integral = quad::integrate_endpoint_singular(f, 0.0, upper, 1e-13, "incomplete_beta_neg");
    return -integral / a;
}

double incomplete_beta_neg(double x, double a, double b) {
    if (!(a > 0.0)) {
        throw DomainError("incomplete_beta_neg: a must be positive");
    }
    if (x > 0.0) {
        throw DomainError("incomplete_beta_neg: x must be non-positive");
    }
    if (std::abs(x) < 0.95) {
        return incomplete_beta_neg_series(x, a, b);
    }
    return incomplete_beta_neg_quadrature(x, a, b);
}

double gauss_2f1_negz(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c)) {
        throw DomainError("gauss_2f1_negz: c must not be a non-positive integer");
    }
    if (z > 0.0) {
        throw DomainError("gauss_2f1_negz: z must be non-positive");
    }
    if (z == 0.0) {
        return 1.0;
    }
    // Canonical ordering makes the result independent of argument order.
    const double p = std::min(a, b);
    const double q = std::max(a, b);
    // Pfaff: 2F1(p, q; c; z) = (1-z)^(-p) 2F1(p, c-q; c; w), w = z/(z-1) in (0, 1).
    const double w = z / (z - 1.0);
    const double b2 = c - q;
    constexpr int kMaxTerms = 2000000;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (p + n) * (b2 + n) / ((c + n) * (n + 1.0)) * w;
        sum += term;
        if (term == 0.0 || std::abs(term) < 1e-15 * std::abs(sum)) {
            return std::pow(1.0 - z, -p) * sum;
        }
    }
    throw NumericalError("gauss_2f1_negz: series hit the iteration cap", std::abs(term / sum));
}

std::vector<double> exp_composition_derivatives(std::span<const double> eta_derivs, int n,
                                                int cap) {
    if (n < 0) {
        throw DomainError("exp_composition_derivatives: order must be non-negative");
    }
    if (n > cap) {
        throw LimitError("exp_composition_derivatives: order " + std::to_string(n) +
                         " exceeds cap " + std::to_string(cap));
    }
    if (eta_derivs.size() < static_cast<std::size_t>(n) + 1) {
        throw DomainError("exp_composition_derivatives: need eta and its first n derivatives");
    }
    const double base = std::exp(-eta_derivs[0]);
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    out[0] = base;
    // Outer function exp(-y) has every derivative equal to (-1)^k exp(-y) in y;
    // the sign is folded into the inner derivatives as (-eta^(j)).
    for (int k = 1; k <= n; ++k) {
        double total = 0.0;
        const auto owned = k > kTabulated ? build_partitions(k) : std::vector<PartitionMultiset>{};
        const auto& parts = k > kTabulated ? owned : cached_partitions(k);
        for (const auto& part : parts) {
            double term = 1.0;
            for (int j = 1; j <= k; ++j) {
                const int qj = part.multiplicities[static_cast<std::size_t>(j - 1)];
                if (qj == 0) {
                    continue;
                }
                const double inner = -eta_derivs[static_cast<std::size_t>(j)] /
                                     factorial(j);
                term *= std::pow(inner, qj) / factorial(qj);
            }
            total += term;
        }
        out[static_cast<std::size_t>(k)] = base * factorial(k) * total;
    }
    return out;
}

double negative_binomial_coeff(int m, int u) { return binomial(m + u - 1, u); }

double newton_series_partial_sum(double x, int m, int terms, int index_shift) {
    double sum = 0.0;
    double xp = 1.0;
    for (int u = 0; u < terms; ++u) {
        const double sign = (u % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(m + u - 1 + index_shift, u) * xp;
        xp *= x;
    }
    return sum;
}

}  // namespace uavnoma::specfun
