#include <doctest.h>

#include <cmath>
#include <vector>

#include "uavnoma/errors.hpp"
#include "uavnoma/specfun.hpp"

using namespace uavnoma;
using namespace uavnoma::specfun;

TEST_CASE("ln_gamma against std::lgamma") {
    for (double x : {1e-3, 0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 57.25, 170.5}) {
        CHECK(ln_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(ln_gamma(-1.5), DomainError);
}

TEST_CASE("rising factorial and binomial") {
    CHECK(rising_pochhammer(0.5, 3) == doctest::Approx(1.875));
    CHECK(rising_pochhammer(7.3, 0) == 1.0);
    CHECK(rising_pochhammer(1.0, 5) == doctest::Approx(120.0));
    CHECK(binomial(10, 3) == 120.0);
    CHECK(binomial(5, 0) == 1.0);
    CHECK(binomial(40, 20) == 137846528820.0);
}

TEST_CASE("partition enumeration matches the partition numbers") {
    const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int p = 1; p <= 12; ++p) {
        const auto parts = partitions(p);
        CHECK(static_cast<int>(parts.size()) == counts[p - 1]);
        for (const auto& q : parts) {
            CHECK(q.order() == p);
            CHECK(static_cast<int>(q.multiplicities.size()) == p);
        }
    }
    CHECK_THROWS_AS(partitions(13), LimitError);
    CHECK(partitions(30, 30).size() == 5604u);
}

TEST_CASE("incomplete Beta at negative argument") {
    // b = 1: -int_0^|x| t^(a-1) dt = -|x|^a / a.
    CHECK(incomplete_beta_neg(-0.5, 0.5, 1.0) == doctest::Approx(-std::sqrt(0.5) / 0.5).epsilon(1e-13));
    CHECK(incomplete_beta_neg(-3.0, 0.5, 1.0) == doctest::Approx(-std::sqrt(3.0) / 0.5).epsilon(1e-12));
    // a = 1, b = 0: -ln(1 + |x|).
    CHECK(incomplete_beta_neg(-0.3, 1.0, 0.0) == doctest::Approx(-std::log1p(0.3)).epsilon(1e-13));
    CHECK(incomplete_beta_neg(-20.0, 1.0, 0.0) == doctest::Approx(-std::log1p(20.0)).epsilon(1e-12));
    // Both routes agree where the series converges.
    for (double x : {-0.1, -0.5, -0.9}) {
        CHECK(incomplete_beta_neg_series(x, 1.5, -1.0) ==
              doctest::Approx(incomplete_beta_neg_quadrature(x, 1.5, -1.0)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(incomplete_beta_neg_series(-1.2, 1.5, -1.0), NumericalError);
}

TEST_CASE("Gauss 2F1 on the negative axis") {
    for (double z : {-0.1, -1.0, -7.5, -1e4}) {
        // 2F1(1, 1; 2; z) = -ln(1 - z) / z.
        CHECK(gauss_2f1_negz(1.0, 1.0, 2.0, z) == doctest::Approx(-std::log1p(-z) / z).epsilon(1e-13));
        // 2F1(a, b; b; z) = (1 - z)^-a.
        CHECK(gauss_2f1_negz(0.7, 1.3, 1.3, z) == doctest::Approx(std::pow(1.0 - z, -0.7)).epsilon(1e-13));
        CHECK(gauss_2f1_negz(0.3, 1.9, 2.4, z) == gauss_2f1_negz(1.9, 0.3, 2.4, z));
    }
    // 2F1(1, 1/2; 3/2; -x^2) = atan(x) / x.
    CHECK(gauss_2f1_negz(1.0, 0.5, 1.5, -4.0) == doctest::Approx(std::atan(2.0) / 2.0).epsilon(1e-13));
}

TEST_CASE("Faa di Bruno derivatives of exp(-eta)") {
    SUBCASE("linear eta") {
        const double c = 1.7;
        const double s = 0.4;
        const std::vector<double> eta = {c * s, c, 0.0, 0.0, 0.0};
        const auto d = exp_composition_derivatives(eta, 4);
        for (int k = 0; k <= 4; ++k) {
            CHECK(d[k] == doctest::Approx(std::pow(-c, k) * std::exp(-c * s)).epsilon(1e-14));
        }
    }
    SUBCASE("eta = s^2") {
        const double s = 0.8;
        const double e = std::exp(-s * s);
        const std::vector<double> eta = {s * s, 2 * s, 2.0, 0.0};
        const auto d = exp_composition_derivatives(eta, 3);
        CHECK(d[1] == doctest::Approx(-2 * s * e));
        CHECK(d[2] == doctest::Approx((4 * s * s - 2) * e));
        CHECK(d[3] == doctest::Approx((-8 * s * s * s + 12 * s) * e));
    }
    SUBCASE("cap") {
        const std::vector<double> eta(20, 0.1);
        CHECK_THROWS_AS(exp_composition_derivatives(eta, 13), LimitError);
    }
}

TEST_CASE("Newton series for (1+x)^-m") {
    CHECK(negative_binomial_coeff(2, 3) == 4.0);
    CHECK(negative_binomial_coeff(1, 7) == 1.0);
    CHECK(newton_series_partial_sum(0.5, 2, 200) == doctest::Approx(std::pow(1.5, -2)).epsilon(1e-14));
    // Shifting the upper index by two sums to a different function.
    CHECK(newton_series_partial_sum(0.5, 2, 200, 2) == doctest::Approx(std::pow(1.5, -4)).epsilon(1e-14));
}
