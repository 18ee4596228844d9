#pragma once

// Special functions and the combinatorial derivative engine used by every
// closed-form coverage expression.

#include <cstddef>
#include <span>
#include <vector>

namespace uavnoma::specfun {

inline constexpr int kDefaultPartitionCap = 12;

/// Multiplicities (q_1, ..., q_p) of an integer partition of p, where q_j counts
/// how many parts equal j. Invariant: sum_j j*q_j == p.
struct PartitionMultiset {
    std::vector<int> multiplicities;

    int order() const noexcept;  // p, recomputed from the multiplicities
    bool operator==(const PartitionMultiset&) const = default;
};

/// Natural log of the Gamma function for x > 0 (Lanczos, g = 7).
double ln_gamma(double x);

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
double rising_pochhammer(double a, int n);

/// n choose k for small non-negative integers, exact in double up to n ~ 60.
double binomial(int n, int k);

/// Every partition of p as a multiplicity vector of length p. Throws LimitError
/// when p exceeds cap.
std::vector<PartitionMultiset> partitions(int p, int cap = kDefaultPartitionCap);

/// Incomplete Beta integral continued to a non-positive upper limit,
///   B(x; a, b) = int_0^x |t|^(a-1) (1-t)^(b-1) dt,   x <= 0.
/// The |t| convention strips the branch factor (-1)^(a-1) so the value is real;
/// for x < 0 it equals -int_0^|x| tau^(a-1) (1+tau)^(b-1) dtau.
/// Power series for |x| < 0.95, adaptive quadrature beyond.
double incomplete_beta_neg(double x, double a, double b);

/// The two evaluation routes of incomplete_beta_neg, exposed for cross-checks.
double incomplete_beta_neg_series(double x, double a, double b);
double incomplete_beta_neg_quadrature(double x, double a, double b);

/// Gauss hypergeometric 2F1(a, b; c; z) for z <= 0 via the Pfaff transform and
/// the convergent power series in z/(z-1). Symmetric in (a, b) bit for bit.
double gauss_2f1_negz(double a, double b, double c, double z);

/// Given eta(s) and its derivatives (eta, eta', ..., eta^(n)) at one point,
/// returns d^k/ds^k exp(-eta(s)) for k = 0..n via Faa di Bruno's formula.
std::vector<double> exp_composition_derivatives(std::span<const double> eta_derivs, int n,
                                                int cap = kDefaultPartitionCap);

/// Generalized binomial coefficient used in Newton's series for
/// (1+x)^(-m) = sum_U (-1)^U C(m+U-1, U) x^U.
double negative_binomial_coeff(int m, int u);

/// Partial sum of Newton's series for (1+x)^(-m) with the given number of terms.
/// `index_shift` offsets the upper index of the coefficient, C(m+U-1+shift, U);
/// shift 0 is the convergent convention.
double newton_series_partial_sum(double x, int m, int terms, int index_shift = 0);

}  // namespace uavnoma::specfun
