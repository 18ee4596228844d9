#pragma once

// Laplace transforms of aggregate UAV interference, L(s) = E[exp(-s I)] =
// exp(-eta(s)), together with the s-derivatives of the exponent eta that the
// coverage engine feeds through Faa di Bruno's formula.
//
// Three interferer populations appear in the model:
//   * PppTail  - a PPP of UAVs beyond 3-D distance `lower` from the receiver
//                (user-centric interference, and the UAV-centric bulk).
//   * HoleTerm - the nearest interfering UAV of the UAV-centric cell, handled
//                as a separate factor in its small-annulus limit.
//   * VoidDisc - a PPP seen from a receiver that is off-centre of the empty
//                disc around the typical user (the fixed user's interference).

#include <functional>
#include <vector>

#include "uavnoma/scenario.hpp"

namespace uavnoma {

enum class LaplaceMethod { automatic, series, quadrature };

struct PppTail {
    double density = 0.0;
    double tx_power = 0.0;
    double alpha_interf = 4.0;
    int m_interf = 1;
    double lower = 1.0;  // 3-D distance where the integration starts

    static PppTail from(const NetworkConfig& cfg, double lower);
};

/// eta and its first n s-derivatives of the tail exponent
///   eta(s) = 2 pi lambda int_lower^inf (1 - (1 + s P u^-aI / mI)^-mI) u du.
/// `automatic` uses the power series in z = s P / (mI lower^aI) when it converges
/// within 200 terms to 1e-10 relative, and adaptive quadrature otherwise.
std::vector<double> tail_exponent(const PppTail& tail, double s, int n,
                                  LaplaceMethod method = LaplaceMethod::automatic);

/// Tail exponent through the incomplete-Beta closed form (value only).
double tail_exponent_incomplete_beta(const PppTail& tail, double s);

/// m_I = 1: 2 pi lambda s P lower^(2-aI) / (aI - 2) * 2F1(1, 1-d; 2-d; -s P lower^-aI).
double tail_exponent_rayleigh_2f1(const PppTail& tail, double s);

/// m_I = 1, alpha_I = 4: pi lambda sqrt(s P) atan(sqrt(s P) / lower^2).
double tail_exponent_rayleigh_alpha4(const PppTail& tail, double s);

struct HoleTerm {
    double tx_power = 0.0;
    double alpha_interf = 4.0;
    int m_interf = 1;
    double serving_dist = 1.0;  // R, horizontal distance to the nearest other UAV
    double l_interf = 1.0;      // l_I = sqrt(R^2 + h^2)

    static HoleTerm from(const NetworkConfig& cfg, double R);
};

/// Nearest-interferer exponent (l_I / R) (1 - (1 + s P / (mI l_I^aI))^-mI) and its
/// first n derivatives, from the elementary closed form.
std::vector<double> hole_exponent(const HoleTerm& hole, double s, int n);

/// The same exponent evaluated from the annulus construction
///   (1 / (2 R eps)) int_{l_I-eps}^{l_I+eps} (1 - E[exp(-s |g|^2 P l_I^-aI)]) r dr
/// by quadrature; independent of eps.
double hole_exponent_annulus(const HoleTerm& hole, double s, double eps);

/// Exponent from `terms` terms of Newton's binomial series for the inner power.
double hole_exponent_newton(const HoleTerm& hole, double s, int terms, int index_shift = 0);

/// m_I = 1 hole factor exp(-(l_I / R) s P / (l_I^aI + s P)).
double hole_factor_rayleigh(const HoleTerm& hole, double s);

struct VoidDisc {
    PppTail plane;           // PPP over the whole plane (lower = height)
    double height = 1.0;
    double void_radius = 0.0;   // horizontal radius of the empty disc around the origin
    double receiver_offset = 0.0;  // horizontal distance of the receiver from the origin
};

/// Exponent of a PPP with an empty disc, seen from an off-centre receiver:
///   lambda int_{|x| > void_radius} k(s, d(x, y)) dx.
std::vector<double> void_exponent(const VoidDisc& geometry, double s, int n,
                                  LaplaceMethod method = LaplaceMethod::automatic);

/// A Laplace exponent s -> (eta(s), ..., eta^(n)(s)) bound to one geometry.
class LaplaceExponent {
public:
    using Evaluator = std::function<std::vector<double>(double s, int n)>;

    LaplaceExponent(Evaluator eval, LaplaceMethod method)
        : eval_(std::move(eval)), method_(method) {}

    double value_at(double s) const { return eval_(s, 0).front(); }
    double derivative(double s, int k) const { return eval_(s, k).back(); }
    std::vector<double> derivatives(double s, int n) const { return eval_(s, n); }
    double laplace(double s) const;
    LaplaceMethod method() const { return method_; }

private:
    Evaluator eval_;
    LaplaceMethod method_;
};

/// Interference at a user-centric receiver whose serving UAV is at 3-D
/// distance r_t; every other UAV is farther than r_t.
LaplaceExponent laplace_exponent_uc(const NetworkConfig& cfg, double r_t,
                                    LaplaceMethod method = LaplaceMethod::automatic);

/// UAV-centric interference conditioned on the nearest other UAV at horizontal
/// distance R: tail beyond l_I times the nearest-interferer factor.
struct HoleLaplaceExponent {
    PppTail tail;
    HoleTerm hole;
    double l_interf = 1.0;
    LaplaceMethod method = LaplaceMethod::automatic;
    bool include_hole = true;

    std::vector<double> derivatives(double s, int n) const;
    double laplace(double s) const;
    LaplaceExponent combined() const;
};

HoleLaplaceExponent laplace_exponent_ucav(const NetworkConfig& cfg, double R,
                                          LaplaceMethod method = LaplaceMethod::automatic);

}  // namespace uavnoma
