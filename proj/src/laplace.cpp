#include "uavnoma/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "uavnoma/errors.hpp"
#include "uavnoma/quadrature.hpp"
#include "uavnoma/specfun.hpp"

namespace uavnoma {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSeriesCap = 200;
constexpr double kSeriesRel = 1e-10;

// Relative-only target: derivatives scale like kappa^k and can be tiny.
constexpr quad::Tolerance kRelTol{0.0, 1e-11, 18};

void check_args(double s, int n, const char* who) {
    if (!(s >= 0.0) || !std::isfinite(s)) {
        throw DomainError(std::string(who) + ": s must be finite and non-negative");
    }
    if (n < 0) {
        throw DomainError(std::string(who) + ": derivative order must be non-negative");
    }
}

void check_tail(const PppTail& t) {
    if (!(t.alpha_interf > 2.0) || t.m_interf < 1 || !(t.lower > 0.0) || t.density < 0.0 ||
        t.tx_power < 0.0) {
        throw DomainError("tail exponent: need alpha_I > 2, m_I >= 1, lower > 0");
    }
}

double tail_kappa(const PppTail& t) {
    return t.tx_power / (t.m_interf * std::pow(t.lower, t.alpha_interf));
}

// k-th s-derivative of 1 - (1 + s c)^-m.
double kernel_derivative(double s, double c, int m, int k) {
    const double sc = s * c;
    if (k == 0) {
        return -std::expm1(-m * std::log1p(sc));
    }
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * specfun::rising_pochhammer(m, k) * std::pow(c, k) *
           std::exp(-(m + k) * std::log1p(sc));
}

bool tail_series(const PppTail& t, double s, int n, std::vector<double>& out) {
    const double kappa = tail_kappa(t);
    const double z = s * kappa;
    if (!(z < 1.0)) {
        return false;
    }
    const double m = t.m_interf;
    const double ai = t.alpha_interf;
    const double pref = 2.0 * kPi * t.density * t.lower * t.lower;
    for (int k = 0; k <= n; ++k) {
        const int a0 = std::max(k, 1);
        double c = specfun::rising_pochhammer(m, a0) * (a0 > k ? z : 1.0);
        double sum = 0.0;
        bool converged = false;
        for (int a = a0; a < a0 + kSeriesCap; ++a) {
            const double term = ((a % 2 == 1) ? c : -c) / (ai * a - 2.0);
            sum += term;
            if (std::abs(term) <= kSeriesRel * std::abs(sum)) {
                converged = true;
                break;
            }
            c *= (m + a) * z / (a + 1 - k);
        }
        if (!converged) {
            return false;
        }
        out[k] = pref * std::pow(kappa, k) * sum;
    }
    return true;
}

std::vector<double> tail_quadrature(const PppTail& t, double s, int n) {
    const double kappa = tail_kappa(t);
    const double z = s * kappa;
    const int m = t.m_interf;
    const double delta = 2.0 / t.alpha_interf;
    const double expo = 1.0 / (1.0 - delta);
    const double pref = 2.0 * kPi * t.density * t.lower * t.lower / (t.alpha_interf * (1.0 - delta));
    // Where z t crosses 1, in the v variable.
    const double vstar = z > 1.0 ? std::pow(z, -(1.0 - delta)) : 1.0;

    std::vector<double> out(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        auto f = [&](double v) {
            const double tt = std::pow(v, expo);
            if (k == 0) {
                if (tt == 0.0) {
                    return m * z;
                }
                return -std::expm1(-m * std::log1p(z * tt)) / tt;
            }
            return std::pow(tt, k - 1) * std::exp(-(m + k) * std::log1p(z * tt));
        };
        double integral = quad::integrate(f, 0.0, vstar, kRelTol, "tail exponent");
        if (vstar < 1.0) {
            // Power-law decay past vstar; smooth in log v.
            integral += quad::integrate(
                [&](double w) {
                    const double v = std::exp(w);
                    return f(v) * v;
                },
                std::log(vstar), 0.0, kRelTol, "tail exponent");
        }
        if (k == 0) {
            out[k] = pref * integral;
        } else {
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            out[k] = pref * sign * specfun::rising_pochhammer(m, k) * std::pow(kappa, k) * integral;
        }
    }
    return out;
}

}  // namespace

PppTail PppTail::from(const NetworkConfig& cfg, double lower) {
    return PppTail{cfg.uav_density, cfg.tx_power, cfg.alpha_interf, cfg.m_interf, lower};
}

std::vector<double> tail_exponent(const PppTail& tail, double s, int n, LaplaceMethod method) {
    check_args(s, n, "tail_exponent");
    check_tail(tail);
    if (method != LaplaceMethod::quadrature) {
        std::vector<double> out(n + 1, 0.0);
        if (tail_series(tail, s, n, out)) {
            return out;
        }
        if (method == LaplaceMethod::series) {
            throw NumericalError("tail_exponent: power series does not converge (z >= 1 or cap hit)",
                                 s * tail_kappa(tail));
        }
    }
    return tail_quadrature(tail, s, n);
}

double tail_exponent_incomplete_beta(const PppTail& tail, double s) {
    check_args(s, 0, "tail_exponent_incomplete_beta");
    check_tail(tail);
    if (s == 0.0) {
        return 0.0;
    }
    const int m = tail.m_interf;
    const double delta = 2.0 / tail.alpha_interf;
    const double z = s * tail_kappa(tail);
    const double scale = std::pow(s * tail.tx_power / m, delta);
    double sum = 0.0;
    for (int i = 1; i <= m; ++i) {
        sum += specfun::binomial(m, i) * scale *
               -specfun::incomplete_beta_neg(-z, i - delta, 1.0 - m);
    }
    return 2.0 * kPi * tail.density / tail.alpha_interf * sum;
}

double tail_exponent_rayleigh_2f1(const PppTail& tail, double s) {
    check_tail(tail);
    if (tail.m_interf != 1) {
        throw DomainError("tail_exponent_rayleigh_2f1: requires m_I = 1");
    }
    const double a = tail.alpha_interf;
    const double delta = 2.0 / a;
    const double x = s * tail.tx_power * std::pow(tail.lower, -a);
    return 2.0 * kPi * tail.density * x * tail.lower * tail.lower / (a - 2.0) *
           specfun::gauss_2f1_negz(1.0, 1.0 - delta, 2.0 - delta, -x);
}

double tail_exponent_rayleigh_alpha4(const PppTail& tail, double s) {
    if (tail.m_interf != 1 || tail.alpha_interf != 4.0) {
        throw DomainError("tail_exponent_rayleigh_alpha4: requires m_I = 1 and alpha_I = 4");
    }
    const double q = std::sqrt(s * tail.tx_power);
    return kPi * tail.density * q * std::atan(q / (tail.lower * tail.lower));
}

HoleTerm HoleTerm::from(const NetworkConfig& cfg, double R) {
    if (!(R > 0.0)) {
        throw DomainError("HoleTerm: R must be positive");
    }
    return HoleTerm{cfg.tx_power, cfg.alpha_interf, cfg.m_interf, R,
                    std::sqrt(R * R + cfg.uav_height * cfg.uav_height)};
}

std::vector<double> hole_exponent(const HoleTerm& hole, double s, int n) {
    check_args(s, n, "hole_exponent");
    const double c = hole.tx_power / (hole.m_interf * std::pow(hole.l_interf, hole.alpha_interf));
    const double w = hole.l_interf / hole.serving_dist;
    std::vector<double> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        out[k] = w * kernel_derivative(s, c, hole.m_interf, k);
    }
    return out;
}

double hole_exponent_annulus(const HoleTerm& hole, double s, double eps) {
    if (!(eps > 0.0) || !(eps < hole.l_interf)) {
        throw DomainError("hole_exponent_annulus: need 0 < eps < l_I");
    }
    const double c = hole.tx_power / (hole.m_interf * std::pow(hole.l_interf, hole.alpha_interf));
    const double k0 = kernel_derivative(s, c, hole.m_interf, 0);
    const double integral = quad::integrate([k0](double r) { return k0 * r; }, hole.l_interf - eps,
                                            hole.l_interf + eps, kRelTol, "hole annulus");
    return integral / (2.0 * hole.serving_dist * eps);
}

double hole_exponent_newton(const HoleTerm& hole, double s, int terms, int index_shift) {
    const double x = s * hole.tx_power / (hole.m_interf * std::pow(hole.l_interf, hole.alpha_interf));
    const double inner = specfun::newton_series_partial_sum(x, hole.m_interf, terms, index_shift);
    return hole.l_interf / hole.serving_dist * (1.0 - inner);
}

double hole_factor_rayleigh(const HoleTerm& hole, double s) {
    const double sp = s * hole.tx_power;
    return std::exp(-hole.l_interf / hole.serving_dist * sp /
                    (std::pow(hole.l_interf, hole.alpha_interf) + sp));
}

std::vector<double> void_exponent(const VoidDisc& g, double s, int n, LaplaceMethod method) {
    check_args(s, n, "void_exponent");
    PppTail plane = g.plane;
    plane.lower = g.height;
    std::vector<double> out = tail_exponent(plane, s, n, method);
    const double r = g.void_radius;
    const double D = g.receiver_offset;
    if (!(r > 0.0) || plane.density == 0.0) {
        return out;
    }
    const double h2 = g.height * g.height;
    const double c0 = plane.tx_power / plane.m_interf;
    const double ai = plane.alpha_interf;
    const int m = plane.m_interf;
    auto kernel = [&](double rho, int k) {
        const double c = c0 * std::pow(rho * rho + h2, -0.5 * ai);
        return kernel_derivative(s, c, m, k);
    };

    for (int k = 0; k <= n; ++k) {
        double removed = 0.0;
        const bool centred = D <= 1e-12 * r;
        const double full_to = centred ? r : std::max(0.0, r - D);
        if (full_to > 0.0) {
            removed += quad::integrate([&](double rho) { return 2.0 * kPi * kernel(rho, k) * rho; },
                                       0.0, full_to, kRelTol, "void exponent");
        }
        if (!centred) {
            // Circles of radius rho around the receiver that cut the void's boundary.
            const double lo = std::abs(D - r);
            const double hi = D + r;
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            auto f = [&](double th) {
                const double rho = mid - half * std::cos(th);
                if (!(rho > 0.0)) {
                    return 0.0;
                }
                // Half-angle form: 1 -/+ cos from factored differences, so a
                // receiver far outside a small void keeps full precision.
                const double t = (mid - D) - half * std::cos(th);  // rho - D
                const double one_minus = (r - t) * (r + t);
                const double one_plus = (rho + D - r) * (rho + D + r);
                const double arc = 4.0 * std::atan2(std::sqrt(std::max(0.0, one_minus)),
                                                    std::sqrt(std::max(0.0, one_plus)));
                return kernel(rho, k) * arc * rho * half * std::sin(th);
            };
            removed += quad::integrate(f, 0.0, kPi, kRelTol, "void exponent");
        }
        out[k] -= plane.density * removed;
    }
    return out;
}

double LaplaceExponent::laplace(double s) const { return std::exp(-value_at(s)); }

LaplaceExponent laplace_exponent_uc(const NetworkConfig& cfg, double r_t, LaplaceMethod method) {
    const PppTail tail = PppTail::from(cfg, r_t);
    return LaplaceExponent(
        [tail, method](double s, int n) { return tail_exponent(tail, s, n, method); }, method);
}

std::vector<double> HoleLaplaceExponent::derivatives(double s, int n) const {
    std::vector<double> out = tail_exponent(tail, s, n, method);
    if (include_hole) {
        const std::vector<double> h = hole_exponent(hole, s, n);
        for (int k = 0; k <= n; ++k) {
            out[k] += h[k];
        }
    }
    return out;
}

double HoleLaplaceExponent::laplace(double s) const { return std::exp(-derivatives(s, 0).front()); }

LaplaceExponent HoleLaplaceExponent::combined() const {
    HoleLaplaceExponent copy = *this;
    return LaplaceExponent([copy](double s, int n) { return copy.derivatives(s, n); }, method);
}

HoleLaplaceExponent laplace_exponent_ucav(const NetworkConfig& cfg, double R, LaplaceMethod method) {
    HoleLaplaceExponent e;
    e.hole = HoleTerm::from(cfg, R);
    e.l_interf = e.hole.l_interf;
    e.tail = PppTail::from(cfg, e.l_interf);
    e.method = method;
    return e;
}

}  // namespace uavnoma
