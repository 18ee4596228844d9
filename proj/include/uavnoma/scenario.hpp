#pragma once

// Network/link configuration and the NOMA threshold algebra shared by the
// analytic evaluators and the simulator. Everything here is in linear units
// (watts, meters); dBm only appears in the conversion helpers.

#include <optional>
#include <string>
#include <string_view>

namespace uavnoma {

enum class Strategy { user_centric, uav_centric };
enum class Access { noma, oma };

std::string_view to_string(Strategy s);
std::string_view to_string(Access a);
Strategy parse_strategy(std::string_view text);
Access parse_access(std::string_view text);

struct NetworkConfig {
    double uav_density = 1.0 / (500.0 * 500.0 * 3.14159265358979323846);  // UAVs per m^2
    double uav_height = 100.0;                                            // m, >= 1
    double tx_power = 1e-6;                                               // W
    double alpha_desired = 3.0;
    double alpha_interf = 4.0;
    int m_desired = 1;
    int m_interf = 1;
    double noise_power = 1.1940e-15;  // W
    double sim_disc_radius = 10000.0;  // m
    double hole_halfwidth = 0.1;       // m, annulus half-width of the nearest-interferer term
    double user_density = 0.0;         // accepted for scene illustration; unused by the math

    double delta_interf() const { return 2.0 / alpha_interf; }

    /// Throws DomainError naming the first violated invariant.
    void validate() const;
};

/// Residue applied to the near user's own signal while it decodes the far
/// user's message in the UAV-centric strategy. `full` is standard SIC and
/// matches the closed-form coefficient; `ipsic` scales it by beta.
enum class FirstStageResidue { full, ipsic };

struct NomaLink {
    double pw_far = 0.6;   // alpha_v^2
    double pw_near = 0.4;  // alpha_w^2
    // User-centric: rate_near is the typical user's target R_t and rate_far the
    // fixed user's R_f. UAV-centric: R_w and R_v.
    double rate_near = 1.0;
    double rate_far = 0.5;
    double ipsic = 0.0;                 // beta
    double fixed_user_horiz_dist = 300.0;  // r_k, user-centric only
    FirstStageResidue first_stage = FirstStageResidue::full;

    void validate() const;
};

/// A decode coefficient M; std::nullopt marks INFEASIBLE (non-positive
/// denominator), which forces the corresponding coverage to exactly zero.
using DecodeCoeff = std::optional<double>;

/// max{} over decode coefficients; infeasible if any argument is.
DecodeCoeff max_coeff(DecodeCoeff a, DecodeCoeff b);

/// Linear SINR threshold for a rate in BPCU: 2^R - 1 (NOMA) or 2^(2R) - 1 (OMA).
double sinr_threshold(double rate, Access access);

struct ThresholdSet {
    Strategy strategy = Strategy::user_centric;
    Access access = Access::noma;
    double eps_own = 0.0;    // typical user (user-centric) or near user w
    double eps_other = 0.0;  // fixed user (user-centric) or far user v

    // User-centric, typical user.
    DecodeCoeff typical_own_after_sic;  // M_t^n
    DecodeCoeff typical_decode_fixed;   // M_{t->f}
    DecodeCoeff typical_near;           // M_{t*}  (OMA: M_t^o)
    DecodeCoeff typical_far;            // M_t^f   (OMA: M_t^o)
    // User-centric, fixed user. "as_far" is the case where the typical user is
    // closer to the UAV than the fixed user.
    DecodeCoeff fixed_as_far;           // eps_f / (P (a_v^2 - eps_f a_w^2))
    DecodeCoeff fixed_own_after_sic;    // eps_f / (P (a_w^2 - beta eps_f a_v^2))
    DecodeCoeff fixed_decode_typical;   // eps_t / (P (a_v^2 - eps_t a_w^2))
    DecodeCoeff fixed_as_near;          // max of the two above

    // UAV-centric.
    DecodeCoeff near_own;     // M_w
    DecodeCoeff near_decode;  // M_{w->v}
    DecodeCoeff near;         // M_{w*} (OMA: M_w^o)
    DecodeCoeff far;          // M_v    (OMA: M_v^o)
};

ThresholdSet thresholds(const NomaLink& link, const NetworkConfig& cfg, Strategy strategy,
                        Access access);

/// Thermal noise over a bandwidth: -174 dBm/Hz + 10 log10(BW), in watts.
double noise_from_bandwidth(double bw_hz);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace uavnoma
