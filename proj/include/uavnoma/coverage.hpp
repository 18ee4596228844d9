#pragma once

// Conditional coverage of one decoding event given the serving distance:
//   P(g > M d^alpha (noise + I)),  g ~ Gamma(m, 1/m),
// evaluated through the Laplace transform of I and its derivatives.

#include "uavnoma/laplace.hpp"
#include "uavnoma/scenario.hpp"

namespace uavnoma {

struct LinkGeometry {
    double dist3d = 1.0;  // serving distance
    double alpha = 3.0;   // desired-link path-loss exponent
    int m = 1;            // desired-link Nakagami parameter
    double noise = 0.0;
};

/// Exactly 0 for an infeasible coefficient, 1 for M = 0. The result is clamped to [0, 1].
double conditional_coverage(DecodeCoeff M, const LinkGeometry& link, const LaplaceExponent& eta);

}  // namespace uavnoma
