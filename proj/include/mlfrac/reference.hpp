#pragma once

#include "mlfrac/fracops.hpp"

namespace mlfrac {

/// Parameter set of the published tables: k = 0.5, xi = 0.5, zeta = 0.2,
/// vartheta = 0.5, q = 0.4.
inline MLParams reference_params() {
    return MLParams{.k = 0.5, .xi = 0.5, .zeta = 0.2, .vartheta = 0.5, .q = 0.4};
}

/// mu = 0.5, nu = 0.8, eta = 0.3 with the given order and side.
inline DerivSpec reference_deriv(double sigma, Side side = Side::LeftZeroPlus) {
    return DerivSpec{.sigma = sigma, .eta = 0.3, .mu = 0.5, .nu = 0.8, .side = side};
}

} // namespace mlfrac
