#pragma once

#include "mlfrac/fracops.hpp"

namespace mlfrac {

struct BetaImageSpec {
    DerivSpec deriv;
    MLParams params;
    double l = 1.0;
    double m = 1.0;

    void validate() const;
};

struct LaplaceImageSpec {
    DerivSpec deriv;
    MLParams params;
    double l = 1.0;
    double s = 1.0;
    /// Use (vartheta/k, q/k) as the first upper pair instead of (vartheta/k, q).
    bool compat_qk = false;

    void validate() const;
};

/// 3Psi3[(vartheta/k,q),(mu/eta+1,nu/eta),(l,nu); (zeta/k,xi/k),(mu/eta+1-sigma,nu/eta),(l+m,nu)].
FoxWright beta_image_series(const BetaImageSpec& spec);

/// 3Psi2[(vartheta/k,q),(mu/eta+1,nu/eta),(l,nu); (zeta/k,xi/k),(mu/eta+1-sigma,nu/eta)].
/// Throws ConvergenceConditionError naming sum A and sum B when
/// 1 + sum B - sum A < 0.
FoxWright laplace_image_series(const LaplaceImageSpec& spec);

/// Beta transform int_0^1 z^{l-1} (1-z)^{m-1} D_z(x) dz of the derivative of
/// t^mu E((t z)^nu):
///   Gamma(m) x^{mu - sigma eta} eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k)
///     * 3Psi3[... | k^{q - xi/k} x^nu].
DerivResult beta_image_closed(const BetaImageSpec& spec, double x, double tol);

/// Laplace transform int_0^inf e^{-s z} z^{l-1} D_z(x) dz:
///   x^{mu - sigma eta} / s^l eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k)
///     * 3Psi2[... | k^{q - xi/k} (x/s)^nu].
DerivResult laplace_image_closed(const LaplaceImageSpec& spec, double x, double tol);

/// z -> D_z(x): the derivative closed form with its series argument
/// k^{q - xi/k} (x z)^nu and the prefactor kept at x. Integrand of both
/// transform oracles.
double scaled_derivative(const DerivSpec& spec, const MLParams& params, double x, double z, double tol);

} // namespace mlfrac
