#pragma once

#include "mlfrac/series.hpp"

#include <complex>

namespace mlfrac {

enum class Side {
    LeftZeroPlus,   // eta-D^sigma_{0+}
    RightZeroMinus, // eta-D^sigma_{0-}
};

/// Operator eta-D^sigma_{0+/-} applied to t^mu E(t^nu).
struct DerivSpec {
    double sigma = 0.1;
    double eta = 1.0;
    double mu = 0.0;
    double nu = 1.0;
    Side side = Side::LeftZeroPlus;

    /// sigma >= 0, eta > 0, nu > 0, mu/eta + 1 > 0.
    void validate() const;
};

/// magnitude * phase, with phase = 1 for the left-sided operator and the
/// principal branch (-1)^{-sigma} = exp(-i pi sigma) for the right-sided one.
struct DerivResult {
    double magnitude = 0.0;
    std::complex<double> phase{1.0, 0.0};
    EvalResult series;

    double real_part() const { return magnitude * phase.real(); }
    double imag_part() const { return magnitude * phase.imag(); }
};

struct MonomialResult {
    double value = 0.0;
    bool pole = false; // denominator gamma at a pole; value is exactly 0
};

/// eta-D^sigma_{0+} t^p at x:
///   eta^sigma Gamma(p/eta + 1) / Gamma(p/eta + 1 - sigma) x^{p - sigma eta}.
/// Requires x > 0 and p/eta + 1 > 0.
MonomialResult frac_deriv_monomial(double sigma, double eta, double p, double x);

/// Principal-branch factor for the given side.
std::complex<double> side_phase(Side side, double sigma);

/// The 2Psi2 series of the derivative closed form:
///   [(vartheta/k, q), (mu/eta + 1, nu/eta); (zeta/k, xi/k), (mu/eta + 1 - sigma, nu/eta)].
FoxWright derivative_series(const DerivSpec& spec, const MLParams& params);

/// log of eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k), the x-independent prefactor.
double derivative_log_prefactor(const DerivSpec& spec, const MLParams& params);

/// k^{q - xi/k}, the multiplier of x^nu in the series argument.
double derivative_argument_scale(const MLParams& params);

/// eta-D^sigma_{0+/-} [t^mu E^{vartheta,q}_{k,xi,zeta}(t^nu)](x) in closed form:
///
///   phase * x^{mu - sigma eta} eta^sigma k^{1 - zeta/k} / Gamma(vartheta/k)
///         * 2Psi2[...| k^{q - xi/k} x^nu].
///
/// x = 0 gives magnitude 0 when mu - sigma eta > 0 and DomainError otherwise.
DerivResult frac_deriv_closed(const DerivSpec& spec, const MLParams& params, double x, double tol);

/// Term-by-term route: sum_r (vartheta)_{rq,k} / (Gamma_k(r xi + zeta) r!) *
/// frac_deriv_monomial(sigma, eta, r nu + mu, x), `terms` terms.
double frac_deriv_series_path(const DerivSpec& spec, const MLParams& params, double x,
                              std::size_t terms = 200);

/// Relative residual between frac_deriv_monomial(sigma, 1, p, x) and the
/// Riemann-Liouville derivative Gamma(p+1)/Gamma(p+1-sigma) x^{p-sigma}.
double rl_reduction_check(double sigma, double p, double x);

} // namespace mlfrac
