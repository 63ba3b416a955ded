#pragma once

#include "mlfrac/fracops.hpp"

#include <cstddef>
#include <functional>

namespace mlfrac {

/// Settings shared by the quadrature and finite-difference oracles.
struct QuadConfig {
    std::size_t jacobi_nodes = 16;   // per panel, >= 16; doubled until converged
    double adaptive_tol = 1e-12;     // >= 1e-12
    double fd_step = 1e-5;           // relative, in [1e-7, 1e-3]
    std::size_t laguerre_nodes = 32; // >= 32

    void validate() const;
};

using RealFn = std::function<double(double)>;

/// Five-point central difference of g at x with step fd_step * x, shrunk
/// until the stencil stays inside (0, inf).
double fd_derivative(const RealFn& g, double x, double rel_step);

/// int_0^1 (1 - z)^alpha z^beta F(z) dz. Weight-matched Gauss-Jacobi panels
/// at both ends, geometrically graded Gauss-Legendre panels toward z = 0,
/// node count doubled until two successive estimates agree to adaptive_tol.
double integrate_unit_interval(const RealFn& f, double alpha, double beta, const QuadConfig& cfg);

/// eta^{1-s}/Gamma(s) int_0^x t^{eta-1} f(t) / (x^eta - t^eta)^{1-s} dt for
/// s = order in (0, 1], evaluated after t^eta = x^eta z.
double frac_integral_oracle(double order, double eta, const RealFn& f, double x, const QuadConfig& cfg);

/// x^{1-eta} d/dx of frac_integral_oracle(1 - sigma, eta, f, .) at x, for
/// sigma in (0, 1). The outer derivative is a finite difference.
double frac_deriv_oracle(const DerivSpec& spec, const RealFn& f, double x, const QuadConfig& cfg);

/// Same with f(t) = t^mu E^{vartheta,q}_{k,xi,zeta}(t^nu) summed by ml_eval.
/// Returns the modulus route, i.e. the value to compare with
/// frac_deriv_closed(...).magnitude for either side.
double frac_deriv_oracle(const DerivSpec& spec, const MLParams& params, double x, const QuadConfig& cfg);

/// int_0^1 z^{l-1} (1 - z)^{m-1} g(z) dz.
double beta_transform_oracle(const RealFn& g, double l, double m, const QuadConfig& cfg);

/// int_0^inf e^{-s z} z^{l-1} g(z) dz, via u = s z: panels on (0, U) and a
/// shifted Gauss-Laguerre tail on (U, inf).
double laplace_transform_oracle(const RealFn& g, double l, double s, const QuadConfig& cfg);

} // namespace mlfrac
