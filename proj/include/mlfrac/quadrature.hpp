#pragma once

#include <cstddef>
#include <vector>

namespace mlfrac {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule for the weight (1 - x)^alpha (1 + x)^beta on [-1, 1],
/// alpha, beta > -1.
GaussRule gauss_jacobi(std::size_t n, double alpha, double beta);

inline GaussRule gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

/// n-point generalized Gauss-Laguerre rule for x^alpha e^{-x} on [0, inf).
GaussRule gauss_laguerre(std::size_t n, double alpha);

} // namespace mlfrac
