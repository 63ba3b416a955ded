#pragma once

#include <cstdint>

namespace mlfrac {

/// Argument pair (vartheta, k) of the k-gamma function; both must be > 0.
struct KGammaArg {
    double vartheta;
    double k;
};

/// Arguments of the k-Pochhammer symbol (vartheta)_{n q, k}.
struct PochhammerArg {
    double vartheta;
    std::uint64_t n;
    double q = 1.0;
    double k = 1.0;
};

/// log|Gamma(x)| together with the sign of Gamma(x). sign == 0 marks a pole
/// (x a non-positive integer), where 1/Gamma(x) is taken to be 0.
struct SignedLog {
    double log_abs;
    int sign;

    bool is_zero() const noexcept { return sign == 0; }
};

/// ln Gamma(x) for x > 0, relative error below 1e-13 on (0, 170].
/// Throws DomainError for x <= 0 or NaN.
double log_gamma(double x);

/// ln|Gamma(x)| and sign for any real x, via reflection below 1/2.
/// Non-positive integers return {inf, 0}.
SignedLog log_gamma_signed(double x);

/// Reciprocal gamma 1/Gamma(x), zero at the poles.
double rgamma(double x);

/// k^(vartheta/k - 1) * Gamma(vartheta/k).
double k_gamma(KGammaArg arg);
double log_k_gamma(KGammaArg arg);

/// (vartheta)_{n q, k}. Integral counts n*q use the finite product
/// vartheta (vartheta + k) ... (vartheta + (nq - 1) k); otherwise the
/// ratio Gamma_k(vartheta + nq k) / Gamma_k(vartheta) is evaluated in log space.
double k_pochhammer(PochhammerArg arg);

/// Log of the gamma-ratio form k^{nq} Gamma(vartheta/k + nq) / Gamma(vartheta/k).
/// Requires vartheta > 0.
double log_k_pochhammer(PochhammerArg arg);

/// Relative residual |lhs - rhs| / |lhs| of
///   (vartheta)_{nq,s} = (s/k)^{nq} (k vartheta / s)_{nq,k}.
double check_pochhammer_rescaling(double vartheta, std::uint64_t n, double q, double s, double k);

/// Relative residual of Gamma_s(vartheta) = (s/k)^{vartheta/s - 1} Gamma_k(k vartheta / s).
double check_k_gamma_rescaling(double vartheta, double s, double k);

/// Relative residual of (vartheta)_{nq,k} = k^{nq} (vartheta/k)_{nq}.
double check_pochhammer_k_to_one(double vartheta, std::uint64_t n, double q, double k);

} // namespace mlfrac
