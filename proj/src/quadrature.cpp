#include "mlfrac/quadrature.hpp"

#include "mlfrac/error.hpp"
#include "mlfrac/gammakit.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace mlfrac {

namespace {

// Monic three-term recurrence p_{k+1} = (x - a_k) p_k - b_k^2 p_{k-1};
// `b` holds sqrt(b_k^2) for k = 1..n (b[0] unused).
struct Recurrence {
    std::vector<double> a;
    std::vector<double> b;
    double log_mu0;
};

// Golub-Welsch nodes, one Newton step on the orthonormal p_n, Christoffel
// weights 1 / sum_k p_k(x)^2.
GaussRule rule_from_recurrence(const Recurrence& rec, std::size_t n) {
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
    for (std::size_t k = 0; k < n; ++k) diag[static_cast<Eigen::Index>(k)] = rec.a[k];
    for (std::size_t k = 1; k < n; ++k) sub[static_cast<Eigen::Index>(k - 1)] = rec.b[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw QuadratureError("Gauss rule: eigenvalue solve failed");

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double p0 = std::exp(-0.5 * rec.log_mu0);
    for (std::size_t i = 0; i < n; ++i) {
        double x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
        for (int newton = 0; newton < 2; ++newton) {
            double pm = 0.0, p = p0, dpm = 0.0, dp = 0.0;
            double sumsq = p * p;
            double log_rescale = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double pn = ((x - rec.a[k]) * p - (k ? rec.b[k] * pm : 0.0)) / rec.b[k + 1];
                const double dpn = (p + (x - rec.a[k]) * dp - (k ? rec.b[k] * dpm : 0.0)) / rec.b[k + 1];
                pm = p;
                p = pn;
                dpm = dp;
                dp = dpn;
                if (k + 1 < n) sumsq += p * p;
                if (std::abs(p) > 1e100) {
                    pm *= 1e-100;
                    p *= 1e-100;
                    dpm *= 1e-100;
                    dp *= 1e-100;
                    sumsq *= 1e-200;
                    log_rescale += 200.0 * std::log(10.0);
                }
            }
            if (newton == 0 && dp != 0.0) {
                x -= p / dp;
            } else {
                rule.nodes[i] = x;
                rule.weights[i] = std::exp(-log_rescale) / sumsq;
            }
        }
    }
    return rule;
}

} // namespace

GaussRule gauss_jacobi(std::size_t n, double alpha, double beta) {
    if (n == 0) throw ContractError("gauss_jacobi: n must be positive");
    if (!(alpha > -1.0) || !(beta > -1.0)) throw ContractError("gauss_jacobi: alpha, beta must exceed -1");
    Recurrence rec;
    rec.a.resize(n + 1);
    rec.b.assign(n + 2, 0.0);
    const double ab = alpha + beta;
    rec.a[0] = (beta - alpha) / (ab + 2.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + ab;
        rec.a[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            b2 = 4.0 * kk * (kk + alpha) * (kk + beta) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        rec.b[k] = std::sqrt(b2);
    }
    rec.log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) + log_gamma(beta + 1.0) -
                  log_gamma(ab + 2.0);
    return rule_from_recurrence(rec, n);
}

GaussRule gauss_laguerre(std::size_t n, double alpha) {
    if (n == 0) throw ContractError("gauss_laguerre: n must be positive");
    if (!(alpha > -1.0)) throw ContractError("gauss_laguerre: alpha must exceed -1");
    Recurrence rec;
    rec.a.resize(n + 1);
    rec.b.assign(n + 2, 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        rec.a[k] = 2.0 * kk + alpha + 1.0;
        if (k >= 1) rec.b[k] = std::sqrt(kk * (kk + alpha));
    }
    rec.log_mu0 = log_gamma(alpha + 1.0);
    return rule_from_recurrence(rec, n);
}

} // namespace mlfrac
