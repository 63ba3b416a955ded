#include "mlfrac/oracles.hpp"

#include "mlfrac/error.hpp"
#include "mlfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mlfrac {

namespace {

constexpr std::size_t kMaxPanelNodes = 512;
constexpr int kGradedLevels = 40;

double checked(double v) {
    if (!std::isfinite(v)) throw QuadratureError("non-finite integrand sample");
    return v;
}

// int_a^b (b - z)^alpha (z - a)^beta F(z) dz with a rule for (1-x)^alpha (1+x)^beta.
template <typename F>
double apply_rule(const GaussRule& rule, double a, double b, double alpha, double beta, F&& f) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * checked(f(mid + half * rule.nodes[i]));
    }
    return sum * std::pow(half, alpha + beta + 1.0);
}

double unit_interval_once(const RealFn& f, double alpha, double beta, std::size_t n) {
    const GaussRule right = gauss_jacobi(n, alpha, 0.0);
    const GaussRule left = gauss_jacobi(n, 0.0, beta);
    const GaussRule plain = gauss_legendre(n);

    double total = apply_rule(right, 0.5, 1.0, alpha, 0.0, [&](double z) { return std::pow(z, beta) * f(z); });
    double hi = 0.5;
    for (int level = 1; level < kGradedLevels; ++level) {
        const double lo = 0.5 * hi;
        total += apply_rule(plain, lo, hi, 0.0, 0.0, [&](double z) {
            return std::pow(1.0 - z, alpha) * std::pow(z, beta) * f(z);
        });
        hi = lo;
    }
    total += apply_rule(left, 0.0, hi, 0.0, beta, [&](double z) { return std::pow(1.0 - z, alpha) * f(z); });
    return total;
}

template <typename Once>
double refine(Once&& once, std::size_t n0, double tol, const char* what) {
    std::size_t n = n0;
    double prev = once(n);
    while (2 * n <= kMaxPanelNodes) {
        n *= 2;
        const double cur = once(n);
        if (std::abs(cur - prev) <= tol * std::abs(cur) || cur == prev) return cur;
        prev = cur;
    }
    std::ostringstream os;
    os << what << ": node doubling did not reach relative tolerance " << tol;
    throw QuadratureError(os.str());
}

} // namespace

void QuadConfig::validate() const {
    if (jacobi_nodes < 16) throw ContractError("QuadConfig.jacobi_nodes must be >= 16");
    if (laguerre_nodes < 32) throw ContractError("QuadConfig.laguerre_nodes must be >= 32");
    if (!(adaptive_tol >= 1e-12)) throw ContractError("QuadConfig.adaptive_tol must be >= 1e-12");
    if (!(fd_step >= 1e-7 && fd_step <= 1e-3)) throw ContractError("QuadConfig.fd_step must lie in [1e-7, 1e-3]");
}

double fd_derivative(const RealFn& g, double x, double rel_step) {
    if (!(x > 0.0)) throw DomainError("fd_derivative: x must be positive");
    double h = rel_step * x;
    while (x - 2.0 * h <= 0.0) h *= 0.5;
    const double gm2 = g(x - 2.0 * h);
    const double gm1 = g(x - h);
    const double gp1 = g(x + h);
    const double gp2 = g(x + 2.0 * h);
    return (gm2 - 8.0 * gm1 + 8.0 * gp1 - gp2) / (12.0 * h);
}

double integrate_unit_interval(const RealFn& f, double alpha, double beta, const QuadConfig& cfg) {
    cfg.validate();
    return refine([&](std::size_t n) { return unit_interval_once(f, alpha, beta, n); }, cfg.jacobi_nodes,
                  cfg.adaptive_tol, "unit-interval quadrature");
}

double frac_integral_oracle(double order, double eta, const RealFn& f, double x, const QuadConfig& cfg) {
    if (!(order > 0.0 && order <= 1.0)) throw ContractError("frac_integral_oracle: order must lie in (0, 1]");
    if (!(eta > 0.0)) throw DomainError("frac_integral_oracle: eta must be positive");
    if (!(x > 0.0)) throw DomainError("frac_integral_oracle: x must be positive");
    const double inv_eta = 1.0 / eta;
    const double integral =
        integrate_unit_interval([&](double z) { return f(x * std::pow(z, inv_eta)); }, order - 1.0, 0.0, cfg);
    const double scale = std::exp(-order * std::log(eta) + eta * order * std::log(x) - log_gamma(order));
    return scale * integral;
}

double frac_deriv_oracle(const DerivSpec& spec, const RealFn& f, double x, const QuadConfig& cfg) {
    spec.validate();
    if (!(spec.sigma > 0.0 && spec.sigma < 1.0))
        throw ContractError("frac_deriv_oracle: sigma must lie in (0, 1)");
    const RealFn integral = [&](double y) { return frac_integral_oracle(1.0 - spec.sigma, spec.eta, f, y, cfg); };
    return std::pow(x, 1.0 - spec.eta) * fd_derivative(integral, x, cfg.fd_step);
}

double frac_deriv_oracle(const DerivSpec& spec, const MLParams& params, double x, const QuadConfig& cfg) {
    params.validate();
    const RealFn f = [&](double t) {
        if (t == 0.0) return 0.0;
        return std::pow(t, spec.mu) * ml_eval(params, std::pow(t, spec.nu), 1e-16).value;
    };
    return frac_deriv_oracle(spec, f, x, cfg);
}

double beta_transform_oracle(const RealFn& g, double l, double m, const QuadConfig& cfg) {
    if (!(l > 0.0) || !(m > 0.0)) throw DomainError("beta_transform_oracle: l and m must be positive");
    return integrate_unit_interval(g, m - 1.0, l - 1.0, cfg);
}

double laplace_transform_oracle(const RealFn& g, double l, double s, const QuadConfig& cfg) {
    cfg.validate();
    if (!(l > 0.0) || !(s > 0.0)) throw DomainError("laplace_transform_oracle: l and s must be positive");
    const double beta = l - 1.0;
    // G(u) = e^{-u} g(u/s); the weight u^{l-1} is carried separately.
    auto G = [&](double u) { return std::exp(-u) * g(u / s); };

    // Truncation point: extend in steps of 4 until the integrand envelope
    // e^{-U} U^{l+1} |g(U/s)| is negligible next to its value at u = 1.
    const double ref = std::abs(G(1.0)) + std::numeric_limits<double>::min();
    double upper = 8.0;
    while (upper < 700.0 &&
           std::exp(-upper) * std::pow(upper, l + 1.0) * std::abs(g(upper / s)) > 1e-3 * cfg.adaptive_tol * ref) {
        upper += 4.0;
    }

    auto once = [&](std::size_t n) {
        const GaussRule plain = gauss_legendre(n);
        const GaussRule left = gauss_jacobi(n, 0.0, beta);
        const GaussRule tail =
            gauss_laguerre(std::min<std::size_t>(cfg.laguerre_nodes * n / cfg.jacobi_nodes, 128), 0.0);
        double total = 0.0;
        double hi = 1.0;
        for (int level = 0; level < kGradedLevels; ++level) {
            const double lo = 0.5 * hi;
            total += apply_rule(plain, lo, hi, 0.0, 0.0, [&](double u) { return std::pow(u, beta) * G(u); });
            hi = lo;
        }
        total += apply_rule(left, 0.0, hi, 0.0, beta, G);
        for (double a = 1.0; a < upper; a += 4.0) {
            total += apply_rule(plain, a, a + 4.0, 0.0, 0.0, [&](double u) { return std::pow(u, beta) * G(u); });
        }
        const double end = 1.0 + 4.0 * std::ceil((upper - 1.0) / 4.0);
        double tail_sum = 0.0;
        for (std::size_t i = 0; i < tail.nodes.size(); ++i) {
            const double u = end + tail.nodes[i];
            tail_sum += tail.weights[i] * checked(std::pow(u, beta) * g(u / s));
        }
        total += std::exp(-end) * tail_sum;
        return total;
    };
    const double integral = refine(once, cfg.jacobi_nodes, cfg.adaptive_tol, "Laplace quadrature");
    return integral * std::pow(s, -l);
}

} // namespace mlfrac
