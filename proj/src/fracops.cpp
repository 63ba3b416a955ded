#include "mlfrac/fracops.hpp"

#include "mlfrac/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mlfrac {

void DerivSpec::validate() const {
    std::ostringstream os;
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) os << "sigma must be >= 0; ";
    if (!(eta > 0.0) || !std::isfinite(eta)) os << "eta must be > 0; ";
    if (!(nu > 0.0) || !std::isfinite(nu)) os << "nu must be > 0; ";
    if (!std::isfinite(mu) || !(mu / eta + 1.0 > 0.0)) os << "mu/eta + 1 must be > 0; ";
    const std::string msg = os.str();
    if (!msg.empty()) throw DomainError("DerivSpec: " + msg.substr(0, msg.size() - 2));
}

MonomialResult frac_deriv_monomial(double sigma, double eta, double p, double x) {
    if (!(x > 0.0)) throw DomainError("frac_deriv_monomial: x must be positive");
    if (!(eta > 0.0)) throw DomainError("frac_deriv_monomial: eta must be positive");
    const double a = p / eta + 1.0;
    if (!(a > 0.0)) throw DomainError("frac_deriv_monomial: p/eta + 1 must be positive");
    const SignedLog den = log_gamma_signed(a - sigma);
    if (den.is_zero()) return {0.0, true};
    const double log_mag = sigma * std::log(eta) + log_gamma(a) - den.log_abs + (p - sigma * eta) * std::log(x);
    return {den.sign * std::exp(log_mag), false};
}

std::complex<double> side_phase(Side side, double sigma) {
    if (side == Side::LeftZeroPlus) return {1.0, 0.0};
    return std::polar(1.0, -std::numbers::pi * sigma);
}

FoxWright derivative_series(const DerivSpec& spec, const MLParams& params) {
    spec.validate();
    params.validate();
    const double k = params.k;
    const double a = spec.mu / spec.eta + 1.0;
    const double b = spec.nu / spec.eta;
    return FoxWright({
        {{params.vartheta / k, params.q}, {a, b}},
        {{params.zeta / k, params.xi / k}, {a - spec.sigma, b}},
    });
}

double derivative_log_prefactor(const DerivSpec& spec, const MLParams& params) {
    const double k = params.k;
    return spec.sigma * std::log(spec.eta) + (1.0 - params.zeta / k) * std::log(k) -
           log_gamma(params.vartheta / k);
}

double derivative_argument_scale(const MLParams& params) {
    return std::pow(params.k, params.q - params.xi / params.k);
}

DerivResult frac_deriv_closed(const DerivSpec& spec, const MLParams& params, double x, double tol) {
    const FoxWright series = derivative_series(spec, params);
    DerivResult out;
    out.phase = side_phase(spec.side, spec.sigma);
    const double power = spec.mu - spec.sigma * spec.eta;
    if (x == 0.0) {
        if (power > 0.0) {
            out.series = series.eval(0.0, tol);
            out.magnitude = 0.0;
            return out;
        }
        throw DomainError("frac_deriv_closed: x = 0 requires mu - sigma*eta > 0");
    }
    if (!(x > 0.0)) throw DomainError("frac_deriv_closed: x must be positive");

    out.series = series.eval(derivative_argument_scale(params) * std::pow(x, spec.nu), tol);
    const double log_scale = power * std::log(x) + derivative_log_prefactor(spec, params);
    out.magnitude = std::exp(log_scale) * out.series.value;
    return out;
}

double frac_deriv_series_path(const DerivSpec& spec, const MLParams& params, double x, std::size_t terms) {
    spec.validate();
    params.validate();
    double sum = 0.0;
    for (std::size_t r = 0; r < terms; ++r) {
        const double rr = static_cast<double>(r);
        const MonomialResult m = frac_deriv_monomial(spec.sigma, spec.eta, rr * spec.nu + spec.mu, x);
        if (m.pole || m.value == 0.0) continue;
        const double log_c = ml_log_coefficient(params, r);
        const double term = std::copysign(std::exp(log_c + std::log(std::abs(m.value))), m.value);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) && r > 4) break;
    }
    return sum;
}

double rl_reduction_check(double sigma, double p, double x) {
    const double generalized = frac_deriv_monomial(sigma, 1.0, p, x).value;
    const double classical = std::tgamma(p + 1.0) / std::tgamma(p + 1.0 - sigma) * std::pow(x, p - sigma);
    if (generalized == classical) return 0.0;
    return std::abs(generalized - classical) / std::abs(classical);
}

} // namespace mlfrac
