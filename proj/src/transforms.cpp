#include "mlfrac/transforms.hpp"

#include "mlfrac/error.hpp"

#include <cmath>

namespace mlfrac {

namespace {

FoxWrightSpec derivative_pairs(const DerivSpec& d, const MLParams& p, double first_scale) {
    const double a = d.mu / d.eta + 1.0;
    const double b = d.nu / d.eta;
    return {
        {{p.vartheta / p.k, first_scale}, {a, b}},
        {{p.zeta / p.k, p.xi / p.k}, {a - d.sigma, b}},
    };
}

} // namespace

void BetaImageSpec::validate() const {
    deriv.validate();
    params.validate();
    if (!(l > 0.0) || !(m > 0.0)) throw DomainError("BetaImageSpec: l and m must be positive");
}

void LaplaceImageSpec::validate() const {
    deriv.validate();
    params.validate();
    if (!(l > 0.0) || !(s > 0.0)) throw DomainError("LaplaceImageSpec: l and s must be positive");
}

FoxWright beta_image_series(const BetaImageSpec& spec) {
    spec.validate();
    FoxWrightSpec fw = derivative_pairs(spec.deriv, spec.params, spec.params.q);
    fw.upper.push_back({spec.l, spec.deriv.nu});
    fw.lower.push_back({spec.l + spec.m, spec.deriv.nu});
    return FoxWright(std::move(fw));
}

FoxWright laplace_image_series(const LaplaceImageSpec& spec) {
    spec.validate();
    const double first = spec.compat_qk ? spec.params.q / spec.params.k : spec.params.q;
    FoxWrightSpec fw = derivative_pairs(spec.deriv, spec.params, first);
    fw.upper.push_back({spec.l, spec.deriv.nu});
    return FoxWright(std::move(fw));
}

DerivResult beta_image_closed(const BetaImageSpec& spec, double x, double tol) {
    const FoxWright series = beta_image_series(spec);
    const DerivSpec& d = spec.deriv;
    DerivResult out;
    out.phase = side_phase(d.side, d.sigma);
    const double power = d.mu - d.sigma * d.eta;
    if (x == 0.0 && power > 0.0) {
        out.series = series.eval(0.0, tol);
        return out;
    }
    if (!(x > 0.0)) throw DomainError("beta_image_closed: x must be positive");
    out.series = series.eval(derivative_argument_scale(spec.params) * std::pow(x, d.nu), tol);
    const double log_scale = log_gamma(spec.m) + power * std::log(x) + derivative_log_prefactor(d, spec.params);
    out.magnitude = std::exp(log_scale) * out.series.value;
    return out;
}

DerivResult laplace_image_closed(const LaplaceImageSpec& spec, double x, double tol) {
    const FoxWright series = laplace_image_series(spec);
    const DerivSpec& d = spec.deriv;
    DerivResult out;
    out.phase = side_phase(d.side, d.sigma);
    const double power = d.mu - d.sigma * d.eta;
    if (x == 0.0 && power > 0.0) {
        out.series = series.eval(0.0, tol);
        return out;
    }
    if (!(x > 0.0)) throw DomainError("laplace_image_closed: x must be positive");
    out.series = series.eval(derivative_argument_scale(spec.params) * std::pow(x / spec.s, d.nu), tol);
    const double log_scale =
        power * std::log(x) - spec.l * std::log(spec.s) + derivative_log_prefactor(d, spec.params);
    out.magnitude = std::exp(log_scale) * out.series.value;
    return out;
}

double scaled_derivative(const DerivSpec& spec, const MLParams& params, double x, double z, double tol) {
    // D at x z carries (x z)^{mu - sigma eta}; undo the z part of the prefactor.
    const double power = spec.mu - spec.sigma * spec.eta;
    const DerivResult r = frac_deriv_closed(spec, params, x * z, tol);
    return r.magnitude * std::pow(z, -power);
}

} // namespace mlfrac
