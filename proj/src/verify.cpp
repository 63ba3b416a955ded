#include "mlfrac/verify.hpp"

#include "mlfrac/error.hpp"
#include "mlfrac/gammakit.hpp"
#include "mlfrac/oracles.hpp"
#include "mlfrac/reference.hpp"
#include "mlfrac/series.hpp"
#include "mlfrac/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <sstream>

namespace mlfrac {

namespace {

double rel(double a, double b) {
    if (a == b) return 0.0;
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

class Recorder {
public:
    explicit Recorder(SuiteReport& r) : report_(r) {}

    void check(const std::string& name, double threshold, const std::function<double()>& residual) {
        CheckResult c{name, std::numeric_limits<double>::infinity(), threshold, false};
        try {
            c.residual = residual();
            c.passed = c.residual <= threshold;
        } catch (const std::exception& e) {
            c.name += std::string(" [") + e.what() + "]";
        }
        report_.checks.push_back(std::move(c));
    }

private:
    SuiteReport& report_;
};

std::string fmt(const char* prefix, std::initializer_list<double> values) {
    std::ostringstream os;
    os << prefix << "(";
    bool first = true;
    for (double v : values) {
        if (!first) os << ",";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}

const double kVarthetaGrid[] = {0.2, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, 5.0};
const double kKGrid[] = {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0};

void identities(Recorder& rec) {
    for (double v : kVarthetaGrid) {
        for (double k : kKGrid) {
            rec.check(fmt("k_gamma recurrence", {v, k}), 1e-12,
                      [=] { return rel(k_gamma({v + k, k}), v * k_gamma({v, k})); });
            for (double s : {0.25, 0.7, 1.3, 2.0}) {
                rec.check(fmt("k-gamma rescaling", {v, s, k}), 1e-12, [=] { return check_k_gamma_rescaling(v, s, k); });
                for (std::uint64_t n : {1u, 2u, 3u}) {
                    for (double q : {0.4, 1.0}) {
                        rec.check(fmt("k-Pochhammer rescaling", {v, double(n), q, s, k}), 1e-12,
                                  [=] { return check_pochhammer_rescaling(v, n, q, s, k); });
                    }
                }
            }
            for (std::uint64_t n = 0; n <= 6; ++n) {
                for (double q : {1.0, 2.0}) {
                    rec.check(fmt("k-Pochhammer k-to-1 reduction", {v, double(n), q, k}), 1e-12,
                              [=] { return check_pochhammer_k_to_one(v, n, q, k); });
                }
            }
        }
        rec.check(fmt("k=1 gamma", {v}), 1e-13, [=] { return rel(k_gamma({v, 1.0}), std::tgamma(v)); });
        for (std::uint64_t n = 0; n <= 6; ++n) {
            rec.check(fmt("k=1 pochhammer", {v, double(n)}), 1e-13, [=] {
                return rel(k_pochhammer({v, n, 1.0, 1.0}),
                           std::tgamma(v + static_cast<double>(n)) / std::tgamma(v));
            });
        }
    }
}

void reductions(Recorder& rec) {
    const MLParams base{.k = 0.5, .xi = 0.7, .zeta = 1.3, .vartheta = 0.8, .q = 1.0};
    for (double z : {0.0, 0.2, 0.7, 1.5, -0.6}) {
        rec.check(fmt("reduction q1", {z}), 1e-12, [=] { return ml_reduction_check(base, z, MLReduction::Q1); });
        MLParams k1 = base;
        k1.k = 1.0;
        k1.q = 0.6;
        rec.check(fmt("reduction k1", {z}), 1e-12, [=] { return ml_reduction_check(k1, z, MLReduction::K1); });
        MLParams q1k1 = base;
        q1k1.k = 1.0;
        rec.check(fmt("reduction q1k1", {z}), 1e-12,
                  [=] { return ml_reduction_check(q1k1, z, MLReduction::Q1K1); });
        MLParams wiman = q1k1;
        wiman.vartheta = 1.0;
        wiman.xi = 0.5;
        rec.check(fmt("reduction wiman", {z}), 1e-12,
                  [=] { return ml_reduction_check(wiman, z, MLReduction::Wiman); });
        MLParams classical = wiman;
        classical.zeta = 1.0;
        rec.check(fmt("reduction classical", {z}), 1e-12,
                  [=] { return ml_reduction_check(classical, z, MLReduction::Classical); });
    }
    const MLParams ones{};
    for (int i = 0; i <= 20; ++i) {
        const double z = 0.1 * i;
        rec.check(fmt("E_1(z) = exp(z)", {z}), 1e-12, [=] { return rel(ml_eval(ones, z, 1e-16).value, std::exp(z)); });
    }
    const MLParams ref = reference_params();
    for (int i = 0; i <= 20; ++i) {
        const double z = 0.25 * i;
        rec.check(fmt("ml_eval vs 1Psi1 route", {z}), 1e-11, [=] {
            return rel(ml_eval(ref, z, 1e-15).value, ml_eval_foxwright(ref, z, 1e-15).value);
        });
    }
}

void oracle(Recorder& rec) {
    const MLParams params = reference_params();
    const QuadConfig cfg;
    for (double sigma : {0.1, 0.2, 0.3, 0.4}) {
        for (int i = 1; i <= 10; ++i) {
            const double x = 0.5 * i;
            rec.check(fmt("closed vs quadrature oracle", {sigma, x}), 1e-4, [=] {
                const DerivSpec spec = reference_deriv(sigma);
                return rel(frac_deriv_closed(spec, params, x, 1e-15).magnitude,
                           frac_deriv_oracle(spec, params, x, cfg));
            });
        }
    }
    for (double p : {0.5, 1.7, 3.2}) {
        for (double x : {0.5, 1.0, 5.0}) {
            rec.check(fmt("finite-difference kernel on x^p", {p, x}), 1e-8, [=] {
                const double fd = fd_derivative([p](double t) { return std::pow(t, p); }, x, cfg.fd_step);
                return rel(fd, std::exp(log_gamma(p + 1.0) - log_gamma(p)) * std::pow(x, p - 1.0));
            });
        }
    }
    rec.check("RL reduction (0.5,1,1)", 1e-13, [] { return rl_reduction_check(0.5, 1.0, 1.0); });
    rec.check("RL reduction (0.3,2.5,4)", 1e-13, [] { return rl_reduction_check(0.3, 2.5, 4.0); });
    rec.check("RL reduction (0.999,0.5,0.1)", 1e-12, [] { return rl_reduction_check(0.999, 0.5, 0.1); });
    for (int i = 1; i <= 10; ++i) {
        const double x = 0.5 * i;
        rec.check(fmt("sigma=0 identity", {x}), 1e-11, [=] {
            const DerivSpec spec = reference_deriv(0.0);
            const double closed = frac_deriv_closed(spec, params, x, 1e-15).magnitude;
            return rel(closed, std::pow(x, spec.mu) * ml_eval(params, std::pow(x, spec.nu), 1e-15).value);
        });
        rec.check(fmt("series-path equality", {x}), 1e-10, [=] {
            const DerivSpec spec = reference_deriv(0.25);
            return rel(frac_deriv_closed(spec, params, x, 1e-15).magnitude,
                       frac_deriv_series_path(spec, params, x, 200));
        });
    }
    for (double sigma : {0.1, 0.2, 0.3, 0.4}) {
        rec.check(fmt("x=0 limit", {sigma}), 0.0,
                  [=] { return std::abs(frac_deriv_closed(reference_deriv(sigma), params, 0.0, 1e-15).magnitude); });
    }
}

void transforms(Recorder& rec) {
    const MLParams params = reference_params();
    const QuadConfig cfg;
    const double tol = 1e-15;
    for (double sigma : {0.1, 0.3}) {
        const DerivSpec d = reference_deriv(sigma);
        for (double x : {0.25, 0.5, 1.0}) {
            const RealFn g = [=](double z) { return scaled_derivative(d, params, x, z, tol); };
            for (double l : {0.8, 1.0, 1.5}) {
                for (double m : {0.8, 1.0, 1.5}) {
                    rec.check(fmt("beta image vs oracle", {sigma, x, l, m}), 1e-5, [=] {
                        const double closed = beta_image_closed({d, params, l, m}, x, tol).magnitude;
                        return rel(closed, beta_transform_oracle(g, l, m, cfg));
                    });
                }
                for (double s : {2.0, 4.0, 8.0}) {
                    rec.check(fmt("laplace image vs oracle", {sigma, x, l, s}), 1e-5, [=] {
                        const double closed = laplace_image_closed({d, params, l, s}, x, tol).magnitude;
                        return rel(closed, laplace_transform_oracle(g, l, s, cfg));
                    });
                }
            }
        }
    }
    for (double c : {0.5, 2.0, 3.0}) {
        rec.check(fmt("laplace scaling (x,s)->(cx,cs)", {c}), 1e-12, [=] {
            const DerivSpec d = reference_deriv(0.2);
            const double power = d.mu - d.sigma * d.eta;
            auto normalized = [&](double x, double s) {
                const double l = 1.2;
                return std::pow(s, l) * laplace_image_closed({d, params, l, s}, x, tol).magnitude /
                       std::pow(x, power);
            };
            return rel(normalized(0.7, 3.0), normalized(0.7 * c, 3.0 * c));
        });
    }
    rec.check("3Psi3 term = 2Psi2 term * B(l + nu r, m) / Gamma(m), r <= 50", 1e-12, [=] {
        const DerivSpec d = reference_deriv(0.2);
        const double l = 1.2, m = 0.8;
        const FoxWright three = beta_image_series({d, params, l, m});
        const FoxWright two = derivative_series(d, params);
        double worst = 0.0;
        for (std::size_t r = 0; r <= 50; ++r) {
            const double nr = d.nu * static_cast<double>(r);
            const double log_beta = log_gamma(l + nr) + log_gamma(m) - log_gamma(l + m + nr);
            const double expected = two.log_coefficient(r).log_abs + log_beta - log_gamma(m);
            worst = std::max(worst, std::abs(std::expm1(three.log_coefficient(r).log_abs - expected)));
        }
        return worst;
    });
    rec.check("laplace 3Psi2 margin = 0.8", 1e-12, [=] {
        return std::abs(laplace_image_series({reference_deriv(0.1), params, 1.0, 2.0}).margin() - 0.8);
    });
    rec.check("violating Fox-Wright spec rejected", 0.0, [] {
        try {
            FoxWright({{{1.0, 2.0}, {1.0, 1.0}}, {{1.0, 0.5}}});
        } catch (const ConvergenceConditionError&) {
            return 0.0;
        }
        return 1.0;
    });
}

} // namespace

std::size_t SuiteReport::passed() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::size_t SuiteReport::failed() const { return checks.size() - passed(); }

double SuiteReport::worst_residual() const {
    double worst = 0.0;
    for (const auto& c : checks) worst = std::max(worst, c.residual);
    return worst;
}

const char* suite_name(Suite s) {
    switch (s) {
    case Suite::Identities: return "identities";
    case Suite::Reductions: return "reductions";
    case Suite::Oracle: return "oracle";
    case Suite::Transforms: return "transforms";
    }
    return "?";
}

SuiteReport run_suite(Suite s) {
    SuiteReport report{suite_name(s), {}};
    Recorder rec(report);
    switch (s) {
    case Suite::Identities: identities(rec); break;
    case Suite::Reductions: reductions(rec); break;
    case Suite::Oracle: oracle(rec); break;
    case Suite::Transforms: transforms(rec); break;
    }
    return report;
}

} // namespace mlfrac
