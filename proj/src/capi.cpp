#include "mlfrac/mlfrac.h"

#include "mlfrac/error.hpp"
#include "mlfrac/gammakit.hpp"
#include "mlfrac/oracles.hpp"
#include "mlfrac/reference.hpp"
#include "mlfrac/series.hpp"
#include "mlfrac/transforms.hpp"
#include "mlfrac/verify.hpp"

#include <exception>
#include <new>
#include <string>

struct mlfrac_foxwright {
    mlfrac::FoxWright impl;
};

struct mlfrac_report {
    mlfrac::SuiteReport impl;
};

namespace {

thread_local std::string g_last_error;

template <class F>
mlfrac_status guarded(F&& body) {
    g_last_error.clear();
    try {
        return body();
    } catch (const mlfrac::ConvergenceConditionError& e) {
        g_last_error = e.what();
        return MLFRAC_E_CONVERGENCE;
    } catch (const mlfrac::DomainError& e) {
        g_last_error = e.what();
        return MLFRAC_E_DOMAIN;
    } catch (const mlfrac::ContractError& e) {
        g_last_error = e.what();
        return MLFRAC_E_CONTRACT;
    } catch (const mlfrac::QuadratureError& e) {
        g_last_error = e.what();
        return MLFRAC_E_QUADRATURE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return MLFRAC_E_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MLFRAC_E_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return MLFRAC_E_INTERNAL;
    }
}

mlfrac_status null_arg(const char* what) {
    g_last_error = std::string("NULL argument: ") + what;
    return MLFRAC_E_NULL;
}

mlfrac::MLParams to_cpp(const mlfrac_params& p) {
    return {.k = p.k, .xi = p.xi, .zeta = p.zeta, .vartheta = p.vartheta, .q = p.q};
}

mlfrac::DerivSpec to_cpp(const mlfrac_deriv_spec& s) {
    return {.sigma = s.sigma,
            .eta = s.eta,
            .mu = s.mu,
            .nu = s.nu,
            .side = s.side == MLFRAC_SIDE_RIGHT ? mlfrac::Side::RightZeroMinus : mlfrac::Side::LeftZeroPlus};
}

mlfrac::QuadConfig to_cpp(const mlfrac_quad_config* c) {
    mlfrac::QuadConfig q;
    if (c) {
        q.jacobi_nodes = c->jacobi_nodes;
        q.adaptive_tol = c->adaptive_tol;
        q.fd_step = c->fd_step;
        q.laguerre_nodes = c->laguerre_nodes;
    }
    q.validate();
    return q;
}

mlfrac_status fill(const mlfrac::EvalResult& r, mlfrac_eval* out) {
    *out = {r.value, r.terms_used, r.tail_estimate, r.converged ? 1 : 0};
    if (!r.converged) {
        g_last_error = "series did not converge within the term cap";
        return MLFRAC_E_NOT_CONVERGED;
    }
    return MLFRAC_OK;
}

mlfrac_status fill(const mlfrac::DerivResult& r, mlfrac_deriv* out) {
    *out = {r.magnitude,          r.phase.real(),          r.phase.imag(),
            r.series.terms_used,  r.series.tail_estimate,  r.series.converged ? 1 : 0};
    if (!r.series.converged) {
        g_last_error = "series did not converge within the term cap";
        return MLFRAC_E_NOT_CONVERGED;
    }
    return MLFRAC_OK;
}

} // namespace

extern "C" {

const char* mlfrac_last_error(void) { return g_last_error.c_str(); }

const char* mlfrac_status_name(mlfrac_status s) {
    switch (s) {
    case MLFRAC_OK: return "ok";
    case MLFRAC_E_DOMAIN: return "domain error";
    case MLFRAC_E_CONTRACT: return "invalid argument";
    case MLFRAC_E_CONVERGENCE: return "convergence condition violated";
    case MLFRAC_E_NOT_CONVERGED: return "not converged";
    case MLFRAC_E_QUADRATURE: return "quadrature failure";
    case MLFRAC_E_NULL: return "null argument";
    case MLFRAC_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void mlfrac_reference_params(mlfrac_params* out) {
    if (!out) return;
    const auto p = mlfrac::reference_params();
    *out = {p.k, p.xi, p.zeta, p.vartheta, p.q};
}

void mlfrac_reference_deriv(double sigma, mlfrac_side side, mlfrac_deriv_spec* out) {
    if (!out) return;
    const auto d = mlfrac::reference_deriv(sigma);
    *out = {d.sigma, d.eta, d.mu, d.nu, side};
}

void mlfrac_default_quad_config(mlfrac_quad_config* out) {
    if (!out) return;
    const mlfrac::QuadConfig q;
    *out = {q.jacobi_nodes, q.adaptive_tol, q.fd_step, q.laguerre_nodes};
}

mlfrac_status mlfrac_k_gamma(double vartheta, double k, double* out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = mlfrac::k_gamma({vartheta, k});
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_k_pochhammer(double vartheta, size_t n, double q, double k, double* out) {
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = mlfrac::k_pochhammer({vartheta, n, q, k});
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_ml_eval(const mlfrac_params* p, double z, double tol, mlfrac_eval* out) {
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] { return fill(mlfrac::ml_eval(to_cpp(*p), z, tol), out); });
}

mlfrac_status mlfrac_foxwright_create(const mlfrac_pair* upper, size_t n_upper, const mlfrac_pair* lower,
                                      size_t n_lower, mlfrac_foxwright** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    if (n_upper && !upper) return null_arg("upper");
    if (n_lower && !lower) return null_arg("lower");
    return guarded([&] {
        mlfrac::FoxWrightSpec spec;
        for (size_t i = 0; i < n_upper; ++i) spec.upper.push_back({upper[i].shift, upper[i].scale});
        for (size_t i = 0; i < n_lower; ++i) spec.lower.push_back({lower[i].shift, lower[i].scale});
        *out = new mlfrac_foxwright{mlfrac::FoxWright(std::move(spec))};
        return MLFRAC_OK;
    });
}

void mlfrac_foxwright_destroy(mlfrac_foxwright* fw) { delete fw; }

double mlfrac_foxwright_margin(const mlfrac_foxwright* fw) { return fw ? fw->impl.margin() : 0.0; }

mlfrac_status mlfrac_foxwright_eval(const mlfrac_foxwright* fw, double z, double tol, mlfrac_eval* out) {
    if (!fw) return null_arg("handle");
    if (!out) return null_arg("out");
    return guarded([&] { return fill(fw->impl.eval(z, tol), out); });
}

mlfrac_status mlfrac_deriv_closed(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double x, double tol,
                                  mlfrac_deriv* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] { return fill(mlfrac::frac_deriv_closed(to_cpp(*spec), to_cpp(*p), x, tol), out); });
}

mlfrac_status mlfrac_deriv_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double x,
                                  const mlfrac_quad_config* cfg, double* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = mlfrac::frac_deriv_oracle(to_cpp(*spec), to_cpp(*p), x, to_cpp(cfg));
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_beta_image(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l, double m,
                                double x, double tol, mlfrac_deriv* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        return fill(mlfrac::beta_image_closed({to_cpp(*spec), to_cpp(*p), l, m}, x, tol), out);
    });
}

mlfrac_status mlfrac_laplace_image(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l, double s,
                                   int compat_qk, double x, double tol, mlfrac_deriv* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        return fill(mlfrac::laplace_image_closed({to_cpp(*spec), to_cpp(*p), l, s, compat_qk != 0}, x, tol), out);
    });
}

mlfrac_status mlfrac_laplace_margin(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l, double s,
                                    int compat_qk, double* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        *out = mlfrac::laplace_image_series({to_cpp(*spec), to_cpp(*p), l, s, compat_qk != 0}).margin();
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_beta_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l, double m,
                                 double x, const mlfrac_quad_config* cfg, double* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto d = to_cpp(*spec);
        const auto prm = to_cpp(*p);
        mlfrac::BetaImageSpec{d, prm, l, m}.validate();
        const mlfrac::RealFn g = [&](double z) { return mlfrac::scaled_derivative(d, prm, x, z, 1e-15); };
        *out = mlfrac::beta_transform_oracle(g, l, m, to_cpp(cfg));
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_laplace_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l, double s,
                                    double x, const mlfrac_quad_config* cfg, double* out) {
    if (!spec) return null_arg("spec");
    if (!p) return null_arg("params");
    if (!out) return null_arg("out");
    return guarded([&] {
        const auto d = to_cpp(*spec);
        const auto prm = to_cpp(*p);
        mlfrac::LaplaceImageSpec{d, prm, l, s, false}.validate();
        const mlfrac::RealFn g = [&](double z) { return mlfrac::scaled_derivative(d, prm, x, z, 1e-15); };
        *out = mlfrac::laplace_transform_oracle(g, l, s, to_cpp(cfg));
        return MLFRAC_OK;
    });
}

mlfrac_status mlfrac_verify(mlfrac_suite suite, mlfrac_report** out) {
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] {
        mlfrac::Suite s;
        switch (suite) {
        case MLFRAC_SUITE_IDENTITIES: s = mlfrac::Suite::Identities; break;
        case MLFRAC_SUITE_REDUCTIONS: s = mlfrac::Suite::Reductions; break;
        case MLFRAC_SUITE_ORACLE: s = mlfrac::Suite::Oracle; break;
        case MLFRAC_SUITE_TRANSFORMS: s = mlfrac::Suite::Transforms; break;
        default: throw mlfrac::ContractError("unknown verification suite");
        }
        *out = new mlfrac_report{mlfrac::run_suite(s)};
        return MLFRAC_OK;
    });
}

void mlfrac_report_destroy(mlfrac_report* r) { delete r; }

size_t mlfrac_report_size(const mlfrac_report* r) { return r ? r->impl.checks.size() : 0; }

size_t mlfrac_report_failed(const mlfrac_report* r) { return r ? r->impl.failed() : 0; }

double mlfrac_report_worst(const mlfrac_report* r) { return r ? r->impl.worst_residual() : 0.0; }

mlfrac_status mlfrac_report_check(const mlfrac_report* r, size_t i, const char** name, double* residual,
                                  double* threshold, int* passed) {
    if (!r) return null_arg("report");
    if (i >= r->impl.checks.size()) {
        g_last_error = "check index out of range";
        return MLFRAC_E_CONTRACT;
    }
    const auto& c = r->impl.checks[i];
    if (name) *name = c.name.c_str();
    if (residual) *residual = c.residual;
    if (threshold) *threshold = c.threshold;
    if (passed) *passed = c.passed ? 1 : 0;
    return MLFRAC_OK;
}

} // extern "C"
