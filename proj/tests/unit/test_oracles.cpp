#include "mlfrac/error.hpp"
#include "mlfrac/gammakit.hpp"
#include "mlfrac/oracles.hpp"
#include "mlfrac/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace mlfrac;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("unit-interval quadrature with endpoint singularities") {
    const QuadConfig cfg;
    const double v = integrate_unit_interval([](double z) { return std::cos(z); }, -0.5, -0.3, cfg);
    CHECK(rel(v, 1.975070349471313462642698) < 1e-12);
}

TEST_CASE("fractional integral of a power") {
    const QuadConfig cfg;
    for (double p : {0.5, 2.0}) {
        for (double s : {0.3, 0.9}) {
            const double eta = 0.3, x = 1.7;
            const double exact = std::pow(eta, -s) * std::pow(x, p + eta * s) *
                                 std::exp(log_gamma(p / eta + 1) - log_gamma(p / eta + 1 + s));
            const double v = frac_integral_oracle(s, eta, [p](double t) { return std::pow(t, p); }, x, cfg);
            CAPTURE(p);
            CAPTURE(s);
            CHECK(rel(v, exact) < 1e-11);
        }
    }
}

TEST_CASE("derivative oracle on a monomial matches the kernel") {
    const QuadConfig cfg;
    DerivSpec d = reference_deriv(0.3);
    const double p = 1.4;
    for (double x : {0.5, 2.0}) {
        const double v = frac_deriv_oracle(d, [p](double t) { return std::pow(t, p); }, x, cfg);
        CHECK(rel(v, frac_deriv_monomial(d.sigma, d.eta, p, x).value) < 1e-8);
    }
}

TEST_CASE("derivative oracle on the reference function") {
    const QuadConfig cfg;
    const double v = frac_deriv_oracle(reference_deriv(0.1), reference_params(), 1.0, cfg);
    CHECK(rel(v, 2.121338185630659561701686) < 1e-8);
}

TEST_CASE("finite-difference derivative") {
    const double d = fd_derivative([](double t) { return std::pow(t, 3.2); }, 0.5, 1e-5);
    CHECK(rel(d, 3.2 * std::pow(0.5, 2.2)) < 1e-9);
}

TEST_CASE("beta and Laplace oracles") {
    const QuadConfig cfg;
    const double b = beta_transform_oracle([](double) { return 1.0; }, 1.2, 0.8, cfg);
    CHECK(rel(b, std::exp(log_gamma(1.2) + log_gamma(0.8) - log_gamma(2.0))) < 1e-12);
    const double l = laplace_transform_oracle([](double z) { return std::cos(z); }, 1.5, 2.0, cfg);
    CHECK(rel(l, 0.2034877366388039081496212) < 1e-11);
}

TEST_CASE("quadrature configuration validation") {
    QuadConfig cfg;
    cfg.jacobi_nodes = 4;
    CHECK_THROWS(cfg.validate());
    cfg = QuadConfig{};
    cfg.fd_step = 1e-2;
    CHECK_THROWS(cfg.validate());
    cfg = QuadConfig{};
    cfg.adaptive_tol = 1e-14;
    CHECK_THROWS(cfg.validate());
}
