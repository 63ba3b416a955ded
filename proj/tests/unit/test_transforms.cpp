#include "mlfrac/error.hpp"
#include "mlfrac/oracles.hpp"
#include "mlfrac/reference.hpp"
#include "mlfrac/transforms.hpp"

#include <doctest.h>

#include <cmath>

using namespace mlfrac;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("beta image against a 40-digit quadrature") {
    const BetaImageSpec spec{reference_deriv(0.2), reference_params(), 1.2, 0.8};
    CHECK(rel(beta_image_closed(spec, 0.5, 1e-16).magnitude, 0.62532333304406732229) < 1e-13);
}

TEST_CASE("Laplace image against a 40-digit quadrature") {
    const LaplaceImageSpec spec{reference_deriv(0.2), reference_params(), 1.2, 3.0};
    CHECK(rel(laplace_image_closed(spec, 0.5, 1e-16).magnitude, 0.11400067123555966115) < 1e-13);
}

TEST_CASE("closed images agree with the numeric oracles") {
    const MLParams p = reference_params();
    const DerivSpec d = reference_deriv(0.3);
    const QuadConfig cfg;
    const double x = 1.0;
    const RealFn g = [&](double z) { return scaled_derivative(d, p, x, z, 1e-15); };
    CHECK(rel(beta_image_closed({d, p, 1.5, 0.8}, x, 1e-15).magnitude, beta_transform_oracle(g, 1.5, 0.8, cfg)) < 1e-8);
    CHECK(rel(laplace_image_closed({d, p, 0.8, 2.0}, x, 1e-15).magnitude, laplace_transform_oracle(g, 0.8, 2.0, cfg)) < 1e-8);
}

TEST_CASE("Laplace series convergence margin") {
    const MLParams p = reference_params();
    const LaplaceImageSpec spec{reference_deriv(0.1), p, 1.0, 2.0};
    CHECK(laplace_image_series(spec).margin() == doctest::Approx(0.8).epsilon(1e-12));
    LaplaceImageSpec compat = spec;
    compat.compat_qk = true;
    CHECK(laplace_image_series(compat).margin() == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(laplace_image_closed(compat, 1.0, 1e-15).magnitude != laplace_image_closed(spec, 1.0, 1e-15).magnitude);
}

TEST_CASE("Laplace image rejects a divergent configuration") {
    MLParams p = reference_params();
    p.q = 2.0; // sum A grows past 1 + sum B
    DerivSpec d = reference_deriv(0.1);
    d.nu = 2.0;
    CHECK_THROWS_AS(laplace_image_series({d, p, 1.0, 2.0}), ConvergenceConditionError);
}

TEST_CASE("right-sided images carry the phase") {
    const MLParams p = reference_params();
    const DerivResult r = beta_image_closed({reference_deriv(0.2, Side::RightZeroMinus), p, 1.0, 1.0}, 0.5, 1e-15);
    const DerivResult l = beta_image_closed({reference_deriv(0.2), p, 1.0, 1.0}, 0.5, 1e-15);
    CHECK(r.magnitude == l.magnitude);
    CHECK(r.phase.imag() < 0.0);
}

TEST_CASE("image spec validation") {
    const MLParams p = reference_params();
    CHECK_THROWS(beta_image_closed({reference_deriv(0.2), p, 0.0, 1.0}, 0.5, 1e-15));
    CHECK_THROWS(beta_image_closed({reference_deriv(0.2), p, 1.0, -1.0}, 0.5, 1e-15));
    CHECK_THROWS(laplace_image_closed({reference_deriv(0.2), p, 1.0, 0.0}, 0.5, 1e-15));
}
