#include "mlfrac/error.hpp"
#include "mlfrac/reference.hpp"
#include "mlfrac/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace mlfrac;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
} // namespace

TEST_CASE("ml_eval on the reference parameters matches a 40-digit sum") {
    const MLParams p = reference_params();
    const EvalResult a = ml_eval(p, 1.3, 1e-16);
    CHECK(a.converged);
    CHECK(rel(a.value, 2.935155358086255719287532) < 1e-14);
    const EvalResult b = ml_eval(p, -2.0, 1e-16);
    CHECK(b.converged);
    CHECK(rel(b.value, -0.2894417265126754940320023) < 1e-12);
    CHECK(ml_eval(p, 0.0, 1e-15).value == doctest::Approx(1.0 / k_gamma({p.zeta, p.k})).epsilon(1e-15));
}

TEST_CASE("ml_eval reduces to exp at unit parameters") {
    const MLParams ones{};
    for (double z : {0.0, 0.5, 1.0, 2.0, -1.0}) {
        CAPTURE(z);
        CHECK(rel(ml_eval(ones, z, 1e-16).value, std::exp(z)) < 1e-13);
    }
}

TEST_CASE("direct and Fox-Wright routes agree") {
    const MLParams p = reference_params();
    for (double z : {0.1, 1.0, 3.0, 5.0}) {
        CAPTURE(z);
        CHECK(rel(ml_eval(p, z, 1e-15).value, ml_eval_foxwright(p, z, 1e-15).value) < 1e-12);
    }
}

TEST_CASE("1Psi1 against a frozen 200-term sum") {
    const FoxWright fw({{{0.5, 0.4}}, {{0.4, 1.0}}});
    CHECK(fw.margin() == doctest::Approx(1.6));
    const EvalResult r = fw.eval(0.7, 1e-16);
    CHECK(rel(r.value, 1.8376643330199869492) < 1e-14);
}

TEST_CASE("incremental stream matches fresh coefficients") {
    const FoxWright fw({{{0.5, 0.4}, {2.0, 2.0}}, {{0.4, 1.0}, {1.7, 2.0}}});
    auto s = fw.stream();
    for (std::size_t n = 0; n < 60; ++n) {
        const SignedLog inc = s.next();
        const SignedLog fresh = fw.log_coefficient(n);
        CAPTURE(n);
        CHECK(inc.sign == fresh.sign);
        CHECK(std::abs(inc.log_abs - fresh.log_abs) < 1e-11 * std::max(1.0, std::abs(fresh.log_abs)));
    }
}

TEST_CASE("lower gamma poles give vanishing terms") {
    // 1/Gamma(-1 + n) vanishes for n = 0, 1.
    const FoxWright fw({{{1.0, 1.0}}, {{-1.0, 1.0}}});
    CHECK(fw.log_coefficient(0).is_zero());
    CHECK(fw.log_coefficient(1).is_zero());
    CHECK_FALSE(fw.log_coefficient(2).is_zero());
}

TEST_CASE("convergence condition is enforced at construction") {
    CHECK_THROWS_AS(FoxWright({{{1.0, 2.0}, {1.0, 1.0}}, {{1.0, 0.5}}}), ConvergenceConditionError);
    try {
        FoxWright({{{1.0, 2.0}, {1.0, 1.0}}, {{1.0, 0.5}}});
    } catch (const ConvergenceConditionError& e) {
        CHECK(e.sum_upper() == doctest::Approx(3.0));
        CHECK(e.sum_lower() == doctest::Approx(0.5));
        CHECK(std::string(e.what()).find("sum A") != std::string::npos);
    }
    // margin exactly zero is allowed; finite radius
    const FoxWright edge({{{1.0, 1.0}}, {}});
    CHECK(edge.margin() == 0.0);
    CHECK(edge.radius() == doctest::Approx(1.0));
}

TEST_CASE("term cap reports non-convergence") {
    const FoxWright edge({{{1.0, 1.0}}, {}}); // sum z^n, radius 1
    SeriesOptions opts;
    opts.max_terms = 50;
    const EvalResult r = edge.eval(0.999, 1e-15, opts);
    CHECK_FALSE(r.converged);
    CHECK(r.terms_used == 50);
}

TEST_CASE("reduction checks") {
    MLParams p{.k = 1.0, .xi = 0.5, .zeta = 1.0, .vartheta = 1.0, .q = 1.0};
    CHECK(ml_reduction_check(p, 0.8, MLReduction::Classical) < 1e-13);
    CHECK_THROWS_AS(ml_reduction_check(reference_params(), 0.8, MLReduction::Classical), ContractError);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS(ml_eval(MLParams{.k = 0.0}, 1.0, 1e-15));
    CHECK_THROWS(ml_eval(MLParams{}, 1.0, 0.0));
    CHECK_THROWS(FoxWright({{{1.0, -1.0}}, {}}));
}
