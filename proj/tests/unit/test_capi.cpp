#include "mlfrac/mlfrac.h"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

TEST_CASE("C API: k-gamma and status reporting") {
    double v = 0.0;
    CHECK(mlfrac_k_gamma(0.2, 0.5, &v) == MLFRAC_OK);
    CHECK(v == doctest::Approx(3.362101167636674307).epsilon(1e-14));
    CHECK(std::strlen(mlfrac_last_error()) == 0);
    CHECK(mlfrac_k_gamma(0.2, 0.0, &v) == MLFRAC_E_DOMAIN);
    CHECK(std::strlen(mlfrac_last_error()) > 0);
    CHECK(mlfrac_k_gamma(0.2, 0.5, nullptr) == MLFRAC_E_NULL);
    CHECK(std::string(mlfrac_status_name(MLFRAC_E_CONVERGENCE)) == "convergence condition violated");
}

TEST_CASE("C API: Mittag-Leffler evaluation") {
    mlfrac_params p{1, 1, 1, 1, 1};
    mlfrac_eval r;
    REQUIRE(mlfrac_ml_eval(&p, 1.0, 1e-16, &r) == MLFRAC_OK);
    CHECK(r.value == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(r.converged == 1);
    CHECK(r.terms_used > 0);
    p.k = -1.0;
    CHECK(mlfrac_ml_eval(&p, 1.0, 1e-16, &r) != MLFRAC_OK);
    CHECK(mlfrac_ml_eval(nullptr, 1.0, 1e-16, &r) == MLFRAC_E_NULL);
}

TEST_CASE("C API: Fox-Wright handle lifecycle") {
    const mlfrac_pair up[] = {{0.5, 0.4}};
    const mlfrac_pair lo[] = {{0.4, 1.0}};
    mlfrac_foxwright* fw = nullptr;
    REQUIRE(mlfrac_foxwright_create(up, 1, lo, 1, &fw) == MLFRAC_OK);
    REQUIRE(fw != nullptr);
    CHECK(mlfrac_foxwright_margin(fw) == doctest::Approx(1.6));
    mlfrac_eval r;
    CHECK(mlfrac_foxwright_eval(fw, 0.7, 1e-16, &r) == MLFRAC_OK);
    CHECK(r.value == doctest::Approx(1.8376643330199869492).epsilon(1e-14));
    mlfrac_foxwright_destroy(fw);
    mlfrac_foxwright_destroy(nullptr);

    const mlfrac_pair bad_up[] = {{1.0, 2.0}, {1.0, 1.0}};
    const mlfrac_pair bad_lo[] = {{1.0, 0.5}};
    CHECK(mlfrac_foxwright_create(bad_up, 2, bad_lo, 1, &fw) == MLFRAC_E_CONVERGENCE);
    CHECK(fw == nullptr);
    CHECK(std::string(mlfrac_last_error()).find("sum B") != std::string::npos);
}

TEST_CASE("C API: non-convergence keeps the partial result") {
    const mlfrac_pair up[] = {{1.0, 1.0}};
    mlfrac_foxwright* fw = nullptr;
    REQUIRE(mlfrac_foxwright_create(up, 1, nullptr, 0, &fw) == MLFRAC_OK);
    mlfrac_eval r{};
    CHECK(mlfrac_foxwright_eval(fw, 0.999, 1e-15, &r) == MLFRAC_E_NOT_CONVERGED);
    CHECK(r.converged == 0);
    CHECK(r.terms_used == 10000);
    CHECK(r.value > 900.0);
    mlfrac_foxwright_destroy(fw);
}

TEST_CASE("C API: derivative, oracle and images") {
    mlfrac_params p;
    mlfrac_reference_params(&p);
    mlfrac_deriv_spec d;
    mlfrac_reference_deriv(0.1, MLFRAC_SIDE_RIGHT, &d);
    mlfrac_deriv r;
    REQUIRE(mlfrac_deriv_closed(&d, &p, 1.0, 1e-16, &r) == MLFRAC_OK);
    CHECK(r.magnitude == doctest::Approx(2.121338185630659561701686).epsilon(1e-13));
    CHECK(r.phase_re == doctest::Approx(std::cos(M_PI * 0.1)));
    CHECK(r.phase_im == doctest::Approx(-std::sin(M_PI * 0.1)));

    mlfrac_quad_config cfg;
    mlfrac_default_quad_config(&cfg);
    double o = 0.0;
    REQUIRE(mlfrac_deriv_oracle(&d, &p, 1.0, &cfg, &o) == MLFRAC_OK);
    CHECK(o == doctest::Approx(r.magnitude).epsilon(1e-8));
    cfg.jacobi_nodes = 2;
    CHECK(mlfrac_deriv_oracle(&d, &p, 1.0, &cfg, &o) == MLFRAC_E_CONTRACT);

    mlfrac_reference_deriv(0.2, MLFRAC_SIDE_LEFT, &d);
    REQUIRE(mlfrac_beta_image(&d, &p, 1.2, 0.8, 0.5, 1e-16, &r) == MLFRAC_OK);
    CHECK(r.magnitude == doctest::Approx(0.62532333304406732229).epsilon(1e-13));
    REQUIRE(mlfrac_laplace_image(&d, &p, 1.2, 3.0, 0, 0.5, 1e-16, &r) == MLFRAC_OK);
    CHECK(r.magnitude == doctest::Approx(0.11400067123555966115).epsilon(1e-13));
    REQUIRE(mlfrac_beta_oracle(&d, &p, 1.2, 0.8, 0.5, nullptr, &o) == MLFRAC_OK);
    CHECK(o == doctest::Approx(0.62532333304406732229).epsilon(1e-9));
    REQUIRE(mlfrac_laplace_oracle(&d, &p, 1.2, 3.0, 0.5, nullptr, &o) == MLFRAC_OK);
    CHECK(o == doctest::Approx(0.11400067123555966115).epsilon(1e-9));
    CHECK(mlfrac_deriv_closed(&d, &p, -1.0, 1e-15, &r) == MLFRAC_E_DOMAIN);
}

TEST_CASE("C API: verification report handle") {
    mlfrac_report* rep = nullptr;
    REQUIRE(mlfrac_verify(MLFRAC_SUITE_REDUCTIONS, &rep) == MLFRAC_OK);
    CHECK(mlfrac_report_size(rep) > 0);
    CHECK(mlfrac_report_failed(rep) == 0);
    CHECK(mlfrac_report_worst(rep) <= 1e-11);
    const char* name = nullptr;
    int passed = 0;
    CHECK(mlfrac_report_check(rep, 0, &name, nullptr, nullptr, &passed) == MLFRAC_OK);
    CHECK(name != nullptr);
    CHECK(passed == 1);
    CHECK(mlfrac_report_check(rep, mlfrac_report_size(rep), &name, nullptr, nullptr, &passed) == MLFRAC_E_CONTRACT);
    mlfrac_report_destroy(rep);
    CHECK(mlfrac_verify(static_cast<mlfrac_suite>(9), &rep) == MLFRAC_E_CONTRACT);
}
