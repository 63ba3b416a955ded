#ifndef MLFRAC_H
#define MLFRAC_H

#include <stddef.h>

#if defined(_WIN32)
#define MLFRAC_API __declspec(dllexport)
#else
#define MLFRAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mlfrac_status {
    MLFRAC_OK = 0,
    MLFRAC_E_DOMAIN = 1,          /* argument outside the mathematical domain */
    MLFRAC_E_CONTRACT = 2,        /* invalid option or parameter value */
    MLFRAC_E_CONVERGENCE = 3,     /* Fox-Wright convergence condition violated */
    MLFRAC_E_NOT_CONVERGED = 4,   /* series hit the term cap; result still filled */
    MLFRAC_E_QUADRATURE = 5,      /* oracle quadrature did not settle */
    MLFRAC_E_NULL = 6,            /* required pointer was NULL */
    MLFRAC_E_INTERNAL = 7
} mlfrac_status;

typedef enum mlfrac_side {
    MLFRAC_SIDE_LEFT = 0,  /* 0+ */
    MLFRAC_SIDE_RIGHT = 1  /* 0- */
} mlfrac_side;

typedef struct mlfrac_params {
    double k, xi, zeta, vartheta, q;
} mlfrac_params;

typedef struct mlfrac_deriv_spec {
    double sigma, eta, mu, nu;
    mlfrac_side side;
} mlfrac_deriv_spec;

typedef struct mlfrac_eval {
    double value;
    size_t terms_used;
    double tail_estimate;
    int converged;
} mlfrac_eval;

typedef struct mlfrac_deriv {
    double magnitude;
    double phase_re, phase_im;
    size_t terms_used;
    double tail_estimate;
    int converged;
} mlfrac_deriv;

typedef struct mlfrac_quad_config {
    size_t jacobi_nodes;
    double adaptive_tol;
    double fd_step;
    size_t laguerre_nodes;
} mlfrac_quad_config;

typedef struct mlfrac_pair {
    double shift, scale;
} mlfrac_pair;

typedef struct mlfrac_foxwright mlfrac_foxwright;
typedef struct mlfrac_report mlfrac_report;

typedef enum mlfrac_suite {
    MLFRAC_SUITE_IDENTITIES = 0,
    MLFRAC_SUITE_REDUCTIONS = 1,
    MLFRAC_SUITE_ORACLE = 2,
    MLFRAC_SUITE_TRANSFORMS = 3
} mlfrac_suite;

/* Message of the last failing call on this thread; empty after success. */
MLFRAC_API const char* mlfrac_last_error(void);
MLFRAC_API const char* mlfrac_status_name(mlfrac_status s);

MLFRAC_API void mlfrac_reference_params(mlfrac_params* out);
MLFRAC_API void mlfrac_reference_deriv(double sigma, mlfrac_side side, mlfrac_deriv_spec* out);
MLFRAC_API void mlfrac_default_quad_config(mlfrac_quad_config* out);

MLFRAC_API mlfrac_status mlfrac_k_gamma(double vartheta, double k, double* out);
MLFRAC_API mlfrac_status mlfrac_k_pochhammer(double vartheta, size_t n, double q, double k, double* out);
MLFRAC_API mlfrac_status mlfrac_ml_eval(const mlfrac_params* p, double z, double tol, mlfrac_eval* out);

MLFRAC_API mlfrac_status mlfrac_foxwright_create(const mlfrac_pair* upper, size_t n_upper,
                                                 const mlfrac_pair* lower, size_t n_lower,
                                                 mlfrac_foxwright** out);
MLFRAC_API void mlfrac_foxwright_destroy(mlfrac_foxwright* fw);
MLFRAC_API double mlfrac_foxwright_margin(const mlfrac_foxwright* fw);
MLFRAC_API mlfrac_status mlfrac_foxwright_eval(const mlfrac_foxwright* fw, double z, double tol, mlfrac_eval* out);

MLFRAC_API mlfrac_status mlfrac_deriv_closed(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double x,
                                             double tol, mlfrac_deriv* out);
/* Quadrature route; returns the magnitude for either side. */
MLFRAC_API mlfrac_status mlfrac_deriv_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double x,
                                             const mlfrac_quad_config* cfg, double* out);
MLFRAC_API mlfrac_status mlfrac_beta_image(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l,
                                           double m, double x, double tol, mlfrac_deriv* out);
MLFRAC_API mlfrac_status mlfrac_laplace_image(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l,
                                              double s, int compat_qk, double x, double tol, mlfrac_deriv* out);
/* 1 + sum B - sum A of the Laplace-image series; fails with MLFRAC_E_CONVERGENCE when negative. */
MLFRAC_API mlfrac_status mlfrac_laplace_margin(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l,
                                               double s, int compat_qk, double* out);
MLFRAC_API mlfrac_status mlfrac_beta_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l,
                                            double m, double x, const mlfrac_quad_config* cfg, double* out);
MLFRAC_API mlfrac_status mlfrac_laplace_oracle(const mlfrac_deriv_spec* spec, const mlfrac_params* p, double l,
                                               double s, double x, const mlfrac_quad_config* cfg, double* out);

MLFRAC_API mlfrac_status mlfrac_verify(mlfrac_suite suite, mlfrac_report** out);
MLFRAC_API void mlfrac_report_destroy(mlfrac_report* r);
MLFRAC_API size_t mlfrac_report_size(const mlfrac_report* r);
MLFRAC_API size_t mlfrac_report_failed(const mlfrac_report* r);
MLFRAC_API double mlfrac_report_worst(const mlfrac_report* r);
/* Fills name (borrowed, valid until destroy), residual, threshold, passed. */
MLFRAC_API mlfrac_status mlfrac_report_check(const mlfrac_report* r, size_t i, const char** name,
                                             double* residual, double* threshold, int* passed);

#ifdef __cplusplus
}
#endif

#endif
