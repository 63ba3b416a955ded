#pragma once

#include "mlfrac/gammakit.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mlfrac {

/// Parameters (k, xi, zeta, vartheta, q) of the generalized k-Mittag-Leffler
/// function
///
///   E^{vartheta,q}_{k,xi,zeta}(z) = sum_n (vartheta)_{nq,k} z^n / (Gamma_k(n xi + zeta) n!).
///
/// All fields must be strictly positive.
struct MLParams {
    double k = 1.0;
    double xi = 1.0;
    double zeta = 1.0;
    double vartheta = 1.0;
    double q = 1.0;

    void validate() const;
};

/// One (shift, scale) pair of a Fox-Wright function, contributing
/// Gamma(shift + scale * n) to the n-th coefficient.
struct FoxWrightPair {
    double shift;
    double scale;
};

struct FoxWrightSpec {
    std::vector<FoxWrightPair> upper;
    std::vector<FoxWrightPair> lower;
};

struct EvalResult {
    double value = 0.0;
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;
    bool converged = false;
};

struct SeriesOptions {
    std::size_t max_terms = 10000;
};

/// Coefficient source for the summation engine: produces log|c_n| and the
/// sign of c_n for n = 0, 1, 2, ... in order.
class CoefficientStream {
public:
    virtual ~CoefficientStream() = default;
    virtual SignedLog next() = 0;
};

/// Sums sum_n c_n z^n with the two-small-terms stopping rule.
///
/// Stops once two consecutive terms are below tol * |partial sum| and the
/// tail bound |t_{n+1}| / (1 - rho) (rho the last term ratio, raw omitted
/// term when rho >= 1) is within tol * max(1, |sum|). Alternating input is
/// accumulated with Neumaier compensation. Exceeding `max_terms` returns a
/// result with converged == false.
EvalResult sum_power_series(CoefficientStream& coeffs, double z, double tol,
                            const SeriesOptions& opts = {});

/// Fox-Wright function
///
///   pPsiq(z) = sum_n prod_i Gamma(a_i + A_i n) / prod_j Gamma(b_j + B_j n) * z^n / n!.
///
/// Construction enforces 1 + sum B - sum A >= 0 (ConvergenceConditionError
/// otherwise), positive scales and positive upper shifts. Lower gamma
/// arguments may reach poles; those terms vanish.
class FoxWright {
public:
    explicit FoxWright(FoxWrightSpec spec);

    const FoxWrightSpec& spec() const noexcept { return spec_; }
    double sum_upper_scales() const noexcept { return sum_upper_; }
    double sum_lower_scales() const noexcept { return sum_lower_; }
    /// 1 + sum B - sum A.
    double margin() const noexcept { return 1.0 + sum_lower_ - sum_upper_; }
    /// Radius of convergence: infinite for margin > 0, otherwise
    /// prod A^{-A} prod B^{B}.
    double radius() const;

    /// Coefficient c_n (without z^n), every gamma evaluated afresh.
    SignedLog log_coefficient(std::size_t n) const;

    /// Incremental coefficient stream: one new log-gamma per parameter per
    /// term, with integral scales stepped by a log-product instead.
    class Stream final : public CoefficientStream {
    public:
        explicit Stream(const FoxWright& fw);
        SignedLog next() override;

    private:
        struct Slot {
            double shift;
            double scale;
            int int_step; // > 0 when scale is a small positive integer
            SignedLog current{0.0, 1};
            bool primed = false;
        };
        void advance(Slot& slot) const;

        std::vector<Slot> upper_;
        std::vector<Slot> lower_;
        std::size_t n_ = 0;
        double log_factorial_ = 0.0;
    };

    Stream stream() const { return Stream(*this); }

    EvalResult eval(double z, double tol, const SeriesOptions& opts = {}) const;

    /// Human-readable parameter listing, e.g. "2Psi2[(1,0.4),(2.67,2.67);(0.4,1),(2.57,2.67)]".
    std::string describe() const;

private:
    FoxWrightSpec spec_;
    double sum_upper_ = 0.0;
    double sum_lower_ = 0.0;
};

EvalResult foxwright_eval(const FoxWrightSpec& spec, double z, double tol,
                          const SeriesOptions& opts = {});

/// Direct summation of the generalized k-Mittag-Leffler series.
EvalResult ml_eval(const MLParams& params, double z, double tol, const SeriesOptions& opts = {});

/// log|c_n| of the k-Mittag-Leffler coefficient, evaluated from the
/// k-Pochhammer and k-gamma definitions.
double ml_log_coefficient(const MLParams& params, std::size_t n);

/// The same function written as
///   k^{1 - zeta/k} / Gamma(vartheta/k) * 1Psi1[(vartheta/k, q); (zeta/k, xi/k) | k^{q - xi/k} z].
EvalResult ml_eval_foxwright(const MLParams& params, double z, double tol,
                             const SeriesOptions& opts = {});

enum class MLReduction {
    Q1,        // q = 1: k-Mittag-Leffler
    K1,        // k = 1: Shukla-Prajapati form
    Q1K1,      // q = k = 1: Prabhakar form
    Wiman,     // q = k = vartheta = 1
    Classical, // q = k = vartheta = zeta = 1
};

/// Relative difference between ml_eval and a separately coded summation of
/// the reduced series. Throws ContractError when params do not satisfy the
/// reduction.
double ml_reduction_check(const MLParams& params, double z, MLReduction which);

} // namespace mlfrac
