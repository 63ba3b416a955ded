#include "mlfrac/series.hpp"

#include "mlfrac/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace mlfrac {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << name << " must be a finite positive real, got " << v;
        throw DomainError(os.str());
    }
}

// Neumaier-compensated accumulator. Compensation is only folded in when
// enabled so that all-positive sums keep the plain monotone running total.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term, bool compensated) {
        if (!compensated) {
            sum += term;
            return;
        }
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

class MLStream final : public CoefficientStream {
public:
    explicit MLStream(const MLParams& p) : params_(p) {}

    SignedLog next() override {
        return {ml_log_coefficient(params_, n_++), 1};
    }

private:
    MLParams params_;
    std::size_t n_ = 0;
};

int small_integer_step(double scale) {
    if (scale >= 1.0 && scale <= 16.0 && scale == std::floor(scale)) return static_cast<int>(scale);
    return 0;
}

} // namespace

void MLParams::validate() const {
    require_positive(k, "MLParams.k");
    require_positive(xi, "MLParams.xi");
    require_positive(zeta, "MLParams.zeta");
    require_positive(vartheta, "MLParams.vartheta");
    require_positive(q, "MLParams.q");
}

EvalResult sum_power_series(CoefficientStream& coeffs, double z, double tol,
                            const SeriesOptions& opts) {
    if (!(tol > 0.0)) throw ContractError("series tolerance must be positive");
    if (!std::isfinite(z)) throw DomainError("series argument must be finite");

    EvalResult res;
    const double log_abs_z = (z != 0.0) ? std::log(std::abs(z)) : 0.0;
    bool compensated = z < 0.0;
    Accumulator acc;

    auto term_at = [&](std::size_t n, SignedLog c) -> double {
        if (c.is_zero()) return 0.0;
        if (n > 0 && z == 0.0) return 0.0;
        double t = c.sign * std::exp(c.log_abs + static_cast<double>(n) * log_abs_z);
        if (z < 0.0 && (n % 2 == 1)) t = -t;
        return t;
    };

    bool has_carried = false;
    double carried = 0.0;
    int small_run = 0;
    for (std::size_t n = 0; n < opts.max_terms; ++n) {
        const double term = has_carried ? carried : term_at(n, coeffs.next());
        has_carried = false;
        if (!std::isfinite(term)) break;
        if (term < 0.0) {
            compensated = true;
        }
        acc.add(term, compensated);
        const double sum = acc.value();
        res.terms_used = n + 1;

        if (z == 0.0) {
            res.value = sum;
            res.tail_estimate = 0.0;
            res.converged = true;
            return res;
        }

        const double abs_term = std::abs(term);
        small_run = (abs_term <= tol * std::abs(sum)) ? small_run + 1 : 0;
        if (small_run < 2) continue;

        // First omitted term and the last observed ratio give the tail bound.
        const double next = term_at(n + 1, coeffs.next());
        if (!std::isfinite(next)) break;
        const double abs_next = std::abs(next);
        const double rho = abs_term > 0.0 ? abs_next / abs_term
                                          : (abs_next > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        const double tail = rho < 1.0 ? abs_next / (1.0 - rho) : abs_next;
        if (tail <= tol * std::max(1.0, std::abs(sum))) {
            res.value = sum;
            res.tail_estimate = tail;
            res.converged = true;
            return res;
        }
        carried = next;
        has_carried = true;
    }
    res.value = acc.value();
    res.converged = false;
    res.tail_estimate = std::numeric_limits<double>::infinity();
    return res;
}

// ---------------------------------------------------------------------------
// Fox-Wright

FoxWright::FoxWright(FoxWrightSpec spec) : spec_(std::move(spec)) {
    for (const auto& p : spec_.upper) {
        if (!(p.scale > 0.0) || !std::isfinite(p.scale))
            throw ContractError("Fox-Wright upper scale must be positive");
        if (!(p.shift > 0.0) || !std::isfinite(p.shift))
            throw DomainError("Fox-Wright upper shift must be positive (gamma argument on the summation path)");
        sum_upper_ += p.scale;
    }
    for (const auto& p : spec_.lower) {
        if (!(p.scale > 0.0) || !std::isfinite(p.scale))
            throw ContractError("Fox-Wright lower scale must be positive");
        if (!std::isfinite(p.shift)) throw DomainError("Fox-Wright lower shift must be finite");
        sum_lower_ += p.scale;
    }
    const double slack = 1e-12 * (1.0 + sum_upper_ + sum_lower_);
    if (margin() < -slack) {
        std::ostringstream os;
        os << "Fox-Wright convergence condition 1 + sum B - sum A >= 0 violated: "
           << "sum A = " << sum_upper_ << ", sum B = " << sum_lower_ << ", margin = " << margin()
           << " for " << describe();
        throw ConvergenceConditionError(os.str(), sum_upper_, sum_lower_);
    }
}

double FoxWright::radius() const {
    const double slack = 1e-12 * (1.0 + sum_upper_ + sum_lower_);
    if (margin() > slack) return std::numeric_limits<double>::infinity();
    double log_r = 0.0;
    for (const auto& p : spec_.upper) log_r -= p.scale * std::log(p.scale);
    for (const auto& p : spec_.lower) log_r += p.scale * std::log(p.scale);
    return std::exp(log_r);
}

SignedLog FoxWright::log_coefficient(std::size_t n) const {
    const double nn = static_cast<double>(n);
    SignedLog out{-log_gamma(nn + 1.0), 1};
    for (const auto& p : spec_.upper) {
        const SignedLog g = log_gamma_signed(p.shift + p.scale * nn);
        out.log_abs += g.log_abs;
        out.sign *= g.sign;
    }
    for (const auto& p : spec_.lower) {
        const SignedLog g = log_gamma_signed(p.shift + p.scale * nn);
        if (g.is_zero()) return {-std::numeric_limits<double>::infinity(), 0};
        out.log_abs -= g.log_abs;
        out.sign *= g.sign;
    }
    return out;
}

FoxWright::Stream::Stream(const FoxWright& fw) {
    for (const auto& p : fw.spec().upper) upper_.push_back({p.shift, p.scale, small_integer_step(p.scale)});
    for (const auto& p : fw.spec().lower) lower_.push_back({p.shift, p.scale, small_integer_step(p.scale)});
}

void FoxWright::Stream::advance(Slot& slot) const {
    const double arg = slot.shift + slot.scale * static_cast<double>(n_);
    if (slot.primed && slot.int_step > 0 && !slot.current.is_zero()) {
        const double prev = slot.shift + slot.scale * static_cast<double>(n_ - 1);
        if (prev > 0.0) {
            double prod = 1.0;
            for (int j = 0; j < slot.int_step; ++j) prod *= prev + j;
            slot.current.log_abs += std::log(prod);
            return;
        }
    }
    slot.current = log_gamma_signed(arg);
    slot.primed = true;
}

SignedLog FoxWright::Stream::next() {
    if (n_ > 0) log_factorial_ += std::log(static_cast<double>(n_));
    SignedLog out{-log_factorial_, 1};
    bool pole = false;
    for (auto& s : upper_) {
        advance(s);
        out.log_abs += s.current.log_abs;
        out.sign *= s.current.sign;
    }
    for (auto& s : lower_) {
        advance(s);
        if (s.current.is_zero()) {
            pole = true;
            continue;
        }
        out.log_abs -= s.current.log_abs;
        out.sign *= s.current.sign;
    }
    ++n_;
    if (pole) return {-std::numeric_limits<double>::infinity(), 0};
    return out;
}

EvalResult FoxWright::eval(double z, double tol, const SeriesOptions& opts) const {
    Stream s = stream();
    return sum_power_series(s, z, tol, opts);
}

std::string FoxWright::describe() const {
    std::ostringstream os;
    os.precision(6);
    os << spec_.upper.size() << "Psi" << spec_.lower.size() << "[";
    for (std::size_t i = 0; i < spec_.upper.size(); ++i) {
        if (i) os << ",";
        os << "(" << spec_.upper[i].shift << "," << spec_.upper[i].scale << ")";
    }
    os << ";";
    for (std::size_t i = 0; i < spec_.lower.size(); ++i) {
        if (i) os << ",";
        os << "(" << spec_.lower[i].shift << "," << spec_.lower[i].scale << ")";
    }
    os << "]";
    return os.str();
}

EvalResult foxwright_eval(const FoxWrightSpec& spec, double z, double tol, const SeriesOptions& opts) {
    return FoxWright(spec).eval(z, tol, opts);
}

// ---------------------------------------------------------------------------
// k-Mittag-Leffler

double ml_log_coefficient(const MLParams& params, std::size_t n) {
    const double nn = static_cast<double>(n);
    return log_k_pochhammer({params.vartheta, n, params.q, params.k}) -
           log_k_gamma({nn * params.xi + params.zeta, params.k}) - log_gamma(nn + 1.0);
}

EvalResult ml_eval(const MLParams& params, double z, double tol, const SeriesOptions& opts) {
    params.validate();
    MLStream stream(params);
    return sum_power_series(stream, z, tol, opts);
}

EvalResult ml_eval_foxwright(const MLParams& params, double z, double tol, const SeriesOptions& opts) {
    params.validate();
    const double k = params.k;
    const FoxWright fw({{{params.vartheta / k, params.q}}, {{params.zeta / k, params.xi / k}}});
    const double arg = std::pow(k, params.q - params.xi / k) * z;
    EvalResult r = fw.eval(arg, tol, opts);
    const double scale = std::exp((1.0 - params.zeta / k) * std::log(k) - log_gamma(params.vartheta / k));
    r.value *= scale;
    r.tail_estimate *= scale;
    return r;
}

namespace {

// Straight summation of sum_n coef(n) z^n with the running coefficient
// supplied by `step`; stops after two negligible terms.
template <typename Coef>
double sum_reduced(double z, Coef&& coef) {
    Accumulator acc;
    double zn = 1.0;
    int small = 0;
    for (std::size_t n = 0; n < 5000; ++n) {
        const double c = coef(n);
        if (!std::isfinite(c)) break;
        const double term = c * zn;
        acc.add(term, true);
        small = (std::abs(term) <= 1e-18 * std::abs(acc.value())) ? small + 1 : 0;
        if (small >= 2 || z == 0.0) break;
        zn *= z;
    }
    return acc.value();
}

double k_gamma_std(double y, double k) {
    return std::pow(k, y / k - 1.0) * std::tgamma(y / k);
}

} // namespace

double ml_reduction_check(const MLParams& p, double z, MLReduction which) {
    p.validate();
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ContractError(std::string("ml_reduction_check: reduction requires ") + what);
    };
    double reduced = 0.0;
    switch (which) {
    case MLReduction::Q1: {
        require(p.q == 1.0, "q = 1");
        // c_n = (vartheta)_{n,k} / n!, stepped by the product form
        double c = 1.0;
        reduced = sum_reduced(z, [&](std::size_t n) {
            if (n > 0) c *= (p.vartheta + (static_cast<double>(n) - 1.0) * p.k) / static_cast<double>(n);
            return c / k_gamma_std(static_cast<double>(n) * p.xi + p.zeta, p.k);
        });
        break;
    }
    case MLReduction::K1: {
        require(p.k == 1.0, "k = 1");
        const double g0 = std::tgamma(p.vartheta);
        double fact = 1.0;
        reduced = sum_reduced(z, [&](std::size_t n) {
            const double nn = static_cast<double>(n);
            if (n > 0) fact *= nn;
            return std::tgamma(p.vartheta + nn * p.q) / g0 / std::tgamma(nn * p.xi + p.zeta) / fact;
        });
        break;
    }
    case MLReduction::Q1K1: {
        require(p.q == 1.0 && p.k == 1.0, "q = k = 1");
        double c = 1.0;
        reduced = sum_reduced(z, [&](std::size_t n) {
            const double nn = static_cast<double>(n);
            if (n > 0) c *= (p.vartheta + nn - 1.0) / nn;
            return c / std::tgamma(nn * p.xi + p.zeta);
        });
        break;
    }
    case MLReduction::Wiman:
        require(p.q == 1.0 && p.k == 1.0 && p.vartheta == 1.0, "q = k = vartheta = 1");
        reduced = sum_reduced(z, [&](std::size_t n) {
            return 1.0 / std::tgamma(static_cast<double>(n) * p.xi + p.zeta);
        });
        break;
    case MLReduction::Classical:
        require(p.q == 1.0 && p.k == 1.0 && p.vartheta == 1.0 && p.zeta == 1.0,
                "q = k = vartheta = zeta = 1");
        reduced = sum_reduced(z, [&](std::size_t n) {
            return 1.0 / std::tgamma(static_cast<double>(n) * p.xi + 1.0);
        });
        break;
    }
    const EvalResult general = ml_eval(p, z, 1e-16);
    if (reduced == general.value) return 0.0;
    return std::abs(general.value - reduced) / std::abs(reduced);
}

} // namespace mlfrac
