#include "mlfrac/gammakit.hpp"

#include "mlfrac/error.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace mlfrac {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065121;

// zeta(k) - 1 for k = 2, 3, ..., 41.
constexpr std::array<double, 40> kZetaMinusOne = {
    0.64493406684822643647,    0.2020569031595942854,     0.082323233711138191516,
    0.036927755143369926331,   0.017343061984449139715,   0.0083492773819228268398,
    0.0040773561979443393787,  0.0020083928260822144179,  0.00099457512781808533715,
    0.0004941886041194645587,  0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5,  3.0588236307020493552e-5,  1.5282259408651871733e-5,
    7.6371976378997622736e-6,  3.8172932649998398565e-6,  1.9082127165539389257e-6,
    9.5396203387279611315e-7,  4.7693298678780646312e-7,  2.3845050272773299e-7,
    1.1921992596531107307e-7,  5.9608189051259479612e-8,  2.9803503514652280186e-8,
    1.4901554828365041235e-8,  7.450711789835429492e-9,   3.7253340247884570548e-9,
    1.8626597235130490064e-9,  9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10,  1.1641550172700519776e-10, 5.8207720879027008892e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659476e-12, 9.0949478402638892825e-13,
    4.5474737830421540268e-13,
};

// sum_{k>=2} (-1)^k (zeta(k) - 1) eps^k / k, |eps| <= 1/2.
double zeta_tail(double eps) {
    double acc = 0.0;
    for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
        const double k = static_cast<double>(i + 2);
        const double sign = (i % 2 == 0) ? 1.0 : -1.0;
        acc = acc * eps + sign * kZetaMinusOne[i] / k;
    }
    return acc * eps * eps;
}

// ln Gamma(2 + eps) = (1 - gamma) eps + zeta_tail(eps)
double log_gamma_two_plus(double eps) {
    return (1.0 - kEulerGamma) * eps + zeta_tail(eps);
}

// Stirling series for x >= 13; truncation error below 1e-19.
double log_gamma_stirling(double x) {
    static constexpr std::array<double, 8> kCoeff = {
        1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,        -1.0 / 1680.0,
        1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,         -3617.0 / 122400.0,
    };
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (std::size_t i = kCoeff.size(); i-- > 0;) series = series * inv2 + kCoeff[i];
    series *= inv;
    constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
    return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

double log_gamma_positive(double x) {
    if (x < 0.5) {
        // Gamma(x) = Gamma(2 + x) / ((1 + x) x)
        return log_gamma_two_plus(x) - std::log1p(x) - std::log(x);
    }
    if (x < 1.5) {
        const double eps = x - 1.0;
        return log_gamma_two_plus(eps) - std::log1p(eps);
    }
    if (x <= 2.5) return log_gamma_two_plus(x - 2.0);
    if (x < 13.0) {
        double y = x;
        double prod = 1.0;
        while (y > 2.5) {
            y -= 1.0;
            prod *= y;
        }
        return log_gamma_two_plus(y - 2.0) + std::log(prod);
    }
    return log_gamma_stirling(x);
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// sin(pi x) with argument reduction so that values near integers keep
// full relative accuracy.
double sin_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    const double s = std::sin(std::numbers::pi * r);
    return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

bool is_integral_count(double c) {
    const double r = std::round(c);
    return std::abs(c - r) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, r);
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be a finite positive real, got " +
                          std::to_string(v));
    }
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    if (std::isinf(x)) return x;
    return log_gamma_positive(x);
}

SignedLog log_gamma_signed(double x) {
    if (std::isnan(x)) throw DomainError("log_gamma_signed: NaN argument");
    if (x > 0.0) return {log_gamma_positive(x), 1};
    if (is_nonpositive_integer(x)) return {std::numeric_limits<double>::infinity(), 0};
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
    const double s = sin_pi(x);
    return {std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma_positive(1.0 - x),
            s > 0.0 ? 1 : -1};
}

double rgamma(double x) {
    const SignedLog g = log_gamma_signed(x);
    if (g.is_zero()) return 0.0;
    return g.sign * std::exp(-g.log_abs);
}

double log_k_gamma(KGammaArg arg) {
    require_positive(arg.vartheta, "k_gamma: vartheta");
    require_positive(arg.k, "k_gamma: k");
    const double ratio = arg.vartheta / arg.k;
    return (ratio - 1.0) * std::log(arg.k) + log_gamma(ratio);
}

double k_gamma(KGammaArg arg) {
    return std::exp(log_k_gamma(arg));
}

double log_k_pochhammer(PochhammerArg arg) {
    require_positive(arg.q, "k_pochhammer: q");
    require_positive(arg.k, "k_pochhammer: k");
    const double count = static_cast<double>(arg.n) * arg.q;
    if (count == 0.0) return 0.0;
    const double base = arg.vartheta / arg.k;
    if (!(base > 0.0)) {
        throw DomainError("k_pochhammer: gamma argument vartheta/k must be positive, got " +
                          std::to_string(base));
    }
    return count * std::log(arg.k) + log_gamma(base + count) - log_gamma(base);
}

double k_pochhammer(PochhammerArg arg) {
    require_positive(arg.q, "k_pochhammer: q");
    require_positive(arg.k, "k_pochhammer: k");
    const double count = static_cast<double>(arg.n) * arg.q;
    if (count == 0.0) return 1.0;
    if (is_integral_count(count) && count <= 1024.0) {
        const auto terms = static_cast<std::uint64_t>(std::round(count));
        double prod = 1.0;
        for (std::uint64_t j = 0; j < terms; ++j) prod *= arg.vartheta + static_cast<double>(j) * arg.k;
        return prod;
    }
    return std::exp(log_k_pochhammer(arg));
}

double check_pochhammer_rescaling(double vartheta, std::uint64_t n, double q, double s, double k) {
    const double count = static_cast<double>(n) * q;
    const double lhs = k_pochhammer({vartheta, n, q, s});
    const double rhs = std::pow(s / k, count) * k_pochhammer({k * vartheta / s, n, q, k});
    return std::abs(lhs - rhs) / std::abs(lhs);
}

double check_k_gamma_rescaling(double vartheta, double s, double k) {
    const double lhs = k_gamma({vartheta, s});
    const double rhs = std::pow(s / k, vartheta / s - 1.0) * k_gamma({k * vartheta / s, k});
    return std::abs(lhs - rhs) / std::abs(lhs);
}

double check_pochhammer_k_to_one(double vartheta, std::uint64_t n, double q, double k) {
    const double count = static_cast<double>(n) * q;
    const double lhs = k_pochhammer({vartheta, n, q, k});
    const double rhs = std::pow(k, count) * k_pochhammer({vartheta / k, n, q, 1.0});
    return std::abs(lhs - rhs) / std::abs(lhs);
}

} // namespace mlfrac
