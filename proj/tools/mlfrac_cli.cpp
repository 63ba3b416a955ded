#include "mlfrac/mlfrac.h"
#include "reference_tables.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEval = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<double> k, xi, zeta, vartheta, q;
    std::vector<double> sigma, eta;
    std::optional<double> mu, nu;
    std::string side = "left";
    std::optional<double> x, z, l, m, s;
    double tol = 1e-15;
    std::string out;
    std::optional<int> decimals;
    std::string projection = "magnitude";
    bool compat_qk = false;
    std::string upper, lower, report;
    double x_start = 0.0, x_stop = 10.0, x_step = 0.5;
    int samples = 200;
};

enum class Projection { Magnitude, RealPart, ImagPart };

const char* projection_name(Projection p) {
    switch (p) {
    case Projection::Magnitude: return "magnitude";
    case Projection::RealPart: return "real_part";
    case Projection::ImagPart: return "imag_part";
    }
    return "?";
}

Projection parse_projection(const std::string& s) {
    if (s == "magnitude") return Projection::Magnitude;
    if (s == "real_part") return Projection::RealPart;
    if (s == "imag_part") return Projection::ImagPart;
    throw UsageError("unknown projection '" + s + "'");
}

double project(const mlfrac_deriv& d, Projection p) {
    switch (p) {
    case Projection::Magnitude: return d.magnitude;
    case Projection::RealPart: return d.magnitude * d.phase_re;
    case Projection::ImagPart: return d.magnitude * d.phase_im;
    }
    return d.magnitude;
}

std::string fmt_sig(double v) {
    if (std::isnan(v)) return "NaN";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    if (std::isnan(v)) return "NaN";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // Avoid "-0.00" in rounded output.
    if (std::string(buf).find_first_not_of("-0.") == std::string::npos && buf[0] == '-') return buf + 1;
    return buf;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void add_common(CLI::App* app, Options& o) {
    app->add_option("--k", o.k, "k > 0");
    app->add_option("--xi", o.xi, "xi > 0");
    app->add_option("--zeta", o.zeta, "zeta > 0");
    app->add_option("--vartheta", o.vartheta, "vartheta > 0");
    app->add_option("--q", o.q, "q > 0");
    app->add_option("--sigma", o.sigma, "derivative order(s), comma separated")->delimiter(',');
    app->add_option("--eta", o.eta, "eta > 0, comma separated")->delimiter(',');
    app->add_option("--mu", o.mu, "power of t");
    app->add_option("--nu", o.nu, "power inside the Mittag-Leffler argument");
    app->add_option("--side", o.side, "left (0+) or right (0-)")->check(CLI::IsMember({"left", "right"}));
    app->add_option("--x", o.x, "evaluation point");
    app->add_option("--z", o.z, "series argument");
    app->add_option("--l", o.l, "transform parameter l > 0");
    app->add_option("--m", o.m, "beta parameter m > 0");
    app->add_option("--s", o.s, "Laplace variable s > 0");
    app->add_option("--tol", o.tol, "relative series tolerance")->check(CLI::PositiveNumber);
    app->add_option("--out", o.out, "output path");
    app->add_option("--decimals", o.decimals, "fixed decimals in CSV output")->check(CLI::Range(0, 17));
    app->add_option("--projection", o.projection, "magnitude, real_part, imag_part (table 2 also: all)")
        ->check(CLI::IsMember({"magnitude", "real_part", "imag_part", "all"}));
    app->add_flag("--compat-th5-qk", o.compat_qk, "Laplace image: first upper pair (vartheta/k, q/k)");
}

mlfrac_params make_params(const Options& o) {
    mlfrac_params p;
    mlfrac_reference_params(&p);
    if (o.k) p.k = *o.k;
    if (o.xi) p.xi = *o.xi;
    if (o.zeta) p.zeta = *o.zeta;
    if (o.vartheta) p.vartheta = *o.vartheta;
    if (o.q) p.q = *o.q;
    return p;
}

double single(const std::vector<double>& v, double fallback, const char* flag) {
    if (v.empty()) return fallback;
    if (v.size() > 1) throw UsageError(std::string(flag) + " takes a single value here");
    return v.front();
}

mlfrac_deriv_spec make_deriv(const Options& o, double sigma, double eta) {
    mlfrac_deriv_spec d;
    mlfrac_reference_deriv(sigma, o.side == "right" ? MLFRAC_SIDE_RIGHT : MLFRAC_SIDE_LEFT, &d);
    d.eta = eta;
    if (o.mu) d.mu = *o.mu;
    if (o.nu) d.nu = *o.nu;
    return d;
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw UsageError(std::string(flag) + " is required");
    return *v;
}

int status_exit(mlfrac_status st) {
    switch (st) {
    case MLFRAC_OK: return kExitOk;
    case MLFRAC_E_CONTRACT:
    case MLFRAC_E_NULL: return kExitUsage;
    default: return kExitEval;
    }
}

int report_error(mlfrac_status st) {
    std::cerr << "error: " << mlfrac_status_name(st) << ": " << mlfrac_last_error() << "\n";
    return status_exit(st);
}

std::vector<mlfrac_pair> parse_pairs(const std::string& text, const char* flag) {
    // "a,A;b,B"
    std::vector<mlfrac_pair> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw UsageError(std::string(flag) + " expects shift,scale;shift,scale");
        try {
            std::size_t used = 0;
            const std::string a = item.substr(0, comma), b = item.substr(comma + 1);
            const double shift = std::stod(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            const double scale = std::stod(b, &used);
            if (used != b.size()) throw std::invalid_argument(b);
            out.push_back({shift, scale});
        } catch (const std::logic_error&) {
            throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// eval

void print_eval(const mlfrac_eval& r) {
    std::cout << fmt_sig(r.value) << "\n"
              << "terms_used=" << r.terms_used << "\n"
              << "tail_estimate=" << fmt_sig(r.tail_estimate) << "\n";
    if (!r.converged) std::cout << "converged=false\n";
}

void print_deriv(const mlfrac_deriv& r, const mlfrac_deriv_spec& spec, Projection p) {
    std::cout << fmt_sig(project(r, p)) << "\n";
    if (p != Projection::Magnitude) std::cout << "magnitude=" << fmt_sig(r.magnitude) << "\n";
    std::cout << "terms_used=" << r.terms_used << "\n"
              << "tail_estimate=" << fmt_sig(r.tail_estimate) << "\n";
    if (spec.side == MLFRAC_SIDE_RIGHT) {
        std::cout << "phase=" << fmt_sig(r.phase_re) << (r.phase_im < 0 ? "" : "+") << fmt_sig(r.phase_im) << "i\n";
    }
    if (!r.converged) std::cout << "converged=false\n";
}

int cmd_eval(const std::string& what, const Options& o) {
    const mlfrac_params p = make_params(o);
    if (what == "kgamma") {
        double v = 0.0;
        const mlfrac_status st = mlfrac_k_gamma(require(o.vartheta, "--vartheta"), p.k, &v);
        if (st != MLFRAC_OK) return report_error(st);
        std::cout << fmt_sig(v) << "\n";
        return kExitOk;
    }
    if (what == "ml") {
        mlfrac_eval r;
        const mlfrac_status st = mlfrac_ml_eval(&p, require(o.z, "--z"), o.tol, &r);
        if (st != MLFRAC_OK && st != MLFRAC_E_NOT_CONVERGED) return report_error(st);
        print_eval(r);
        return status_exit(st);
    }
    if (what == "foxwright") {
        const auto up = parse_pairs(o.upper, "--upper");
        const auto lo = parse_pairs(o.lower, "--lower");
        mlfrac_foxwright* fw = nullptr;
        mlfrac_status st = mlfrac_foxwright_create(up.data(), up.size(), lo.data(), lo.size(), &fw);
        if (st != MLFRAC_OK) return report_error(st);
        std::unique_ptr<mlfrac_foxwright, decltype(&mlfrac_foxwright_destroy)> guard(fw, mlfrac_foxwright_destroy);
        mlfrac_eval r;
        st = mlfrac_foxwright_eval(fw, require(o.z, "--z"), o.tol, &r);
        if (st != MLFRAC_OK && st != MLFRAC_E_NOT_CONVERGED) return report_error(st);
        print_eval(r);
        std::cout << "margin=" << fmt_sig(mlfrac_foxwright_margin(fw)) << "\n";
        return status_exit(st);
    }

    const Projection proj = parse_projection(o.projection);
    const mlfrac_deriv_spec d = make_deriv(o, single(o.sigma, 0.1, "--sigma"), single(o.eta, 0.3, "--eta"));
    const double x = require(o.x, "--x");
    mlfrac_deriv r;
    mlfrac_status st;
    if (what == "deriv") {
        st = mlfrac_deriv_closed(&d, &p, x, o.tol, &r);
    } else if (what == "beta-image") {
        st = mlfrac_beta_image(&d, &p, require(o.l, "--l"), require(o.m, "--m"), x, o.tol, &r);
    } else {
        st = mlfrac_laplace_image(&d, &p, require(o.l, "--l"), require(o.s, "--s"), o.compat_qk ? 1 : 0, x, o.tol,
                                  &r);
    }
    if (st != MLFRAC_OK && st != MLFRAC_E_NOT_CONVERGED) return report_error(st);
    print_deriv(r, d, proj);
    return status_exit(st);
}

// ---------------------------------------------------------------------------
// table

struct Cell {
    mlfrac_deriv value{};
    bool ok = false;
};

std::vector<double> table_xs(const Options& o) {
    if (!(o.x_step > 0.0) || o.x_stop < o.x_start) throw UsageError("invalid x grid");
    std::vector<double> xs;
    const auto n = static_cast<long>(std::floor((o.x_stop - o.x_start) / o.x_step + 1e-9));
    for (long i = 0; i <= n; ++i) xs.push_back(o.x_start + o.x_step * static_cast<double>(i));
    return xs;
}

bool is_default_grid(const Options& o, const std::vector<double>& sigmas) {
    return o.x_start == 0.0 && o.x_stop == 10.0 && o.x_step == 0.5 && sigmas == std::vector<double>{0.1, 0.2, 0.3, 0.4};
}

void write_table_csv(std::ostream& os, const std::vector<double>& xs, const std::vector<double>& sigmas,
                     const std::vector<std::vector<Cell>>& cells, Projection proj, int decimals) {
    os << "x";
    for (double s : sigmas) os << ",sigma=" << fmt_g(s);
    os << "\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << fmt_fixed(xs[i], 2);
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            const Cell& c = cells[i][j];
            os << "," << fmt_fixed(c.ok ? project(c.value, proj) : std::nan(""), decimals);
        }
        os << "\n";
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << text;
    if (!f) throw UsageError("failed writing '" + path + "'");
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const auto dot = path.rfind('.');
    const auto slash = path.rfind('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "_" + suffix;
    return path.substr(0, dot) + "_" + suffix + path.substr(dot);
}

// Cells whose rounded value differs from the printed one by more than the
// tolerance, each with its closed-form and quadrature values.
std::string table1_report(const std::vector<double>& xs, const std::vector<double>& sigmas,
                          const std::vector<std::vector<Cell>>& cells, const mlfrac_params& p, const Options& o,
                          double eta, std::size_t& matched, double& worst_oracle) {
    const double tolerance = 0.02;
    std::ostringstream body;
    matched = 0;
    worst_oracle = 0.0;
    body << "x,sigma,printed,computed,closed_form,oracle,closed_vs_oracle_rel\n";
    mlfrac_quad_config cfg;
    mlfrac_default_quad_config(&cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            const double printed = mlfrac_cli::kPrintedTable1[i][j];
            const Cell& c = cells[i][j];
            const double rounded = c.ok ? std::round(c.value.magnitude * 100.0) / 100.0 : std::nan("");
            if (c.ok && std::abs(rounded - printed) <= tolerance + 1e-9) {
                ++matched;
                continue;
            }
            double oracle = 0.0;
            double rel = 0.0;
            if (xs[i] > 0.0) {
                const mlfrac_deriv_spec d = make_deriv(o, sigmas[j], eta);
                if (mlfrac_deriv_oracle(&d, &p, xs[i], &cfg, &oracle) != MLFRAC_OK) oracle = std::nan("");
                rel = std::abs(c.value.magnitude - oracle) / std::max(std::abs(c.value.magnitude), std::abs(oracle));
            }
            if (!(rel <= worst_oracle)) worst_oracle = rel;
            body << fmt_fixed(xs[i], 2) << "," << fmt_g(sigmas[j]) << "," << fmt_fixed(printed, 2) << ","
                 << fmt_fixed(rounded, 2) << "," << fmt_sig(c.value.magnitude) << "," << fmt_sig(oracle) << ","
                 << fmt_sig(rel) << "\n";
        }
    }
    std::ostringstream os;
    os << "# table 1 discrepancy report\n"
       << "# tolerance: " << tolerance << " after rounding to 2 decimals\n"
       << "# matched: " << matched << "/" << xs.size() * sigmas.size() << "\n"
       << "# worst closed-form vs oracle relative deviation over listed cells: " << fmt_sig(worst_oracle) << "\n"
       << body.str();
    return os.str();
}

// Principal-branch real part against the printed right-sided table.
std::string table2_report(const std::vector<double>& xs, const std::vector<double>& sigmas,
                          const std::vector<std::vector<Cell>>& cells, std::size_t& matched) {
    const double tolerance = 0.02;
    std::ostringstream body;
    matched = 0;
    double worst = 0.0;
    body << "x,sigma,printed,real_part,magnitude,imag_part,real_minus_printed\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            const double printed = mlfrac_cli::kPrintedTable2[i][j];
            const Cell& c = cells[i][j];
            const double re = c.ok ? project(c.value, Projection::RealPart) : std::nan("");
            const double diff = re - printed;
            if (std::abs(std::round(re * 100.0) / 100.0 - printed) <= tolerance + 1e-9) ++matched;
            if (!(std::abs(diff) <= worst)) worst = std::abs(diff);
            body << fmt_fixed(xs[i], 2) << "," << fmt_g(sigmas[j]) << "," << fmt_fixed(printed, 2) << ","
                 << fmt_sig(re) << "," << fmt_sig(c.ok ? c.value.magnitude : std::nan("")) << ","
                 << fmt_sig(c.ok ? project(c.value, Projection::ImagPart) : std::nan("")) << "," << fmt_sig(diff)
                 << "\n";
        }
    }
    std::ostringstream os;
    os << "# table 2 discrepancy note\n"
       << "# The right-sided operator differs from the left-sided one only by the unit factor exp(-i pi sigma),\n"
       << "# so its magnitude equals the table 1 value exactly. The real part is compared with the printed values.\n"
       << "# real part within " << tolerance << " of printed: " << matched << "/" << xs.size() * sigmas.size() << "\n"
       << "# largest |real part - printed|: " << fmt_sig(worst) << "\n"
       << body.str();
    return os.str();
}

int cmd_table(int which, const Options& o) {
    if (which != 1 && which != 2) throw UsageError("table must be 1 or 2");
    const mlfrac_params p = make_params(o);
    const std::vector<double> sigmas = o.sigma.empty() ? std::vector<double>{0.1, 0.2, 0.3, 0.4} : o.sigma;
    const double eta = single(o.eta, 0.3, "--eta");
    const std::vector<double> xs = table_xs(o);
    const int decimals = o.decimals.value_or(2);

    Options side = o;
    side.side = which == 1 ? "left" : "right";

    std::vector<std::vector<Cell>> cells(xs.size(), std::vector<Cell>(sigmas.size()));
    std::vector<std::string> failures;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            const mlfrac_deriv_spec d = make_deriv(side, sigmas[j], eta);
            const mlfrac_status st = mlfrac_deriv_closed(&d, &p, xs[i], o.tol, &cells[i][j].value);
            cells[i][j].ok = st == MLFRAC_OK;
            if (!cells[i][j].ok) {
                failures.push_back("x=" + fmt_g(xs[i]) + " sigma=" + fmt_g(sigmas[j]) + ": " + mlfrac_status_name(st) +
                                   ": " + mlfrac_last_error());
            }
        }
    }

    std::vector<Projection> projections;
    if (o.projection == "all") {
        if (which != 2) throw UsageError("--projection all applies to table 2");
        if (o.out.empty()) throw UsageError("--projection all requires --out");
        projections = {Projection::Magnitude, Projection::RealPart, Projection::ImagPart};
    } else {
        projections = {parse_projection(o.projection)};
    }
    for (Projection proj : projections) {
        std::ostringstream csv;
        write_table_csv(csv, xs, sigmas, cells, proj, decimals);
        if (o.out.empty()) {
            std::cout << csv.str();
        } else {
            const std::string path = projections.size() > 1 ? with_suffix(o.out, projection_name(proj)) : o.out;
            write_file(path, csv.str());
            std::cerr << "wrote " << path << "\n";
        }
    }

    if (!o.report.empty()) {
        if (!is_default_grid(o, sigmas)) throw UsageError("--report requires the default x and sigma grid");
        std::size_t matched = 0;
        if (which == 1) {
            double worst = 0.0;
            write_file(o.report, table1_report(xs, sigmas, cells, p, side, eta, matched, worst));
            std::cerr << "table 1: " << matched << "/84 cells within 0.02 of the printed values; "
                      << "worst closed-form vs oracle deviation on mismatches " << fmt_sig(worst) << "\n";
        } else {
            write_file(o.report, table2_report(xs, sigmas, cells, matched));
            std::cerr << "table 2: real part within 0.02 of the printed values in " << matched << "/84 cells\n";
        }
        std::cerr << "wrote " << o.report << "\n";
    }

    if (!failures.empty()) {
        std::cerr << failures.size() << " cell(s) failed:\n";
        for (const auto& f : failures) std::cerr << "  " << f << "\n";
        return kExitEval;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// figure

struct Curve {
    std::string label;
    double sigma;
    double eta;
};

std::vector<Curve> figure_curves(int id, const Options& o) {
    std::vector<Curve> curves;
    auto sigma_sweep = [&](std::vector<double> sigmas, double eta) {
        if (!o.sigma.empty()) sigmas = o.sigma;
        eta = single(o.eta, eta, "--eta");
        for (double s : sigmas) curves.push_back({"sigma=" + fmt_g(s), s, eta});
    };
    auto eta_sweep = [&](std::vector<double> etas, double sigma) {
        if (!o.eta.empty()) etas = o.eta;
        sigma = single(o.sigma, sigma, "--sigma");
        for (double e : etas) curves.push_back({"eta=" + fmt_g(e), sigma, e});
    };
    switch (id) {
    case 1: sigma_sweep({0.1, 0.2, 0.3, 0.4}, 0.2); break;
    case 2: eta_sweep({1, 3, 5, 7}, 0.02); break;
    case 3: sigma_sweep({0.02}, 0.3); break;
    case 4: sigma_sweep({0.02, 0.04, 0.06, 0.08}, 0.3); break;
    case 5: eta_sweep({1, 3, 5, 7}, 0.02); break;
    default: throw UsageError("figure must be 1..5");
    }
    return curves;
}

int cmd_figure(int id, const Options& o) {
    const mlfrac_params p = make_params(o);
    const std::vector<Curve> curves = figure_curves(id, o);
    const Projection proj = parse_projection(o.projection);
    if (o.samples < 1) throw UsageError("--samples must be positive");
    if (!(o.x_stop > 0.0)) throw UsageError("--x-stop must be positive");
    const std::string prefix = o.out.empty() ? "figure" + std::to_string(id) : o.out;

    std::vector<std::string> failures;
    // Sub-figure a: right-sided operator; b: left-sided operator.
    for (const char* part : {"a", "b"}) {
        Options side = o;
        side.side = std::string(part) == "a" ? "right" : "left";
        std::ostringstream csv;
        csv << "x,curve_label,value\n";
        for (const Curve& c : curves) {
            const mlfrac_deriv_spec d = make_deriv(side, c.sigma, c.eta);
            for (int i = 1; i <= o.samples; ++i) {
                const double x = o.x_stop * static_cast<double>(i) / static_cast<double>(o.samples);
                mlfrac_deriv r;
                const mlfrac_status st = mlfrac_deriv_closed(&d, &p, x, o.tol, &r);
                double v = std::nan("");
                if (st == MLFRAC_OK) {
                    v = project(r, proj);
                } else {
                    failures.push_back(std::string(part) + " " + c.label + " x=" + fmt_g(x) + ": " +
                                       mlfrac_status_name(st) + ": " + mlfrac_last_error());
                }
                csv << fmt_g(x) << "," << c.label << "," << (o.decimals ? fmt_fixed(v, *o.decimals) : fmt_sig(v))
                    << "\n";
            }
        }
        const std::string path = prefix + "_" + part + ".csv";
        write_file(path, csv.str());
        std::cerr << "wrote " << path << "\n";
    }
    if (!failures.empty()) {
        std::cerr << failures.size() << " sample(s) failed:\n";
        for (const auto& f : failures) std::cerr << "  " << f << "\n";
        return kExitEval;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& which) {
    std::vector<mlfrac_suite> suites;
    if (which == "identities" || which == "all") suites.push_back(MLFRAC_SUITE_IDENTITIES);
    if (which == "reductions" || which == "all") suites.push_back(MLFRAC_SUITE_REDUCTIONS);
    if (which == "oracle" || which == "all") suites.push_back(MLFRAC_SUITE_ORACLE);
    if (which == "transforms" || which == "all") suites.push_back(MLFRAC_SUITE_TRANSFORMS);
    static const char* names[] = {"identities", "reductions", "oracle", "transforms"};

    bool all_ok = true;
    for (mlfrac_suite s : suites) {
        mlfrac_report* raw = nullptr;
        const mlfrac_status st = mlfrac_verify(s, &raw);
        if (st != MLFRAC_OK) return report_error(st);
        std::unique_ptr<mlfrac_report, decltype(&mlfrac_report_destroy)> rep(raw, mlfrac_report_destroy);
        const std::size_t n = mlfrac_report_size(raw);
        const std::size_t failed = mlfrac_report_failed(raw);
        std::cout << names[s] << ": " << (n - failed) << "/" << n << " passed, worst residual "
                  << fmt_sig(mlfrac_report_worst(raw)) << "\n";
        for (std::size_t i = 0; i < n; ++i) {
            const char* name = nullptr;
            double residual = 0.0, threshold = 0.0;
            int passed = 0;
            mlfrac_report_check(raw, i, &name, &residual, &threshold, &passed);
            if (!passed) std::cout << "  FAIL " << name << ": " << fmt_sig(residual) << " > " << fmt_sig(threshold) << "\n";
        }
        all_ok = all_ok && failed == 0;
    }
    return all_ok ? kExitOk : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized k-Mittag-Leffler functions and their fractional derivatives"};
    app.require_subcommand(1);
    Options o;

    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    std::string eval_what;
    eval->add_option("what", eval_what, "kgamma, ml, foxwright, deriv, beta-image, laplace-image")
        ->required()
        ->check(CLI::IsMember({"kgamma", "ml", "foxwright", "deriv", "beta-image", "laplace-image"}));
    add_common(eval, o);
    eval->add_option("--upper", o.upper, "Fox-Wright upper pairs: shift,scale;shift,scale");
    eval->add_option("--lower", o.lower, "Fox-Wright lower pairs: shift,scale;shift,scale");

    auto* table = app.add_subcommand("table", "write the derivative table as CSV");
    int table_id = 0;
    table->add_option("which", table_id, "1 (left-sided) or 2 (right-sided)")->required()->check(CLI::IsMember({1, 2}));
    add_common(table, o);
    table->add_option("--report", o.report, "write the comparison with the printed values");
    table->add_option("--x-start", o.x_start, "first x");
    table->add_option("--x-stop", o.x_stop, "last x");
    table->add_option("--x-step", o.x_step, "x step");

    auto* figure = app.add_subcommand("figure", "write curve data as long-format CSV");
    int figure_id = 0;
    figure->add_option("which", figure_id, "1..5")->required()->check(CLI::Range(1, 5));
    add_common(figure, o);
    figure->add_option("--samples", o.samples, "samples per curve");
    figure->add_option("--x-stop", o.x_stop, "right end of the x range");

    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    std::string verify_what;
    verify->add_option("suite", verify_what, "identities, reductions, oracle, transforms, all")
        ->required()
        ->check(CLI::IsMember({"identities", "reductions", "oracle", "transforms", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_what, o);
        if (table->parsed()) return cmd_table(table_id, o);
        if (figure->parsed()) return cmd_figure(figure_id, o);
        return cmd_verify(verify_what);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
}
