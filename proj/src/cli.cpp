#include "sincsum/cli.hpp"

#include "sincsum/exactmath.hpp"
#include "sincsum/expansion.hpp"
#include "sincsum/scattering.hpp"
#include "sincsum/specfun.hpp"
#include "sincsum/sums.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

namespace sincsum::cli {

namespace {

using json = nlohmann::json;
using sums::SumConfig;
using sums::SumResult;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Report {
    std::string check_name;
    std::map<std::string, std::string> inputs;
    std::string computed;
    std::string expected;
    std::string abs_error;
    std::string error_bound;
    bool pass = false;
    std::int64_t terms_used = 0;
    std::int64_t elapsed_ms = 0;
    json extra = json::object();

    json to_json() const {
        json j = {{"check_name", check_name}, {"inputs", inputs},     {"computed", computed},
                  {"expected", expected},     {"abs_error", abs_error}, {"error_bound", error_bound},
                  {"pass", pass},             {"terms_used", terms_used}, {"elapsed_ms", elapsed_ms}};
        for (const auto& [k, v] : extra.items()) j[k] = v;
        return j;
    }
};

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Options {
    SumConfig cfg;
    std::vector<std::string> x_values;
    unsigned n_max = 0;
    unsigned order = 50;
    std::string h = "1e-3";
};

// Report for a floating check: pass iff |computed - expected| <= max(error_bound, tol).
Report numeric_report(const std::string& name, std::map<std::string, std::string> inputs, const Real& computed,
                      const Real& expected, double bound, std::int64_t terms, double tol) {
    Report r;
    r.check_name = name;
    r.inputs = std::move(inputs);
    r.computed = computed.to_string();
    r.expected = expected.to_string();
    const Real err = abs(computed - expected);
    r.abs_error = err.to_string();
    r.error_bound = format_double(bound);
    r.pass = err <= std::max(bound, tol);
    r.terms_used = terms;
    return r;
}

Report failed_report(const std::string& name, std::map<std::string, std::string> inputs, const std::string& why,
                     double bound = -1.0) {
    Report r;
    r.check_name = name;
    r.inputs = std::move(inputs);
    r.computed = "";
    r.expected = "";
    r.abs_error = "";
    r.error_bound = bound >= 0 ? format_double(bound) : "";
    r.pass = false;
    r.extra["error"] = why;
    return r;
}

using SumFn = std::function<SumResult(const Real&, const SumConfig&)>;
using ExpectFn = std::function<Real(const Real&)>;

std::vector<Report> sum_checks(const std::string& name, const std::vector<std::string>& xs, const Options& o,
                               const SumFn& fn, const ExpectFn& expect) {
    std::vector<Report> out;
    for (const auto& xs_text : xs) {
        const Stopwatch sw;
        const Real x = Real::parse(xs_text, o.cfg.precision_bits);
        std::map<std::string, std::string> in{{"x", xs_text}};
        Report r;
        try {
            const SumResult s = fn(x, o.cfg);
            r = numeric_report(name, in, s.value, expect(x), s.error_bound, s.terms_used, o.cfg.tolerance);
            r.extra["method"] = sums::to_string(s.method);
        } catch (const sums::ConvergenceError& e) {
            r = failed_report(name, in, e.what(), e.best().error_bound);
            r.computed = e.best().value.to_string();
            r.terms_used = e.best().terms_used;
        }
        r.elapsed_ms = sw.ms();
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> verify_target(const std::string& target, const Options& o, bool use_defaults) {
    const mpfr_prec_t bits = o.cfg.precision_bits;
    const Real pi = Real::pi(bits);
    auto xs_or = [&](std::vector<std::string> fallback) {
        return use_defaults || o.x_values.empty() ? fallback : o.x_values;
    };
    auto n_or = [&](unsigned fallback) { return use_defaults || o.n_max == 0 ? fallback : o.n_max; };
    const std::vector<std::string> id_xs{"0.1", "0.5", "1", "2.5", "10"};

    if (target == "id1")
        return sum_checks("id1", xs_or(id_xs), o, sums::id1_rhs, [&](const Real&) { return Real(1L, bits); });
    if (target == "id2")
        return sum_checks("id2", xs_or(id_xs), o, sums::id2_rhs,
                          [&](const Real& x) { return square(pi * x) / 4L; });
    if (target == "b3" || target == "b4") {
        const SumFn fn = target == "b3" ? SumFn(sums::cos_mean_sum) : SumFn(sums::sinc_mean_sum);
        return sum_checks(target, xs_or({"0.25", "1", "3"}), o, fn,
                          [&](const Real& x) { return pi / sinh(pi * x); });
    }
    if (target == "b5") {
        std::vector<Report> out;
        for (const auto& xs_text : xs_or({"0.5", "1.5"})) {
            const Stopwatch sw;
            std::map<std::string, std::string> in{{"x", xs_text}, {"h", o.h}};
            Report r;
            try {
                const auto fd = sums::id1_derivative_fd(Real::parse(xs_text, bits), Real::parse(o.h, bits), o.cfg);
                r = numeric_report("b5", in, fd.value, Real(0L, bits), fd.error_bound, 0, o.cfg.tolerance);
            } catch (const sums::ConvergenceError& e) {
                r = failed_report("b5", in, e.what());
            }
            r.elapsed_ms = sw.ms();
            out.push_back(std::move(r));
        }
        return out;
    }
    if (target == "a4") {
        std::vector<Report> out;
        for (unsigned n = 1; n <= n_or(8); ++n) {
            const Stopwatch sw;
            std::map<std::string, std::string> in{{"n", std::to_string(n)}};
            Real dfac(bits);
            mpfr_set_z(dfac.get(), exact::double_factorial(2L * n + 1).get_mpz_t(), MPFR_RNDN);
            const Real expected = -pow(pi, static_cast<long>(n)) / (sqrt(Real(2L, bits)) * dfac);
            Report r;
            try {
                const SumResult s = sums::bessel_alt_sum(n, o.cfg);
                r = numeric_report("a4", in, s.value, expected, s.error_bound, s.terms_used, o.cfg.tolerance);
            } catch (const sums::ConvergenceError& e) {
                r = failed_report("a4", in, e.what(), e.best().error_bound);
            }
            r.elapsed_ms = sw.ms();
            out.push_back(std::move(r));
        }
        return out;
    }
    if (target == "a5" || target == "a6") {
        std::vector<Report> out;
        for (unsigned n = 0; n <= n_or(50); ++n) {
            const Stopwatch sw;
            Report r;
            r.check_name = target;
            r.inputs = {{"n", std::to_string(n)}};
            if (target == "a5") {
                const auto [lhs, rhs] = expansion::a5_sides(n);
                r.computed = rhs.get_str();
                r.expected = lhs.get_str();
                r.abs_error = exact::Rational(abs(rhs - lhs)).get_str();
                r.pass = expansion::a5_check(n);
            } else {
                const exact::Integer lhs = exact::factorial(n) * (exact::Integer(1) << n) *
                                           exact::double_factorial(2L * n + 1);
                const exact::Integer rhs = exact::factorial(2 * n + 1);
                r.computed = lhs.get_str();
                r.expected = rhs.get_str();
                r.abs_error = exact::Integer(abs(lhs - rhs)).get_str();
                r.pass = expansion::a6_factorial_identity(n);
            }
            r.error_bound = "0";
            r.terms_used = n + 1;
            r.elapsed_ms = sw.ms();
            out.push_back(std::move(r));
        }
        return out;
    }
    if (target == "cancellation") {
        const Stopwatch sw;
        const unsigned order = use_defaults ? 50 : o.order;
        const expansion::CancellationReport rep = expansion::id2_cancellation(order);
        Report r;
        r.check_name = "cancellation";
        r.inputs = {{"order", std::to_string(order)}};
        r.computed = rep.coefficient_of_x2.get_str();
        r.expected = "1/4";
        exact::Rational worst = 0;
        std::size_t nonzero = 0;
        for (const auto& q : rep.residuals) {
            worst = std::max<exact::Rational>(worst, abs(q));
            if (q != 0) ++nonzero;
        }
        r.abs_error = worst.get_str();
        r.error_bound = "0";
        r.pass = rep.all_cancelled && rep.coefficient_of_x2 == exact::Rational(1, 4);
        r.terms_used = order;
        r.extra["all_cancelled"] = rep.all_cancelled;
        r.extra["nonzero_residuals"] = nonzero;
        r.extra["regularization_used"] = rep.regularization_used;
        r.elapsed_ms = sw.ms();
        return {r};
    }
    throw std::logic_error("unknown verify target " + target);
}

json cross_section_json(const scattering::CrossSectionResult& r) {
    return {{"route", scattering::to_string(r.route)}, {"sigma", r.sigma.to_string()},
            {"error_bound", format_double(r.error_bound)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mean sinc-sum identities and scale-invariant 2D scattering", "sincsum"};
    app.fallthrough();
    app.require_subcommand(1);

    Options o;
    long precision = kDefaultPrecisionBits;
    app.add_option("--precision-bits", precision, "Working precision in bits")->check(CLI::Range(32L, 1L << 20));
    app.add_option("--tol", o.cfg.tolerance, "Absolute tolerance for infinite sums")->check(CLI::PositiveNumber);
    app.add_option("--max-terms", o.cfg.max_terms, "Maximum directly summed terms")->check(CLI::PositiveNumber);
    app.add_option("--tail-order", o.cfg.tail_order, "Asymptotic tail corrections (0-12)")->check(CLI::Range(0, 12));

    auto* verify = app.add_subcommand("verify", "Check an identity; one JSON report per case");
    std::string target;
    verify->add_option("target", target, "Identity to check")
        ->required()
        ->check(CLI::IsMember({"id1", "id2", "b3", "b4", "b5", "a4", "a5", "a6", "cancellation", "all"}));
    verify->add_option("--x", o.x_values, "Comma-separated x values")->delimiter(',');
    verify->add_option("--n-max", o.n_max, "Largest n for a4/a5/a6");
    verify->add_option("--order", o.order, "Series order for the cancellation check")->check(CLI::Range(2u, 400u));
    verify->add_option("--fd-step", o.h, "Finite-difference step h for b5");

    auto* scatter = app.add_subcommand("scatter", "Scattering observables");
    scatter->require_subcommand(1);
    std::string x_text = "1", k_text = "1";
    double rel_tol = 1e-7;
    double theta_min = 0.1, theta_max = 2 * M_PI - 0.1;
    long points = 200;
    auto* sigma = scatter->add_subcommand("sigma", "Total cross section by three routes (JSON)");
    auto* dcs = scatter->add_subcommand("dcs", "Differential cross section on a theta grid (CSV)");
    for (auto* sub : {sigma, dcs}) {
        sub->add_option("--x", x_text, "Dimensionless coupling sqrt(2 m kappa)/hbar");
        sub->add_option("--k", k_text, "Wavenumber");
    }
    sigma->add_option("--rel-tol", rel_tol, "Relative tolerance for the quadrature route");
    dcs->add_option("--theta-min", theta_min, "First angle (radians)");
    dcs->add_option("--theta-max", theta_max, "Last angle (radians)");
    dcs->add_option("--points", points, "Number of angles")->check(CLI::PositiveNumber);

    auto* expand = app.add_subcommand("expand", "Exact x^2-series cancellation report (JSON)");
    unsigned expand_order = 50;
    expand->add_option("--order", expand_order, "Truncation order N (coefficients through x^{2N})")
        ->required()
        ->check(CLI::Range(2u, 400u));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    o.cfg.precision_bits = static_cast<mpfr_prec_t>(precision);

    try {
        if (verify->parsed()) {
            // Validate numeric inputs up front so bad values are usage errors.
            for (const auto& xs : o.x_values) Real::parse(xs);
            Real::parse(o.h);
            std::vector<Report> reports;
            if (target == "all") {
                for (const char* t : {"id1", "id2", "b3", "b4", "b5", "a4", "a5", "a6", "cancellation"}) {
                    auto part = verify_target(t, o, true);
                    reports.insert(reports.end(), part.begin(), part.end());
                }
            } else {
                reports = verify_target(target, o, false);
            }
            bool ok = true;
            for (const auto& r : reports) {
                out << r.to_json().dump() << "\n";
                ok = ok && r.pass;
            }
            return ok ? kExitOk : kExitCheckFailed;
        }

        if (scatter->parsed()) {
            const scattering::ScatteringParams params{Real::parse(x_text, o.cfg.precision_bits),
                                                      Real::parse(k_text, o.cfg.precision_bits)};
            params.validate();
            if (sigma->parsed()) {
                if (!(rel_tol >= 1e-8)) throw std::domain_error("--rel-tol must be >= 1e-8");
                const auto closed = scattering::sigma_closed(params);
                json j = {{"x", x_text}, {"k", k_text}, {"closed_form", cross_section_json(closed)}};
                bool ok = true;
                try {
                    const auto pw = scattering::sigma_partial_waves(params, o.cfg);
                    j["partial_wave"] = cross_section_json(pw);
                    ok = ok && abs(pw.sigma - closed.sigma) <= std::max(pw.error_bound, o.cfg.tolerance);
                } catch (const sums::ConvergenceError& e) {
                    j["partial_wave"] = {{"error", e.what()}};
                    ok = false;
                }
                try {
                    const auto q = scattering::sigma_quadrature(params, o.cfg, rel_tol);
                    j["quadrature"] = cross_section_json(q);
                    const double tol = rel_tol * closed.sigma.to_double() + q.error_bound;
                    ok = ok && abs(q.sigma - closed.sigma) <= tol;
                } catch (const std::runtime_error& e) {
                    j["quadrature"] = {{"error", e.what()}};
                    ok = false;
                }
                j["agree"] = ok;
                out << j.dump() << "\n";
                return ok ? kExitOk : kExitCheckFailed;
            }
            if (!(theta_min <= theta_max)) throw std::domain_error("--theta-min must not exceed --theta-max");
            for (double t : {theta_min, theta_max})
                if (!(t >= scattering::kForwardExclusion && t <= 2 * M_PI - scattering::kForwardExclusion))
                    throw std::domain_error("theta grid must avoid the forward exclusion zone");
            const scattering::AmplitudeEvaluator f(params, o.cfg);
            out << "theta,dcs,error_bound\n";
            bool ok = true;
            for (long i = 0; i < points; ++i) {
                const double t = points == 1 ? theta_min : theta_min + (theta_max - theta_min) * i / (points - 1);
                try {
                    const auto a = f(Real(t, o.cfg.precision_bits));
                    const Real value = square(a.re) + square(a.im);
                    const double bound = (2.0 * std::sqrt(value.to_double()) + a.error_bound) * a.error_bound;
                    out << format_double(t) << "," << value.to_string() << "," << format_double(bound) << "\n";
                } catch (const sums::ConvergenceError& e) {
                    err << "theta " << t << ": " << e.what() << "\n";
                    ok = false;
                }
            }
            return ok ? kExitOk : kExitCheckFailed;
        }

        if (expand->parsed()) {
            const expansion::CancellationReport rep = expansion::id2_cancellation(expand_order);
            json residuals = json::array();
            std::size_t nonzero = 0;
            for (const auto& q : rep.residuals) {
                residuals.push_back(q.get_str());
                if (q != 0) ++nonzero;
            }
            const json j = {{"order", rep.order},
                            {"coefficient_of_x2", rep.coefficient_of_x2.get_str()},
                            {"residuals", residuals},
                            {"nonzero_residuals", nonzero},
                            {"all_cancelled", rep.all_cancelled},
                            {"regularization_used", rep.regularization_used}};
            out << j.dump() << "\n";
            return rep.all_cancelled ? kExitOk : kExitCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace sincsum::cli
