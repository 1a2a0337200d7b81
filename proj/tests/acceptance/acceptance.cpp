// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "oracles.hpp"
#include "sincsum/exactmath.hpp"
#include "sincsum/expansion.hpp"
#include "sincsum/scattering.hpp"
#include "sincsum/specfun.hpp"
#include "sincsum/sums.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace sincsum;

namespace {

constexpr mpfr_prec_t kBits = 256;

Real R(double v) { return Real(v, kBits); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs f, records elapsed time in `secs`, returns its value.
template <class F>
auto timed(double& secs, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto out = f();
    secs = seconds_since(t0);
    return out;
}

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::ostringstream&)> check;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

bool id1_criterion(std::ostringstream& log) {
    bool ok = true;
    double worst_err = 0, worst_bound = 0, worst_t = 0;
    for (double x : {0.1, 0.5, 1.0, 2.5, 10.0}) {
        double t = 0;
        sums::SumResult r = timed(t, [&] { return sums::id1_rhs(R(x)); });
        double err = abs(r.value - 1L).to_double();
        ok = ok && err <= 1e-12 && r.error_bound <= 1e-12 && t < 2.0;
        worst_err = std::max(worst_err, err);
        worst_bound = std::max(worst_bound, r.error_bound);
        worst_t = std::max(worst_t, t);
    }
    log << "max |err| " << sci(worst_err) << ", max bound " << sci(worst_bound) << ", max time " << sci(worst_t) << " s";
    return ok;
}

bool id2_criterion(std::ostringstream& log) {
    bool ok = true;
    double worst_rel = 0, worst_t = 0;
    for (double x : {0.1, 0.5, 1.0, 2.5, 10.0}) {
        Real expected = square(Real::pi(kBits) * R(x)) / 4L;
        double scale = std::max(1.0, expected.to_double());
        sums::SumConfig cfg;
        cfg.tolerance = 1e-12 * scale;
        double t = 0;
        sums::SumResult r = timed(t, [&] { return sums::id2_rhs(R(x), cfg); });
        double err = abs(r.value - expected).to_double();
        ok = ok && err <= 1e-12 * scale && t < 2.0;
        worst_rel = std::max(worst_rel, err / scale);
        worst_t = std::max(worst_t, t);
    }
    log << "max scaled err " << sci(worst_rel) << ", max time " << sci(worst_t) << " s";
    return ok;
}

bool cancellation_criterion(std::ostringstream& log) {
    double t = 0;
    expansion::CancellationReport r = timed(t, [] { return expansion::id2_cancellation(50); });
    bool zeros = r.residuals.size() == 49;
    for (const auto& q : r.residuals) zeros = zeros && q == 0;
    log << "coefficient " << r.coefficient_of_x2.get_str() << ", " << r.residuals.size() << " residuals"
        << (zeros ? " all zero" : " NOT all zero") << ", " << sci(t) << " s";
    return r.coefficient_of_x2 == exact::Rational(1, 4) && zeros && r.all_cancelled && t < 60.0;
}

bool exact_identities_criterion(std::ostringstream& log) {
    double t5 = 0, t6 = 0;
    bool a5 = timed(t5, [] {
        bool all = true;
        for (unsigned n = 0; n <= 50; ++n) all = all && expansion::a5_check(n);
        return all;
    });
    bool a6 = timed(t6, [] {
        bool all = true;
        for (unsigned n = 0; n <= 50; ++n) all = all && expansion::a6_factorial_identity(n);
        return all;
    });
    log << "bernoulli identity " << (a5 ? "holds" : "fails") << " (" << sci(t5) << " s), factorial identity "
        << (a6 ? "holds" : "fails") << " (" << sci(t6) << " s)";
    return a5 && a6 && t5 < 5.0 && t6 < 1.0;
}

bool bessel_criterion(std::ostringstream& log) {
    bool ok = true;
    double worst_err = 0, worst_t = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        Real df = Real::parse(exact::double_factorial(2 * n + 1).get_str(), kBits);
        Real expected = -pow(Real::pi(kBits), n) / (sqrt(Real(2L, kBits)) * df);
        double t = 0;
        sums::SumResult r = timed(t, [&] { return sums::bessel_alt_sum(n); });
        double err = abs(r.value - expected).to_double();
        ok = ok && err <= 1e-8 && t < 10.0;
        worst_err = std::max(worst_err, err);
        worst_t = std::max(worst_t, t);
    }
    log << "max |err| " << sci(worst_err) << ", max time " << sci(worst_t) << " s";
    return ok;
}

bool bilateral_criterion(std::ostringstream& log) {
    bool ok = true;
    double worst_err = 0, worst_t = 0;
    for (double x : {0.25, 1.0, 3.0}) {
        Real pi = Real::pi(kBits);
        Real expected = pi / sinh(pi * R(x));
        for (auto f : {sums::cos_mean_sum, sums::sinc_mean_sum}) {
            double t = 0;
            sums::SumResult r = timed(t, [&] { return f(R(x), {}); });
            double err = abs(r.value - expected).to_double();
            ok = ok && err <= 1e-10 && t < 2.0;
            worst_err = std::max(worst_err, err);
            worst_t = std::max(worst_t, t);
        }
    }
    log << "max |err| " << sci(worst_err) << ", max time " << sci(worst_t) << " s";
    return ok;
}

bool derivative_criterion(std::ostringstream& log) {
    bool ok = true;
    double worst = 0;
    for (double x : {0.5, 1.5}) {
        sums::FiniteDifference d = sums::id1_derivative_fd(R(x), R(1e-3));
        double v = abs(d.value).to_double();
        ok = ok && v <= 1e-6;
        worst = std::max(worst, v);
    }
    log << "max |d/dx| " << sci(worst);
    return ok;
}

bool cross_section_criterion(std::ostringstream& log) {
    bool ok = true;
    const char* sep = "";
    for (auto [x, k] : {std::pair{0.3, 1.0}, std::pair{1.0, 1.0}, std::pair{2.0, 5.0}}) {
        scattering::ScatteringParams p{R(x), R(k)};
        Real closed = scattering::sigma_closed(p).sigma;
        double sigma = closed.to_double();
        double pw_err = abs(scattering::sigma_partial_waves(p).sigma - closed).to_double();
        double t = 0;
        double q_rel = 0;
        bool q_ok = true;
        try {
            auto q = timed(t, [&] { return scattering::sigma_quadrature(p); });
            q_rel = abs(q.sigma - closed).to_double() / sigma;
        } catch (const std::exception& e) {
            q_ok = false;
            log << "[quadrature failed: " << e.what() << "] ";
        }
        bool case_ok = pw_err <= 1e-10 * sigma && q_ok && q_rel <= 1e-6 && t < 120.0;
        ok = ok && case_ok;
        log << sep << "x=" << x << " k=" << k << ": pw rel " << sci(pw_err / sigma) << ", quad rel " << sci(q_rel)
            << " in " << sci(t) << " s";
        sep = "; ";
    }
    return ok;
}

bool scale_invariance_criterion(std::ostringstream& log) {
    auto a = scattering::sigma_partial_waves({R(1.0), R(1.0)});
    auto b = scattering::sigma_partial_waves({R(1.0), R(7.0)});
    double diff = abs(a.sigma - b.sigma * 7L).to_double();
    double allowed = a.error_bound + 7 * b.error_bound;
    log << "|sigma k (k=1) - sigma k (k=7)| " << sci(diff) << " vs bound " << sci(allowed);
    return diff <= allowed;
}

bool property_criterion(std::ostringstream& log) {
    // grading of every summand coefficient up to x^100
    bool graded = true;
    for (const auto& c : expansion::summand_series(50)) graded = graded && c.graded();

    // spherical Bessel three-term recurrence at doubled-precision comparison
    bool recurrence = true;
    const double tol = 10 * std::ldexp(1.0, -static_cast<int>(kBits));
    for (unsigned n = 1; n <= 30; ++n) {
        for (double z : {0.1, 0.5, 1.3, 4.0, 9.5, 16.0, 30.0, 47.0, 75.0, 100.0}) {
            Real zr = R(z);
            Real a = specfun::spherical_bessel_j(n - 1, zr).with_precision(2 * kBits);
            Real b = specfun::spherical_bessel_j(n + 1, zr).with_precision(2 * kBits);
            Real rhs = specfun::spherical_bessel_j(n, zr).with_precision(2 * kBits) * (2L * n + 1) /
                       zr.with_precision(2 * kBits);
            Real scale = abs(a);
            if (abs(b) > scale) scale = abs(b);
            if (abs(rhs) > scale) scale = abs(rhs);
            recurrence = recurrence && abs(a + b - rhs) <= scale * Real(tol, 2 * kBits);
        }
    }

    // sign-free summands equal the literal ones for l <= 100
    bool sign_free = true;
    for (double xd : {0.1, 1.0, 2.5, 4.0, 10.0}) {
        Real x = R(xd), xw = R(xd).with_precision(512);
        for (long l = 1; l <= 100; ++l) {
            const std::pair<Real, Real> pairs[] = {{sums::terms::id1(l, x), oracle::literal_id1(l, xw)},
                                                   {sums::terms::id2(l, x), oracle::literal_id2(l, xw)},
                                                   {sums::terms::cos_mean(l, x), oracle::literal_cos_mean(l, xw)},
                                                   {sums::terms::sinc_mean(l, x), oracle::literal_sinc_mean(l, xw)}};
            for (const auto& [got, lit] : pairs) {
                double err = abs(got.with_precision(512) - lit).to_double();
                sign_free = sign_free && err <= 1e-70 * std::max(abs(lit).to_double(), 1e-6);
            }
        }
    }

    // exact summand coefficients against numeric Taylor coefficients, n <= 6
    bool cross_validated = true;
    auto coeffs = expansion::summand_series(6);
    for (long l : {3L, 7L}) {
        auto taylor = oracle::summand_taylor(l, 512);
        for (const auto& c : coeffs) {
            Real v = c.evaluate(l, 512);
            cross_validated = cross_validated && abs(v - taylor[c.n]) <= abs(v) * Real::parse("1e-30", 512);
        }
    }

    log << "grading " << (graded ? "ok" : "FAIL") << ", bessel recurrence " << (recurrence ? "ok" : "FAIL")
        << ", sign-free terms " << (sign_free ? "ok" : "FAIL") << ", coefficient oracle "
        << (cross_validated ? "ok" : "FAIL");
    return graded && recurrence && sign_free && cross_validated;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "id1 sums to 1", id1_criterion},
        {2, "id2 sums to pi^2 x^2/4", id2_criterion},
        {3, "exact cancellation to x^100", cancellation_criterion},
        {4, "bernoulli and factorial identities", exact_identities_criterion},
        {5, "alternating half-integer bessel sums", bessel_criterion},
        {6, "bilateral sums equal pi/sinh(pi x)", bilateral_criterion},
        {7, "id1 is independent of x", derivative_criterion},
        {8, "cross section by three routes", cross_section_criterion},
        {9, "scale invariance of sigma k", scale_invariance_criterion},
        {10, "module property suites", property_criterion},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.check(log);
        } catch (const std::exception& e) {
            log << "exception: " << e.what();
        }
        failed += !ok;
        std::printf("%s %2d %s: %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), log.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
