#include "sincsum/scattering.hpp"

#include "sincsum/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace sincsum::scattering {

namespace {

using sums::SumConfig;

double to_d(const Real& r) { return r.to_double(); }

std::int64_t smallest_passing(std::int64_t lo, std::int64_t hi, auto&& bound_at, double target) {
    if (bound_at(lo) <= target) return lo;
    if (!(bound_at(hi) <= target)) return hi;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (bound_at(mid) <= target) hi = mid; else lo = mid;
    }
    return hi;
}

void require_angle(double theta, double exclusion) {
    if (!(theta > 0.0 && theta < 2.0 * M_PI))
        throw std::domain_error("scattering angle must lie in (0, 2pi)");
    if (theta < exclusion || 2.0 * M_PI - theta < exclusion)
        throw std::domain_error("scattering angle lies inside the forward exclusion zone");
}

}  // namespace

void ScatteringParams::validate() const {
    if (!x.is_finite() || x.sign() < 0) throw std::domain_error("coupling x must be finite and >= 0");
    if (!k.is_finite() || k.sign() <= 0) throw std::domain_error("wavenumber k must be finite and > 0");
}

Real phase_shift(long l, const Real& x) {
    return -specfun::phase_excess(l < 0 ? -l : l, x).phi / 2L;
}

PartialWaveTerm partial_wave(long l, const Real& x) {
    PartialWaveTerm t;
    t.l = l;
    t.delta = phase_shift(l, x);
    t.weight_re = sin(2L * t.delta) / 2L;
    t.weight_im = square(sin(t.delta));
    return t;
}

// ---------------------------------------------------------------------------

AmplitudeEvaluator::AmplitudeEvaluator(ScatteringParams params, SumConfig cfg, double forward_exclusion)
    : params_(std::move(params)), cfg_(cfg), exclusion_(forward_exclusion) {
    params_.validate();
    cfg_.validate();
    if (!(exclusion_ > 0.0 && exclusion_ < 0.5)) throw std::domain_error("forward exclusion must lie in (0, 0.5)");
    const mpfr_prec_t bits = cfg_.precision_bits;
    x_ = params_.x.with_precision(bits);
    prefactor_ = sqrt(Real(2L, bits) / (Real::pi(bits) * params_.k.with_precision(bits)));
    const double x = to_d(x_);
    const double x2 = x * x;
    c3_ = (M_PI * x2 * x2 / 16.0 + M_PI * M_PI * M_PI * x2 * x2 * x2 / 96.0) * (1.0 + 1e-12);
    c4_ = (M_PI * M_PI * x2 * x2 * x2 / 32.0 + std::pow(M_PI, 4) * x2 * x2 * x2 * x2 / 768.0) * (1.0 + 1e-12);
}

void AmplitudeEvaluator::ensure_table(std::int64_t L) const {
    const mpfr_prec_t bits = cfg_.precision_bits;
    const Real quarter_pi_x2 = Real::pi(bits) * square(x_) / 4L;
    for (auto l = static_cast<long>(a_.size()) + 1; l <= L; ++l) {
        const Real phi = specfun::phase_excess(l, x_).phi;
        const Real lead = quarter_pi_x2 / l;
        a_.push_back(lead - sin(phi) / 2L);
        b_.push_back(square(sin(phi / 2L)) - square(lead));
    }
}

AmplitudeResult AmplitudeEvaluator::evaluate(const Real& theta_in, double tolerance) const {
    const mpfr_prec_t bits = cfg_.precision_bits;
    require_angle(to_d(theta_in), exclusion_);
    const Real two_pi = 2L * Real::pi(bits);
    Real theta = theta_in.with_precision(bits);
    if (theta > Real::pi(bits)) theta = two_pi - theta;  // f is even in theta - pi

    const double half_sin = std::sin(to_d(theta) / 2.0);
    const double x = to_d(x_);
    const double target = tolerance / to_d(prefactor_);
    // Summation by parts: |sum_{l>L} cos(l theta) c_l| <= 2 c_{L+1} / sin(theta/2) for
    // decreasing c_l; a_l and |b_l| are dominated by c3/l^3 and c4/l^4.
    auto tail = [&](std::int64_t L) {
        const double n = static_cast<double>(L + 1);
        return 4.0 * (c3_ / (n * n * n) + c4_ / (n * n * n * n)) / half_sin;
    };
    const auto min_terms = std::min<std::int64_t>(
        cfg_.max_terms, std::max<std::int64_t>({16, static_cast<std::int64_t>(2 * x * x) + 1,
                                                static_cast<std::int64_t>(4 * x) + 1}));
    const std::int64_t L = smallest_passing(min_terms, cfg_.max_terms, tail, 0.5 * target);
    ensure_table(L);

    const Real cos_theta = cos(theta);
    Real c_prev(1L, bits);
    Real c_cur = cos_theta;
    Real sum_re(bits), sum_im(bits);
    double magnitude = 0.0;
    for (std::int64_t l = 1; l <= L; ++l) {
        sum_re += c_cur * a_[l - 1];
        sum_im += c_cur * b_[l - 1];
        Real next = 2L * cos_theta * c_cur - c_prev;
        c_prev = std::move(c_cur);
        c_cur = std::move(next);
    }
    magnitude = 2.0 * (c3_ * 1.21 + c4_ * 1.09);  // >= sum of 2(|a_l| + |b_l|)

    const Real pi = Real::pi(bits);
    const Real x2 = square(x_);
    const PartialWaveTerm w0 = partial_wave(0, x_);
    // sum_{l>=1} cos(l theta)/l = -ln(2 sin(theta/2)); sum cos(l theta)/l^2 = pi^2/6 - pi theta/2 + theta^2/4
    const Real log_part = pi * x2 / 2L * log(2L * sin(theta / 2L));
    const Real clausen2 = square(pi) / 6L - pi * theta / 2L + square(theta) / 4L;
    const Real quad_part = square(pi * x2) / 8L * clausen2;

    Real re = w0.weight_re + log_part + 2L * sum_re;
    Real im = w0.weight_im + quad_part + 2L * sum_im;

    const double p2 = std::ldexp(1.0, -static_cast<int>(bits));
    const double ld = static_cast<double>(L) + 1.0;
    const double slack = 64.0 * p2 * ld * ld / half_sin * magnitude + 64.0 * p2 * (std::abs(to_d(re)) + std::abs(to_d(im)) + 1.0);

    AmplitudeResult out;
    out.re = prefactor_ * re;
    out.im = prefactor_ * im;
    out.terms_used = L;
    out.error_bound = to_d(prefactor_) * (tail(L) + slack);
    if (!(out.error_bound <= tolerance)) {
        sums::SumResult best{out.re, out.error_bound, L, sums::SumMethod::tail_accelerated};
        throw sums::ConvergenceError("amplitude: tolerance not reached within max_terms", std::move(best));
    }
    return out;
}

AmplitudeEvaluator::ForwardLimit AmplitudeEvaluator::forward_limit(std::int64_t terms) const {
    const mpfr_prec_t bits = cfg_.precision_bits;
    ensure_table(terms);
    Real sa(bits), sb(bits);
    for (std::int64_t l = 0; l < terms; ++l) {
        sa += a_[l];
        sb += b_[l];
    }
    const Real pi = Real::pi(bits);
    const PartialWaveTerm w0 = partial_wave(0, x_);
    ForwardLimit c;
    c.re = w0.weight_re + 2L * sa;
    c.im = w0.weight_im + square(pi * square(x_)) / 8L * (square(pi) / 6L) + 2L * sb;
    const double n = static_cast<double>(terms);
    c.error_bound = c3_ / (n * n) + 2.0 * c4_ / (3.0 * n * n * n) + 1e-60;
    return c;
}

double AmplitudeEvaluator::forward_model_error(double eps) const {
    const double x = to_d(x_);
    const double A = M_PI * x * x / 2.0;
    const double q = M_PI * M_PI * x * x * x * x / 8.0;
    return A * eps * eps / 12.0 + q * (M_PI * eps / 2.0 + eps * eps / 4.0) +
           2.0 * (c3_ * eps * eps * (1.5 + 0.5 * std::log(2.0 / eps)) + c4_ * eps * eps);
}

AmplitudeResult amplitude(const Real& theta, const ScatteringParams& params, const SumConfig& cfg,
                          double forward_exclusion) {
    return AmplitudeEvaluator(params, cfg, forward_exclusion)(theta);
}

DcsResult diff_cross_section(const Real& theta, const ScatteringParams& params, const SumConfig& cfg,
                             double forward_exclusion) {
    const AmplitudeResult f = amplitude(theta, params, cfg, forward_exclusion);
    DcsResult d;
    d.value = square(f.re) + square(f.im);
    const double mod = std::sqrt(to_d(d.value));
    d.error_bound = (2.0 * mod + f.error_bound) * f.error_bound;
    return d;
}

std::string to_string(Route r) {
    switch (r) {
        case Route::closed_form: return "closed_form";
        case Route::partial_wave: return "partial_wave";
        case Route::quadrature: return "quadrature";
    }
    return "?";
}

CrossSectionResult sigma_closed(const ScatteringParams& params) {
    params.validate();
    const mpfr_prec_t bits = std::max(params.x.precision(), params.k.precision());
    const Real pi = Real::pi(bits);
    return {square(pi * params.x.with_precision(bits)) / params.k.with_precision(bits), Route::closed_form, 0.0};
}

CrossSectionResult sigma_partial_waves(const ScatteringParams& params, const SumConfig& cfg) {
    params.validate();
    const Real k = params.k.with_precision(cfg.precision_bits);
    const sums::SumResult s = sums::id2_rhs(params.x, cfg);
    const double scale = 4.0 / to_d(k);
    return {4L * s.value / k, Route::partial_wave, s.error_bound * scale * (1.0 + 1e-12)};
}

// ---------------------------------------------------------------------------

GaussRule gauss_legendre(unsigned n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (unsigned i = 0; i < n; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = z;
            for (unsigned k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.nodes[i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return rule;
}

CrossSectionResult sigma_quadrature(const ScatteringParams& params, const SumConfig& cfg, double rel_tol,
                                    double forward_exclusion) {
    params.validate();
    cfg.validate();
    if (!(rel_tol >= 1e-8)) throw std::domain_error("sigma_quadrature: rel_tol must be >= 1e-8");
    const mpfr_prec_t bits = cfg.precision_bits;
    if (params.x.is_zero()) return {Real(0L, bits), Route::quadrature, 0.0};

    const AmplitudeEvaluator f(params, cfg, forward_exclusion);
    const double eps = forward_exclusion;
    const double x = to_d(params.x);
    const double pre = to_d(f.prefactor());

    // Breakpoints graded geometrically away from theta = 0; the mirror image covers (pi, 2pi).
    std::vector<double> breaks{eps};
    while (breaks.back() < M_PI) breaks.push_back(std::min({2.0 * breaks.back(), breaks.back() + 0.25, M_PI}));
    const double panels = static_cast<double>(breaks.size() - 1);

    // Forward piece [0, eps]: |prefactor (C + A ln theta)|^2 integrated in closed form.
    const auto C = f.forward_limit(4096);
    const double cre = to_d(C.re), cim = to_d(C.im);
    const double A = M_PI * x * x / 2.0;
    const double le = std::log(eps);
    const double forward =
        pre * pre * eps * ((cre * cre + cim * cim) + 2.0 * cre * A * (le - 1.0) + A * A * (le * le - 2.0 * le + 2.0));
    const double model = C.error_bound + f.forward_model_error(eps);
    const double g1 = std::hypot(cre, cim) * eps + A * eps * (1.0 - le);
    const double forward_err = pre * pre * (2.0 * model * g1 + model * model * eps);

    double estimate = 0.0, error = 0.0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const double scale = std::pow(100.0, -attempt);
        const GaussRule low = gauss_legendre(12 + 8 * attempt);
        const GaussRule high = gauss_legendre(20 + 12 * attempt);
        Real total(bits);
        double quad_err = 0.0, amp_err = 0.0;
        for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
            const double a = breaks[p], b = breaks[p + 1];
            const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
            const double tol = std::max(cfg.tolerance, scale * 0.02 * rel_tol * std::min(1.0, x) / ((b - a) * panels));
            auto integrate = [&](const GaussRule& rule, double& err) {
                Real acc(bits);
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                    const AmplitudeResult v = f.evaluate(Real(mid + half * rule.nodes[i], bits), tol);
                    const Real dcs = square(v.re) + square(v.im);
                    const double w = half * rule.weights[i];
                    acc += dcs * w;
                    err += w * (2.0 * std::sqrt(to_d(dcs)) + v.error_bound) * v.error_bound;
                }
                return acc;
            };
            double ignored = 0.0;
            const Real q_low = integrate(low, ignored);
            const Real q_high = integrate(high, amp_err);
            quad_err += std::abs(to_d(q_high - q_low));
            total += q_high;
        }
        // sigma = 2 * integral over (0, pi) by the theta -> 2pi - theta symmetry
        estimate = 2.0 * (to_d(total) + forward);
        error = 2.0 * (quad_err + amp_err + forward_err);
        if (error <= rel_tol * estimate) {
            Real sigma = 2L * (total + Real(forward, bits));
            return {std::move(sigma), Route::quadrature, error};
        }
    }
    throw QuadratureError("sigma_quadrature: requested relative tolerance not reached", estimate, error);
}

}  // namespace sincsum::scattering
