#pragma once

#include "sincsum/real.hpp"
#include "sincsum/sums.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sincsum::scattering {

/// x = sqrt(2 m kappa) / hbar is the dimensionless coupling, k the wavenumber.
struct ScatteringParams {
    Real x;
    Real k;

    /// Throws std::domain_error unless x >= 0 and k > 0.
    void validate() const;
};

inline constexpr double kForwardExclusion = 1e-6;

/// delta_l = (pi/2)(|l| - sqrt(l^2 + x^2)) = -phase_excess(|l|, x)/2.  No k dependence.
Real phase_shift(long l, const Real& x);

struct PartialWaveTerm {
    long l = 0;
    Real delta;
    Real weight_re;  ///< Re e^{i delta} sin(delta) = sin(2 delta) / 2
    Real weight_im;  ///< Im e^{i delta} sin(delta) = sin^2(delta)
};

PartialWaveTerm partial_wave(long l, const Real& x);

struct AmplitudeResult {
    Real re;
    Real im;
    double error_bound = 0.0;  ///< bound on |f - (re + i im)|
    std::int64_t terms_used = 0;
};

/// Evaluates f(theta) = sqrt(2/(pi k)) sum_l e^{i l theta} e^{i delta_l} sin(delta_l).
///
/// The 1/l part of Re(weight) and the 1/l^2 part of Im(weight) are summed in
/// closed form (log and Bernoulli-polynomial cosine series); what remains decays
/// like l^-3 and is summed directly with a summation-by-parts tail bound.
/// Partial-wave weights are cached and shared between angles, so one evaluator
/// is cheap to reuse across a theta grid.  Not thread-safe.
class AmplitudeEvaluator {
public:
    AmplitudeEvaluator(ScatteringParams params, sums::SumConfig cfg, double forward_exclusion = kForwardExclusion);

    /// Uses cfg.tolerance as the absolute target for the partial-wave sum.
    AmplitudeResult operator()(const Real& theta) const { return evaluate(theta, cfg_.tolerance); }
    AmplitudeResult evaluate(const Real& theta, double tolerance) const;

    const ScatteringParams& params() const { return params_; }
    const sums::SumConfig& config() const { return cfg_; }
    /// sqrt(2/(pi k)); f = prefactor * F with F independent of k.
    const Real& prefactor() const { return prefactor_; }

    /// Regular part of F at theta -> 0+: F = C + (pi x^2/2) ln(theta) + O(theta ln theta).
    struct ForwardLimit {
        Real re;
        Real im;
        double error_bound = 0.0;
    };
    ForwardLimit forward_limit(std::int64_t terms) const;
    /// Bound on |F(theta) - C - (pi x^2/2) ln(theta)| for 0 < theta <= eps.
    double forward_model_error(double eps) const;

private:
    void ensure_table(std::int64_t L) const;

    ScatteringParams params_;
    sums::SumConfig cfg_;
    double exclusion_;
    Real prefactor_;
    Real x_;
    double c3_ = 0.0;  // a_l <= c3 / l^3
    double c4_ = 0.0;  // |b_l| <= c4 / l^4
    mutable std::vector<Real> a_;  // pi x^2/(4l) - sin(phi_l)/2, index l-1
    mutable std::vector<Real> b_;  // sin^2(phi_l/2) - (pi x^2/(4l))^2
};

AmplitudeResult amplitude(const Real& theta, const ScatteringParams& params, const sums::SumConfig& cfg = {},
                          double forward_exclusion = kForwardExclusion);

struct DcsResult {
    Real value;
    double error_bound = 0.0;
};

/// |f(theta)|^2
DcsResult diff_cross_section(const Real& theta, const ScatteringParams& params, const sums::SumConfig& cfg = {},
                             double forward_exclusion = kForwardExclusion);

enum class Route { closed_form, partial_wave, quadrature };
std::string to_string(Route r);

struct CrossSectionResult {
    Real sigma;
    Route route = Route::closed_form;
    double error_bound = 0.0;
};

/// pi^2 x^2 / k
CrossSectionResult sigma_closed(const ScatteringParams& params);

/// (4/k)[sin^2(pi x/2) + 2 sum_{l>=1} sin^2(delta_l)], via the accelerated id2 sum.
CrossSectionResult sigma_partial_waves(const ScatteringParams& params, const sums::SumConfig& cfg = {});

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate, double error)
        : std::runtime_error(what), estimate_(estimate), error_(error) {}
    double estimate() const { return estimate_; }
    double error() const { return error_; }

private:
    double estimate_;
    double error_;
};

/// Integrates |f|^2 over (0, 2pi) on a mesh graded geometrically toward both
/// endpoints; the first `forward_exclusion` radians at each end are integrated
/// from the logarithmic forward asymptote.  Requires rel_tol >= 1e-8.
CrossSectionResult sigma_quadrature(const ScatteringParams& params, const sums::SumConfig& cfg = {},
                                    double rel_tol = 1e-7, double forward_exclusion = kForwardExclusion);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(unsigned n);

}  // namespace sincsum::scattering
