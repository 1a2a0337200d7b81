#include "sincsum/cli.hpp"
#include "sincsum/exactmath.hpp"
#include "sincsum/expansion.hpp"
#include "sincsum/scattering.hpp"
#include "sincsum/specfun.hpp"
#include "sincsum/sums.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sincsum;

namespace {

// Numbers cross the boundary as decimal strings; Python floats are taken via
// their shortest repr, so 0.1 means the decimal 0.1, not the nearest double.
Real to_real(const py::handle& v, mpfr_prec_t bits) {
    if (py::isinstance<py::str>(v)) return Real::parse(v.cast<std::string>(), bits);
    return Real::parse(py::repr(v).cast<std::string>(), bits);
}

sums::SumConfig make_config(double tol, std::int64_t max_terms, int tail_order, mpfr_prec_t bits) {
    sums::SumConfig c;
    c.tolerance = tol;
    c.max_terms = max_terms;
    c.tail_order = tail_order;
    c.precision_bits = bits;
    c.validate();
    return c;
}

py::dict sum_dict(const sums::SumResult& r) {
    return py::dict("value"_a = r.value.to_string(), "error_bound"_a = r.error_bound, "terms_used"_a = r.terms_used,
                    "method"_a = sums::to_string(r.method));
}

std::string q_str(const exact::Rational& q) { return q.get_str(); }

#define SUM_ARGS                                                                                            \
    py::kw_only(), "tol"_a = 1e-12, "max_terms"_a = std::int64_t{10'000'000}, "tail_order"_a = 6, \
        "precision_bits"_a = mpfr_prec_t{kDefaultPrecisionBits}

template <auto F>
py::dict sum_of_x(const py::object& x, double tol, std::int64_t max_terms, int tail_order, mpfr_prec_t bits) {
    auto cfg = make_config(tol, max_terms, tail_order, bits);
    return sum_dict(F(to_real(x, bits), cfg));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mean sinc-sum identities and 2D inverse-square scattering";

    py::register_exception<sums::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<scattering::QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    // exact
    m.def("bernoulli", [](unsigned n) { return q_str(exact::bernoulli(n)); }, "n"_a);
    m.def("zeta_even_pi_coeff", [](long s) { return q_str(exact::zeta_even_pi_coeff(s)); }, "s"_a);
    m.def("double_factorial", [](long k) { return exact::double_factorial(k).get_str(); }, "k"_a);

    // special functions
    m.def("sinc", [](const py::object& z, mpfr_prec_t bits) { return specfun::sinc(to_real(z, bits)).to_string(); },
          "z"_a, "precision_bits"_a = kDefaultPrecisionBits);
    m.def("spherical_bessel_j",
          [](unsigned n, const py::object& z, mpfr_prec_t bits) {
              return specfun::spherical_bessel_j(n, to_real(z, bits)).to_string();
          },
          "n"_a, "z"_a, "precision_bits"_a = kDefaultPrecisionBits);
    m.def("bessel_j_half",
          [](unsigned n, const py::object& z, mpfr_prec_t bits) {
              return specfun::bessel_j_half(n, to_real(z, bits)).to_string();
          },
          "n"_a, "z"_a, "precision_bits"_a = kDefaultPrecisionBits);
    m.def("phase_excess",
          [](long l, const py::object& x, mpfr_prec_t bits) {
              return specfun::phase_excess(l, to_real(x, bits)).phi.to_string();
          },
          "l"_a, "x"_a, "precision_bits"_a = kDefaultPrecisionBits);

    // sums
    m.def("id1_rhs", &sum_of_x<sums::id1_rhs>, "x"_a, SUM_ARGS);
    m.def("id2_rhs", &sum_of_x<sums::id2_rhs>, "x"_a, SUM_ARGS);
    m.def("cos_mean_sum", &sum_of_x<sums::cos_mean_sum>, "x"_a, SUM_ARGS);
    m.def("sinc_mean_sum", &sum_of_x<sums::sinc_mean_sum>, "x"_a, SUM_ARGS);
    m.def("bessel_alt_sum",
          [](unsigned n, double tol, std::int64_t max_terms, int tail_order, mpfr_prec_t bits) {
              return sum_dict(sums::bessel_alt_sum(n, make_config(tol, max_terms, tail_order, bits)));
          },
          "n"_a, SUM_ARGS);
    m.def("id1_derivative_fd",
          [](const py::object& x, const py::object& h, double tol, std::int64_t max_terms, int tail_order,
             mpfr_prec_t bits) {
              auto d = sums::id1_derivative_fd(to_real(x, bits), to_real(h, bits),
                                               make_config(tol, max_terms, tail_order, bits));
              return py::dict("value"_a = d.value.to_string(), "error_bound"_a = d.error_bound);
          },
          "x"_a, "h"_a, SUM_ARGS);

    // expansion
    m.def("sin_sq_half_series",
          [](unsigned n) {
              auto s = expansion::sin_sq_half_series(n);
              std::vector<std::string> out;
              for (unsigned i = 1; i <= s.order(); ++i) out.push_back(q_str(s.coeff(i)));
              return out;
          },
          "order"_a);
    m.def("id2_cancellation",
          [](unsigned n) {
              auto r = expansion::id2_cancellation(n);
              std::vector<std::string> residuals;
              for (const auto& q : r.residuals) residuals.push_back(q_str(q));
              return py::dict("order"_a = r.order, "coefficient_of_x2"_a = q_str(r.coefficient_of_x2),
                              "residuals"_a = residuals, "all_cancelled"_a = r.all_cancelled,
                              "regularization_used"_a = r.regularization_used);
          },
          "order"_a);
    m.def("a5_check", &expansion::a5_check, "n"_a);
    m.def("a6_factorial_identity", &expansion::a6_factorial_identity, "n"_a);

    // scattering
    m.def("phase_shift",
          [](long l, const py::object& x, mpfr_prec_t bits) {
              return scattering::phase_shift(l, to_real(x, bits)).to_string();
          },
          "l"_a, "x"_a, "precision_bits"_a = kDefaultPrecisionBits);
    m.def("amplitude",
          [](const py::object& theta, const py::object& x, const py::object& k, double tol, mpfr_prec_t bits) {
              auto cfg = make_config(tol, 10'000'000, 6, bits);
              auto a = scattering::amplitude(to_real(theta, bits), {to_real(x, bits), to_real(k, bits)}, cfg);
              return py::dict("re"_a = a.re.to_string(), "im"_a = a.im.to_string(), "error_bound"_a = a.error_bound,
                              "terms_used"_a = a.terms_used);
          },
          "theta"_a, "x"_a, "k"_a, py::kw_only(), "tol"_a = 1e-12, "precision_bits"_a = kDefaultPrecisionBits);
    m.def("diff_cross_section",
          [](const py::object& theta, const py::object& x, const py::object& k, double tol, mpfr_prec_t bits) {
              auto cfg = make_config(tol, 10'000'000, 6, bits);
              auto d =
                  scattering::diff_cross_section(to_real(theta, bits), {to_real(x, bits), to_real(k, bits)}, cfg);
              return py::dict("value"_a = d.value.to_string(), "error_bound"_a = d.error_bound);
          },
          "theta"_a, "x"_a, "k"_a, py::kw_only(), "tol"_a = 1e-12, "precision_bits"_a = kDefaultPrecisionBits);

    auto sigma_dict = [](const scattering::CrossSectionResult& r) {
        return py::dict("sigma"_a = r.sigma.to_string(), "route"_a = scattering::to_string(r.route),
                        "error_bound"_a = r.error_bound);
    };
    m.def("sigma_closed",
          [sigma_dict](const py::object& x, const py::object& k) {
              return sigma_dict(scattering::sigma_closed({to_real(x, kDefaultPrecisionBits), to_real(k, kDefaultPrecisionBits)}));
          },
          "x"_a, "k"_a);
    m.def("sigma_partial_waves",
          [sigma_dict](const py::object& x, const py::object& k, double tol) {
              auto cfg = make_config(tol, 10'000'000, 6, kDefaultPrecisionBits);
              return sigma_dict(scattering::sigma_partial_waves(
                  {to_real(x, kDefaultPrecisionBits), to_real(k, kDefaultPrecisionBits)}, cfg));
          },
          "x"_a, "k"_a, py::kw_only(), "tol"_a = 1e-12);
    m.def("sigma_quadrature",
          [sigma_dict](const py::object& x, const py::object& k, double rel_tol) {
              scattering::ScatteringParams p{to_real(x, kDefaultPrecisionBits), to_real(k, kDefaultPrecisionBits)};
              auto r = [&] {
                  py::gil_scoped_release release;
                  return scattering::sigma_quadrature(p, {}, rel_tol);
              }();
              return sigma_dict(r);
          },
          "x"_a, "k"_a, py::kw_only(), "rel_tol"_a = 1e-7);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          "args"_a, "Runs the command-line front end in-process; returns (exit_code, stdout, stderr).");
}
