#include "momunc/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "momunc/errors.hpp"
#include "momunc/specfun.hpp"

namespace momunc {

namespace {

using specfun::HypergeometricSpec;
using specfun::hyp_pfq_unit;
using specfun::log_gamma;

double radial_moment_impl(int dim, const std::function<double(double)>& amp,
                          double order, QuadratureResult* out) {
  auto integrand = [&, dim, order](double r) {
    const double a = amp(r);
    return std::pow(r, dim + order - 1.0) * a * a;
  };
  QuadratureOptions opt;
  opt.abs_tol = 1e-12;
  opt.rel_tol = 1e-11;
  const QuadratureResult res = integrate_semi_infinite(integrand, 0.0, opt);
  if (out) *out = res;
  return res.value;
}

}  // namespace

double laguerre(int p, double q, double x) {
  if (p < 0) throw std::domain_error("laguerre: degree must be >= 0");
  double prev = 1.0;  // L_0
  if (p == 0) return prev;
  double cur = 1.0 + q - x;  // L_1
  for (int k = 1; k < p; ++k) {
    const double next = ((2.0 * k + q + 1.0 - x) * cur - (k + q) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double gegenbauer(int p, double q, double x) {
  if (p < 0) throw std::domain_error("gegenbauer: degree must be >= 0");
  if (!(q > -0.5)) throw std::domain_error("gegenbauer: requires q > -1/2");
  double prev = 1.0;  // C_0
  if (p == 0) return prev;
  double cur = 2.0 * q * x;  // C_1
  for (int k = 1; k < p; ++k) {
    const double next = (2.0 * x * (k + q) * cur - (k + 2.0 * q - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

HydrogenState::HydrogenState(int dim, int n_, int l_) : d(dim), n(n_), l(l_) {
  if (dim < 2) {
    throw std::domain_error("HydrogenState: requires d >= 2 (eta vanishes at d=1, n=1)");
  }
  if (n < 1 || l < 0 || l > n - 1) {
    throw std::domain_error("HydrogenState: requires n >= 1 and 0 <= l <= n-1");
  }
  eta = n + 0.5 * (d - 3);
  grand_l = l + 0.5 * (d - 3);
  energy = -0.5 / (eta * eta);
}

OscillatorState::OscillatorState(int dim, int n_, int l_) : d(dim), n(n_), l(l_) {
  if (dim < 1 || n < 0 || l < 0) {
    throw std::domain_error("OscillatorState: requires d >= 1, n >= 0, l >= 0");
  }
  energy = 2.0 * n + l + 0.5 * d;
}

RadialFunction::RadialFunction(int dim, std::function<double(double)> amp,
                               double norm)
    : dim_(dim), amp_(std::move(amp)), norm_(norm) {}

RadialFunction hydrogen_radial_position(const HydrogenState& s) {
  const double eta = s.eta;
  const double L = s.grand_l;
  const int p = s.n - s.l - 1;
  const double q = 2.0 * L + 1.0;
  const int l = s.l;
  const double pref =
      std::exp(0.5 * s.d * std::log(2.0 / eta) +
               0.5 * (log_gamma(eta - L) - std::log(2.0 * eta) -
                      log_gamma(eta + L + 1.0)));
  auto amp = [=](double r) {
    const double rt = 2.0 * r / eta;
    if (rt >= 1500.0) return 0.0;  // exp(-rt/2) underflows; avoid 0*inf
    return pref * std::pow(rt, l) * std::exp(-0.5 * rt) * laguerre(p, q, rt);
  };
  QuadratureResult norm;
  radial_moment_impl(s.d, amp, 0.0, &norm);
  return RadialFunction(s.d, amp, norm.value);
}

RadialFunction hydrogen_radial_momentum(const HydrogenState& s) {
  const double eta = s.eta;
  const double L = s.grand_l;
  const int p = s.n - s.l - 1;
  const int l = s.l;
  const double log_pref =
      (2.0 * L + 3.0) * std::numbers::ln2_v<double> +
      0.5 * (log_gamma(eta - L) - std::log(2.0 * std::numbers::pi_v<double>) -
             log_gamma(eta + L + 1.0)) +
      log_gamma(L + 1.0) + 0.5 * (s.d + 1.0) * std::log(eta);
  auto amp = [=](double pr) {
    const double pt = eta * pr;
    if (pt <= 0.0) return l == 0 ? std::exp(log_pref) * gegenbauer(p, L + 1.0, 1.0) : 0.0;
    // (1 - pt^2)/(1 + pt^2) computed through u = 1/pt^2 so huge pt is exact.
    const double log_den =
        pt > 1e150 ? 2.0 * std::log(pt) : std::log1p(pt * pt);
    const double u = 1.0 / (pt * pt);
    const double arg = std::isinf(u) ? 1.0 : (u - 1.0) / (u + 1.0);
    const double lg = l * std::log(pt) - (L + 2.0) * log_den;
    return std::exp(log_pref + lg) * gegenbauer(p, L + 1.0, arg);
  };
  QuadratureResult norm;
  radial_moment_impl(s.d, amp, 0.0, &norm);
  return RadialFunction(s.d, amp, norm.value);
}

RadialFunction oscillator_radial(const OscillatorState& s) {
  const int p = s.n;
  const double q = s.l + 0.5 * s.d - 1.0;
  const int l = s.l;
  const double pref = std::exp(
      0.5 * (std::numbers::ln2_v<double> + log_gamma(s.n + 1.0) -
             log_gamma(s.n + s.l + 0.5 * s.d)));
  auto amp = [=](double r) {
    if (r >= 55.0) return 0.0;  // exp(-r^2/2) underflows
    return pref * std::pow(r, l) * std::exp(-0.5 * r * r) * laguerre(p, q, r * r);
  };
  QuadratureResult norm;
  radial_moment_impl(s.d, amp, 0.0, &norm);
  return RadialFunction(s.d, amp, norm.value);
}

double hydrogen_moment_r(const HydrogenState& s, double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("hydrogen_moment_r: order must be positive");
  }
  const double eta = s.eta;
  const double L = s.grand_l;
  const double log_pref = (a - 1.0) * std::log(eta) + log_gamma(2.0 * L + a + 3.0) -
                          (a + 1.0) * std::numbers::ln2_v<double> -
                          log_gamma(2.0 * L + 2.0);
  HypergeometricSpec spec;
  spec.upper = {L + 1.0 - eta, -a - 1.0, a + 2.0};
  spec.lower = {2.0 * L + 2.0, 1.0};
  return std::exp(log_pref) * hyp_pfq_unit(spec);
}

double hydrogen_moment_p(const HydrogenState& s, double b) {
  if (!(b > 0.0)) {
    throw std::domain_error("hydrogen_moment_p: order must be positive");
  }
  const double L = s.grand_l;
  if (!(b < 2.0 * L + 5.0)) {
    throw DivergentMomentError(
        "hydrogen_moment_p: <p^b> diverges for b >= 2L+5 = " +
        std::to_string(2.0 * L + 5.0) + " (got b = " + std::to_string(b) + ")");
  }
  const double eta = s.eta;
  const double log_pref =
      2.0 * std::numbers::ln2_v<double> + log_gamma(eta + L + 1.0) +
      log_gamma(L + 0.5 * (b + 3.0)) + log_gamma(L + 0.5 * (5.0 - b)) -
      (b - 1.0) * std::log(eta) - log_gamma(eta - L) -
      2.0 * log_gamma(L + 1.5) - log_gamma(2.0 * L + 4.0);
  HypergeometricSpec spec;
  spec.upper = {L + 1.0 - eta, L + eta + 1.0, L + 1.0, L + 0.5 * (b + 3.0),
                L + 0.5 * (5.0 - b)};
  spec.lower = {2.0 * L + 2.0, L + 1.5, L + 2.0, L + 2.5};
  return std::exp(log_pref) * hyp_pfq_unit(spec);
}

double oscillator_moment(const OscillatorState& s, double order) {
  if (!(order > -(s.d + 2.0 * s.l))) {
    throw DivergentMomentError(
        "oscillator_moment: <r^order> diverges at the origin for order <= "
        "-(d+2l) = " + std::to_string(-(s.d + 2.0 * s.l)));
  }
  // 3F2 lower parameter is l + d/2: required by the virial identity
  // <r^2> = 2n + l + d/2 and confirmed by the quadrature oracle in any d.
  const double log_pref = log_gamma(s.l + 0.5 * (s.d + order)) -
                          log_gamma(s.l + 0.5 * s.d);
  HypergeometricSpec spec;
  spec.upper = {-static_cast<double>(s.n), -0.5 * order, 0.5 * order + 1.0};
  spec.lower = {s.l + 0.5 * s.d, 1.0};
  return std::exp(log_pref) * hyp_pfq_unit(spec);
}

QuadratureResult quadrature_moment(const RadialFunction& f,
                                   const DimensionContext& ctx, double order) {
  if (f.dim() != ctx.d) {
    throw std::domain_error("quadrature_moment: dimension mismatch");
  }
  QuadratureResult res;
  radial_moment_impl(ctx.d, [&f](double r) { return f(r); }, order, &res);
  return res;
}

}  // namespace momunc
