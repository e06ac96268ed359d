#include "momunc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "momunc/errors.hpp"

namespace momunc::specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Bernoulli tail of the digamma asymptotic series, argument 1/x^2.
double digamma_tail(double inv2) {
  return inv2 * (1.0 / 12.0 -
                 inv2 * (1.0 / 120.0 -
                         inv2 * (1.0 / 252.0 -
                                 inv2 * (1.0 / 240.0 -
                                         inv2 * (1.0 / 132.0 -
                                                 inv2 * 691.0 / 32760.0)))));
}

bool near_nonpositive_integer(double x, double tol, int* value) {
  const double r = std::round(x);
  if (r > 0.5 || std::abs(x - r) > tol) return false;
  *value = static_cast<int>(r);
  return true;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("log_gamma: argument must be positive, got " +
                            std::to_string(x));
  }
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
  const double t = x + kLanczosG - 0.5;
  return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double digamma(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("digamma: argument must be positive, got " +
                            std::to_string(x));
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  return acc + std::log(x) - 0.5 * inv - digamma_tail(inv * inv);
}

double psi_minus_log(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("psi_minus_log: argument must be positive");
  }
  if (x < 10.0) return digamma(x) - std::log(x);
  const double inv = 1.0 / x;
  return -0.5 * inv - digamma_tail(inv * inv);
}

double log_gamma_ratio(double y, double c) {
  if (!(y > 0.0) || !(y + c > 0.0)) {
    throw std::domain_error("log_gamma_ratio: arguments must stay positive");
  }
  const double z = y + c;
  if (std::min(y, z) >= 100.0) {
    // Differenced Stirling series; log1p carries the leading cancellation.
    const double y3 = y * y * y;
    const double z3 = z * z * z;
    return (y - 0.5) * std::log1p(c / y) + c * (std::log(z) - 1.0) -
           c / (12.0 * y * z) + (1.0 / 360.0) * (1.0 / y3 - 1.0 / z3) -
           (1.0 / 1260.0) * (1.0 / (y3 * y * y) - 1.0 / (z3 * z * z));
  }
  return log_gamma(z) - log_gamma(y);
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw std::domain_error("log_beta: arguments must be positive");
  }
  const double small = std::min(x, y);
  const double big = std::max(x, y);
  if (big >= 1e4) return log_gamma(small) - log_gamma_ratio(big, small);
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

int termination_index(const HypergeometricSpec& spec) {
  int best = -1;
  for (double u : spec.upper) {
    int m = 0;
    if (near_nonpositive_integer(u, spec.integer_tolerance, &m)) {
      if (best < 0 || -m < best) best = -m;
    }
  }
  if (best < 0) {
    throw UnsupportedSeriesError(
        "hyp_pfq_unit: no upper parameter terminates the series");
  }
  return best;
}

double hyp_pfq_unit(const HypergeometricSpec& spec) {
  const int K = termination_index(spec);
  for (double c : spec.lower) {
    int m = 0;
    if (near_nonpositive_integer(c, spec.integer_tolerance, &m) && -m <= K - 1) {
      throw SeriesPoleError(
          "hyp_pfq_unit: lower parameter " + std::to_string(c) +
          " reaches a pole before the series terminates at k=" +
          std::to_string(K));
    }
  }
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;  // Kahan compensation
  for (int k = 0; k < K; ++k) {
    double num = 1.0;
    double den = static_cast<double>(k) + 1.0;
    for (double u : spec.upper) num *= u + k;
    for (double c : spec.lower) den *= c + k;
    term *= num / den;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace momunc::specfun
