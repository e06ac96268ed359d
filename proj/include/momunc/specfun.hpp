#pragma once

#include <vector>

namespace momunc::specfun {

// ln Gamma(x) on the positive axis (Lanczos, g=7).
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

// ln B(x,y); stable when one argument is very large.
double log_beta(double x, double y);

// ln Gamma(y+c) - ln Gamma(y). Uses a differenced Stirling expansion for
// large y where the naive subtraction loses all significant digits.
double log_gamma_ratio(double y, double c);

// psi(x) - ln x. The two terms cancel to O(1/x); evaluated by series for
// large x so differences of this quantity stay accurate.
double psi_minus_log(double x);

struct HypergeometricSpec {
  std::vector<double> upper;
  std::vector<double> lower;
  double integer_tolerance = 1e-9;
};

// Smallest |m| over upper parameters within tolerance of a non-positive
// integer -m. Throws UnsupportedSeriesError if there is none.
int termination_index(const HypergeometricSpec& spec);

// pFq(upper; lower; 1) for a terminating series: term-ratio recurrence with
// compensated summation, exact termination at k = K.
double hyp_pfq_unit(const HypergeometricSpec& spec);

}  // namespace momunc::specfun
