#pragma once

#include <functional>

namespace momunc {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_intervals = 40000;
  int initial_slices = 8;
};

// Adaptive Gauss-Kronrod 15 on [lo, hi], worst-interval-first refinement.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureOptions& opt = {});

// Integral over [lo, inf), lo >= 0. The axis is split where the integrand
// has decayed; the remainder is mapped to (0, 1/split] through r -> 1/t and
// integrated adaptively, so slowly decaying tails carry no truncation error.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lo,
                                         const QuadratureOptions& opt = {});

}  // namespace momunc
