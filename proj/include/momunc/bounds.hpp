#pragma once

#include "momunc/renyi.hpp"

namespace momunc {

// Spatial dimension d with the unit-sphere surface Omega = 2 pi^{d/2} / Gamma(d/2).
struct DimensionContext {
  explicit DimensionContext(int dim);
  int d;
  double omega;
  double log_omega;
};

struct MomentOrders {
  MomentOrders(double a_, double b_, DimensionContext ctx_);
  double a;
  double b;
  DimensionContext ctx;
};

struct SearchInterval {
  double lo;  // open
  double hi;  // closed
};

struct BoundResult {
  double value;
  RenyiIndex alpha_opt;
  SearchInterval search_interval;
  long evaluations;
};

struct OptimizerOptions {
  int grid_points = 256;  // coarse grid over the search interval
  double tol = 1e-10;     // golden-section bracket width
};

// Maximal factor M(l,lambda) relating <r^l>^{2/l} to the Renyi entropy
// power; three branches, continuous at lambda = 1, all in log space.
// Requires lambda > d/(d+l).
double log_bound_M(double l, double lambda, const DimensionContext& ctx);
double bound_M(double l, const RenyiIndex& lam, const DimensionContext& ctx);

// d(ln M)/d lambda via the digamma closed forms; 1/l at lambda = 1.
double dlogM_dlambda(double l, const RenyiIndex& lam, const DimensionContext& ctx);

// Shannon-entropy moment bound D(a,b).
double log_classical_bound_D(double a, double b, const DimensionContext& ctx);
double classical_bound_D(const MomentOrders& m);

// (max(1/2, d/(d+a)), 1] -- where the maximum of the objective lives for a >= b.
SearchInterval search_domain(double a, const DimensionContext& ctx);

// B(alpha) M(a,alpha) M(b,alpha*): the quantity maximized by bound_C.
// Requires alpha in search_domain(a).
double log_objective(double a, double b, double alpha, const DimensionContext& ctx);
double objective(double a, double b, const RenyiIndex& alpha,
                 const DimensionContext& ctx);

// Optimized moment-uncertainty bound C(a,b) >= D(a,b), with C(b,a) = C(a,b)
// and alpha_opt(b,a) = alpha_opt(a,b)* handled by the order swap.
BoundResult bound_C(const MomentOrders& m, const OptimizerOptions& opt = {});

// Unoptimized two-index bound Z(alpha,beta) M(a,alpha) M(b,beta); used to
// verify that the maximum sits on the conjugation curve beta = alpha*.
double bound_product_2d(double a, double b, const RenyiIndex& alpha,
                        const RenyiIndex& beta, const DimensionContext& ctx);

// Stretched q-Gaussian maximizer of N_lambda under an <r^l> constraint.
struct MaxEntDensity {
  double l;
  double lambda;
  DimensionContext ctx;
  double scale_delta;
  double norm_C;
  double log_norm_C;
  double moment;                    // the <r^l> it was built for
  double operator()(double r) const;  // radial density value
  double support_radius() const;      // +inf unless lambda > 1
};

MaxEntDensity make_maxent_density(double l, const RenyiIndex& lam,
                                  const DimensionContext& ctx,
                                  double moment_value);

struct MaxEntReport {
  double norm_error;            // |quadrature norm - 1|
  double moment_error;          // relative error of the quadrature moment
  double entropy_power_closed;     // via B_h
  double entropy_power_quadrature;  // via radial quadrature of f^lambda
  double residual_closed;       // |m^{2/l} - N M| / m^{2/l}, closed N
  double residual_quadrature;   // same with the quadrature N
  double residual() const;
};

// Saturation witness: at the maximizer, <r^l>^{2/l} = N_lambda(f) M(l,lambda).
MaxEntReport maxent_verify(double l, const RenyiIndex& lam,
                           const DimensionContext& ctx, double moment_value);

namespace detail {
// Branch formulas without the |lambda-1| <= 1e-6 dispatch, for continuity tests.
double log_bound_M_branch(double l, double lambda, const DimensionContext& ctx);
}  // namespace detail

}  // namespace momunc
