#include <cmath>
#include <limits>

#include "doctest.h"
#include "momunc/bounds.hpp"
#include "momunc/errors.hpp"

using namespace momunc;

namespace {

// Eq.-shaped reimplementation of D(a,b) in linear space, term by term.
double classical_d_oracle(double a, double b, int d) {
  auto factor = [&](double l) {
    return std::exp(1.0) * std::pow(d, 2.0 / l) *
           std::pow(std::tgamma(1.0 + 0.5 * d), 2.0 / d) /
           (std::pow(l * std::exp(1.0), 2.0 / l) *
            std::pow(std::tgamma(1.0 + d / l), 2.0 / d));
  };
  return factor(a) * factor(b);
}

// Dense-grid + golden refinement over the dominant-order domain, written
// independently of the library optimizer.
double dense_grid_c_oracle(double big, double small, int d, double* alpha_hat) {
  const DimensionContext ctx(d);
  const double lo = std::max(0.5, static_cast<double>(d) / (d + big)) + 1e-9;
  const int n = 100000;
  double best = -std::numeric_limits<double>::infinity();
  double best_x = lo;
  for (int i = 0; i < n; ++i) {
    const double x = lo + (1.0 - lo) * (i + 1) / n;
    const double v = log_objective(big, small, x, ctx);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - (1.0 - lo) / n);
  double b = std::min(1.0, best_x + (1.0 - lo) / n);
  const double phi = 0.6180339887498949;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = log_objective(big, small, x1, ctx);
  double f2 = log_objective(big, small, x2, ctx);
  for (int it = 0; it < 120 && b - a > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = log_objective(big, small, x2, ctx);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = log_objective(big, small, x1, ctx);
    }
  }
  *alpha_hat = f1 >= f2 ? x1 : x2;
  return std::exp(std::max({best, f1, f2}));
}

}  // namespace

TEST_CASE("DimensionContext surface of the unit sphere") {
  CHECK(DimensionContext(1).omega == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(DimensionContext(2).omega == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(DimensionContext(3).omega == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  for (int d = 1; d <= 12; ++d) {
    const double direct = 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
    CHECK(DimensionContext(d).omega == doctest::Approx(direct).epsilon(1e-13));
  }
  CHECK_THROWS_AS(DimensionContext(0), std::domain_error);
}

TEST_CASE("M(2, 1, d) = d") {
  for (int d : {1, 2, 3, 5, 10}) {
    const DimensionContext ctx(d);
    CHECK(bound_M(2.0, RenyiIndex(1.0), ctx) ==
          doctest::Approx(static_cast<double>(d)).epsilon(1e-13));
  }
}

TEST_CASE("M branch window returns the lambda=1 value") {
  const DimensionContext ctx(3);
  CHECK(bound_M(2.0, RenyiIndex(1.0 + 1e-7), ctx) ==
        doctest::Approx(3.0).epsilon(1e-6));
  CHECK(bound_M(2.0, RenyiIndex(1.0 - 1e-7), ctx) ==
        doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("M branches are continuous across the lambda=1 switch") {
  for (double l : {0.5, 2.0, 4.0}) {
    for (int d : {1, 3, 5}) {
      const DimensionContext ctx(d);
      const double unit = log_bound_M(l, 1.0, ctx);
      const double above = detail::log_bound_M_branch(l, 1.0 + 1e-9, ctx);
      const double below = detail::log_bound_M_branch(l, 1.0 - 1e-9, ctx);
      CHECK(std::abs(above - unit) <= 1e-8);
      CHECK(std::abs(below - unit) <= 1e-8);
    }
  }
}

TEST_CASE("M domain edge: error at lambda <= d/(d+l), decay just above") {
  const DimensionContext ctx(3);
  CHECK_THROWS_AS(log_bound_M(1.0, 0.75, ctx), DivergentMomentError);
  CHECK_THROWS_AS(log_bound_M(1.0, 0.2, ctx), DivergentMomentError);
  CHECK(std::exp(log_bound_M(1.0, 0.75 + 1e-9, ctx)) < 1e-3);
}

TEST_CASE("dlogM at lambda 1 and against finite differences") {
  const DimensionContext d3(3);
  CHECK(dlogM_dlambda(2.0, RenyiIndex(1.0), d3) == 0.5);
  const double h = 1e-6;
  const double fd =
      (log_bound_M(1.0, 1.5 + h, d3) - log_bound_M(1.0, 1.5 - h, d3)) / (2.0 * h);
  CHECK(std::abs(dlogM_dlambda(1.0, RenyiIndex(1.5), d3) - fd) <= 1e-5);
  const DimensionContext d5(5);
  CHECK(dlogM_dlambda(3.0, RenyiIndex(0.8), d5) > 0.0);
}

TEST_CASE("classical bound D reductions and oracle") {
  for (int d : {1, 2, 3, 5, 10}) {
    const DimensionContext ctx(d);
    CHECK(classical_bound_D(MomentOrders(2.0, 2.0, ctx)) ==
          doctest::Approx(0.25 * d * d).epsilon(1e-13));
  }
  const DimensionContext ctx(3);
  CHECK(classical_bound_D(MomentOrders(2.0, 2.0, ctx)) ==
        doctest::Approx(2.25).epsilon(1e-14));
  const double d12 = classical_bound_D(MomentOrders(1.0, 2.0, ctx));
  CHECK(d12 > 0.0);
  CHECK(d12 < 2.25);
  for (double a : {0.3, 1.0, 2.7}) {
    for (double b : {0.6, 2.0, 5.0}) {
      CHECK(classical_bound_D(MomentOrders(a, b, ctx)) ==
            doctest::Approx(classical_d_oracle(a, b, 3)).epsilon(1e-12));
    }
  }
}

TEST_CASE("search_domain") {
  CHECK(search_domain(2.0, DimensionContext(2)).lo == 0.5);
  CHECK(search_domain(0.1, DimensionContext(5)).lo ==
        doctest::Approx(5.0 / 5.1).epsilon(1e-15));
  CHECK(search_domain(10.0, DimensionContext(3)).lo == 0.5);
  CHECK(search_domain(2.0, DimensionContext(2)).hi == 1.0);
}

TEST_CASE("objective compositions") {
  const DimensionContext ctx(3);
  CHECK(objective(2.0, 2.0, RenyiIndex(1.0), ctx) ==
        doctest::Approx(2.25).epsilon(1e-12));
  // alpha = 1 reproduces D exactly.
  CHECK(objective(1.0, 2.0, RenyiIndex(1.0), ctx) ==
        doctest::Approx(classical_bound_D(MomentOrders(1.0, 2.0, ctx)))
            .epsilon(1e-12));
  // Near the open lower edge the a-side M collapses.
  const double lo = search_domain(2.0, ctx).lo;
  CHECK(objective(2.0, 2.0, RenyiIndex(lo + 1e-8), ctx) <
        objective(2.0, 2.0, RenyiIndex(1.0), ctx));
  CHECK_THROWS_AS(log_objective(2.0, 2.0, 0.55, ctx), std::domain_error);
  CHECK_THROWS_AS(log_objective(2.0, 2.0, 1.2, ctx), std::domain_error);
}

TEST_CASE("bound_C at a=b=2 recovers the Heisenberg constant") {
  const DimensionContext ctx(3);
  const BoundResult res = bound_C(MomentOrders(2.0, 2.0, ctx));
  CHECK(res.value == doctest::Approx(2.25).epsilon(1e-10));
  CHECK(std::abs(res.alpha_opt.value() - 1.0) <= 1e-8);
  CHECK(res.search_interval.lo == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(res.search_interval.hi == 1.0);
  CHECK(res.evaluations > 256);
}

TEST_CASE("bound_C(1,2,3) against the dense-grid oracle") {
  const DimensionContext ctx(3);
  const BoundResult res = bound_C(MomentOrders(1.0, 2.0, ctx));
  const double dval = classical_bound_D(MomentOrders(1.0, 2.0, ctx));
  CHECK(res.value >= dval);
  CHECK(res.value <= 2.25);  // the hydrogen ground-state product

  double alpha_hat = 0.0;
  const double oracle = dense_grid_c_oracle(2.0, 1.0, 3, &alpha_hat);
  CHECK(res.value == doctest::Approx(oracle).epsilon(1e-9));
  // alpha_opt(1,2) is the conjugate of the in-domain optimum for (2,1).
  CHECK(res.alpha_opt.value() ==
        doctest::Approx(conjugate_order(alpha_hat)).epsilon(1e-6));
  CHECK(res.alpha_opt.value() > 1.0);
  // The reported interval is the conjugate image and contains alpha_opt.
  CHECK(res.search_interval.lo <= res.alpha_opt.value());
  CHECK(res.alpha_opt.value() <= res.search_interval.hi);
}

TEST_CASE("bound_C symmetry under order swap") {
  const DimensionContext ctx(3);
  const BoundResult fwd = bound_C(MomentOrders(1.0, 2.0, ctx));
  const BoundResult rev = bound_C(MomentOrders(2.0, 1.0, ctx));
  CHECK(fwd.value == doctest::Approx(rev.value).epsilon(1e-12));
  CHECK(fwd.alpha_opt.value() ==
        doctest::Approx(conjugate_order(rev.alpha_opt.value())).epsilon(1e-9));
  CHECK(rev.alpha_opt.value() > 0.6);
  CHECK(rev.alpha_opt.value() <= 1.0);
}

TEST_CASE("bound_product_2d") {
  const DimensionContext ctx(3);
  // On the conjugation curve it collapses to the 1d objective.
  for (double alpha : {0.8, 0.9, 1.0}) {
    CHECK(bound_product_2d(1.0, 2.0, RenyiIndex(alpha),
                           RenyiIndex(conjugate_order(alpha)), ctx) ==
          doctest::Approx(objective(1.0, 2.0, RenyiIndex(alpha), ctx))
              .epsilon(1e-13));
  }
  // alpha = beta = 1 reproduces D.
  CHECK(bound_product_2d(1.5, 2.5, RenyiIndex(1.0), RenyiIndex(1.0), ctx) ==
        doctest::Approx(classical_bound_D(MomentOrders(1.5, 2.5, ctx)))
            .epsilon(1e-12));
  // Interior points never beat the optimized curve value.
  CHECK(bound_product_2d(2.0, 2.0, RenyiIndex(0.9), RenyiIndex(0.9), ctx) <=
        bound_C(MomentOrders(2.0, 2.0, ctx)).value + 1e-12);
  CHECK_THROWS_AS(
      bound_product_2d(1.0, 2.0, RenyiIndex(0.8), RenyiIndex(1.5), ctx),
      NoUncertaintyRelationError);
  CHECK_THROWS_AS(
      bound_product_2d(1.0, 2.0, RenyiIndex(0.6), RenyiIndex(0.9), ctx),
      DivergentMomentError);  // alpha <= 3/4 = d/(d+a)
}

TEST_CASE("maxent density: gaussian limit branch") {
  const DimensionContext ctx(3);
  const MaxEntDensity f = make_maxent_density(2.0, RenyiIndex(1.0), ctx, 3.0);
  CHECK(f.scale_delta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::isinf(f.support_radius()));
  // exp(-(r/delta)^2) shape
  CHECK(f(1.0) / f(0.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  const MaxEntReport rep = maxent_verify(2.0, RenyiIndex(1.0), ctx, 3.0);
  CHECK(rep.norm_error <= 1e-10);
  CHECK(rep.moment_error <= 1e-10);
  CHECK(rep.residual() <= 1e-8);
}

TEST_CASE("maxent density: compact-support branch") {
  const DimensionContext ctx(3);
  const RenyiIndex lam(1.5);
  const MaxEntDensity f = make_maxent_density(2.0, lam, ctx, 1.7);
  const double edge = f.support_radius();
  CHECK(std::isfinite(edge));
  CHECK(f(edge * 0.999) > 0.0);
  CHECK(f(edge * 1.001) == 0.0);
  const MaxEntReport rep = maxent_verify(2.0, lam, ctx, 1.7);
  CHECK(rep.residual() <= 1e-8);
}

TEST_CASE("maxent density: heavy-tail branch") {
  const DimensionContext ctx(2);
  const RenyiIndex lam(0.9);
  const MaxEntDensity f = make_maxent_density(1.0, lam, ctx, 2.2);
  CHECK(std::isinf(f.support_radius()));
  CHECK(f(1e6) > 0.0);
  const MaxEntReport rep = maxent_verify(1.0, lam, ctx, 2.2);
  CHECK(rep.residual() <= 1e-8);
  // The closed and quadrature entropy powers agree with each other too.
  CHECK(rep.entropy_power_quadrature ==
        doctest::Approx(rep.entropy_power_closed).epsilon(1e-9));
}

TEST_CASE("maxent matches bound_M (saturation of the moment bound)") {
  const DimensionContext ctx(3);
  const MaxEntReport rep = maxent_verify(1.0, RenyiIndex(0.9), ctx, 1.0);
  CHECK(rep.residual() <= 1e-8);
  CHECK_THROWS_AS(make_maxent_density(1.0, RenyiIndex(0.7), ctx, 1.0),
                  DivergentMomentError);  // 0.7 <= 3/4
  CHECK_THROWS_AS(make_maxent_density(1.0, RenyiIndex(0.9), ctx, -1.0),
                  std::domain_error);
}
