#include "momunc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "momunc/errors.hpp"
#include "momunc/quadrature.hpp"
#include "momunc/specfun.hpp"

namespace momunc {

namespace {

using specfun::digamma;
using specfun::log_beta;
using specfun::log_gamma;
using specfun::psi_minus_log;

constexpr double kBranchWindow = 1e-6;  // |lambda-1| below this: lambda=1 branch
const double kLog2PiE = std::log(2.0 * std::numbers::pi_v<double>) + 1.0;

void require_in_domain(double l, double lambda, const DimensionContext& ctx,
                       const char* who) {
  if (!(l > 0.0)) {
    throw std::domain_error(std::string(who) + ": moment order must be positive");
  }
  const double edge = ctx.d / (ctx.d + l);
  if (!(lambda > edge)) {
    throw DivergentMomentError(
        std::string(who) + ": requires lambda > d/(d+l) = " +
        std::to_string(edge) + ", got " + std::to_string(lambda) +
        " (the moment integral of the maximizer diverges)");
  }
}

// lambda = 1 branch: 2 pi e (l / (Omega Gamma(d/l)))^{2/d} (d/(l e))^{2/l}.
double log_bound_M_unit(double l, const DimensionContext& ctx) {
  const double d = ctx.d;
  return kLog2PiE +
         (2.0 / d) * (std::log(l) - ctx.log_omega - log_gamma(d / l)) +
         (2.0 / l) * (std::log(d) - std::log(l) - 1.0);
}

// g and h of the derivative closed forms, via psi_minus_log so their
// differences stay accurate for large arguments.
double g_term(double x) { return psi_minus_log(x) + 1.0 / x; }
double h_term(double x) { return psi_minus_log(x); }

}  // namespace

DimensionContext::DimensionContext(int dim) : d(dim) {
  if (dim < 1) {
    throw std::domain_error("DimensionContext: dimension must be >= 1");
  }
  log_omega = std::numbers::ln2_v<double> +
              0.5 * dim * std::log(std::numbers::pi_v<double>) -
              log_gamma(0.5 * dim);
  omega = std::exp(log_omega);
}

MomentOrders::MomentOrders(double a_, double b_, DimensionContext ctx_)
    : a(a_), b(b_), ctx(ctx_) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("MomentOrders: orders must be positive");
  }
}

namespace detail {

double log_bound_M_branch(double l, double lambda, const DimensionContext& ctx) {
  require_in_domain(l, lambda, ctx, "bound_M");
  const double d = ctx.d;
  if (lambda == 1.0) return log_bound_M_unit(l, ctx);

  // S = lambda (l+d) - d > 0 in the domain; d + l mu = S/(lambda-1).
  const double S = lambda * (l + d) - d;
  double log_B1;
  if (lambda > 1.0) {
    log_B1 = log_beta(d / l, lambda / (lambda - 1.0));
  } else {
    log_B1 = log_beta(d / l, 1.0 + S / (l * (1.0 - lambda)));
  }
  // middle factor (sign(mu) d / (d + l mu))^{2/l} = (d |lambda-1| / S)^{2/l}
  const double middle =
      (2.0 / l) * (std::log(d) + std::log(std::abs(lambda - 1.0)) - std::log(S));
  // third factor (l mu / (d + l mu))^{2(mu-1)/d} = (l lambda / S)^{2/(d(lambda-1))};
  // ln(l lambda) - ln S = -log1p(d(lambda-1)/(l lambda)) exactly.
  const double third = -(2.0 / (d * (lambda - 1.0))) *
                       std::log1p(d * (lambda - 1.0) / (l * lambda));
  return kLog2PiE + (2.0 / d) * (std::log(l) - ctx.log_omega - log_B1) + middle +
         third;
}

}  // namespace detail

double log_bound_M(double l, double lambda, const DimensionContext& ctx) {
  require_in_domain(l, lambda, ctx, "bound_M");
  if (std::abs(lambda - 1.0) <= kBranchWindow) return log_bound_M_unit(l, ctx);
  return detail::log_bound_M_branch(l, lambda, ctx);
}

double bound_M(double l, const RenyiIndex& lam, const DimensionContext& ctx) {
  return std::exp(log_bound_M(l, lam.value(), ctx));
}

double dlogM_dlambda(double l, const RenyiIndex& lam, const DimensionContext& ctx) {
  const double lambda = lam.value();
  require_in_domain(l, lambda, ctx, "dlogM_dlambda");
  if (std::abs(lambda - 1.0) <= kBranchWindow) return 1.0 / l;
  const double d = ctx.d;
  const double mu = lambda / (lambda - 1.0);
  const double pref = 2.0 / (d * (lambda - 1.0) * (lambda - 1.0));
  if (lambda > 1.0) {
    return pref * (g_term(mu) - g_term(mu + d / l));
  }
  const double nu = -mu;  // nu > d/l
  return pref * (h_term(nu) - h_term(nu - d / l));
}

double log_classical_bound_D(double a, double b, const DimensionContext& ctx) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::domain_error("classical_bound_D: orders must be positive");
  }
  const double d = ctx.d;
  const double lg_half = log_gamma(1.0 + 0.5 * d);
  auto term = [&](double l) {
    return 1.0 + (2.0 / l) * (std::log(d) - std::log(l) - 1.0) +
           (2.0 / d) * (lg_half - log_gamma(1.0 + d / l));
  };
  return term(a) + term(b);
}

double classical_bound_D(const MomentOrders& m) {
  return std::exp(log_classical_bound_D(m.a, m.b, m.ctx));
}

SearchInterval search_domain(double a, const DimensionContext& ctx) {
  if (!(a > 0.0)) {
    throw std::domain_error("search_domain: order must be positive");
  }
  return {std::max(0.5, ctx.d / (ctx.d + a)), 1.0};
}

double log_objective(double a, double b, double alpha, const DimensionContext& ctx) {
  const SearchInterval dom = search_domain(a, ctx);
  if (!(alpha > dom.lo) || !(alpha <= dom.hi)) {
    throw std::domain_error("objective: alpha=" + std::to_string(alpha) +
                            " outside (" + std::to_string(dom.lo) + ", 1]");
  }
  const double astar = alpha == 1.0 ? 1.0 : conjugate_order(alpha);
  return log_bound_B(alpha) + log_bound_M(a, alpha, ctx) +
         log_bound_M(b, astar, ctx);
}

double objective(double a, double b, const RenyiIndex& alpha,
                 const DimensionContext& ctx) {
  return std::exp(log_objective(a, b, alpha.value(), ctx));
}

namespace {

struct GoldenOutcome {
  double x;
  double fx;
  long evaluations;
};

// Golden-section maximization; ties resolve toward smaller x.
template <typename F>
GoldenOutcome golden_max(const F& f, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  long evals = 2;
  while (b - a > tol && evals < 200) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
    ++evals;
  }
  if (f1 >= f2) return {x1, f1, evals};
  return {x2, f2, evals};
}

}  // namespace

BoundResult bound_C(const MomentOrders& m, const OptimizerOptions& opt) {
  if (m.b > m.a) {
    // C(b,a) = C(a,b), alpha_opt(b,a) = alpha_opt(a,b)*. The reported
    // interval is the conjugate image of the one actually searched.
    BoundResult inner = bound_C(MomentOrders(m.b, m.a, m.ctx), opt);
    const double eps = 1e-9 * (1.0 - inner.search_interval.lo);
    return BoundResult{inner.value,
                       inner.alpha_opt.conjugate(),
                       {1.0, conjugate_order(inner.search_interval.lo + eps)},
                       inner.evaluations};
  }

  const SearchInterval dom = search_domain(m.a, m.ctx);
  const int grid = std::max(16, opt.grid_points);
  const double eps = 1e-9 * (dom.hi - dom.lo);
  const double lo = dom.lo + eps;

  long evals = 0;
  auto f = [&](double alpha) {
    ++evals;
    return log_objective(m.a, m.b, alpha, m.ctx);
  };

  double best_x = 0.0;
  double best_f = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  auto grid_point = [&](int i) {
    return lo + (dom.hi - lo) * i / (grid - 1);
  };
  for (int i = 0; i < grid; ++i) {
    const double x = grid_point(i);
    const double fx = f(x);
    if (fx > best_f) {
      best_f = fx;
      best_x = x;
      best_i = i;
    }
  }

  const double blo = grid_point(std::max(0, best_i - 1));
  const double bhi = grid_point(std::min(grid - 1, best_i + 1));
  const GoldenOutcome refined = golden_max(f, blo, bhi, opt.tol);
  if (refined.fx > best_f) {
    best_f = refined.fx;
    best_x = refined.x;
  }
  if (!std::isfinite(best_f)) {
    throw OptimizerError("bound_C: optimizer failed to bracket a maximum after " +
                         std::to_string(evals) + " evaluations");
  }
  return BoundResult{std::exp(best_f), RenyiIndex(best_x), dom, evals};
}

double bound_product_2d(double a, double b, const RenyiIndex& alpha,
                        const RenyiIndex& beta, const DimensionContext& ctx) {
  // Domain checks happen inside log_bound_M / log_bound_Z.
  return std::exp(log_bound_Z(alpha.value(), beta.value()) +
                  log_bound_M(a, alpha.value(), ctx) +
                  log_bound_M(b, beta.value(), ctx));
}

// ---------------------------------------------------------------------------
// Appendix-A maximizer density and the saturation oracle.
// ---------------------------------------------------------------------------

namespace {

struct BetaTriple {
  double log_B1;  // normalization integral
  double log_Bm;  // moment integral
  double log_Bh;  // entropic-moment integral
};

BetaTriple maxent_betas(double l, double lambda, const DimensionContext& ctx) {
  const double d = ctx.d;
  const double S = lambda * (l + d) - d;
  if (lambda > 1.0) {
    const double mu = lambda / (lambda - 1.0);
    return {log_beta(d / l, mu), log_beta(d / l + 1.0, mu),
            log_beta(d / l, mu + 1.0)};
  }
  const double t = S / (l * (1.0 - lambda));  // = -mu - d/l > 0
  return {log_beta(d / l, 1.0 + t), log_beta(d / l + 1.0, t), log_beta(d / l, t)};
}

}  // namespace

double MaxEntDensity::operator()(double r) const {
  if (r < 0.0) return 0.0;
  if (std::abs(lambda - 1.0) <= kBranchWindow) {
    return norm_C * std::exp(-std::pow(r / scale_delta, l));
  }
  const double u = 1.0 - (lambda - 1.0) * std::pow(r / scale_delta, l);
  if (u <= 0.0) return 0.0;
  return norm_C * std::pow(u, 1.0 / (lambda - 1.0));
}

double MaxEntDensity::support_radius() const {
  if (lambda > 1.0 + kBranchWindow) {
    return scale_delta * std::pow(lambda - 1.0, -1.0 / l);
  }
  return std::numeric_limits<double>::infinity();
}

MaxEntDensity make_maxent_density(double l, const RenyiIndex& lam,
                                  const DimensionContext& ctx,
                                  double moment_value) {
  const double lambda = lam.value();
  require_in_domain(l, lambda, ctx, "maxent");
  if (!(moment_value > 0.0)) {
    throw std::domain_error("maxent: moment value must be positive");
  }
  const double d = ctx.d;
  double log_delta, log_C;
  if (std::abs(lambda - 1.0) <= kBranchWindow) {
    // C exp(-(r/delta)^l): delta^l = m l / d, C = l / (Omega delta^d Gamma(d/l)).
    log_delta = (std::log(moment_value) + std::log(l) - std::log(d)) / l;
    log_C = std::log(l) - ctx.log_omega - d * log_delta - log_gamma(d / l);
  } else {
    const BetaTriple B = maxent_betas(l, lambda, ctx);
    const double log_abs = std::log(std::abs(lambda - 1.0));
    log_delta = (std::log(moment_value) + log_abs + B.log_B1 - B.log_Bm) / l;
    log_C = std::log(l) + (d / l) * log_abs - ctx.log_omega - d * log_delta -
            B.log_B1;
  }
  MaxEntDensity f{l,
                  lambda,
                  ctx,
                  std::exp(log_delta),
                  std::exp(log_C),
                  log_C,
                  moment_value};
  return f;
}

double MaxEntReport::residual() const {
  return std::max(residual_closed, residual_quadrature);
}

MaxEntReport maxent_verify(double l, const RenyiIndex& lam,
                           const DimensionContext& ctx, double moment_value) {
  const double lambda = lam.value();
  const MaxEntDensity f = make_maxent_density(l, lam, ctx, moment_value);
  const double d = ctx.d;
  const double omega = ctx.omega;

  QuadratureOptions qopt;
  qopt.abs_tol = 1e-12;
  qopt.rel_tol = 1e-12;

  auto radial = [&](auto&& integrand) -> double {
    const double edge = f.support_radius();
    if (std::isfinite(edge)) {
      return integrate(integrand, 0.0, edge, qopt).value;
    }
    return integrate_semi_infinite(integrand, 0.0, qopt).value;
  };

  const double norm_q =
      omega * radial([&](double r) { return std::pow(r, d - 1.0) * f(r); });
  const double moment_q = omega * radial([&](double r) {
    return std::pow(r, d + l - 1.0) * f(r);
  });

  // Entropy power, quadrature route.
  double h_quad;
  if (std::abs(lambda - 1.0) <= kBranchWindow) {
    h_quad = -omega * radial([&](double r) {
      const double v = f(r);
      if (v <= 0.0) return 0.0;
      return std::pow(r, d - 1.0) * v * std::log(v);
    });
  } else {
    const double frequency_moment = omega * radial([&](double r) {
      return std::pow(r, d - 1.0) * std::pow(f(r), lambda);
    });
    h_quad = std::log(frequency_moment) / (1.0 - lambda);
  }
  const double n_quad = std::exp(2.0 * h_quad / d - kLog2PiE);

  // Entropy power, closed route through B_h.
  double n_closed;
  if (std::abs(lambda - 1.0) <= kBranchWindow) {
    const double h = -f.log_norm_C + d / l;
    n_closed = std::exp(2.0 * h / d - kLog2PiE);
  } else {
    const BetaTriple B = maxent_betas(l, lambda, ctx);
    n_closed = std::exp(
        (2.0 / d) * (-f.log_norm_C + (B.log_Bh - B.log_B1) / (1.0 - lambda)) -
        kLog2PiE);
  }

  const double target = std::pow(moment_value, 2.0 / l);
  const double m_factor = std::exp(log_bound_M(l, lambda, ctx));
  MaxEntReport report{};
  report.norm_error = std::abs(norm_q - 1.0);
  report.moment_error = std::abs(moment_q - moment_value) / moment_value;
  report.entropy_power_closed = n_closed;
  report.entropy_power_quadrature = n_quad;
  report.residual_closed = std::abs(target - n_closed * m_factor) / target;
  report.residual_quadrature = std::abs(target - n_quad * m_factor) / target;
  return report;
}

}  // namespace momunc
