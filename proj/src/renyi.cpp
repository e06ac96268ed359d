#include "momunc/renyi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "momunc/errors.hpp"

namespace momunc {

namespace {

constexpr double kUnitWindow = 1e-8;  // |lambda-1| below this uses the limit
constexpr double kLog4 = 1.3862943611198906188;  // ln 4

// ln(lambda)^{1/(lambda-1)} exponent, i.e. ln(lambda)/(lambda-1); limit 1.
double log_pow_exponent(double lambda) {
  if (std::abs(lambda - 1.0) <= kUnitWindow) return 1.0;
  return std::log1p(lambda - 1.0) / (lambda - 1.0);
}

}  // namespace

RenyiIndex::RenyiIndex(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0)) {
    throw std::domain_error("RenyiIndex: order must be positive, got " +
                            std::to_string(lambda));
  }
}

double conjugate_order(double lambda) {
  if (!(lambda > 0.5)) {
    throw std::domain_error(
        "conjugate: defined for lambda > 1/2, diverges at lambda = 1/2 (got " +
        std::to_string(lambda) + ")");
  }
  return lambda / (2.0 * lambda - 1.0);
}

RenyiIndex RenyiIndex::conjugate() const {
  return RenyiIndex(conjugate_order(lambda_));
}

double RenyiIndex::mu() const {
  if (lambda_ == 1.0) {
    throw std::domain_error("mu: undefined at lambda = 1");
  }
  return lambda_ / (lambda_ - 1.0);
}

EntropyPower::EntropyPower(double v) : value(v) {
  if (!(v > 0.0)) {
    throw std::domain_error("EntropyPower: value must be positive");
  }
}

double log_bound_B(double alpha) {
  if (!(alpha >= 0.5)) {
    throw std::domain_error("bound_B: requires alpha >= 1/2, got " +
                            std::to_string(alpha));
  }
  // B = alpha^{1/(alpha-1)} alpha*^{1/(alpha*-1)} / (4 e^2); the alpha* term
  // tends to 1 as alpha -> 1/2 (alpha* -> infinity).
  const double t1 = log_pow_exponent(alpha);
  const double t2 = alpha == 0.5 ? 0.0 : log_pow_exponent(conjugate_order(alpha));
  return t1 + t2 - kLog4 - 2.0;
}

double bound_B(const RenyiIndex& alpha) { return std::exp(log_bound_B(alpha.value())); }

double log_bound_Z(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("bound_Z: orders must be positive");
  }
  if (alpha <= 0.5 && beta <= 0.5) return -2.0;  // 1/e^2
  if (1.0 / alpha + 1.0 / beta < 2.0 - 1e-12) {
    throw NoUncertaintyRelationError(
        "bound_Z: beta > alpha*, the entropy-power product is only trivially "
        "non-negative (alpha=" + std::to_string(alpha) +
        ", beta=" + std::to_string(beta) + ")");
  }
  return log_bound_B(std::max(alpha, beta));
}

double bound_Z(const RenyiIndex& alpha, const RenyiIndex& beta) {
  return std::exp(log_bound_Z(alpha.value(), beta.value()));
}

double gaussian_renyi_entropy(double lambda, double sigma, int dim) {
  if (!(lambda > 0.0)) throw std::domain_error("gaussian_renyi_entropy: lambda > 0");
  if (!(sigma > 0.0)) throw std::domain_error("gaussian_renyi_entropy: sigma > 0");
  if (dim < 1) throw std::domain_error("gaussian_renyi_entropy: dim >= 1");
  const double two_pi = 2.0 * std::numbers::pi_v<double>;
  return 0.5 * dim * (std::log(two_pi * sigma * sigma) + log_pow_exponent(lambda));
}

EntropyPower gaussian_entropy_power(double lambda, double sigma, int dim) {
  const double h = gaussian_renyi_entropy(lambda, sigma, dim);
  const double log_2pie = std::log(2.0 * std::numbers::pi_v<double>) + 1.0;
  return EntropyPower(std::exp(2.0 * h / dim - log_2pie));
}

double gaussian_power_product(const RenyiIndex& alpha, double sigma, int dim) {
  if (!(alpha.value() > 0.5)) {
    throw std::domain_error("gaussian_power_product: requires alpha > 1/2");
  }
  if (!(sigma > 0.0)) {
    throw std::domain_error("gaussian_power_product: requires sigma > 0");
  }
  // Position density per-axis variance sigma^2 implies momentum per-axis
  // variance 1/(4 sigma^2).
  const double sigma_p = 1.0 / (2.0 * sigma);
  const double np = gaussian_entropy_power(alpha.value(), sigma, dim).value;
  const double ng =
      gaussian_entropy_power(conjugate_order(alpha.value()), sigma_p, dim).value;
  return np * ng;
}

}  // namespace momunc
