#pragma once

namespace momunc {

// Renyi order lambda with conjugate lambda* = lambda/(2 lambda - 1), so that
// 1/lambda + 1/lambda* = 2, and auxiliary mu = lambda/(lambda - 1).
class RenyiIndex {
 public:
  explicit RenyiIndex(double lambda);  // lambda > 0
  double value() const { return lambda_; }
  RenyiIndex conjugate() const;  // defined for lambda > 1/2
  double mu() const;             // defined for lambda != 1

 private:
  double lambda_;
};

double conjugate_order(double lambda);

// Entropy power N_lambda = exp((2/d) H_lambda) / (2 pi e).
struct EntropyPower {
  explicit EntropyPower(double v);
  double value;
};

// Sharp conjugate-pair bound: B(a) = a^{1/(a-1)} a*^{1/(a*-1)} / (4 e^2),
// B(1) = 1/4. Requires alpha >= 1/2.
double log_bound_B(double alpha);
double bound_B(const RenyiIndex& alpha);

// Two-index bound: 1/e^2 on [0,1/2]^2, B(max(alpha,beta)) otherwise.
// Requires 1/alpha + 1/beta >= 2 (i.e. beta <= alpha* when alpha > 1/2).
double log_bound_Z(double alpha, double beta);
double bound_Z(const RenyiIndex& alpha, const RenyiIndex& beta);

// Renyi entropy of an isotropic Gaussian density with per-axis standard
// deviation sigma in dim dimensions.
double gaussian_renyi_entropy(double lambda, double sigma, int dim);
EntropyPower gaussian_entropy_power(double lambda, double sigma, int dim);

// N_alpha(position Gaussian) * N_alpha*(its momentum Gaussian); equals
// bound_B(alpha) independently of sigma and dim -- the sharpness witness.
double gaussian_power_product(const RenyiIndex& alpha, double sigma,
                              int dim = 3);

}  // namespace momunc
