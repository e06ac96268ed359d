#pragma once

#include <functional>

#include "momunc/bounds.hpp"
#include "momunc/quadrature.hpp"

namespace momunc {

// Generalized Laguerre L_p^q(x), three-term recurrence.
double laguerre(int p, double q, double x);

// Gegenbauer C_p^q(x), three-term recurrence; q > -1/2.
double gegenbauer(int p, double q, double x);

// d-dimensional hydrogenic eigenstate (d >= 2, n >= 1, 0 <= l <= n-1) with
// grand quantum numbers eta = n + (d-3)/2, L = l + (d-3)/2 and E = -1/(2 eta^2).
struct HydrogenState {
  HydrogenState(int dim, int n, int l);
  int d;
  int n;
  int l;
  double eta;
  double grand_l;
  double energy;
};

// d-dimensional isotropic oscillator eigenstate (d >= 1, n >= 0, l >= 0),
// E = 2n + l + d/2.
struct OscillatorState {
  OscillatorState(int dim, int n, int l);
  int d;
  int n;
  int l;
  double energy;
};

// Radial amplitude r -> R(r), normalized so that int r^{d-1} R^2 dr = 1.
class RadialFunction {
 public:
  RadialFunction(int dim, std::function<double(double)> amp, double norm);
  double operator()(double r) const { return amp_(r); }
  int dim() const { return dim_; }
  double normalization() const { return norm_; }

 private:
  int dim_;
  std::function<double(double)> amp_;
  double norm_;
};

RadialFunction hydrogen_radial_position(const HydrogenState& s);
RadialFunction hydrogen_radial_momentum(const HydrogenState& s);
RadialFunction oscillator_radial(const OscillatorState& s);

// <r^a> of a hydrogenic state through the terminating 3F2 closed form; a > 0.
double hydrogen_moment_r(const HydrogenState& s, double a);

// <p^b> through the terminating 5F4 closed form; requires 0 < b < 2L+5
// (momentum densities decay polynomially, higher moments diverge).
double hydrogen_moment_p(const HydrogenState& s, double b);

// Oscillator <r^order> = <p^order> (position and momentum radial functions
// coincide); requires order > -(d + 2l).
double oscillator_moment(const OscillatorState& s, double order);

// Independent oracle: adaptive quadrature of r^{d+order-1} |f(r)|^2.
QuadratureResult quadrature_moment(const RadialFunction& f,
                                   const DimensionContext& ctx, double order);

}  // namespace momunc
