#include "momunc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "momunc/errors.hpp"

namespace momunc {

namespace {

// QUADPACK dqk15 nodes and weights (positive half, node 7 is the midpoint).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi;
  double value;
  double error;
};

struct SegmentWorse {
  bool operator()(const Segment& a, const Segment& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;  // deterministic tie-break
  }
};

Segment kronrod15(const std::function<double(double)>& f, double lo, double hi,
                  int* evaluations) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * kXgk[j]);
    fv[14 - j] = f(center + half * kXgk[j]);
  }
  fv[7] = f(center);
  *evaluations += 15;

  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv[j] + fv[14 - j]);
  resk += kWgk[7] * fv[7];
  for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  resg += kWg[3] * fv[7];

  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv[j] - reskh) + std::abs(fv[14 - j] - reskh));
  }
  resasc *= std::abs(half);

  double err = std::abs(resk - resg) * std::abs(half) * 200.0;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(err / resasc, 1.5));
  }
  const Segment seg{lo, hi, resk * half, err};
  if (!std::isfinite(seg.value)) {
    throw QuadratureError("integrand not finite on [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  return seg;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, const QuadratureOptions& opt) {
  QuadratureResult res;
  if (lo == hi) return res;

  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> heap;
  const int slices = std::max(1, opt.initial_slices);
  double total = 0.0, err = 0.0;
  for (int i = 0; i < slices; ++i) {
    const double a = lo + (hi - lo) * i / slices;
    const double b = lo + (hi - lo) * (i + 1) / slices;
    Segment s = kronrod15(f, a, b, &res.evaluations);
    total += s.value;
    err += s.error;
    heap.push(s);
  }

  int intervals = slices;
  auto tolerance = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
  while (err > tolerance() && intervals < opt.max_intervals && !heap.empty()) {
    Segment worst = heap.top();
    heap.pop();
    total -= worst.value;
    err -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {  // interval at machine resolution
      total += worst.value;
      err += worst.error;
      break;
    }
    for (const Segment& s : {kronrod15(f, worst.lo, mid, &res.evaluations),
                             kronrod15(f, mid, worst.hi, &res.evaluations)}) {
      total += s.value;
      err += s.error;
      heap.push(s);
    }
    ++intervals;
  }

  res.value = total;
  res.error_estimate = err;
  if (err > 1e3 * tolerance()) {
    throw QuadratureError("adaptive quadrature failed to converge: error " +
                          std::to_string(err) + " after " +
                          std::to_string(intervals) + " intervals");
  }
  return res;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lo, const QuadratureOptions& opt) {
  if (lo < 0.0) throw QuadratureError("integrate_semi_infinite: lo must be >= 0");

  // Geometric scan to find the decay point for the split.
  const double base = std::max(1.0, lo);
  double peak = 0.0;
  double peak_pos = lo;
  double split = 0.0;
  for (int k = 0; k < 160; ++k) {
    const double s = lo + 1e-3 * base * std::pow(2.0, 0.25 * k);
    const double v = std::abs(f(s));
    if (v > peak) {
      peak = v;
      peak_pos = s;
      split = 0.0;
    } else if (split == 0.0 && peak > 0.0 && v < 1e-10 * peak &&
               s >= 2.0 * peak_pos) {
      split = s;
    }
  }
  if (split == 0.0) split = lo + 1e6 * base;

  QuadratureOptions half = opt;
  half.abs_tol = 0.5 * opt.abs_tol;
  half.rel_tol = 0.5 * opt.rel_tol;
  QuadratureResult head = integrate(f, lo, split, half);

  auto tail_integrand = [&f](double t) {
    const double r = 1.0 / t;
    return f(r) * r * r;
  };
  QuadratureOptions tail_opt = half;
  tail_opt.initial_slices = 16;
  QuadratureResult tail = integrate(tail_integrand, 0.0, 1.0 / split, tail_opt);

  return {head.value + tail.value, head.error_estimate + tail.error_estimate,
          head.evaluations + tail.evaluations};
}

}  // namespace momunc
