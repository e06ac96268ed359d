#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momunc/bounds.hpp"

namespace momunc {

enum class SystemKind { none, hydrogen, oscillator };

std::string to_string(SystemKind k);

struct SweepRow {
  double a;
  double b;
  int d;
  SystemKind system = SystemKind::none;
  std::optional<int> n;
  std::optional<int> l;
  std::optional<double> product;  // <r^a>^{2/a} <p^b>^{2/b}
  double bound_c;
  double bound_d;
  double alpha_opt;
  std::optional<double> ratio;  // product / bound_c
};

struct SkippedRow {
  double a;
  double b;
  int d;
  SystemKind system;
  int n;
  int l;
  std::string reason;
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::vector<SkippedRow> skipped;
};

struct BRange {
  double lo;
  double hi;
  int steps;
};

struct SweepOptions {
  OptimizerOptions optimizer;
  int threads = 0;  // 0: hardware concurrency
};

// Bound-only rows (C, D, alpha_opt) over a_values x linspace(b).
SweepTable sweep_bounds(const std::vector<double>& a_values, const BRange& b,
                        const DimensionContext& ctx, const SweepOptions& opt = {});

// One row per eigenstate at fixed orders. Hydrogen enumerates n = 1..n_max,
// l = 0..n-1; the oscillator n = 0..n_max, l = 0..l_max. Rows whose momentum
// moment diverges are recorded as skipped, not dropped.
SweepTable sweep_states(SystemKind system, int d, int n_max, int l_max, double a,
                        double b, const SweepOptions& opt = {});

// Fixed state, orders swept: the ground-state product-versus-b figures.
SweepTable sweep_state_orders(SystemKind system, int d, int n, int l,
                              const std::vector<double>& a_values,
                              const BRange& b, const SweepOptions& opt = {});

// Named sweep configurations: fig1..fig8, the standard bound and
// state-product tables.
const std::vector<std::string>& preset_names();
std::string preset_description(const std::string& name);
SweepTable run_preset(const std::string& name, const SweepOptions& opt = {});

}  // namespace momunc
