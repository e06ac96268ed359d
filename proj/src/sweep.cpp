#include "momunc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "momunc/errors.hpp"
#include "momunc/quantum.hpp"

namespace momunc {

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static index partition; results land in pre-sized slots, so the outcome is
// identical for any thread count.
void parallel_for(int threads, int count, const std::function<void(int)>& body) {
  threads = std::min(resolve_threads(threads), std::max(1, count));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += threads) body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<double> linspace(const BRange& r) {
  if (r.steps < 1) throw std::domain_error("sweep: b-range needs >= 1 step");
  std::vector<double> out(r.steps);
  if (r.steps == 1) {
    out[0] = r.lo;
    return out;
  }
  for (int i = 0; i < r.steps; ++i) {
    out[i] = r.lo + (r.hi - r.lo) * i / (r.steps - 1);
  }
  return out;
}

struct StateMoments {
  double r_moment;
  double p_moment;
};

StateMoments state_moments(SystemKind system, int d, int n, int l, double a,
                           double b) {
  if (system == SystemKind::hydrogen) {
    const HydrogenState s(d, n, l);
    return {hydrogen_moment_r(s, a), hydrogen_moment_p(s, b)};
  }
  const OscillatorState s(d, n, l);
  return {oscillator_moment(s, a), oscillator_moment(s, b)};
}

}  // namespace

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::hydrogen:
      return "hydrogen";
    case SystemKind::oscillator:
      return "oscillator";
    default:
      return "";
  }
}

SweepTable sweep_bounds(const std::vector<double>& a_values, const BRange& b,
                        const DimensionContext& ctx, const SweepOptions& opt) {
  const std::vector<double> bs = linspace(b);
  SweepTable table;
  table.rows.resize(a_values.size() * bs.size());
  parallel_for(opt.threads, static_cast<int>(table.rows.size()), [&](int i) {
    const double a = a_values[i / bs.size()];
    const double bb = bs[i % bs.size()];
    const BoundResult res = bound_C(MomentOrders(a, bb, ctx), opt.optimizer);
    SweepRow& row = table.rows[i];
    row.a = a;
    row.b = bb;
    row.d = ctx.d;
    row.bound_c = res.value;
    row.bound_d = classical_bound_D(MomentOrders(a, bb, ctx));
    row.alpha_opt = res.alpha_opt.value();
  });
  return table;
}

SweepTable sweep_states(SystemKind system, int d, int n_max, int l_max, double a,
                        double b, const SweepOptions& opt) {
  if (system == SystemKind::none) {
    throw std::domain_error("sweep_states: needs a physical system");
  }
  const DimensionContext ctx(d);
  const BoundResult bound = bound_C(MomentOrders(a, b, ctx), opt.optimizer);
  const double bound_d = classical_bound_D(MomentOrders(a, b, ctx));

  std::vector<std::pair<int, int>> states;
  if (system == SystemKind::hydrogen) {
    for (int n = 1; n <= n_max; ++n)
      for (int l = 0; l < n; ++l) states.emplace_back(n, l);
  } else {
    for (int n = 0; n <= n_max; ++n)
      for (int l = 0; l <= l_max; ++l) states.emplace_back(n, l);
  }

  SweepTable table;
  std::vector<std::optional<SweepRow>> slots(states.size());
  std::vector<std::optional<SkippedRow>> skips(states.size());
  parallel_for(opt.threads, static_cast<int>(states.size()), [&](int i) {
    const auto [n, l] = states[i];
    try {
      const StateMoments m = state_moments(system, d, n, l, a, b);
      SweepRow row;
      row.a = a;
      row.b = b;
      row.d = d;
      row.system = system;
      row.n = n;
      row.l = l;
      row.product = std::pow(m.r_moment, 2.0 / a) * std::pow(m.p_moment, 2.0 / b);
      row.bound_c = bound.value;
      row.bound_d = bound_d;
      row.alpha_opt = bound.alpha_opt.value();
      row.ratio = *row.product / row.bound_c;
      slots[i] = row;
    } catch (const DivergentMomentError& e) {
      skips[i] = SkippedRow{a, b, d, system, n, l, e.what()};
    }
  });
  for (auto& s : slots)
    if (s) table.rows.push_back(*s);
  for (auto& s : skips)
    if (s) table.skipped.push_back(*s);
  return table;
}

SweepTable sweep_state_orders(SystemKind system, int d, int n, int l,
                              const std::vector<double>& a_values,
                              const BRange& b, const SweepOptions& opt) {
  if (system == SystemKind::none) {
    throw std::domain_error("sweep_state_orders: needs a physical system");
  }
  const DimensionContext ctx(d);
  const std::vector<double> bs = linspace(b);
  const int count = static_cast<int>(a_values.size() * bs.size());

  SweepTable table;
  std::vector<std::optional<SweepRow>> slots(count);
  std::vector<std::optional<SkippedRow>> skips(count);
  parallel_for(opt.threads, count, [&](int i) {
    const double a = a_values[i / bs.size()];
    const double bb = bs[i % bs.size()];
    try {
      const StateMoments m = state_moments(system, d, n, l, a, bb);
      const BoundResult res = bound_C(MomentOrders(a, bb, ctx), opt.optimizer);
      SweepRow row;
      row.a = a;
      row.b = bb;
      row.d = d;
      row.system = system;
      row.n = n;
      row.l = l;
      row.product = std::pow(m.r_moment, 2.0 / a) * std::pow(m.p_moment, 2.0 / bb);
      row.bound_c = res.value;
      row.bound_d = classical_bound_D(MomentOrders(a, bb, ctx));
      row.alpha_opt = res.alpha_opt.value();
      row.ratio = *row.product / row.bound_c;
      slots[i] = row;
    } catch (const DivergentMomentError& e) {
      skips[i] = SkippedRow{a, bb, d, system, n, l, e.what()};
    }
  });
  for (auto& s : slots)
    if (s) table.rows.push_back(*s);
  for (auto& s : skips)
    if (s) table.skipped.push_back(*s);
  return table;
}

namespace {

struct Preset {
  std::string description;
  std::function<SweepTable(const SweepOptions&)> run;
};

const std::vector<double> kFigAValues{0.1, 0.5, 1.0, 2.0, 4.0};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = {
      {"fig1",
       {"bounds C and D versus b for a in {0.1,0.5,1,2,4}, d=5",
        [](const SweepOptions& o) {
          return sweep_bounds(kFigAValues, {0.1, 8.0, 50}, DimensionContext(5), o);
        }}},
      {"fig2",
       {"alpha_opt versus b for a in {0.1,0.5,1,2,4}, d=5",
        [](const SweepOptions& o) {
          return sweep_bounds(kFigAValues, {0.1, 8.0, 50}, DimensionContext(5), o);
        }}},
      {"fig3",
       {"hydrogen d=3 lowest states, product vs bound at (a,b)=(1,2)",
        [](const SweepOptions& o) {
          return sweep_states(SystemKind::hydrogen, 3, 5, 0, 1.0, 2.0, o);
        }}},
      {"fig4",
       {"hydrogen d=3 lowest states, product vs bound at (a,b)=(1,4)",
        [](const SweepOptions& o) {
          return sweep_states(SystemKind::hydrogen, 3, 5, 0, 1.0, 4.0, o);
        }}},
      {"fig5",
       {"hydrogen d=3 ground state, product and bound versus b (b < 2L+5 = 5)",
        [](const SweepOptions& o) {
          return sweep_state_orders(SystemKind::hydrogen, 3, 1, 0, kFigAValues,
                                    {0.25, 4.75, 19}, o);
        }}},
      {"fig6",
       {"oscillator d=3 lowest states, product vs bound at (a,b)=(1,2)",
        [](const SweepOptions& o) {
          return sweep_states(SystemKind::oscillator, 3, 3, 3, 1.0, 2.0, o);
        }}},
      {"fig7",
       {"oscillator d=3 lowest states, product vs bound at (a,b)=(1,4)",
        [](const SweepOptions& o) {
          return sweep_states(SystemKind::oscillator, 3, 3, 3, 1.0, 4.0, o);
        }}},
      {"fig8",
       {"oscillator d=3 ground state, product and bound versus b",
        [](const SweepOptions& o) {
          return sweep_state_orders(SystemKind::oscillator, 3, 0, 0, kFigAValues,
                                    {0.25, 8.0, 32}, o);
        }}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, preset] : presets()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string preset_description(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return it->second.description;
}

SweepTable run_preset(const std::string& name, const SweepOptions& opt) {
  const auto it = presets().find(name);
  if (it == presets().end()) {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return it->second.run(opt);
}

}  // namespace momunc
