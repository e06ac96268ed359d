#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "momunc/bounds.hpp"
#include "momunc/errors.hpp"
#include "momunc/quantum.hpp"
#include "momunc/suite.hpp"
#include "momunc/sweep.hpp"
#include "momunc/table_io.hpp"
#include "vendor_json.hpp"

namespace {

using namespace momunc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitDivergentMoment = 3;
constexpr int kExitIo = 4;

struct Emission {
  std::string output_format = "text";
  std::string output_path;
};

// Writes to the requested destination; an unwritable path is an I/O error.
void emit(const Emission& e, const std::string& payload) {
  if (e.output_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(e.output_path, std::ios::binary);
  if (!out) {
    throw std::ios_base::failure("cannot open output file: " + e.output_path);
  }
  out << payload;
  out.flush();
  if (!out) {
    throw std::ios_base::failure("failed writing output file: " + e.output_path);
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("--a-list: no values parsed");
  return out;
}

BRange parse_brange(const std::string& text) {
  BRange r{};
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  if (!(ss >> r.lo >> c1 >> r.hi >> c2 >> r.steps) || c1 != ':' || c2 != ':' ||
      r.steps < 1) {
    throw std::invalid_argument("--b-range: expected lo:hi:steps, got " + text);
  }
  return r;
}

SystemKind parse_system(const std::string& name) {
  if (name == "hydrogen") return SystemKind::hydrogen;
  if (name == "oscillator") return SystemKind::oscillator;
  throw std::invalid_argument("--system must be hydrogen or oscillator");
}

void require_positive(double v, const char* flag) {
  if (!(v > 0.0)) {
    throw std::domain_error(std::string(flag) + " must be positive");
  }
}

OptimizerOptions optimizer_options(double tol, int grid) {
  if (!(tol > 0.0)) throw std::domain_error("--tol must be positive");
  if (grid < 16) throw std::domain_error("--grid must be >= 16");
  return OptimizerOptions{grid, tol};
}

int run_bound(double a, double b, int dim, double tol, int grid,
              const Emission& e) {
  require_positive(a, "--a");
  require_positive(b, "--b");
  const DimensionContext ctx(dim);
  const MomentOrders m(a, b, ctx);
  const BoundResult res = bound_C(m, optimizer_options(tol, grid));
  const double dval = classical_bound_D(m);

  if (e.output_format == "json") {
    nlohmann::ordered_json out{
        {"a", a},
        {"b", b},
        {"d", dim},
        {"C", res.value},
        {"D", dval},
        {"alpha_opt", res.alpha_opt.value()},
        {"search_interval",
         {res.search_interval.lo, res.search_interval.hi}}};
    emit(e, out.dump());
  } else if (e.output_format == "csv") {
    std::string out = "a,b,d,C,D,alpha_opt,search_lo,search_hi\n";
    out += format_number(a) + "," + format_number(b) + "," + std::to_string(dim) +
           "," + format_number(res.value) + "," + format_number(dval) + "," +
           format_number(res.alpha_opt.value()) + "," +
           format_number(res.search_interval.lo) + "," +
           format_number(res.search_interval.hi) + "\n";
    emit(e, out);
  } else {
    std::ostringstream out;
    out << "a = " << format_number(a) << "\n"
        << "b = " << format_number(b) << "\n"
        << "d = " << dim << "\n"
        << "C = " << format_number(res.value) << "\n"
        << "D = " << format_number(dval) << "\n"
        << "alpha_opt = " << format_number(res.alpha_opt.value()) << "\n"
        << "search_interval = (" << format_number(res.search_interval.lo) << ", "
        << format_number(res.search_interval.hi) << "]\n";
    emit(e, out.str());
  }
  return kExitOk;
}

int run_moments(const std::string& system_name, int dim, int n, int l, double a,
                double b, double tol, int grid, const Emission& e) {
  require_positive(a, "--a");
  require_positive(b, "--b");
  const SystemKind system = parse_system(system_name);
  double r_moment = 0.0, p_moment = 0.0;
  if (system == SystemKind::hydrogen) {
    const HydrogenState s(dim, n, l);
    r_moment = hydrogen_moment_r(s, a);
    p_moment = hydrogen_moment_p(s, b);
  } else {
    const OscillatorState s(dim, n, l);
    r_moment = oscillator_moment(s, a);
    p_moment = oscillator_moment(s, b);
  }
  const DimensionContext ctx(dim);
  const double product = std::pow(r_moment, 2.0 / a) * std::pow(p_moment, 2.0 / b);
  const double cval = bound_C(MomentOrders(a, b, ctx), optimizer_options(tol, grid)).value;
  const double ratio = product / cval;

  if (e.output_format == "json") {
    nlohmann::ordered_json out{{"system", system_name}, {"d", dim},
                               {"n", n},               {"l", l},
                               {"r_moment", r_moment}, {"p_moment", p_moment},
                               {"product", product},   {"C", cval},
                               {"ratio", ratio}};
    emit(e, out.dump());
  } else if (e.output_format == "csv") {
    std::string out = "system,d,n,l,r_moment,p_moment,product,C,ratio\n";
    out += system_name + "," + std::to_string(dim) + "," + std::to_string(n) +
           "," + std::to_string(l) + "," + format_number(r_moment) + "," +
           format_number(p_moment) + "," + format_number(product) + "," +
           format_number(cval) + "," + format_number(ratio) + "\n";
    emit(e, out);
  } else {
    std::ostringstream out;
    out << "system = " << system_name << "\n"
        << "d = " << dim << "\n"
        << "n = " << n << "\n"
        << "l = " << l << "\n"
        << "r_moment = " << format_number(r_moment) << "\n"
        << "p_moment = " << format_number(p_moment) << "\n"
        << "product = " << format_number(product) << "\n"
        << "C = " << format_number(cval) << "\n"
        << "ratio = " << format_number(ratio) << "\n";
    emit(e, out.str());
  }
  return kExitOk;
}

int run_sweep(const std::string& preset, const std::string& a_list,
              const std::string& b_range, int dim, double tol, int grid,
              int threads, const Emission& e) {
  SweepOptions opt;
  opt.optimizer = optimizer_options(tol, grid);
  opt.threads = threads;

  SweepTable table;
  if (!preset.empty()) {
    table = run_preset(preset, opt);
  } else {
    if (a_list.empty() || b_range.empty()) {
      throw std::invalid_argument(
          "sweep: provide --preset or both --a-list and --b-range");
    }
    const std::vector<double> as = parse_list(a_list);
    for (double a : as) require_positive(a, "--a-list entry");
    const BRange br = parse_brange(b_range);
    require_positive(br.lo, "--b-range lo");
    require_positive(br.hi, "--b-range hi");
    table = sweep_bounds(as, br, DimensionContext(dim), opt);
  }

  for (const SkippedRow& s : table.skipped) {
    std::cerr << "skipped " << to_string(s.system) << " n=" << s.n
              << " l=" << s.l << " (a=" << format_number(s.a, 6)
              << ", b=" << format_number(s.b, 6) << "): " << s.reason << "\n";
  }

  if (e.output_format == "json") {
    emit(e, to_json(table));
  } else if (e.output_format == "text") {
    emit(e, to_text(table));
  } else {
    emit(e, to_csv(table));
  }
  return kExitOk;
}

int run_verify(bool quick, int threads, unsigned seed, const Emission& e) {
  SuiteConfig cfg;
  cfg.quick = quick;
  cfg.threads = threads;
  cfg.seed = seed;
  const SuiteReport report = run_invariant_suite(cfg);
  if (e.output_format == "json") {
    emit(e, report_to_json(report));
  } else {
    emit(e, format_report(report));
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "momunc: moment-based position-momentum uncertainty bounds C(a,b), "
      "exact hydrogenic/oscillator moments, figure-data sweeps and the "
      "invariant verification suite"};
  app.require_subcommand(1);

  double a = 0.0, b = 0.0, tol = 1e-10;
  int dim = 3, n = 1, l = 0, grid = 256, threads = 0;
  unsigned seed = 20260808u;
  bool quick = false;
  std::string system_name, preset, a_list, b_range;
  Emission e;

  auto add_emission = [&](CLI::App* cmd) {
    cmd->add_option("--output-format", e.output_format)
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", e.output_path, "write to file instead of stdout");
  };
  auto add_optimizer = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "optimizer interval width");
    cmd->add_option("--grid", grid, "coarse grid points");
  };

  CLI::App* bound = app.add_subcommand("bound", "optimized bound C(a,b) and D(a,b)");
  bound->add_option("--a", a)->required();
  bound->add_option("--b", b)->required();
  bound->add_option("--dim", dim)->required();
  add_optimizer(bound);

  CLI::App* moments =
      app.add_subcommand("moments", "closed-form state moments against C(a,b)");
  moments->add_option("--system", system_name)->required();
  moments->add_option("--dim", dim)->required();
  moments->add_option("--n", n)->required();
  moments->add_option("--l", l)->required();
  moments->add_option("--a", a)->required();
  moments->add_option("--b", b)->required();
  add_optimizer(moments);

  CLI::App* sweep = app.add_subcommand("sweep", "figure-data tables (CSV/JSON)");
  sweep->add_option("--preset", preset, "fig1..fig8");
  sweep->add_option("--a-list", a_list, "comma-separated a values");
  sweep->add_option("--b-range", b_range, "lo:hi:steps");
  sweep->add_option("--dim", dim);
  sweep->add_option("--threads", threads);
  add_optimizer(sweep);

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_flag("--quick", quick, "reduced grids, a few seconds");
  verify->add_option("--threads", threads);
  verify->add_option("--seed", seed);

  add_emission(bound);
  add_emission(moments);
  add_emission(sweep);
  add_emission(verify);

  try {
    app.parse(argc, argv);
    // Default format: csv for sweep tables, text elsewhere.
    CLI::App* active = app.get_subcommands().front();
    if (active->get_option("--output-format")->count() == 0) {
      e.output_format = active == sweep ? "csv" : "text";
    }

    if (bound->parsed()) return run_bound(a, b, dim, tol, grid, e);
    if (moments->parsed())
      return run_moments(system_name, dim, n, l, a, b, tol, grid, e);
    if (sweep->parsed())
      return run_sweep(preset, a_list, b_range, dim, tol, grid, threads, e);
    if (verify->parsed()) return run_verify(quick, threads, seed, e);
    return kExitBadArguments;
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& v) {
    return app.exit(v);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitBadArguments;
  } catch (const DivergentMomentError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitDivergentMoment;
  } catch (const std::ios_base::failure& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitIo;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadArguments;
  }
}
