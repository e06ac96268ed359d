#include <cmath>
#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "momunc/sweep.hpp"
#include "momunc/table_io.hpp"
#include "vendor_json.hpp"

using namespace momunc;

TEST_CASE("sweep_bounds: diagonal rows coincide with D, all rows above D") {
  const DimensionContext ctx(5);
  // Grid chosen so b = a appears exactly.
  const SweepTable t = sweep_bounds({0.5, 2.0}, {0.5, 3.5, 7}, ctx);
  CHECK(t.rows.size() == 14);
  int diagonal_rows = 0;
  for (const SweepRow& row : t.rows) {
    CHECK(row.bound_c >= row.bound_d - 1e-12);
    CHECK(!row.product.has_value());
    CHECK(!row.ratio.has_value());
    CHECK(row.system == SystemKind::none);
    if (row.a == row.b) {
      ++diagonal_rows;
      CHECK(row.bound_c == doctest::Approx(row.bound_d).epsilon(1e-8));
      CHECK(std::abs(row.alpha_opt - 1.0) <= 1e-8);
    }
  }
  CHECK(diagonal_rows == 2);
}

TEST_CASE("sweep_bounds: gap grows as b departs from a") {
  const DimensionContext ctx(5);
  const SweepTable t = sweep_bounds({0.5}, {0.55, 2.0, 2}, ctx);
  const double gap_near = t.rows[0].bound_c - t.rows[0].bound_d;
  const double gap_far = t.rows[1].bound_c - t.rows[1].bound_d;
  CHECK(t.rows[0].b == doctest::Approx(0.55));
  CHECK(t.rows[1].b == doctest::Approx(2.0));
  CHECK(gap_far > gap_near);
}

TEST_CASE("sweep_states: hydrogen rows and ratios") {
  const SweepTable t = sweep_states(SystemKind::hydrogen, 3, 3, 0, 1.0, 2.0);
  CHECK(t.rows.size() == 6);  // n=1..3, l<n
  CHECK(t.skipped.empty());
  for (const SweepRow& row : t.rows) {
    REQUIRE(row.ratio.has_value());
    CHECK(*row.ratio >= 1.0 - 1e-10);
  }
  // Ground state: <r>^2 <p^2> = 2.25
  CHECK(*t.rows.front().product == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("sweep_states: divergent rows are recorded, not dropped") {
  // d=2, l=0 has 2L+5 = 4, so b=4.5 diverges for every l=0 state.
  const SweepTable t = sweep_states(SystemKind::hydrogen, 2, 2, 0, 1.0, 4.5);
  CHECK(!t.skipped.empty());
  for (const SkippedRow& s : t.skipped) {
    CHECK(s.reason.find("diverges") != std::string::npos);
  }
  CHECK(t.rows.size() + t.skipped.size() == 3);
}

TEST_CASE("sweep_states: oscillator saturation row at (2,2)") {
  const SweepTable t = sweep_states(SystemKind::oscillator, 3, 0, 0, 2.0, 2.0);
  REQUIRE(t.rows.size() == 1);
  CHECK(*t.rows[0].ratio == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sweep_state_orders covers the ground-state figures") {
  const SweepTable t = sweep_state_orders(SystemKind::hydrogen, 3, 1, 0,
                                          {1.0}, {0.5, 4.5, 5});
  CHECK(t.rows.size() == 5);
  for (const SweepRow& row : t.rows) {
    CHECK(row.n == 1);
    CHECK(row.l == 0);
    CHECK(*row.ratio >= 1.0 - 1e-10);
  }
}

TEST_CASE("CSV emission: exact header, 17 digits, round-trip") {
  const DimensionContext ctx(3);
  const SweepTable t = sweep_bounds({1.0}, {2.0, 2.0, 1}, ctx);
  const std::string csv = to_csv(t);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "a,b,d,system,n,l,product,bound_C,bound_D,alpha_opt,ratio");
  std::string row;
  std::getline(in, row);
  std::vector<std::string> fields;
  std::istringstream row_in(row);
  for (std::string f; std::getline(row_in, f, ',');) fields.push_back(f);
  REQUIRE(fields.size() == 10);  // trailing empty ratio column is dropped
  CHECK(fields[0] == "1");
  CHECK(fields[1] == "2");
  CHECK(fields[2] == "3");
  // bound-only rows leave system, n, l, product empty
  CHECK(fields[3].empty());
  CHECK(fields[4].empty());
  CHECK(fields[5].empty());
  CHECK(fields[6].empty());
  // 17-significant-digit fields parse back to the exact double
  CHECK(std::strtod(fields[7].c_str(), nullptr) == t.rows[0].bound_c);
  CHECK(std::strtod(fields[9].c_str(), nullptr) == t.rows[0].alpha_opt);
}

TEST_CASE("CSV is byte-identical across repeated runs and thread counts") {
  SweepOptions one;
  one.threads = 1;
  SweepOptions four;
  four.threads = 4;
  const std::string a = to_csv(sweep_states(SystemKind::oscillator, 3, 2, 2, 1.0, 2.0, one));
  const std::string b = to_csv(sweep_states(SystemKind::oscillator, 3, 2, 2, 1.0, 2.0, four));
  const std::string c = to_csv(sweep_states(SystemKind::oscillator, 3, 2, 2, 1.0, 2.0, one));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("JSON emission parses back with the same keys and values") {
  const SweepTable t = sweep_states(SystemKind::hydrogen, 3, 1, 0, 1.0, 2.0);
  const auto parsed = nlohmann::json::parse(to_json(t));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  const auto& row = parsed[0];
  CHECK(row["system"] == "hydrogen");
  CHECK(row["n"] == 1);
  CHECK(row["l"] == 0);
  CHECK(row["a"] == 1.0);
  CHECK(double(row["product"]) == doctest::Approx(2.25).epsilon(1e-12));
  CHECK(double(row["bound_C"]) == t.rows[0].bound_c);  // round-trip exact
  // bound-only rows serialize missing fields as null
  const SweepTable tb = sweep_bounds({1.0}, {2.0, 2.0, 1}, DimensionContext(3));
  const auto parsed_b = nlohmann::json::parse(to_json(tb));
  CHECK(parsed_b[0]["system"].is_null());
  CHECK(parsed_b[0]["product"].is_null());
}

TEST_CASE("presets: all eight figures are available") {
  CHECK(preset_names() == std::vector<std::string>{
                              "fig1", "fig2", "fig3", "fig4",
                              "fig5", "fig6", "fig7", "fig8"});
  CHECK_THROWS_AS(run_preset("fig9"), std::invalid_argument);
  const SweepTable fig3 = run_preset("fig3");
  CHECK(fig3.rows.size() == 15);  // n = 1..5, l < n
  for (const SweepRow& row : fig3.rows) {
    CHECK(*row.ratio >= 1.0 - 1e-10);
  }
  const SweepTable fig1 = run_preset("fig1");
  CHECK(fig1.rows.size() == 250);
  for (const SweepRow& row : fig1.rows) {
    CHECK(row.bound_c >= row.bound_d - 1e-12);
  }
}

TEST_CASE("format_number is locale-independent and fixed width in digits") {
  CHECK(format_number(2.25) == "2.25");
  CHECK(format_number(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_number_roundtrip(0.1) == "0.1");
}
