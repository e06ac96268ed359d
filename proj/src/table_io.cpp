#include "momunc/table_io.hpp"

#include <charconv>
#include <sstream>
#include <system_error>

#include "vendor_json.hpp"

namespace momunc {

namespace {

std::string chars_to_string(double x, std::to_chars_result (*conv)(char*, char*, double)) {
  char buf[64];
  const auto res = conv(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double x, int significant_digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, significant_digits);
  return std::string(buf, res.ptr);
}

std::string format_number_roundtrip(double x) {
  return chars_to_string(x, [](char* first, char* last, double v) {
    return std::to_chars(first, last, v);
  });
}

std::string to_csv(const SweepTable& table) {
  std::string out = "a,b,d,system,n,l,product,bound_C,bound_D,alpha_opt,ratio\n";
  for (const SweepRow& r : table.rows) {
    out += format_number(r.a);
    out += ',';
    out += format_number(r.b);
    out += ',';
    out += std::to_string(r.d);
    out += ',';
    out += to_string(r.system);
    out += ',';
    if (r.n) out += std::to_string(*r.n);
    out += ',';
    if (r.l) out += std::to_string(*r.l);
    out += ',';
    if (r.product) out += format_number(*r.product);
    out += ',';
    out += format_number(r.bound_c);
    out += ',';
    out += format_number(r.bound_d);
    out += ',';
    out += format_number(r.alpha_opt);
    out += ',';
    if (r.ratio) out += format_number(*r.ratio);
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& r : table.rows) {
    nlohmann::ordered_json row;
    row["a"] = r.a;
    row["b"] = r.b;
    row["d"] = r.d;
    if (r.system == SystemKind::none) {
      row["system"] = nullptr;
    } else {
      row["system"] = to_string(r.system);
    }
    row["n"] = r.n ? nlohmann::ordered_json(*r.n) : nlohmann::ordered_json(nullptr);
    row["l"] = r.l ? nlohmann::ordered_json(*r.l) : nlohmann::ordered_json(nullptr);
    row["product"] =
        r.product ? nlohmann::ordered_json(*r.product) : nlohmann::ordered_json(nullptr);
    row["bound_C"] = r.bound_c;
    row["bound_D"] = r.bound_d;
    row["alpha_opt"] = r.alpha_opt;
    row["ratio"] =
        r.ratio ? nlohmann::ordered_json(*r.ratio) : nlohmann::ordered_json(nullptr);
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::string to_text(const SweepTable& table) {
  std::ostringstream out;
  out << to_csv(table);
  if (!table.skipped.empty()) {
    out << "# skipped rows:\n";
    for (const SkippedRow& s : table.skipped) {
      out << "#   " << to_string(s.system) << " d=" << s.d << " n=" << s.n
          << " l=" << s.l << " (a=" << format_number(s.a, 6)
          << ", b=" << format_number(s.b, 6) << "): " << s.reason << "\n";
    }
  }
  return out.str();
}

}  // namespace momunc
