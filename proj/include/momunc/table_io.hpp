#pragma once

#include <string>

#include "momunc/sweep.hpp"

namespace momunc {

// 17 significant digits, locale independent, byte-for-byte reproducible.
std::string format_number(double x, int significant_digits = 17);

// Shortest round-trip form (used for JSON payloads).
std::string format_number_roundtrip(double x);

// Header exactly: a,b,d,system,n,l,product,bound_C,bound_D,alpha_opt,ratio
// Fields without a value (bound-only sweeps) stay empty.
std::string to_csv(const SweepTable& table);

// JSON array of flat row objects, same keys as the CSV columns.
std::string to_json(const SweepTable& table);

std::string to_text(const SweepTable& table);

}  // namespace momunc
