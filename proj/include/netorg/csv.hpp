#pragma once

#include <optional>
#include <string>

namespace netorg {

// Shortest decimal string that round-trips the value ("." separator,
// "nan"/"inf" spelled out). Keeps CSV output byte-stable across runs.
std::string csv_double(double value);

std::string csv_double(const std::optional<double>& value);  // empty -> "nan"

}  // namespace netorg
