#include "netorg/csv.hpp"

#include <charconv>
#include <cmath>

namespace netorg {

std::string csv_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;  // 64 bytes always suffice for double
    return std::string(buf, ptr);
}

std::string csv_double(const std::optional<double>& value) {
    return value ? csv_double(*value) : std::string("nan");
}

}  // namespace netorg
