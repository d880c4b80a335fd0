#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <system_error>

namespace counterpoint {

// Input/config/schema problems map to CLI exit code 1; everything else is 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::int64_t kSecondsPerHour = 3600;
inline constexpr double kWeiPerEth = 1e18;

inline double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_nan(double v) { return std::isnan(v); }

inline std::int64_t hour_floor(std::int64_t epoch_seconds) {
    std::int64_t h = epoch_seconds / kSecondsPerHour;
    if (epoch_seconds < 0 && epoch_seconds % kSecondsPerHour != 0) --h;
    return h * kSecondsPerHour;
}

// Shortest round-trip decimal form via to_chars; keeps emitted CSV/JSON
// byte-stable across runs.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, bool& ok) {
    if (text == "nan") { ok = true; return nan_value(); }
    if (text == "inf") { ok = true; return std::numeric_limits<double>::infinity(); }
    if (text == "-inf") { ok = true; return -std::numeric_limits<double>::infinity(); }
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    ok = res.ec == std::errc() && res.ptr == text.data() + text.size();
    return v;
}

inline std::int64_t parse_int64(std::string_view text, bool& ok) {
    std::int64_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    ok = res.ec == std::errc() && res.ptr == text.data() + text.size();
    return v;
}

}  // namespace counterpoint
