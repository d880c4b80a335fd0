#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "counterpoint/common.hpp"

namespace counterpoint {

/// Hourly-gridded series. NaN marks a missing hour.
struct TimeSeries {
    std::string name;
    std::int64_t start = 0;                 // epoch seconds, hour aligned
    std::int64_t step = kSecondsPerHour;    // fixed
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    std::int64_t timestamp_at(std::size_t i) const {
        return start + static_cast<std::int64_t>(i) * step;
    }
};

enum class Agg { Sum, Mean, Count, Max, Last };

struct Stamped {
    std::int64_t timestamp = 0;
    double value = 0.0;
};

/// Buckets records onto the hour grid spanning [min,max] record hours.
/// Empty buckets are NaN, except Count which yields 0.
TimeSeries align_hourly(const std::vector<Stamped>& records, Agg agg,
                        const std::string& name = "");

/// b0 = x0; bt = (1-alpha)*xt + alpha*b(t-1). alpha in [0,1).
TimeSeries ema_smooth(const TimeSeries& series, double alpha);
std::vector<double> ema_smooth(const std::vector<double>& values, double alpha);

}  // namespace counterpoint
