#include "counterpoint/timeseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace counterpoint {

TimeSeries align_hourly(const std::vector<Stamped>& records, Agg agg,
                        const std::string& name) {
    if (records.empty()) throw ValidationError("align_hourly: no records");

    std::int64_t lo = hour_floor(records.front().timestamp);
    std::int64_t hi = lo;
    for (const auto& r : records) {
        const std::int64_t h = hour_floor(r.timestamp);
        lo = std::min(lo, h);
        hi = std::max(hi, h);
    }
    const std::size_t n = static_cast<std::size_t>((hi - lo) / kSecondsPerHour) + 1;

    std::vector<double> acc(n, 0.0);
    std::vector<std::int64_t> count(n, 0);
    std::vector<double> last(n, 0.0);

    for (const auto& r : records) {
        const std::size_t i =
            static_cast<std::size_t>((hour_floor(r.timestamp) - lo) / kSecondsPerHour);
        switch (agg) {
            case Agg::Sum:
            case Agg::Mean:
                acc[i] += r.value;
                break;
            case Agg::Max:
                acc[i] = count[i] == 0 ? r.value : std::max(acc[i], r.value);
                break;
            case Agg::Count:
                break;
            case Agg::Last:
                last[i] = r.value;
                break;
        }
        ++count[i];
    }

    TimeSeries out;
    out.name = name;
    out.start = lo;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (agg == Agg::Count) {
            out.values[i] = static_cast<double>(count[i]);
        } else if (count[i] == 0) {
            out.values[i] = nan_value();
        } else {
            switch (agg) {
                case Agg::Sum: out.values[i] = acc[i]; break;
                case Agg::Mean: out.values[i] = acc[i] / static_cast<double>(count[i]); break;
                case Agg::Max: out.values[i] = acc[i]; break;
                case Agg::Last: out.values[i] = last[i]; break;
                case Agg::Count: break;
            }
        }
    }
    return out;
}

std::vector<double> ema_smooth(const std::vector<double>& values, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw ValidationError("ema_smooth: alpha must be in [0,1)");
    if (values.empty()) throw ValidationError("ema_smooth: empty series");
    std::vector<double> out(values.size());
    out[0] = values[0];
    for (std::size_t t = 1; t < values.size(); ++t)
        out[t] = (1.0 - alpha) * values[t] + alpha * out[t - 1];
    return out;
}

TimeSeries ema_smooth(const TimeSeries& series, double alpha) {
    TimeSeries out = series;
    out.values = ema_smooth(series.values, alpha);
    return out;
}

}  // namespace counterpoint
