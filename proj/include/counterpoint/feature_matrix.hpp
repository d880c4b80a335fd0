#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "counterpoint/timeseries.hpp"

namespace counterpoint {

/// Named hourly columns over a shared, strictly increasing, uniform hour
/// index. Column order is insertion order and is part of the contract
/// (exports and covariance matrices follow it).
class FeatureMatrix {
public:
    FeatureMatrix() = default;
    explicit FeatureMatrix(std::vector<std::int64_t> index);

    const std::vector<std::int64_t>& index() const { return index_; }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t rows() const { return index_.size(); }
    std::size_t cols() const { return names_.size(); }

    bool has_column(const std::string& name) const { return lookup_.count(name) > 0; }
    const std::vector<double>& column(const std::string& name) const;
    const std::vector<double>& column(std::size_t i) const { return columns_[i]; }
    std::vector<double>& column_mut(std::size_t i) { return columns_[i]; }

    /// Throws on duplicate name or length mismatch.
    void add_column(const std::string& name, std::vector<double> values);
    void add_series(const TimeSeries& series);

    FeatureMatrix select_rows(std::size_t begin, std::size_t end) const;
    FeatureMatrix select_rows(const std::vector<std::size_t>& rows) const;
    FeatureMatrix drop_columns(const std::vector<std::string>& names) const;

private:
    std::vector<std::int64_t> index_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

struct NormalizationStats {
    std::vector<std::string> columns;    // retained, in matrix order
    std::vector<double> mean;
    std::vector<double> stddev;          // strictly positive
    std::vector<std::string> degenerate; // dropped constant columns
};

/// Centers and scales every non-constant column to mean 0, sample stddev 1
/// (n-1 denominator). Constant columns are dropped and reported.
std::pair<FeatureMatrix, NormalizationStats> zscore_normalize(const FeatureMatrix& m);

/// Applies previously computed stats: drops the degenerate columns, then
/// (x - mean) / stddev per retained column.
FeatureMatrix apply_normalization(const FeatureMatrix& m, const NormalizationStats& stats);

enum class FillPolicy { ForwardFill, Zero, Drop };

/// Outer join on the hour index. ForwardFill drops rows that still hold a
/// NaN afterwards (leading gaps have nothing to fill from).
FeatureMatrix join_features(const std::vector<FeatureMatrix>& parts, FillPolicy fill);

}  // namespace counterpoint
