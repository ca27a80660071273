#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "avf/candles.hpp"

namespace avf {

// Percentage-change series paired with its source closes.
// values[t] = (prices[t+1] / prices[t] - 1) * 100, so len(prices) = len(values) + 1.
// Timestamps (when present) align with prices and are carried for provenance
// and report output only; segmentation treats the series as contiguous by index.
struct VolatilitySeries {
    std::vector<double> values;
    std::vector<double> prices;
    std::int64_t interval_seconds = 0;
    std::vector<std::int64_t> timestamps;  // optional; empty or size prices.size()

    std::size_t size() const { return values.size(); }
};

// Requires >= 2 candles.
VolatilitySeries compute_volatility(const CandleSeries& candles);

// Rebuilds the close path from prices[0] and the percentage steps.
std::vector<double> reconstruct_prices(double first_price, const std::vector<double>& values);

// File format: header `timestamp,close,volatility`; one row per close, the
// first row's volatility field is empty (no preceding close).
void write_volatility(std::ostream& out, const VolatilitySeries& series);
void save_volatility(const std::string& path, const VolatilitySeries& series);
VolatilitySeries parse_volatility(std::istream& in);
VolatilitySeries load_volatility(const std::string& path);

}  // namespace avf
