#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace avf {

// I/O or file-format failure; CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input record; carries the 1-based line number of the first bad row.
struct ParseError : IoError {
    ParseError(std::size_t line, const std::string& what)
        : IoError("line " + std::to_string(line) + ": " + what), line_number(line) {}
    std::size_t line_number;
};

struct Candle {
    std::int64_t timestamp = 0;  // epoch seconds, UTC
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;
};

struct CandleSeries {
    std::int64_t interval_seconds = 0;
    std::vector<Candle> candles;

    std::size_t size() const { return candles.size(); }
    bool empty() const { return candles.empty(); }
};

struct GapReport {
    std::vector<std::int64_t> missing_bucket_starts;
};

struct ResampleResult {
    CandleSeries series;
    GapReport gaps;
};

// Reads `timestamp,open,high,low,close,volume` rows (header required).
// Rows are sorted by timestamp; duplicates and invalid bars throw ParseError.
// `interval_hint` fixes the series interval; 0 infers it from the first two rows.
CandleSeries parse_candles(std::istream& in, std::int64_t interval_hint = 0);
CandleSeries load_candles(const std::string& path, std::int64_t interval_hint = 0);

void write_candles(std::ostream& out, const CandleSeries& series);
void save_candles(const std::string& path, const CandleSeries& series);

void write_gap_report(std::ostream& out, const GapReport& gaps);
void save_gap_report(const std::string& path, const GapReport& gaps);

// Aggregates into [k*T, (k+1)*T) buckets: first open, last close, max high,
// min low, summed volume. Empty buckets are omitted and listed in the gap
// report rather than forward-filled.
ResampleResult resample(const CandleSeries& input, std::int64_t target_interval_seconds);

}  // namespace avf
