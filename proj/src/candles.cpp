#include "avf/candles.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace avf {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

double parse_double(const std::string& s, std::size_t line, const char* field) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("bad ") + field + " value '" + s + "'");
    return v;
}

std::int64_t parse_int(const std::string& s, std::size_t line, const char* field) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("bad ") + field + " value '" + s + "'");
    return v;
}

void check_candle(const Candle& c, std::size_t line) {
    if (c.open <= 0.0 || c.high <= 0.0 || c.low <= 0.0 || c.close <= 0.0)
        throw ParseError(line, "non-positive price");
    if (c.low > std::min(c.open, c.close) || c.high < std::max(c.open, c.close))
        throw ParseError(line, "low/high inconsistent with open/close");
    if (c.volume < 0.0)
        throw ParseError(line, "negative volume");
}

void format_double(std::ostream& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    out.write(buf, ptr - buf);
}

}  // namespace

CandleSeries parse_candles(std::istream& in, std::int64_t interval_hint) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError(1, "missing header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "timestamp,open,high,low,close,volume")
        throw ParseError(1, "unexpected header '" + line + "'");

    CandleSeries series;
    series.interval_seconds = interval_hint;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 6)
            throw ParseError(line_no, "expected 6 fields, got " + std::to_string(fields.size()));
        Candle c;
        c.timestamp = parse_int(fields[0], line_no, "timestamp");
        c.open = parse_double(fields[1], line_no, "open");
        c.high = parse_double(fields[2], line_no, "high");
        c.low = parse_double(fields[3], line_no, "low");
        c.close = parse_double(fields[4], line_no, "close");
        c.volume = parse_double(fields[5], line_no, "volume");
        check_candle(c, line_no);
        series.candles.push_back(c);
    }

    std::stable_sort(series.candles.begin(), series.candles.end(),
                     [](const Candle& a, const Candle& b) { return a.timestamp < b.timestamp; });
    for (std::size_t i = 1; i < series.candles.size(); ++i) {
        if (series.candles[i].timestamp == series.candles[i - 1].timestamp)
            throw IoError("duplicate timestamp " + std::to_string(series.candles[i].timestamp));
    }
    if (series.interval_seconds == 0 && series.candles.size() >= 2)
        series.interval_seconds = series.candles[1].timestamp - series.candles[0].timestamp;
    return series;
}

CandleSeries load_candles(const std::string& path, std::int64_t interval_hint) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_candles(in, interval_hint);
}

void write_candles(std::ostream& out, const CandleSeries& series) {
    out << "timestamp,open,high,low,close,volume\n";
    for (const Candle& c : series.candles) {
        out << c.timestamp << ',';
        format_double(out, c.open);
        out << ',';
        format_double(out, c.high);
        out << ',';
        format_double(out, c.low);
        out << ',';
        format_double(out, c.close);
        out << ',';
        format_double(out, c.volume);
        out << '\n';
    }
}

void save_candles(const std::string& path, const CandleSeries& series) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write_candles(out, series);
}

void write_gap_report(std::ostream& out, const GapReport& gaps) {
    for (std::int64_t t : gaps.missing_bucket_starts) out << t << '\n';
}

void save_gap_report(const std::string& path, const GapReport& gaps) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write_gap_report(out, gaps);
}

ResampleResult resample(const CandleSeries& input, std::int64_t target_interval_seconds) {
    if (input.empty()) throw std::runtime_error("resample: empty input series");
    if (input.interval_seconds <= 0) throw std::runtime_error("resample: unknown source interval");
    if (target_interval_seconds <= 0 || target_interval_seconds % input.interval_seconds != 0)
        throw std::runtime_error("resample: target interval must be a positive multiple of source interval");

    ResampleResult result;
    result.series.interval_seconds = target_interval_seconds;

    const std::int64_t T = target_interval_seconds;
    auto bucket_of = [T](std::int64_t ts) {
        std::int64_t b = ts / T;
        if (ts < 0 && ts % T != 0) --b;  // floor
        return b;
    };

    std::int64_t current_bucket = 0;
    bool open_bucket = false;
    Candle agg{};
    auto flush = [&] {
        if (open_bucket) result.series.candles.push_back(agg);
        open_bucket = false;
    };

    std::int64_t prev_bucket = 0;
    bool have_prev = false;
    for (const Candle& c : input.candles) {
        std::int64_t b = bucket_of(c.timestamp);
        if (!open_bucket || b != current_bucket) {
            flush();
            if (have_prev) {
                for (std::int64_t g = prev_bucket + 1; g < b; ++g)
                    result.gaps.missing_bucket_starts.push_back(g * T);
            }
            current_bucket = b;
            prev_bucket = b;
            have_prev = true;
            open_bucket = true;
            agg = Candle{current_bucket * T, c.open, c.high, c.low, c.close, c.volume};
        } else {
            agg.high = std::max(agg.high, c.high);
            agg.low = std::min(agg.low, c.low);
            agg.close = c.close;
            agg.volume += c.volume;
        }
    }
    flush();
    return result;
}

}  // namespace avf
