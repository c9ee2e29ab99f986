#ifndef BGAP_DATA_INGEST_HPP
#define BGAP_DATA_INGEST_HPP

#include "bgap/quarter.hpp"

#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace bgap {

enum class ValueUnit { fraction, percent };

ValueUnit parse_unit(std::string_view text);

struct MonthlyPoint {
    int year = 0;
    int month = 1;
    double value = 0.0; // fraction of the labor force

    bool operator==(const MonthlyPoint&) const = default;
};

struct QuarterlyPoint {
    Quarter quarter;
    double value = 0.0;

    bool operator==(const QuarterlyPoint&) const = default;
};

struct QuarterlySeries {
    std::vector<QuarterlyPoint> points;
    std::vector<Quarter> dropped; // quarters with 1 or 2 months observed
};

struct PanelRow {
    Quarter quarter;
    double u = 0.0;
    double v = 0.0;
    double theta = 0.0; // v / u
    double n = 0.0;     // 1 - u
};

/// Aligned quarterly unemployment and vacancy rates.
///
/// Rows are strictly increasing in quarter with u > 0 and v > 0; theta and n
/// are derived on construction so they always agree with u and v.
class LaborMarketPanel {
public:
    LaborMarketPanel() = default;

    /// Validates ordering and positivity, then derives theta and n.
    static LaborMarketPanel from_rates(std::span<const Quarter> quarters,
                                       std::span<const double> u,
                                       std::span<const double> v);

    std::span<const PanelRow> rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    const PanelRow& operator[](std::size_t i) const { return rows_[i]; }

    std::vector<Quarter> quarters() const;

    /// Rows with start <= quarter <= end.
    std::span<const PanelRow> slice(const Quarter& start, const Quarter& end) const;

private:
    std::vector<PanelRow> rows_;
};

/// Reads a `date,value` CSV with YYYY-MM dates. Returns points sorted by date.
std::vector<MonthlyPoint> parse_series_csv(std::istream& in, ValueUnit unit);
std::vector<MonthlyPoint> parse_series_csv(std::string_view text, ValueUnit unit);

/// Averages complete quarters; partial quarters are reported, not averaged.
QuarterlySeries to_quarterly(std::span<const MonthlyPoint> points);

/// `pre` strictly before `cutover`, `post` from `cutover` on. No level adjustment.
std::vector<QuarterlyPoint> splice_vacancy(std::span<const QuarterlyPoint> pre,
                                           std::span<const QuarterlyPoint> post,
                                           const Quarter& cutover);

/// Inner join on quarter.
LaborMarketPanel build_panel(std::span<const QuarterlyPoint> u_series,
                             std::span<const QuarterlyPoint> v_series);

void write_panel_csv(std::ostream& out, const LaborMarketPanel& panel);

} // namespace bgap

#endif
