#ifndef BGAP_REGIMES_HPP
#define BGAP_REGIMES_HPP

#include "bgap/estimate.hpp"
#include "bgap/quarter.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgap {

/// Subperiod over which the Beveridge curve is stable. `end` is inclusive.
struct Regime {
    std::string label;
    Quarter start;
    Quarter end;

    bool contains(const Quarter& q) const noexcept { return start <= q && q <= end; }
    bool operator==(const Regime&) const = default;
};

/// Sorted, non-overlapping regimes. Quarters between regimes are shift quarters.
class RegimeTable {
public:
    RegimeTable() = default;
    explicit RegimeTable(std::vector<Regime> regimes); // throws ConfigError

    std::span<const Regime> regimes() const noexcept { return regimes_; }
    std::size_t size() const noexcept { return regimes_.size(); }
    bool empty() const noexcept { return regimes_.empty(); }

    /// The seven US subperiods, 1951Q1-1959Q2 through 2010Q1-2019Q4.
    static RegimeTable us_default();

    /// Lines `label,start,end`; blank lines and `#` comments ignored.
    static RegimeTable parse(std::istream& in);
    static RegimeTable parse(std::string_view text);

private:
    std::vector<Regime> regimes_;
};

std::optional<Regime> assign_regime(const Quarter& q, const RegimeTable& table);

struct ScheduleEntry {
    Quarter quarter;
    double epsilon = 0.0;
    double log_v0 = 0.0;
    std::string regime;
    bool is_gap_quarter = false;
};

/// Per-quarter elasticity parameters for a set of panel quarters.
class ElasticitySchedule {
public:
    ElasticitySchedule() = default;
    explicit ElasticitySchedule(std::vector<ScheduleEntry> entries) : entries_(std::move(entries)) {}

    std::span<const ScheduleEntry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const ScheduleEntry& operator[](std::size_t i) const { return entries_[i]; }

    /// Entry for `q`, or nullptr if the quarter is not scheduled.
    const ScheduleEntry* find(const Quarter& q) const noexcept;

    /// The same epsilon and log_v0 in every quarter.
    static ElasticitySchedule constant(std::span<const Quarter> quarters, const ElasticityEstimate& estimate);

private:
    std::vector<ScheduleEntry> entries_;
};

/// In-regime quarters take that regime's estimate. Shift quarters and quarters
/// after the last regime carry the most recent preceding regime forward;
/// quarters before the first regime take the first regime. Both are flagged.
ElasticitySchedule build_schedule(const RegimeTable& table,
                                  std::span<const ElasticityEstimate> estimates,
                                  std::span<const Quarter> quarters);

} // namespace bgap

#endif
