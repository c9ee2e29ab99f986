#ifndef BGAP_QUARTER_HPP
#define BGAP_QUARTER_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace bgap {

/// Calendar quarter, ordered lexicographically by (year, quarter).
struct Quarter {
    int year = 0;
    int quarter = 1; // 1..4

    auto operator<=>(const Quarter&) const = default;

    Quarter next() const noexcept;
    Quarter prev() const noexcept;

    /// Quarters from `this` to `other` (negative when `other` is earlier).
    int distance_to(const Quarter& other) const noexcept;

    /// Decimal year at the quarter midpoint, for plotting.
    double decimal_year() const noexcept { return year + (quarter - 0.5) / 4.0; }

    std::string str() const; // "YYYYQn"

    static std::optional<Quarter> try_parse(std::string_view text);

    /// Parses "YYYYQn". Throws ConfigError on malformed text.
    static Quarter parse(std::string_view text);

    static Quarter of_month(int year, int month) noexcept { return {year, (month - 1) / 3 + 1}; }
};

} // namespace bgap

template <>
struct std::hash<bgap::Quarter> {
    std::size_t operator()(const bgap::Quarter& q) const noexcept
    {
        return std::hash<int>{}(q.year * 4 + q.quarter);
    }
};

#endif
