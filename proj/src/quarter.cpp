#include "bgap/quarter.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <fmt/format.h>

namespace bgap {

Quarter Quarter::next() const noexcept
{
    return quarter == 4 ? Quarter{year + 1, 1} : Quarter{year, quarter + 1};
}

Quarter Quarter::prev() const noexcept
{
    return quarter == 1 ? Quarter{year - 1, 4} : Quarter{year, quarter - 1};
}

int Quarter::distance_to(const Quarter& other) const noexcept
{
    return (other.year - year) * 4 + (other.quarter - quarter);
}

std::string Quarter::str() const
{
    return fmt::format("{:04d}Q{}", year, quarter);
}

std::optional<Quarter> Quarter::try_parse(std::string_view text)
{
    const auto t = text::trim(text);
    const auto q = t.find_first_of("Qq");
    Quarter out;
    if (q == std::string_view::npos || q + 2 != t.size() || !text::parse_int(t.substr(0, q), out.year)
        || !text::parse_int(t.substr(q + 1), out.quarter) || out.quarter < 1 || out.quarter > 4)
        return std::nullopt;
    return out;
}

Quarter Quarter::parse(std::string_view text)
{
    if (auto q = try_parse(text))
        return *q;
    throw ConfigError("malformed quarter '" + std::string(text) + "' (expected YYYYQn)");
}

} // namespace bgap
