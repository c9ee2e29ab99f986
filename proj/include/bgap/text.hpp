#ifndef BGAP_TEXT_HPP
#define BGAP_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace bgap::text {

std::string_view trim(std::string_view s) noexcept;

/// Splits on `sep` and trims each field. No quoting support.
std::vector<std::string_view> split(std::string_view s, char sep);

/// Strict decimal parse of the whole field.
bool parse_double(std::string_view s, double& out);
bool parse_int(std::string_view s, int& out);

/// 10 significant digits, shortest form; used for every CSV number.
std::string number(double x);

} // namespace bgap::text

#endif
