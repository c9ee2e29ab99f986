#include "bgap/config.hpp"

#include "bgap/error.hpp"
#include "bgap/text.hpp"

#include <fstream>
#include <sstream>

namespace bgap {

ConfigFile ConfigFile::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse(buf.str(), path.parent_path());
    } catch (const ParseError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

ConfigFile ConfigFile::parse(std::string_view text, std::filesystem::path base_dir)
{
    ConfigFile cfg;
    std::string section;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineno;
        auto line = text::trim(text.substr(pos, end - pos));
        pos = end + 1;

        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("unterminated section header", lineno);
            section = std::string(text::trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", lineno);
        const auto key = text::trim(line.substr(0, eq));
        if (key.empty())
            throw ParseError("empty key", lineno);
        const auto full = section.empty() ? std::string(key) : section + "." + std::string(key);
        cfg.values_[full] = {std::string(text::trim(line.substr(eq + 1))), base_dir};
    }
    return cfg;
}

void ConfigFile::set(const std::string& key, std::string value, std::filesystem::path base_dir)
{
    values_[key] = {std::move(value), std::move(base_dir)};
}

std::optional<std::string> ConfigFile::get(const std::string& key) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second.value;
}

std::string ConfigFile::get_string(const std::string& key, const std::string& fallback) const
{
    return get(key).value_or(fallback);
}

double ConfigFile::get_double(const std::string& key, double fallback) const
{
    const auto v = get(key);
    if (!v)
        return fallback;
    double out = 0.0;
    if (!text::parse_double(*v, out))
        throw ConfigError("key " + key + ": expected a number, got '" + *v + "'");
    return out;
}

long long ConfigFile::get_int(const std::string& key, long long fallback) const
{
    const auto v = get(key);
    if (!v)
        return fallback;
    try {
        std::size_t used = 0;
        const auto out = std::stoll(*v, &used);
        if (used == v->size())
            return out;
    } catch (const std::exception&) {
    }
    throw ConfigError("key " + key + ": expected an integer, got '" + *v + "'");
}

bool ConfigFile::get_bool(const std::string& key, bool fallback) const
{
    const auto v = get(key);
    if (!v)
        return fallback;
    if (*v == "true" || *v == "yes" || *v == "1" || *v == "on")
        return true;
    if (*v == "false" || *v == "no" || *v == "0" || *v == "off")
        return false;
    throw ConfigError("key " + key + ": expected a boolean, got '" + *v + "'");
}

std::vector<double> ConfigFile::get_doubles(const std::string& key, std::vector<double> fallback) const
{
    const auto v = get(key);
    if (!v)
        return fallback;
    std::vector<double> out;
    for (const auto field : text::split(*v, ',')) {
        double x = 0.0;
        if (!text::parse_double(field, x))
            throw ConfigError("key " + key + ": expected a comma-separated list of numbers");
        out.push_back(x);
    }
    return out;
}

std::optional<std::filesystem::path> ConfigFile::get_path(const std::string& key) const
{
    const auto it = values_.find(key);
    if (it == values_.end() || it->second.value.empty())
        return std::nullopt;
    std::filesystem::path p(it->second.value);
    if (p.is_relative() && !it->second.base_dir.empty())
        p = it->second.base_dir / p;
    return p.lexically_normal();
}

} // namespace bgap
