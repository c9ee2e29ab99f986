#ifndef BGAP_CONFIG_HPP
#define BGAP_CONFIG_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgap {

/// Flat `key = value` file with `[section]` headers. Keys are addressed as
/// `section.key`; keys before the first header have no prefix.
///
/// Relative paths are resolved against the directory of the file that set
/// the value, or against the working directory for overrides.
class ConfigFile {
public:
    ConfigFile() = default;

    static ConfigFile load(const std::filesystem::path& path);
    static ConfigFile parse(std::string_view text, std::filesystem::path base_dir = {});

    /// Overrides win over file values.
    void set(const std::string& key, std::string value, std::filesystem::path base_dir = {});

    bool has(const std::string& key) const { return values_.contains(key); }
    std::optional<std::string> get(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& key, std::vector<double> fallback) const;

    /// Path value resolved against its origin; empty optional if unset.
    std::optional<std::filesystem::path> get_path(const std::string& key) const;

private:
    struct Entry {
        std::string value;
        std::filesystem::path base_dir;
    };
    std::map<std::string, Entry> values_;
};

} // namespace bgap

#endif
