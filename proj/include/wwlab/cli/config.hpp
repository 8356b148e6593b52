#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace wwlab::cli {

/// Flat key/value configuration. Accepted text is a TOML subset: `key = value`
/// lines, `#` comments, `[section]` headers that prefix keys with "section.",
/// quoted or bare strings, numbers, booleans and one-line arrays.
class Config {
public:
    static Config parse(std::istream& is, const std::string& source = "<config>");
    static Config load(const std::filesystem::path& path);

    void set(const std::string& key, const std::string& value);
    /// "KEY=VAL"; the value follows the file syntax.
    void apply_override(const std::string& assignment);
    bool contains(const std::string& key) const { return values_.count(key) > 0; }
    /// Throws ConfigError naming the first key outside `known`.
    void require_known(const std::set<std::string>& known) const;

    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;

    const std::map<std::string, std::string>& entries() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace wwlab::cli
