#include "wwlab/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wwlab/errors.hpp"

namespace wwlab::cli {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool valid_key(const std::string& k) {
    return !k.empty() && std::all_of(k.begin(), k.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
    });
}

// Strips quotes and array brackets; arrays become comma-separated lists.
std::string normalize_value(const std::string& raw, const std::string& where) {
    std::string v = trim(raw);
    if (v.empty()) throw ConfigError(where + ": missing value");
    if (v.front() == '"' || v.front() == '\'') {
        if (v.size() < 2 || v.back() != v.front()) throw ConfigError(where + ": unterminated string");
        return v.substr(1, v.size() - 2);
    }
    if (v.front() == '[') {
        if (v.back() != ']') throw ConfigError(where + ": unterminated array");
        std::string inner = v.substr(1, v.size() - 2);
        std::string out;
        std::stringstream ss(inner);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!out.empty()) out += ',';
            out += trim(item);
        }
        return out;
    }
    return v;
}

// Removes a trailing comment that is not inside quotes.
std::string strip_comment(const std::string& line) {
    char quote = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            return line.substr(0, i);
        }
    }
    return line;
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto [p, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || p != end) throw ConfigError("key '" + key + "': '" + text + "' is not a number");
    return v;
}

}  // namespace

Config Config::parse(std::istream& is, const std::string& source) {
    Config c;
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string where = source + ":" + std::to_string(lineno);
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') throw ConfigError(where + ": malformed section header");
            section = trim(body.substr(1, body.size() - 2));
            if (!valid_key(section)) throw ConfigError(where + ": invalid section name");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
        const std::string key = trim(body.substr(0, eq));
        if (!valid_key(key)) throw ConfigError(where + ": invalid key '" + key + "'");
        const std::string full = section.empty() ? key : section + "." + key;
        if (c.contains(full)) throw ConfigError(where + ": duplicate key '" + full + "'");
        c.values_[full] = normalize_value(body.substr(eq + 1), where);
    }
    return c;
}

Config Config::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse(in, path.string());
}

void Config::set(const std::string& key, const std::string& value) {
    if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'");
    values_[key] = value;
}

void Config::apply_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + assignment + "' is not KEY=VAL");
    const std::string key = trim(assignment.substr(0, eq));
    set(key, normalize_value(assignment.substr(eq + 1), "override " + key));
}

void Config::require_known(const std::set<std::string>& known) const {
    for (const auto& [k, v] : values_)
        if (!known.count(k)) throw ConfigError("unknown config key '" + k + "'");
}

double Config::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_double(key, it->second);
}

int Config::get_int(const std::string& key, int fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    int v = 0;
    const auto& t = it->second;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ConfigError("key '" + key + "': '" + t + "' is not an integer");
    return v;
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::uint64_t v = 0;
    const auto& t = it->second;
    const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ConfigError("key '" + key + "': '" + t + "' is not an unsigned integer");
    return v;
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "true") return true;
    if (it->second == "false") return false;
    throw ConfigError("key '" + key + "': expected true or false");
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::vector<double> Config::get_doubles(const std::string& key, const std::vector<double>& fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("key '" + key + "': empty list");
    return out;
}

}  // namespace wwlab::cli
