// SPDX-License-Identifier: Apache-2.0
#include "splatsem/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "splatsem/common.hpp"
#include "splatsem/io_util.hpp"

namespace splatsem {

namespace {
std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}
}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.source_ = text;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ValidationError(format_str("%s:%d: malformed section header", origin.c_str(), lineno));
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError(format_str("%s:%d: expected key=value", origin.c_str(), lineno));
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw ValidationError(format_str("%s:%d: empty key", origin.c_str(), lineno));
        std::string full = section.empty() ? key : section + "." + key;
        if (cfg.values_.count(full))
            throw ValidationError(format_str("%s:%d: duplicate key '%s'", origin.c_str(), lineno, full.c_str()));
        cfg.values_[full] = val;
        cfg.order_.push_back(full);
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::lookup(const std::string& key) {
    auto it = values_.find(key);
    if (it == values_.end())
        throw ValidationError("missing required config key '" + key + "' in " + origin_);
    consumed_.insert(key);
    return it->second;
}

std::string Config::get_str(const std::string& key) { return lookup(key); }

std::string Config::get_str(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    return lookup(key);
}

double Config::get_f64(const std::string& key) {
    std::string v = lookup(key);
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ValidationError("config key '" + key + "' is not a number: " + v);
    return d;
}

double Config::get_f64(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return get_f64(key);
}

int64_t Config::get_i64(const std::string& key) {
    std::string v = lookup(key);
    char* end = nullptr;
    long long d = std::strtoll(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0')
        throw ValidationError("config key '" + key + "' is not an integer: " + v);
    return d;
}

int64_t Config::get_i64(const std::string& key, int64_t fallback) {
    if (!has(key)) return fallback;
    return get_i64(key);
}

bool Config::get_bool(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    std::string v = lookup(key);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ValidationError("config key '" + key + "' is not a boolean: " + v);
}

std::vector<std::string> Config::get_list(const std::string& key) {
    std::string v = lookup(key);
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(v);
    while (std::getline(ss, cur, ',')) {
        size_t b = cur.find_first_not_of(" \t");
        size_t e = cur.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

std::vector<double> Config::get_f64_list(const std::string& key) {
    std::vector<double> out;
    for (const auto& s : get_list(key)) {
        char* end = nullptr;
        double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw ValidationError("config key '" + key + "' has non-numeric element: " + s);
        out.push_back(d);
    }
    return out;
}

void Config::reject_unknown() const {
    std::string unknown;
    for (const auto& k : order_) {
        if (!consumed_.count(k)) {
            if (!unknown.empty()) unknown += ", ";
            unknown += k;
        }
    }
    if (!unknown.empty())
        throw ValidationError("unknown config keys in " + origin_ + ": " + unknown);
}

std::vector<std::string> Config::keys_with_prefix(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const auto& k : order_)
        if (k.rfind(prefix, 0) == 0) out.push_back(k);
    return out;
}

std::vector<uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::streamsize n = in.tellg();
    in.seekg(0);
    std::vector<uint8_t> buf(static_cast<size_t>(n));
    in.read(reinterpret_cast<char*>(buf.data()), n);
    if (!in) throw ValidationError("short read: " + path);
    return buf;
}

void write_file_bytes(const std::string& path, const void* data, size_t n) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open file for writing: " + path);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!out) throw ComputeError("short write: " + path);
}

}  // namespace splatsem
