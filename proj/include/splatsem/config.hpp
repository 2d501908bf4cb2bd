// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace splatsem {

// Flat key=value config with [section] headers and '#' comments. Keys are
// addressed as "section.key" ("" section for keys before any header).
// Every key must be consumed by a getter; reject_unknown() throws on typos.
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;

    std::string get_str(const std::string& key);
    std::string get_str(const std::string& key, const std::string& fallback);
    double get_f64(const std::string& key);
    double get_f64(const std::string& key, double fallback);
    int64_t get_i64(const std::string& key);
    int64_t get_i64(const std::string& key, int64_t fallback);
    bool get_bool(const std::string& key, bool fallback);

    // Comma-separated list values.
    std::vector<std::string> get_list(const std::string& key);
    std::vector<double> get_f64_list(const std::string& key);

    // Throws ValidationError naming every key no getter ever touched.
    void reject_unknown() const;

    // Raw text as parsed; hashed into run manifests as the config digest.
    const std::string& source_text() const { return source_; }
    const std::string& origin() const { return origin_; }

    // Keys sharing a prefix ("aug." etc.), in file order.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

private:
    std::string lookup(const std::string& key);

    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
    mutable std::set<std::string> consumed_;
    std::string source_;
    std::string origin_;
};

}  // namespace splatsem
