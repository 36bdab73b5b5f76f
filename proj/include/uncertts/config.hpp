#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace uncertts {

// Flat key-value config text: "key = value" lines, optional "[section]"
// headers that prefix subsequent keys as "section.key", '#' comments.
// Serialization is deterministic (sorted, grouped by section) so configs
// round-trip byte-stable.
struct KeyValueFile {
    std::map<std::string, std::string> entries;

    static KeyValueFile parse_text(const std::string& text);
    static KeyValueFile load(const std::string& path);
    std::string to_text() const;
    void save(const std::string& path) const;

    bool has(const std::string& key) const { return entries.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { entries[key] = value; }

    std::string get_str(const std::string& key, const std::string& fallback) const;
    double get_real(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    std::size_t get_size(const std::string& key, std::size_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<std::string> get_list(const std::string& key) const;  // comma-separated
    std::vector<double> get_reals(const std::string& key) const;
};

std::string format_real(double v);  // shortest round-trip decimal

}  // namespace uncertts
