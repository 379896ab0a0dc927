#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "romakit/errors.hpp"
#include "romakit/ucd.hpp"
#include "romakit/utf8.hpp"

namespace romakit {

// Mapping tables in the tab-separated format:
//   <source grapheme (hex codepoints, space-joined)> \t <ascii output> \t <tier>
// '#' starts a comment line; a fourth field is an ignored gloss.
// Output fields may use \s (space), \t and \\ escapes.
struct mapping_tables {
    std::unordered_map<std::u32string, std::string> override_map;
    std::unordered_map<std::u32string, std::string> script_map;
    std::size_t override_max = 0;
    std::size_t script_max = 0;
};

namespace detail {

inline std::string unescape_output(std::string_view s, std::string_view file, std::size_t line_no) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out.push_back(s[i]);
            continue;
        }
        if (++i == s.size()) throw parse_error(std::string(file) + ": dangling escape", line_no);
        switch (s[i]) {
            case 's': out.push_back(' '); break;
            case 't': out.push_back('\t'); break;
            case '\\': out.push_back('\\'); break;
            case '#': out.push_back('#'); break;
            default: throw parse_error(std::string(file) + ": unknown escape", line_no);
        }
    }
    return out;
}

inline void load_table_file(const std::filesystem::path& path, mapping_tables& tables) {
    std::string text = read_file(path, path.filename().string());
    std::string file = path.filename().string();
    std::size_t line_no = 0;
    for (std::string_view line : split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        auto fields = split(line, '\t');
        if (fields.size() < 3) throw parse_error(file + ": expected key\\toutput\\ttier", line_no);
        std::u32string key;
        for (std::string_view part : split(trim(fields[0]), ' ')) {
            if (part.empty()) continue;
            auto cp = parse_hex_cp(part);
            if (!cp || !is_scalar_value(*cp)) throw parse_error(file + ": bad codepoint in key", line_no);
            key.push_back(*cp);
        }
        if (key.empty()) throw parse_error(file + ": empty key", line_no);
        std::string out = unescape_output(trim(fields[1]), file, line_no);
        for (char c : out)
            if (static_cast<unsigned char>(c) > 0x7F)
                throw parse_error(file + ": output must be ASCII", line_no);
        std::string_view tier = trim(fields[2]);
        auto& map = tier == "override" ? tables.override_map
                  : tier == "script"   ? tables.script_map
                  : throw parse_error(file + ": tier must be 'override' or 'script'", line_no);
        if (!map.emplace(key, std::move(out)).second)
            throw parse_error(file + ": duplicate key", line_no);
        auto& max_len = tier == "override" ? tables.override_max : tables.script_max;
        max_len = std::max(max_len, key.size());
    }
}

}  // namespace detail

inline mapping_tables load_mapping_tables(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(dir))
        throw config_error("missing required file: mapping table directory " + dir.string());
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.rfind("uroman_", 0) == 0 && name.ends_with(".tsv"))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw config_error("missing required file: no uroman_*.tsv tables in " + dir.string());
    mapping_tables tables;
    for (const auto& f : files) detail::load_table_file(f, tables);
    return tables;
}

// Readings file shares the table format; values are tone-numbered pinyin.
inline std::unordered_map<char32_t, std::string> load_han_readings(const std::filesystem::path& path) {
    std::string text = detail::read_file(path, path.filename().string());
    std::string file = path.filename().string();
    std::unordered_map<char32_t, std::string> readings;
    std::size_t line_no = 0;
    for (std::string_view line : detail::split(text, '\n')) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        auto fields = detail::split(line, '\t');
        if (fields.size() < 3) throw parse_error(file + ": expected key\\treading\\ttier", line_no);
        auto cp = detail::parse_hex_cp(detail::trim(fields[0]));
        if (!cp) throw parse_error(file + ": bad codepoint", line_no);
        std::string reading(detail::trim(fields[1]));
        if (reading.empty()) throw parse_error(file + ": empty reading", line_no);
        for (std::size_t k = 0; k < reading.size(); ++k) {
            bool last = k + 1 == reading.size();
            char c = reading[k];
            bool ok = (c >= 'a' && c <= 'z') || (last && c >= '0' && c <= '5');
            if (!ok) throw parse_error(file + ": reading must be pinyin letters + tone digit", line_no);
        }
        if (!readings.emplace(*cp, std::move(reading)).second)
            throw parse_error(file + ": duplicate reading", line_no);
    }
    if (readings.empty()) throw config_error("missing required file: " + file + " has no readings");
    return readings;
}

}  // namespace romakit
