#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "romakit/ucd.hpp"
#include "romakit/utf8.hpp"

namespace testsup {

inline std::filesystem::path source_root() {
    if (const char* env = std::getenv("ROMAKIT_DATA")) return env;
    return ROMAKIT_SOURCE_ROOT;
}

inline std::filesystem::path ucd_dir() { return source_root() / "data" / "ucd"; }
inline std::filesystem::path tables_dir() { return source_root() / "data" / "tables"; }
inline std::filesystem::path schemes_dir() { return source_root() / "schemes"; }

inline const romakit::character_database& db() {
    static romakit::character_database instance = romakit::character_database::load(ucd_dir());
    return instance;
}

// Unescapes the \u{XXXX} form used by the generated test vectors.
inline std::string unescape(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        if (s[i] == '\\' && i + 2 < s.size() && s[i + 1] == 'u' && s[i + 2] == '{') {
            std::size_t close = s.find('}', i + 3);
            char32_t cp = 0;
            for (std::size_t k = i + 3; k < close; ++k) {
                char c = s[k];
                cp <<= 4;
                if (c >= '0' && c <= '9') cp |= static_cast<char32_t>(c - '0');
                else if (c >= 'A' && c <= 'F') cp |= static_cast<char32_t>(c - 'A' + 10);
                else if (c >= 'a' && c <= 'f') cp |= static_cast<char32_t>(c - 'a' + 10);
            }
            romakit::append_utf8(out, cp);
            i = close + 1;
        } else {
            out.push_back(s[i++]);
        }
    }
    return out;
}

struct norm_vector {
    std::string input, nfc, nfkc, nfkd, stripped;
};

inline std::vector<norm_vector> load_norm_vectors() {
    std::ifstream in(source_root() / "tests" / "data" / "norm_vectors.tsv");
    std::vector<norm_vector> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, '\t')) cols.push_back(col);
        cols.resize(5);
        rows.push_back({unescape(cols[0]), unescape(cols[1]), unescape(cols[2]),
                        unescape(cols[3]), unescape(cols[4])});
    }
    return rows;
}

inline std::filesystem::path make_temp_dir(const std::string& stem) {
    auto dir = std::filesystem::temp_directory_path() / (stem + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

}  // namespace testsup
