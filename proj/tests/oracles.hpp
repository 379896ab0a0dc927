#pragma once

// Independent reference implementations used to cross-check the library.
// They stay deliberately naive: literal merge-by-merge application and a
// plain whitespace splitter.

#include <string>
#include <string_view>
#include <vector>

#include "romakit/tokenlab.hpp"

namespace oracles {

inline std::vector<std::string> naive_encode(const romakit::character_database& db,
                                             const romakit::vocabulary& v, std::string_view text) {
    auto chunks = romakit::detail::symbol_chunks(db, text, v.config.split_by_whitespace);
    std::vector<std::string> out;
    for (auto& chunk : chunks) {
        romakit::detail::expand_uncovered(v, chunk);
        for (const auto& [l, r] : v.merges) {
            std::vector<std::string> next;
            for (std::size_t k = 0; k < chunk.size();) {
                if (k + 1 < chunk.size() && chunk[k] == l && chunk[k + 1] == r) {
                    next.push_back(l + r);
                    k += 2;
                } else {
                    next.push_back(chunk[k]);
                    k += 1;
                }
            }
            chunk = std::move(next);
        }
        for (auto& s : chunk) out.push_back(std::move(s));
    }
    return out;
}

inline std::uint64_t naive_word_count(std::string_view text) {
    std::uint64_t n = 0;
    bool in_word = false;
    for (char c : text) {
        bool ws = c == ' ' || c == '\t';
        if (!ws && !in_word) ++n;
        in_word = !ws;
    }
    return n;
}

}  // namespace oracles
