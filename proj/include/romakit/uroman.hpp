#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "romakit/tables.hpp"
#include "romakit/ucd.hpp"
#include "romakit/utf8.hpp"

namespace romakit {

enum class map_tier { override_tier, script_table, name_heuristic, passthrough, dropped };

struct romanized_span {
    std::size_t begin = 0;  // codepoint index into the NFKC-normalized input
    std::size_t end = 0;
    std::string text;
    map_tier tier = map_tier::dropped;
};

struct roman_result {
    std::string text;
    std::uint64_t chars_in = 0;       // codepoints after NFKC
    std::uint64_t chars_dropped = 0;  // codepoints with no mapping in any tier
};

// Universal ASCII romanizer: override table, then script tables (Han readings,
// kana, curated alphabets), then the Unicode-name heuristic, then ASCII
// passthrough. Characters left over are dropped and recorded per span.
// Immutable after construction; all calls are const and reentrant.
class uroman_engine {
public:
    uroman_engine(const character_database& db, const std::filesystem::path& tables_dir)
        : db_(&db),
          tables_(load_mapping_tables(tables_dir)),
          han_readings_(load_han_readings(tables_dir / "han_readings.tsv")) {}

    std::string romanize(std::string_view text) const { return romanize_counted(text).text; }

    roman_result romanize_counted(std::string_view text) const {
        std::u32string normalized = db_->normalize(to_u32(text), norm_form::nfkc);
        roman_result result;
        result.chars_in = normalized.size();
        for (const romanized_span& span : spans(normalized)) {
            result.text += span.text;
            if (span.tier == map_tier::dropped) result.chars_dropped += span.end - span.begin;
        }
        return result;
    }

    // Span decomposition over already-NFKC text; concatenating the span texts
    // in order reproduces the romanization.
    std::vector<romanized_span> spans(std::u32string_view text) const {
        std::vector<romanized_span> out;
        std::size_t i = 0;
        while (i < text.size()) {
            if (auto hit = longest_match(tables_.override_map, tables_.override_max, text, i)) {
                out.push_back({i, i + hit->first, std::move(hit->second), map_tier::override_tier});
                i += hit->first;
                continue;
            }
            char32_t cp = text[i];
            script kind = db_->script_kind_of(cp);
            if (kind == script::devanagari) {
                devanagari_segment(text, i, out);
                continue;
            }
            if (kind == script::han) {
                if (auto reading = han_reading_ascii(cp)) {
                    out.push_back({i, i + 1, std::move(*reading), map_tier::script_table});
                    ++i;
                    continue;
                }
            }
            if (auto hit = longest_match(tables_.script_map, tables_.script_max, text, i)) {
                out.push_back({i, i + hit->first, std::move(hit->second), map_tier::script_table});
                i += hit->first;
                continue;
            }
            if (cp <= 0x7F) {
                out.push_back({i, i + 1, std::string(1, static_cast<char>(cp)), map_tier::passthrough});
                ++i;
                continue;
            }
            // diacritic stripping recovers a base letter for most Latin/Greek/
            // Cyrillic precomposed forms
            std::u32string stripped = db_->strip_combining_marks(std::u32string_view(&cp, 1));
            if (!stripped.empty() && !(stripped.size() == 1 && stripped[0] == cp)) {
                bool ascii = true;
                for (char32_t s : stripped) ascii = ascii && s <= 0x7F;
                if (ascii) {
                    out.push_back({i, i + 1, to_utf8(stripped), map_tier::passthrough});
                    ++i;
                    continue;
                }
                if (stripped.size() == 1) {
                    std::u32string key = stripped;
                    if (auto it = tables_.script_map.find(key); it != tables_.script_map.end()) {
                        out.push_back({i, i + 1, it->second, map_tier::script_table});
                        ++i;
                        continue;
                    }
                    if (auto it = tables_.override_map.find(key); it != tables_.override_map.end()) {
                        out.push_back({i, i + 1, it->second, map_tier::override_tier});
                        ++i;
                        continue;
                    }
                }
            }
            if (auto rec = db_->lookup(cp)) {
                if (auto payload = latin_from_unicode_name(*rec)) {
                    out.push_back({i, i + 1, std::move(*payload), map_tier::name_heuristic});
                    ++i;
                    continue;
                }
            }
            if (int d = db_->decimal_value(cp); d >= 0) {
                out.push_back({i, i + 1, std::string(1, static_cast<char>('0' + d)), map_tier::passthrough});
                ++i;
                continue;
            }
            if (db_->general_category_of(cp)[0] == 'Z') {
                out.push_back({i, i + 1, " ", map_tier::passthrough});
                ++i;
                continue;
            }
            out.push_back({i, i + 1, "", map_tier::dropped});
            ++i;
        }
        return out;
    }

    // Phonetic payload from character names: "<SCRIPT> (SMALL|CAPITAL) LETTER X",
    // "<SCRIPT> LETTER X", "<SCRIPT> SYLLABLE X", "<SCRIPT> VOWEL SIGN X".
    std::optional<std::string> latin_from_unicode_name(const codepoint_record& rec) const {
        struct pattern {
            std::string_view keyword;
            bool capital;
        };
        static constexpr pattern kPatterns[] = {
            {" CAPITAL LETTER ", true},
            {" SMALL LETTER ", false},
            {" LETTER ", false},
            {" SYLLABLE ", false},
            {" VOWEL SIGN ", false},
        };
        for (const pattern& p : kPatterns) {
            std::size_t pos = rec.name.find(p.keyword);
            if (pos == std::string::npos) continue;
            std::string_view payload = std::string_view(rec.name).substr(pos + p.keyword.size());
            if (auto with = payload.find(" WITH "); with != std::string_view::npos)
                payload = payload.substr(0, with);
            if (auto space = payload.rfind(' '); space != std::string_view::npos)
                payload = payload.substr(space + 1);
            std::string result;
            for (char c : payload)
                if (c >= 'A' && c <= 'Z') result.push_back(static_cast<char>(c - 'A' + 'a'));
            if (result.empty()) continue;
            if (p.capital) result[0] = static_cast<char>(result[0] - 'a' + 'A');
            return result;
        }
        return std::nullopt;
    }

    // Toneless ASCII pinyin of the most common reading; u-diaeresis folds to u.
    std::optional<std::string> han_reading_ascii(char32_t cp) const {
        auto it = han_readings_.find(cp);
        if (it == han_readings_.end()) return std::nullopt;
        std::string out;
        for (char c : it->second) {
            if (c >= '0' && c <= '9') continue;
            out.push_back(c == 'v' ? 'u' : c);
        }
        return out;
    }

    const std::unordered_map<char32_t, std::string>& han_readings() const { return han_readings_; }

private:
    static std::optional<std::pair<std::size_t, std::string>> longest_match(
        const std::unordered_map<std::u32string, std::string>& map, std::size_t max_len,
        std::u32string_view text, std::size_t i) {
        std::size_t cap = std::min(max_len, text.size() - i);
        for (std::size_t len = cap; len >= 1; --len) {
            if (auto it = map.find(std::u32string(text.substr(i, len))); it != map.end())
                return std::make_pair(len, it->second);
        }
        return std::nullopt;
    }

    static bool is_deva(char32_t cp) { return cp >= 0x0900 && cp <= 0x097F; }
    static bool is_deva_consonant(char32_t cp) {
        return (cp >= 0x0915 && cp <= 0x0939) || (cp >= 0x0958 && cp <= 0x095F) ||
               (cp >= 0x0978 && cp <= 0x097F);
    }
    static bool is_deva_matra(char32_t cp) {
        return (cp >= 0x093A && cp <= 0x093B) || (cp >= 0x093E && cp <= 0x094C) ||
               (cp >= 0x094E && cp <= 0x094F) || (cp >= 0x0955 && cp <= 0x0957) ||
               cp == 0x0962 || cp == 0x0963;
    }
    bool is_deva_word_part(char32_t cp) const {
        if (!is_deva(cp)) return false;
        char head = db_->general_category_of(cp)[0];
        return head == 'L' || head == 'M';
    }

    std::optional<std::string> script_value(const std::u32string& key) const {
        auto it = tables_.script_map.find(key);
        if (it == tables_.script_map.end()) return std::nullopt;
        return it->second;
    }

    // Abugida assembly: consonants carry an inherent a which a following vowel
    // sign replaces and a virama removes; a bare consonant in word-final
    // position sheds the inherent vowel unless it closes a conjunct.
    void devanagari_segment(std::u32string_view text, std::size_t& i,
                            std::vector<romanized_span>& out) const {
        static constexpr char32_t kVirama = 0x094D;
        static constexpr char32_t kNukta = 0x093C;
        bool after_virama = false;
        while (i < text.size() && is_deva(text[i])) {
            char32_t cp = text[i];
            if (is_deva_consonant(cp)) {
                std::size_t start = i;
                std::u32string key(1, cp);
                std::size_t next = i + 1;
                if (next < text.size() && text[next] == kNukta && script_value(key + text[next])) {
                    key.push_back(text[next]);
                    ++next;
                }
                std::string full = script_value(key).value_or("");
                if (full.empty()) {
                    if (auto rec = db_->lookup(cp)) {
                        if (auto payload = latin_from_unicode_name(*rec)) full = *payload + "a";
                    }
                }
                std::string stem = full;
                if (!stem.empty() && stem.back() == 'a') stem.pop_back();
                if (next < text.size() && is_deva_matra(text[next])) {
                    std::string sign = script_value(std::u32string(1, text[next])).value_or("");
                    out.push_back({start, next + 1, stem + sign, map_tier::script_table});
                    i = next + 1;
                    after_virama = false;
                } else if (next < text.size() && text[next] == kVirama) {
                    out.push_back({start, next + 1, stem, map_tier::script_table});
                    i = next + 1;
                    after_virama = true;
                } else {
                    bool word_final = next >= text.size() || !is_deva_word_part(text[next]);
                    out.push_back({start, next, word_final && !after_virama ? stem : full,
                                   map_tier::script_table});
                    i = next;
                    after_virama = false;
                }
                continue;
            }
            if (auto v = script_value(std::u32string(1, cp))) {
                out.push_back({i, i + 1, *v, map_tier::script_table});
            } else if (int d = db_->decimal_value(cp); d >= 0) {
                out.push_back({i, i + 1, std::string(1, static_cast<char>('0' + d)), map_tier::passthrough});
            } else {
                out.push_back({i, i + 1, "", map_tier::dropped});
            }
            ++i;
            after_virama = false;
        }
    }

    const character_database* db_;
    mapping_tables tables_;
    std::unordered_map<char32_t, std::string> han_readings_;
};

}  // namespace romakit
