#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "romakit/errors.hpp"
#include "romakit/utf8.hpp"

namespace romakit {

enum class script : std::uint8_t {
    latin,
    cyrillic,
    arabic,
    devanagari,
    han,
    hiragana,
    katakana,
    common,
    inherited,
    other,
};

struct script_tag {
    script kind = script::other;
    std::string name = "Unknown";

    bool operator==(const script_tag& rhs) const { return kind == rhs.kind && name == rhs.name; }
    bool operator!=(const script_tag& rhs) const { return !(*this == rhs); }

    static script_tag from_name(std::string_view n) {
        static const std::unordered_map<std::string_view, script> kClosed = {
            {"Latin", script::latin},         {"Cyrillic", script::cyrillic},
            {"Arabic", script::arabic},       {"Devanagari", script::devanagari},
            {"Han", script::han},             {"Hiragana", script::hiragana},
            {"Katakana", script::katakana},   {"Common", script::common},
            {"Inherited", script::inherited},
        };
        auto it = kClosed.find(n);
        return {it == kClosed.end() ? script::other : it->second, std::string(n)};
    }
};

enum class norm_form { nfc, nfkc, nfkd, nfd };

struct codepoint_record {
    char32_t codepoint = 0;
    std::string name;
    std::string general_category;
    script_tag script_of{};
    std::u32string canonical_decomposition;  // one UCD level, empty if none
    std::uint8_t combining_class = 0;
    int decimal_digit = -1;  // -1 when the character has no decimal value
};

struct script_run {
    std::size_t begin = 0;  // codepoint index, inclusive
    std::size_t end = 0;    // codepoint index, exclusive
    script_tag tag{};
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

inline std::optional<char32_t> parse_hex_cp(std::string_view s) {
    s = trim(s);
    if (s.empty() || s.size() > 6) return std::nullopt;
    char32_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= static_cast<char32_t>(c - '0');
        else if (c >= 'A' && c <= 'F') v |= static_cast<char32_t>(c - 'A' + 10);
        else if (c >= 'a' && c <= 'f') v |= static_cast<char32_t>(c - 'a' + 10);
        else return std::nullopt;
    }
    return v;
}

inline std::string cp_to_hex(char32_t cp) {
    char buf[8];
    int n = std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
    return std::string(buf, static_cast<std::size_t>(n));
}

inline std::string read_file(const std::filesystem::path& p, std::string_view what) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw config_error("missing required file: " + std::string(what) + " (" + p.string() + ")");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (text.empty()) throw config_error("missing required file: " + std::string(what) + " is empty");
    return text;
}

// Hangul syllable arithmetic (Unicode ch. 3.12)
inline constexpr char32_t kHangulSBase = 0xAC00;
inline constexpr char32_t kHangulLBase = 0x1100;
inline constexpr char32_t kHangulVBase = 0x1161;
inline constexpr char32_t kHangulTBase = 0x11A7;
inline constexpr int kHangulLCount = 19;
inline constexpr int kHangulVCount = 21;
inline constexpr int kHangulTCount = 28;
inline constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
inline constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline bool is_hangul_syllable(char32_t cp) {
    return cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount;
}

}  // namespace detail

// In-memory Unicode character database, loaded from the pinned UCD flat files
// (UnicodeData.txt, Scripts.txt, CompositionExclusions.txt, Jamo.txt).
// Immutable after load; all queries are const and thread-safe.
class character_database {
public:
    static character_database load(const std::filesystem::path& ucd_dir) {
        character_database db;
        db.parse_unicode_data(detail::read_file(ucd_dir / "UnicodeData.txt", "UnicodeData.txt"));
        db.parse_scripts(detail::read_file(ucd_dir / "Scripts.txt", "Scripts.txt"));
        db.parse_exclusions(detail::read_file(ucd_dir / "CompositionExclusions.txt", "CompositionExclusions.txt"));
        db.parse_jamo(detail::read_file(ucd_dir / "Jamo.txt", "Jamo.txt"));
        db.build_normalization_tables();
        return db;
    }

    const std::string& version() const { return version_; }
    std::size_t record_count() const { return chars_.size(); }

    // Total over scalar values: record for assigned, nullopt for unassigned.
    // Surrogates and out-of-range values are rejected with data_error.
    std::optional<codepoint_record> lookup(char32_t cp) const {
        require_scalar(cp);
        if (auto it = chars_.find(cp); it != chars_.end()) {
            const char_info& ci = it->second;
            codepoint_record r;
            r.codepoint = cp;
            r.name = ci.name;
            r.general_category = ci.gc;
            r.script_of = script_of(cp);
            if (!ci.compat) r.canonical_decomposition = ci.raw_decomp;
            r.combining_class = ci.ccc;
            r.decimal_digit = ci.decimal;
            return r;
        }
        if (const ranged_block* b = find_range(cp); b && b->in_db) {
            codepoint_record r;
            r.codepoint = cp;
            r.name = synthesized_name(*b, cp);
            r.general_category = b->gc;
            r.script_of = script_of(cp);
            if (detail::is_hangul_syllable(cp)) r.canonical_decomposition = hangul_raw_decomposition(cp);
            return r;
        }
        return std::nullopt;
    }

    bool assigned(char32_t cp) const {
        require_scalar(cp);
        if (chars_.count(cp)) return true;
        const ranged_block* b = find_range(cp);
        return b && b->in_db;
    }

    std::string general_category_of(char32_t cp) const {
        if (auto it = chars_.find(cp); it != chars_.end()) return it->second.gc;
        if (const ranged_block* b = find_range(cp)) return b->gc;
        return "Cn";
    }

    bool is_nonspacing_mark(char32_t cp) const {
        auto it = chars_.find(cp);
        return it != chars_.end() && it->second.gc[0] == 'M' && it->second.gc[1] == 'n';
    }

    std::uint8_t combining_class(char32_t cp) const {
        auto it = chars_.find(cp);
        return it == chars_.end() ? 0 : it->second.ccc;
    }

    int decimal_value(char32_t cp) const {
        auto it = chars_.find(cp);
        return it == chars_.end() ? -1 : it->second.decimal;
    }

    script_tag script_of(char32_t cp) const {
        auto it = std::upper_bound(script_ranges_.begin(), script_ranges_.end(), cp,
                                   [](char32_t v, const script_range& r) { return v < r.lo; });
        if (it != script_ranges_.begin()) {
            --it;
            if (cp <= it->hi) return script_tag{script_kinds_[it->idx], script_names_[it->idx]};
        }
        return script_tag{};  // Unknown
    }

    script script_kind_of(char32_t cp) const {
        auto it = std::upper_bound(script_ranges_.begin(), script_ranges_.end(), cp,
                                   [](char32_t v, const script_range& r) { return v < r.lo; });
        if (it != script_ranges_.begin()) {
            --it;
            if (cp <= it->hi) return script_kinds_[it->idx];
        }
        return script::other;
    }

    // --- normalization -----------------------------------------------------

    std::u32string normalize(std::u32string_view text, norm_form form) const {
        switch (form) {
            case norm_form::nfd: return decompose(text, false);
            case norm_form::nfkd: return decompose(text, true);
            case norm_form::nfc: return compose(decompose(text, false));
            case norm_form::nfkc: return compose(decompose(text, true));
        }
        return std::u32string(text);
    }

    std::string normalize(std::string_view text, norm_form form) const {
        return to_utf8(normalize(to_u32(text), form));
    }

    // NFKD, drop Mn marks, recompose to NFC.
    std::u32string strip_combining_marks(std::u32string_view text) const {
        std::u32string decomposed = decompose(text, true);
        std::u32string kept;
        kept.reserve(decomposed.size());
        for (char32_t cp : decomposed)
            if (!is_nonspacing_mark(cp)) kept.push_back(cp);
        return compose(std::move(kept));
    }

    std::string strip_combining_marks(std::string_view text) const {
        return to_utf8(strip_combining_marks(to_u32(text)));
    }

    // --- script segmentation ------------------------------------------------

    // Partitions text into runs of one script. Common/Inherited characters
    // attach to the preceding run when one exists, else to the following run.
    std::vector<script_run> script_runs(std::u32string_view text) const {
        std::vector<script_run> runs;
        std::size_t run_start = 0;
        std::optional<script_tag> current;
        for (std::size_t i = 0; i < text.size(); ++i) {
            script_tag t = script_of(text[i]);
            if (t.kind == script::common || t.kind == script::inherited) continue;
            if (!current) {
                current = std::move(t);
            } else if (t != *current) {
                runs.push_back({run_start, i, std::move(*current)});
                run_start = i;
                current = std::move(t);
            }
        }
        if (!text.empty())
            runs.push_back({run_start, text.size(),
                            current.value_or(script_tag{script::common, "Common"})});
        return runs;
    }

    std::vector<script_run> script_runs(std::string_view utf8_text) const {
        return script_runs(to_u32(utf8_text));
    }

private:
    struct char_info {
        std::string name;
        char gc[3] = {'C', 'n', 0};
        std::uint8_t ccc = 0;
        std::int8_t decimal = -1;
        std::u32string raw_decomp;
        bool compat = false;
    };

    struct ranged_block {
        char32_t lo = 0, hi = 0;
        char gc[3] = {'C', 'n', 0};
        bool in_db = false;  // surrogate/private-use blocks stay out
        bool hangul = false;
        std::string name_prefix;  // e.g. "CJK UNIFIED IDEOGRAPH-"
    };

    struct script_range {
        char32_t lo = 0, hi = 0;
        std::uint32_t idx = 0;
    };

    static void require_scalar(char32_t cp) {
        if (!is_scalar_value(cp))
            throw data_error("U+" + detail::cp_to_hex(cp) + " is not a scalar value");
    }

    const ranged_block* find_range(char32_t cp) const {
        auto it = std::upper_bound(ranges_.begin(), ranges_.end(), cp,
                                   [](char32_t v, const ranged_block& r) { return v < r.lo; });
        if (it == ranges_.begin()) return nullptr;
        --it;
        return cp <= it->hi ? &*it : nullptr;
    }

    std::string synthesized_name(const ranged_block& b, char32_t cp) const {
        if (b.hangul) {
            char32_t s = cp - detail::kHangulSBase;
            int l = static_cast<int>(s) / detail::kHangulNCount;
            int v = (static_cast<int>(s) % detail::kHangulNCount) / detail::kHangulTCount;
            int t = static_cast<int>(s) % detail::kHangulTCount;
            return "HANGUL SYLLABLE " + jamo_l_[static_cast<std::size_t>(l)] +
                   jamo_v_[static_cast<std::size_t>(v)] + jamo_t_[static_cast<std::size_t>(t)];
        }
        return b.name_prefix + detail::cp_to_hex(cp);
    }

    static std::u32string hangul_raw_decomposition(char32_t cp) {
        char32_t s = cp - detail::kHangulSBase;
        std::u32string out;
        if (s % detail::kHangulTCount == 0) {
            out.push_back(detail::kHangulLBase + s / detail::kHangulNCount);
            out.push_back(detail::kHangulVBase + (s % detail::kHangulNCount) / detail::kHangulTCount);
        } else {
            out.push_back(detail::kHangulSBase + (s / detail::kHangulTCount) * detail::kHangulTCount);
            out.push_back(detail::kHangulTBase + s % detail::kHangulTCount);
        }
        return out;
    }

    void parse_unicode_data(const std::string& text) {
        std::size_t line_no = 0;
        std::optional<std::pair<char32_t, std::string>> pending_first;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.empty() || line.front() == '#') continue;
            auto fields = detail::split(line, ';');
            if (fields.size() < 15)
                throw parse_error("UnicodeData.txt: expected 15 fields", line_no);
            auto cp = detail::parse_hex_cp(fields[0]);
            if (!cp) throw parse_error("UnicodeData.txt: bad codepoint field", line_no);
            std::string_view name = fields[1];
            std::string_view gc = fields[2];
            if (gc.size() != 2) throw parse_error("UnicodeData.txt: bad category field", line_no);

            if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
                if (name.ends_with(", First>")) {
                    pending_first = {{*cp, std::string(name.substr(1, name.size() - 9))}};
                    continue;
                }
                if (name.ends_with(", Last>")) {
                    std::string label(name.substr(1, name.size() - 8));
                    if (!pending_first || pending_first->second != label)
                        throw parse_error("UnicodeData.txt: unpaired range marker", line_no);
                    ranged_block b;
                    b.lo = pending_first->first;
                    b.hi = *cp;
                    b.gc[0] = gc[0];
                    b.gc[1] = gc[1];
                    if (label.find("Hangul Syllable") != std::string::npos) {
                        b.in_db = b.hangul = true;
                    } else if (label.find("CJK Ideograph") != std::string::npos) {
                        b.in_db = true;
                        b.name_prefix = "CJK UNIFIED IDEOGRAPH-";
                    } else if (label.find("Tangut Ideograph") != std::string::npos) {
                        b.in_db = true;
                        b.name_prefix = "TANGUT IDEOGRAPH-";
                    }
                    ranges_.push_back(std::move(b));
                    pending_first.reset();
                    continue;
                }
                // "<control>" and similar labels fall through as plain records
            }

            char_info ci;
            ci.name = std::string(name);
            ci.gc[0] = gc[0];
            ci.gc[1] = gc[1];
            int ccc_val = 0;
            auto ccc_field = detail::trim(fields[3]);
            for (char c : ccc_field) {
                if (c < '0' || c > '9') throw parse_error("UnicodeData.txt: bad combining class", line_no);
                ccc_val = ccc_val * 10 + (c - '0');
            }
            ci.ccc = static_cast<std::uint8_t>(ccc_val);

            std::string_view decomp = detail::trim(fields[5]);
            if (!decomp.empty()) {
                if (decomp.front() == '<') {
                    ci.compat = true;
                    std::size_t close = decomp.find('>');
                    if (close == std::string_view::npos)
                        throw parse_error("UnicodeData.txt: bad decomposition tag", line_no);
                    decomp = detail::trim(decomp.substr(close + 1));
                }
                for (std::string_view part : detail::split(decomp, ' ')) {
                    if (part.empty()) continue;
                    auto d = detail::parse_hex_cp(part);
                    if (!d) throw parse_error("UnicodeData.txt: bad decomposition mapping", line_no);
                    ci.raw_decomp.push_back(*d);
                }
            }

            std::string_view dec = detail::trim(fields[6]);
            if (!dec.empty() && dec.size() == 1 && dec[0] >= '0' && dec[0] <= '9')
                ci.decimal = static_cast<std::int8_t>(dec[0] - '0');

            chars_.emplace(*cp, std::move(ci));
        }
        if (chars_.empty())
            throw config_error("missing required file: UnicodeData.txt has no records");
        std::sort(ranges_.begin(), ranges_.end(),
                  [](const ranged_block& a, const ranged_block& b) { return a.lo < b.lo; });
    }

    void parse_scripts(const std::string& text) {
        std::unordered_map<std::string, std::uint32_t> name_index;
        std::size_t line_no = 0;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) {
                if (line_no == 1 && line.rfind("# Scripts-", 0) == 0) {
                    std::string_view v = line.substr(10);
                    if (auto dot = v.rfind(".txt"); dot != std::string_view::npos) v = v.substr(0, dot);
                    version_ = std::string(detail::trim(v));
                }
                line = line.substr(0, hash);
            }
            line = detail::trim(line);
            if (line.empty()) continue;
            auto fields = detail::split(line, ';');
            if (fields.size() != 2) throw parse_error("Scripts.txt: expected 'range ; Script'", line_no);
            std::string_view range = detail::trim(fields[0]);
            std::string name(detail::trim(fields[1]));
            char32_t lo, hi;
            if (auto dots = range.find(".."); dots != std::string_view::npos) {
                auto a = detail::parse_hex_cp(range.substr(0, dots));
                auto b = detail::parse_hex_cp(range.substr(dots + 2));
                if (!a || !b || *a > *b) throw parse_error("Scripts.txt: bad range", line_no);
                lo = *a;
                hi = *b;
            } else {
                auto a = detail::parse_hex_cp(range);
                if (!a) throw parse_error("Scripts.txt: bad codepoint", line_no);
                lo = hi = *a;
            }
            auto [it, inserted] = name_index.emplace(name, static_cast<std::uint32_t>(script_names_.size()));
            if (inserted) {
                script_names_.push_back(name);
                script_kinds_.push_back(script_tag::from_name(name).kind);
            }
            script_ranges_.push_back({lo, hi, it->second});
        }
        if (script_ranges_.empty()) throw config_error("missing required file: Scripts.txt has no ranges");
        std::sort(script_ranges_.begin(), script_ranges_.end(),
                  [](const script_range& a, const script_range& b) { return a.lo < b.lo; });
    }

    void parse_exclusions(const std::string& text) {
        std::size_t line_no = 0;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty()) continue;
            auto cp = detail::parse_hex_cp(line);
            if (!cp) throw parse_error("CompositionExclusions.txt: bad codepoint", line_no);
            listed_exclusions_.insert(*cp);
        }
    }

    void parse_jamo(const std::string& text) {
        jamo_l_.assign(detail::kHangulLCount, "");
        jamo_v_.assign(detail::kHangulVCount, "");
        jamo_t_.assign(detail::kHangulTCount, "");
        std::size_t line_no = 0;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            if (detail::trim(line).empty()) continue;
            auto fields = detail::split(line, ';');
            if (fields.size() != 2) throw parse_error("Jamo.txt: expected 'cp; short'", line_no);
            auto cp = detail::parse_hex_cp(fields[0]);
            if (!cp) throw parse_error("Jamo.txt: bad codepoint", line_no);
            std::string short_name(detail::trim(fields[1]));
            if (*cp >= detail::kHangulLBase && *cp < detail::kHangulLBase + detail::kHangulLCount)
                jamo_l_[*cp - detail::kHangulLBase] = short_name;
            else if (*cp >= detail::kHangulVBase && *cp < detail::kHangulVBase + detail::kHangulVCount)
                jamo_v_[*cp - detail::kHangulVBase] = short_name;
            else if (*cp > detail::kHangulTBase && *cp <= detail::kHangulTBase + detail::kHangulTCount - 1)
                jamo_t_[*cp - detail::kHangulTBase] = short_name;
        }
    }

    void build_normalization_tables() {
        for (const auto& [cp, ci] : chars_) {
            if (ci.raw_decomp.empty()) continue;
            std::u32string nfkd;
            expand(cp, true, nfkd);
            nfkd_map_.emplace(cp, std::move(nfkd));
            if (!ci.compat) {
                std::u32string nfd;
                expand(cp, false, nfd);
                nfd_map_.emplace(cp, std::move(nfd));
            }
        }
        // full composition exclusions: listed + singletons + non-starter decompositions
        for (const auto& [cp, ci] : chars_) {
            if (ci.compat || ci.raw_decomp.empty()) continue;
            bool excluded = listed_exclusions_.count(cp) > 0 || ci.raw_decomp.size() == 1 ||
                            ci.ccc != 0 || combining_class(ci.raw_decomp[0]) != 0;
            if (excluded || ci.raw_decomp.size() != 2) continue;
            compose_map_.emplace(pair_key(ci.raw_decomp[0], ci.raw_decomp[1]), cp);
        }
    }

    void expand(char32_t cp, bool compat, std::u32string& out) const {
        if (detail::is_hangul_syllable(cp)) {
            char32_t s = cp - detail::kHangulSBase;
            out.push_back(detail::kHangulLBase + s / detail::kHangulNCount);
            out.push_back(detail::kHangulVBase + (s % detail::kHangulNCount) / detail::kHangulTCount);
            if (s % detail::kHangulTCount != 0)
                out.push_back(detail::kHangulTBase + s % detail::kHangulTCount);
            return;
        }
        auto it = chars_.find(cp);
        if (it == chars_.end() || it->second.raw_decomp.empty() || (!compat && it->second.compat)) {
            out.push_back(cp);
            return;
        }
        for (char32_t d : it->second.raw_decomp) expand(d, compat, out);
    }

    static std::uint64_t pair_key(char32_t a, char32_t b) {
        return (static_cast<std::uint64_t>(a) << 21) | b;
    }

    std::u32string decompose(std::u32string_view text, bool compat) const {
        std::u32string out;
        out.reserve(text.size());
        const auto& map = compat ? nfkd_map_ : nfd_map_;
        for (char32_t cp : text) {
            if (detail::is_hangul_syllable(cp)) {
                expand(cp, compat, out);
            } else if (auto it = map.find(cp); it != map.end()) {
                out.append(it->second);
            } else {
                out.push_back(cp);
            }
        }
        canonical_reorder(out);
        return out;
    }

    void canonical_reorder(std::u32string& s) const {
        for (std::size_t i = 1; i < s.size(); ++i) {
            std::uint8_t c = combining_class(s[i]);
            if (c == 0) continue;
            std::size_t j = i;
            while (j > 0 && combining_class(s[j - 1]) > c) {
                std::swap(s[j - 1], s[j]);
                --j;
            }
        }
    }

    std::optional<char32_t> compose_pair(char32_t a, char32_t b) const {
        // Hangul LV / LVT composition
        if (a >= detail::kHangulLBase && a < detail::kHangulLBase + detail::kHangulLCount &&
            b >= detail::kHangulVBase && b < detail::kHangulVBase + detail::kHangulVCount) {
            char32_t l = a - detail::kHangulLBase;
            char32_t v = b - detail::kHangulVBase;
            return detail::kHangulSBase + (l * detail::kHangulVCount + v) * detail::kHangulTCount;
        }
        if (detail::is_hangul_syllable(a) && (a - detail::kHangulSBase) % detail::kHangulTCount == 0 &&
            b > detail::kHangulTBase && b < detail::kHangulTBase + detail::kHangulTCount) {
            return a + (b - detail::kHangulTBase);
        }
        if (auto it = compose_map_.find(pair_key(a, b)); it != compose_map_.end()) return it->second;
        return std::nullopt;
    }

    std::u32string compose(std::u32string in) const {
        std::u32string out;
        out.reserve(in.size());
        long starter = -1;
        for (char32_t c : in) {
            std::uint8_t c_ccc = combining_class(c);
            if (starter >= 0) {
                bool immediately_after = out.size() == static_cast<std::size_t>(starter) + 1;
                bool blocked = !immediately_after && combining_class(out.back()) >= c_ccc;
                if (!blocked) {
                    if (auto composed = compose_pair(out[static_cast<std::size_t>(starter)], c)) {
                        out[static_cast<std::size_t>(starter)] = *composed;
                        continue;
                    }
                }
            }
            out.push_back(c);
            if (c_ccc == 0) starter = static_cast<long>(out.size()) - 1;
        }
        return out;
    }

    std::unordered_map<char32_t, char_info> chars_;
    std::vector<ranged_block> ranges_;
    std::vector<script_range> script_ranges_;
    std::vector<std::string> script_names_;
    std::vector<script> script_kinds_;
    std::unordered_set<char32_t> listed_exclusions_;
    std::unordered_map<char32_t, std::u32string> nfd_map_;
    std::unordered_map<char32_t, std::u32string> nfkd_map_;
    std::unordered_map<std::uint64_t, char32_t> compose_map_;
    std::vector<std::string> jamo_l_, jamo_v_, jamo_t_;
    std::string version_ = "unknown";
};

}  // namespace romakit
