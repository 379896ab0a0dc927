#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "romakit/errors.hpp"
#include "romakit/tables.hpp"
#include "romakit/ucd.hpp"
#include "romakit/utf8.hpp"

namespace romakit {

enum class scheme_id { iso9, iso15919, pinyin, hepburn, adegn };

inline constexpr std::array<std::pair<scheme_id, std::string_view>, 5> kSchemeNames = {{
    {scheme_id::iso9, "iso9"},
    {scheme_id::iso15919, "iso15919"},
    {scheme_id::pinyin, "pinyin"},
    {scheme_id::hepburn, "hepburn"},
    {scheme_id::adegn, "adegn"},
}};

inline std::string_view scheme_name(scheme_id id) {
    for (const auto& [sid, name] : kSchemeNames)
        if (sid == id) return name;
    return "unknown";
}

inline std::optional<scheme_id> parse_scheme_id(std::string_view name) {
    for (const auto& [sid, n] : kSchemeNames)
        if (n == name) return sid;
    return std::nullopt;
}

// One context-sensitive rewrite: when `match` occurs with `pre_class` before it
// and `post_class` after it, it becomes `replacement`. Classes are char sets;
// empty means unconstrained.
struct rewrite_rule {
    std::u32string pre_class;
    std::u32string match;
    std::u32string post_class;
    std::u32string replacement;
    int priority = 0;
    std::size_t file_order = 0;
};

struct rule_set {
    scheme_id id{};
    std::vector<rewrite_rule> rules;  // in precedence order
    bool invertible = false;
    std::unordered_map<char32_t, std::vector<std::uint32_t>> index;  // first cp of match
};

namespace detail {

inline std::u32string unescape_rule_text(std::string_view s, std::size_t line_no) {
    std::u32string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '\\') {
            out.push_back(next_codepoint(s, i));
            continue;
        }
        if (++i == s.size()) throw parse_error("dangling escape", line_no);
        char c = s[i++];
        switch (c) {
            case 's': out.push_back(U' '); break;
            case 't': out.push_back(U'\t'); break;
            case '\\': out.push_back(U'\\'); break;
            case '#': out.push_back(U'#'); break;
            case '|': out.push_back(U'|'); break;
            case 'u': {
                std::string_view hex;
                if (i < s.size() && s[i] == '{') {
                    std::size_t close = s.find('}', i);
                    if (close == std::string_view::npos) throw parse_error("unterminated \\u{...}", line_no);
                    hex = s.substr(i + 1, close - i - 1);
                    i = close + 1;
                } else {
                    if (i + 4 > s.size()) throw parse_error("truncated \\uXXXX", line_no);
                    hex = s.substr(i, 4);
                    i += 4;
                }
                auto cp = parse_hex_cp(hex);
                if (!cp || !is_scalar_value(*cp)) throw parse_error("bad \\u escape", line_no);
                out.push_back(*cp);
                break;
            }
            default: throw parse_error("unknown escape", line_no);
        }
    }
    return out;
}

// [abcx-z] with escapes; returns sorted unique members
inline std::u32string parse_class(std::string_view body, std::size_t line_no) {
    std::u32string chars = unescape_rule_text(body, line_no);
    std::u32string out;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (i + 2 < chars.size() && chars[i + 1] == U'-') {
            char32_t lo = chars[i], hi = chars[i + 2];
            if (lo > hi) throw parse_error("descending range in class", line_no);
            for (char32_t c = lo; c <= hi; ++c) out.push_back(c);
            i += 2;
        } else {
            out.push_back(chars[i]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool class_contains(const std::u32string& cls, char32_t cp) {
    return std::binary_search(cls.begin(), cls.end(), cp);
}

inline std::string_view strip_rule_comment(std::string_view line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '\\') {
            ++i;
            continue;
        }
        if (line[i] == '#') return line.substr(0, i);
    }
    return line;
}

}  // namespace detail

// Parses the rule-file grammar:
//   [pre] | match | [post] -> replacement  @priority
// Pipes and priority are optional; '#' comments; \s \t \# \| \\ \uXXXX escapes.
inline rule_set compile_ruleset(std::string_view source, scheme_id id) {
    rule_set rs;
    rs.id = id;
    std::size_t line_no = 0;
    std::vector<rewrite_rule> parsed;
    for (std::string_view raw : detail::split(source, '\n')) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        std::string_view line = detail::trim(detail::strip_rule_comment(raw));
        if (line.empty()) continue;

        std::size_t arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw parse_error("rule is missing '->'", line_no);
        std::string_view lhs = detail::trim(line.substr(0, arrow));
        std::string_view rhs = detail::trim(line.substr(arrow + 2));

        rewrite_rule rule;
        rule.file_order = parsed.size();

        if (auto at = rhs.rfind(" @"); at != std::string_view::npos) {
            std::string_view prio = rhs.substr(at + 2);
            bool numeric = !prio.empty();
            int value = 0, sign = 1;
            std::size_t k = 0;
            if (k < prio.size() && prio[k] == '-') {
                sign = -1;
                ++k;
            }
            for (; k < prio.size(); ++k) {
                if (prio[k] < '0' || prio[k] > '9') {
                    numeric = false;
                    break;
                }
                value = value * 10 + (prio[k] - '0');
            }
            if (numeric) {
                rule.priority = sign * value;
                rhs = detail::trim(rhs.substr(0, at));
            }
        }
        rule.replacement = detail::unescape_rule_text(rhs, line_no);

        if (lhs.find('|') != std::string_view::npos) {
            auto parts = detail::split(lhs, '|');
            if (parts.size() != 3) throw parse_error("expected '[pre] | match | [post]'", line_no);
            std::string_view pre = detail::trim(parts[0]);
            std::string_view post = detail::trim(parts[2]);
            if (!pre.empty()) {
                if (pre.front() != '[' || pre.back() != ']')
                    throw parse_error("pre-context must be a [class]", line_no);
                rule.pre_class = detail::parse_class(pre.substr(1, pre.size() - 2), line_no);
            }
            if (!post.empty()) {
                if (post.front() != '[' || post.back() != ']')
                    throw parse_error("post-context must be a [class]", line_no);
                rule.post_class = detail::parse_class(post.substr(1, post.size() - 2), line_no);
            }
            lhs = detail::trim(parts[1]);
        }
        rule.match = detail::unescape_rule_text(lhs, line_no);
        if (rule.match.empty()) throw parse_error("empty match", line_no);

        for (const rewrite_rule& other : parsed) {
            if (other.match == rule.match && other.priority == rule.priority &&
                other.pre_class == rule.pre_class && other.post_class == rule.post_class)
                throw parse_error("duplicate match at same priority", line_no);
        }
        parsed.push_back(std::move(rule));
    }
    if (parsed.empty()) throw data_error("empty ruleset");

    std::sort(parsed.begin(), parsed.end(), [](const rewrite_rule& a, const rewrite_rule& b) {
        if (a.priority != b.priority) return a.priority > b.priority;
        if (a.match.size() != b.match.size()) return a.match.size() > b.match.size();
        return a.file_order < b.file_order;
    });
    rs.rules = std::move(parsed);
    for (std::uint32_t i = 0; i < rs.rules.size(); ++i)
        rs.index[rs.rules[i].match[0]].push_back(i);

    // invertible: context-free with non-empty, pairwise distinct, prefix-free
    // replacements, so decoding never has to guess
    rs.invertible = true;
    for (const rewrite_rule& r : rs.rules) {
        if (r.replacement.empty() || !r.pre_class.empty() || !r.post_class.empty()) {
            rs.invertible = false;
            break;
        }
    }
    if (rs.invertible) {
        for (std::size_t a = 0; a < rs.rules.size() && rs.invertible; ++a) {
            for (std::size_t b = a + 1; b < rs.rules.size(); ++b) {
                const auto& ra = rs.rules[a].replacement;
                const auto& rb = rs.rules[b].replacement;
                const auto& shorter = ra.size() <= rb.size() ? ra : rb;
                const auto& longer = ra.size() <= rb.size() ? rb : ra;
                if (longer.compare(0, shorter.size(), shorter) == 0) {
                    rs.invertible = false;
                    break;
                }
            }
        }
    }
    return rs;
}

inline const rewrite_rule* match_rule_at(const rule_set& rs, std::u32string_view text, std::size_t i) {
    auto it = rs.index.find(text[i]);
    if (it == rs.index.end()) return nullptr;
    for (std::uint32_t idx : it->second) {
        const rewrite_rule& r = rs.rules[idx];
        if (r.match.size() > text.size() - i) continue;
        if (text.compare(i, r.match.size(), r.match) != 0) continue;
        if (!r.pre_class.empty() &&
            (i == 0 || !detail::class_contains(r.pre_class, text[i - 1])))
            continue;
        if (!r.post_class.empty()) {
            std::size_t j = i + r.match.size();
            if (j >= text.size() || !detail::class_contains(r.post_class, text[j])) continue;
        }
        return &r;
    }
    return nullptr;
}

// Single left-to-right pass; the highest-precedence applicable rule fires and
// the cursor advances past its match. Unmatched characters pass through.
inline void apply_ruleset_into(const rule_set& rs, std::u32string_view text, std::u32string& out) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (const rewrite_rule* r = match_rule_at(rs, text, i)) {
            out += r->replacement;
            i += r->match.size();
        } else {
            out.push_back(text[i++]);
        }
    }
}

inline std::u32string apply_ruleset(const rule_set& rs, std::u32string_view text) {
    std::u32string out;
    out.reserve(text.size());
    apply_ruleset_into(rs, text, out);
    return out;
}

namespace detail {

// pinyin tone marks, NFC-precomposed, indexed by tone 1..4
struct toned_vowel {
    char base;
    char32_t plain;
    std::array<char32_t, 4> toned;
};
inline constexpr toned_vowel kPinyinVowels[] = {
    {'a', U'a', {0x0101, 0x00E1, 0x01CE, 0x00E0}},
    {'e', U'e', {0x0113, 0x00E9, 0x011B, 0x00E8}},
    {'i', U'i', {0x012B, 0x00ED, 0x01D0, 0x00EC}},
    {'o', U'o', {0x014D, 0x00F3, 0x01D2, 0x00F2}},
    {'u', U'u', {0x016B, 0x00FA, 0x01D4, 0x00F9}},
    {'v', 0x00FC, {0x01D6, 0x01D8, 0x01DA, 0x01DC}},
};

inline const toned_vowel* pinyin_vowel(char c) {
    for (const auto& v : kPinyinVowels)
        if (v.base == c) return &v;
    return nullptr;
}

// tone mark goes on a/e when present, on the o of "ou", else the last vowel
inline std::u32string render_pinyin(std::string_view numbered) {
    int tone = 0;
    std::string_view letters = numbered;
    if (!letters.empty() && letters.back() >= '0' && letters.back() <= '9') {
        tone = letters.back() - '0';
        letters.remove_suffix(1);
    }
    std::size_t mark = std::string_view::npos;
    if (auto a = letters.find('a'); a != std::string_view::npos) mark = a;
    else if (auto e = letters.find('e'); e != std::string_view::npos) mark = e;
    else if (auto ou = letters.find("ou"); ou != std::string_view::npos) mark = ou;
    else {
        for (std::size_t k = 0; k < letters.size(); ++k)
            if (pinyin_vowel(letters[k])) mark = k;
    }
    std::u32string out;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        const toned_vowel* v = pinyin_vowel(letters[k]);
        if (!v) {
            out.push_back(static_cast<char32_t>(letters[k]));
            continue;
        }
        bool marked = k == mark && tone >= 1 && tone <= 4;
        out.push_back(marked ? v->toned[static_cast<std::size_t>(tone - 1)] : v->plain);
    }
    return out;
}

}  // namespace detail

// Standard transliteration schemes plus the any-to-Latin dispatcher.
// Rule files and the script registry load from `schemes_dir`; Han syllables
// come from the shared readings table. Immutable after construction.
class scheme_engine {
public:
    struct uconv_stats {
        std::uint64_t unregistered_runs = 0;
        std::uint64_t unregistered_chars = 0;
    };

    scheme_engine(const character_database& db, const std::filesystem::path& schemes_dir,
                  const std::filesystem::path& tables_dir)
        : db_(&db), readings_(load_han_readings(tables_dir / "han_readings.tsv")) {
        for (const auto& [sid, name] : kSchemeNames) {
            std::string file = std::string(name) + ".rules";
            std::string source = detail::read_file(schemes_dir / file, file);
            try {
                rulesets_[static_cast<std::size_t>(sid)] = compile_ruleset(source, sid);
            } catch (const parse_error& e) {
                throw parse_error(file + ": " + e.what(), e.line());
            }
        }
        parse_registry(detail::read_file(schemes_dir / "registry.tsv", "registry.tsv"));
        build_inverse(scheme_id::iso9);
    }

    const rule_set& ruleset(scheme_id id) const { return rulesets_[static_cast<std::size_t>(id)]; }

    // NFKC input form, NFC output form.
    std::string romanize(scheme_id id, std::string_view text) const {
        std::u32string normalized = db_->normalize(to_u32(text), norm_form::nfkc);
        std::u32string out;
        if (id == scheme_id::pinyin)
            apply_pinyin_run(normalized, out);
        else
            apply_ruleset_into(ruleset(id), normalized, out);
        return to_utf8(db_->normalize(out, norm_form::nfc));
    }

    // Any-to-Latin: each script run goes to its registered scheme; runs with
    // no registration pass through unchanged and are counted.
    std::string uconv(std::string_view text, uconv_stats* stats = nullptr) const {
        std::u32string normalized = db_->normalize(to_u32(text), norm_form::nfkc);
        std::u32string out;
        for (const script_run& run : db_->script_runs(normalized)) {
            std::u32string_view piece =
                std::u32string_view(normalized).substr(run.begin, run.end - run.begin);
            auto reg = registry_.find(run.tag.name);
            if (reg == registry_.end()) {
                out += piece;
                if (stats) {
                    ++stats->unregistered_runs;
                    stats->unregistered_chars += piece.size();
                }
            } else if (!reg->second.has_value()) {
                out += piece;  // registered passthrough (Latin, Common)
            } else if (*reg->second == scheme_id::pinyin) {
                apply_pinyin_run(piece, out);
            } else {
                apply_ruleset_into(ruleset(*reg->second), piece, out);
            }
        }
        return to_utf8(db_->normalize(out, norm_form::nfc));
    }

    // Inverse of an invertible scheme. Letter sequences outside the scheme's
    // image are errors; everything else passes through.
    std::string invert(scheme_id id, std::string_view text) const {
        const auto& inv = inverse_[static_cast<std::size_t>(id)];
        if (inv.empty()) {
            if (!ruleset(id).invertible)
                throw data_error(std::string(scheme_name(id)) + " is not invertible");
            throw data_error(std::string(scheme_name(id)) + " has no inverse loaded");
        }
        std::u32string normalized = db_->normalize(to_u32(text), norm_form::nfc);
        std::u32string out;
        std::size_t i = 0;
        while (i < normalized.size()) {
            if (const auto* entry = inverse_match_at(inv, normalized, i)) {
                out += entry->second;
                i += entry->first.size();
                continue;
            }
            char32_t cp = normalized[i];
            char head = db_->general_category_of(cp)[0];
            if (head == 'L' || head == 'M') {
                std::size_t start = i;
                while (i < normalized.size() && !inverse_match_at(inv, normalized, i)) {
                    char h = db_->general_category_of(normalized[i])[0];
                    if (h != 'L' && h != 'M') break;
                    ++i;
                }
                throw data_error("input outside the " + std::string(scheme_name(id)) +
                                 " image: \"" +
                                 to_utf8(normalized.substr(start, i - start)) +
                                 "\" at offset " + std::to_string(start));
            }
            out.push_back(cp);
            ++i;
        }
        return to_utf8(db_->normalize(out, norm_form::nfc));
    }

    std::optional<std::string> pinyin_toned(char32_t cp) const {
        auto it = readings_.find(cp);
        if (it == readings_.end()) return std::nullopt;
        return to_utf8(detail::render_pinyin(it->second));
    }

private:
    using inverse_entry = std::pair<std::u32string, std::u32string>;  // replacement -> match

    void parse_registry(const std::string& text) {
        std::size_t line_no = 0;
        for (std::string_view line : detail::split(text, '\n')) {
            ++line_no;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty()) continue;
            auto fields = detail::split(line, '\t');
            if (fields.size() != 2) throw parse_error("registry.tsv: expected script\\tscheme", line_no);
            std::string script_name(detail::trim(fields[0]));
            std::string_view target = detail::trim(fields[1]);
            if (target.ends_with(".rules")) target.remove_suffix(6);  // file path form
            if (target == "passthrough") {
                registry_[script_name] = std::nullopt;
            } else if (auto sid = parse_scheme_id(target)) {
                registry_[script_name] = *sid;
            } else {
                throw parse_error("registry.tsv: unknown scheme '" + std::string(target) + "'", line_no);
            }
        }
        if (registry_.empty()) throw config_error("missing required file: registry.tsv has no entries");
    }

    void build_inverse(scheme_id id) {
        const rule_set& rs = ruleset(id);
        if (!rs.invertible) return;
        auto& inv = inverse_[static_cast<std::size_t>(id)];
        for (const rewrite_rule& r : rs.rules) inv.push_back({r.replacement, r.match});
        std::sort(inv.begin(), inv.end(), [](const inverse_entry& a, const inverse_entry& b) {
            return a.first.size() > b.first.size();
        });
    }

    static const inverse_entry* inverse_match_at(const std::vector<inverse_entry>& inv,
                                                 std::u32string_view text, std::size_t i) {
        for (const inverse_entry& entry : inv) {
            if (entry.first.size() > text.size() - i) continue;
            if (text.compare(i, entry.first.size(), entry.first) == 0) return &entry;
        }
        return nullptr;
    }

    // Pinyin over a Han run: a space lands before every syllable except at the
    // start of output or after existing whitespace; punctuation falls through
    // to the ruleset with no inserted spacing.
    void apply_pinyin_run(std::u32string_view run, std::u32string& out) const {
        const rule_set& rs = ruleset(scheme_id::pinyin);
        std::size_t i = 0;
        while (i < run.size()) {
            auto reading = readings_.find(run[i]);
            if (reading != readings_.end()) {
                if (!out.empty() && out.back() != U' ' && out.back() != U'\t' && out.back() != U'\n')
                    out.push_back(U' ');
                out += detail::render_pinyin(reading->second);
                ++i;
                continue;
            }
            if (const rewrite_rule* r = match_rule_at(rs, run, i)) {
                out += r->replacement;
                i += r->match.size();
            } else {
                out.push_back(run[i++]);
            }
        }
    }

    const character_database* db_;
    std::unordered_map<char32_t, std::string> readings_;
    std::array<rule_set, 5> rulesets_;
    std::array<std::vector<inverse_entry>, 5> inverse_;
    std::unordered_map<std::string, std::optional<scheme_id>> registry_;
};

}  // namespace romakit
