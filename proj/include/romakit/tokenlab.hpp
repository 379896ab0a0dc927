#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "romakit/errors.hpp"
#include "romakit/ucd.hpp"
#include "romakit/utf8.hpp"

namespace romakit {

inline constexpr char32_t kBoundaryMarker = U'▁';
inline constexpr std::string_view kUnkToken = "<unk>";

struct bpe_config {
    std::size_t vocab_size = 0;
    bool split_by_whitespace = true;
    bool byte_fallback = true;
    double character_coverage = 0.9999;
};

inline std::string byte_token(unsigned char b) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string t = "<0x00>";
    t[3] = hex[b >> 4];
    t[4] = hex[b & 0xF];
    return t;
}

inline std::optional<unsigned char> parse_byte_token(std::string_view t) {
    if (t.size() != 6 || t.rfind("<0x", 0) != 0 || t.back() != '>') return std::nullopt;
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    int hi = nib(t[3]), lo = nib(t[4]);
    if (hi < 0 || lo < 0) return std::nullopt;
    return static_cast<unsigned char>(hi * 16 + lo);
}

// Subword inventory with its ordered merge list. tokens holds, in order:
// <unk>, the 256 byte-fallback tokens (when enabled), the base characters in
// coverage order, then one entry per merge that produced a new string.
class vocabulary {
public:
    std::vector<std::string> tokens;
    std::vector<std::pair<std::string, std::string>> merges;
    bpe_config config;
    std::size_t base_size = 0;  // tokens before any merge

    bool contains(std::string_view token) const { return ids_.count(std::string(token)) > 0; }

    std::optional<std::uint32_t> merge_rank(const std::string& left, const std::string& right) const {
        auto it = ranks_.find({left, right});
        if (it == ranks_.end()) return std::nullopt;
        return it->second;
    }

    void rebuild_index() {
        ids_.clear();
        ranks_.clear();
        for (std::uint32_t i = 0; i < tokens.size(); ++i) {
            if (!ids_.emplace(tokens[i], i).second)
                throw data_error("vocabulary tokens are not unique: " + tokens[i]);
        }
        for (std::uint32_t r = 0; r < merges.size(); ++r) {
            const auto& [l, right] = merges[r];
            if (!ids_.count(l + right))
                throw data_error("merge result missing from tokens: " + l + right);
            ranks_.emplace(merges[r], r);
        }
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["version"] = "romakit-vocab-1";
        j["config"] = {{"vocab_size", config.vocab_size},
                       {"split_by_whitespace", config.split_by_whitespace},
                       {"byte_fallback", config.byte_fallback},
                       {"character_coverage", config.character_coverage},
                       {"base_size", base_size},
                       {"boundary_marker", to_utf8(kBoundaryMarker)}};
        j["tokens"] = tokens;
        nlohmann::ordered_json m = nlohmann::ordered_json::array();
        for (const auto& [l, r] : merges) m.push_back({l, r});
        j["merges"] = std::move(m);
        return j;
    }

    static vocabulary from_json(const nlohmann::json& j) {
        if (!j.contains("version") || j["version"] != "romakit-vocab-1")
            throw data_error("unsupported vocabulary file version");
        vocabulary v;
        v.config.vocab_size = j.at("config").at("vocab_size").get<std::size_t>();
        v.config.split_by_whitespace = j.at("config").at("split_by_whitespace").get<bool>();
        v.config.byte_fallback = j.at("config").at("byte_fallback").get<bool>();
        v.config.character_coverage = j.at("config").at("character_coverage").get<double>();
        v.base_size = j.at("config").at("base_size").get<std::size_t>();
        v.tokens = j.at("tokens").get<std::vector<std::string>>();
        for (const auto& m : j.at("merges")) {
            if (!m.is_array() || m.size() != 2) throw data_error("malformed merge entry");
            v.merges.emplace_back(m[0].get<std::string>(), m[1].get<std::string>());
        }
        v.rebuild_index();
        return v;
    }

    void save(const std::filesystem::path& path) const {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw config_error("cannot write vocabulary file " + path.string());
        out << to_json().dump(1, '\t') << '\n';
    }

    static vocabulary load(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw config_error("missing required file: vocabulary " + path.string());
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw data_error("malformed vocabulary file: " + std::string(e.what()));
        }
        return from_json(j);
    }

private:
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::map<std::pair<std::string, std::string>, std::uint32_t> ranks_;
};

namespace detail {

// NFKC, then U+0020 becomes the boundary marker with one marker prepended;
// other whitespace stays literal so decode can reproduce it.
inline std::u32string mark_boundaries(const character_database& db, std::string_view text) {
    std::u32string normalized = db.normalize(to_u32(text), norm_form::nfkc);
    if (normalized.empty()) return normalized;
    std::u32string marked;
    marked.reserve(normalized.size() + 1);
    marked.push_back(kBoundaryMarker);
    for (char32_t cp : normalized) marked.push_back(cp == U' ' ? kBoundaryMarker : cp);
    return marked;
}

// chunks bound pair counting and merging; with split_by_whitespace each chunk
// starts at a boundary marker, otherwise the document is one chunk
inline std::vector<std::vector<std::string>> symbol_chunks(const character_database& db,
                                                           std::string_view text,
                                                           bool split_by_whitespace) {
    std::u32string marked = mark_boundaries(db, text);
    std::vector<std::vector<std::string>> chunks;
    for (std::size_t i = 0; i < marked.size(); ++i) {
        bool boundary = i == 0 || (split_by_whitespace && marked[i] == kBoundaryMarker);
        if (boundary) chunks.emplace_back();
        chunks.back().push_back(to_utf8(marked[i]));
    }
    return chunks;
}

inline void expand_uncovered(const vocabulary& v, std::vector<std::string>& symbols) {
    std::vector<std::string> out;
    out.reserve(symbols.size());
    for (std::string& sym : symbols) {
        if (v.contains(sym)) {
            out.push_back(std::move(sym));
        } else if (v.config.byte_fallback) {
            for (unsigned char b : sym) out.push_back(byte_token(b));
        } else {
            out.emplace_back(kUnkToken);
        }
    }
    symbols = std::move(out);
}

// lowest-rank merge first; each application rewrites every non-overlapping
// occurrence left to right, which is "apply merges in order wherever
// applicable" without scanning inapplicable ranks
inline void apply_merges(const vocabulary& v, std::vector<std::string>& symbols) {
    while (symbols.size() >= 2) {
        std::uint32_t best_rank = 0;
        bool found = false;
        for (std::size_t k = 0; k + 1 < symbols.size(); ++k) {
            if (auto r = v.merge_rank(symbols[k], symbols[k + 1])) {
                if (!found || *r < best_rank) {
                    best_rank = *r;
                    found = true;
                }
            }
        }
        if (!found) break;
        const auto& [left, right] = v.merges[best_rank];
        std::vector<std::string> next;
        next.reserve(symbols.size());
        for (std::size_t k = 0; k < symbols.size();) {
            if (k + 1 < symbols.size() && symbols[k] == left && symbols[k + 1] == right) {
                next.push_back(left + right);
                k += 2;
            } else {
                next.push_back(std::move(symbols[k]));
                k += 1;
            }
        }
        symbols = std::move(next);
    }
}

inline bool is_word_whitespace(char32_t cp) {
    return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 || cp == 0xA0 ||
           cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 ||
           cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

inline bool is_valid_utf8(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size()) {
        std::size_t before = i;
        char32_t cp = next_codepoint(bytes, i);
        if (cp == kReplacementChar && bytes.substr(before, i - before) != "\xEF\xBF\xBD")
            return false;
    }
    return true;
}

}  // namespace detail

// Standard greedy BPE. Ties between equal-count pairs break on the earliest
// first occurrence in corpus scan order, making training deterministic for a
// fixed corpus order.
inline vocabulary train_bpe(const character_database& db, const std::vector<std::string>& corpus,
                            const bpe_config& config) {
    if (corpus.empty()) throw data_error("empty corpus");
    vocabulary v;
    v.config = config;

    std::vector<std::vector<std::string>> chunks;
    for (const std::string& doc : corpus)
        for (auto& chunk : detail::symbol_chunks(db, doc, config.split_by_whitespace))
            chunks.push_back(std::move(chunk));
    if (chunks.empty()) throw data_error("empty corpus");

    // base inventory: characters by frequency until the coverage mass is met
    std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> char_stats;
    std::uint64_t total_chars = 0, position = 0;
    for (const auto& chunk : chunks) {
        for (const std::string& sym : chunk) {
            auto [it, inserted] = char_stats.emplace(sym, std::make_pair(0, position));
            ++it->second.first;
            ++total_chars;
            ++position;
        }
    }
    std::vector<std::pair<std::string, std::pair<std::uint64_t, std::uint64_t>>> ordered(
        char_stats.begin(), char_stats.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.second.first != b.second.first) return a.second.first > b.second.first;
        return a.second.second < b.second.second;
    });

    v.tokens.emplace_back(kUnkToken);
    if (config.byte_fallback)
        for (int b = 0; b < 256; ++b) v.tokens.push_back(byte_token(static_cast<unsigned char>(b)));
    std::uint64_t covered = 0;
    const auto target = static_cast<std::uint64_t>(
        static_cast<double>(total_chars) * config.character_coverage);
    for (const auto& [sym, stats] : ordered) {
        if (covered >= target && covered > 0 && sym != to_utf8(kBoundaryMarker)) continue;
        v.tokens.push_back(sym);
        covered += stats.first;
    }
    v.base_size = v.tokens.size();
    v.rebuild_index();
    if (config.vocab_size < v.base_size)
        throw data_error("vocab size " + std::to_string(config.vocab_size) +
                         " is below the base inventory of " + std::to_string(v.base_size));

    // uncovered characters train as their fallback expansion
    for (auto& chunk : chunks) detail::expand_uncovered(v, chunk);

    while (v.tokens.size() < config.vocab_size) {
        std::map<std::pair<std::string, std::string>, std::pair<std::uint64_t, std::uint64_t>> pairs;
        std::uint64_t scan = 0;
        for (const auto& chunk : chunks) {
            for (std::size_t k = 0; k + 1 < chunk.size(); ++k, ++scan) {
                auto [it, inserted] =
                    pairs.emplace(std::make_pair(chunk[k], chunk[k + 1]), std::make_pair(0, scan));
                ++it->second.first;
            }
            ++scan;
        }
        if (pairs.empty())
            throw data_error("vocab size " + std::to_string(config.vocab_size) +
                             " unreachable; achievable maximum is " +
                             std::to_string(v.tokens.size()));
        const std::pair<std::string, std::string>* best = nullptr;
        std::pair<std::uint64_t, std::uint64_t> best_stats{0, 0};
        for (const auto& [pair, stats] : pairs) {
            bool wins = best == nullptr || stats.first > best_stats.first ||
                        (stats.first == best_stats.first && stats.second < best_stats.second);
            if (wins) {
                best = &pair;
                best_stats = stats;
            }
        }
        auto [left, right] = *best;
        std::string merged = left + right;
        v.merges.emplace_back(left, right);
        if (!v.contains(merged)) v.tokens.push_back(merged);
        for (auto& chunk : chunks) {
            std::vector<std::string> next;
            next.reserve(chunk.size());
            for (std::size_t k = 0; k < chunk.size();) {
                if (k + 1 < chunk.size() && chunk[k] == left && chunk[k + 1] == right) {
                    next.push_back(merged);
                    k += 2;
                } else {
                    next.push_back(std::move(chunk[k]));
                    k += 1;
                }
            }
            chunk = std::move(next);
        }
        v.rebuild_index();
    }
    return v;
}

inline std::vector<std::string> encode(const character_database& db, const vocabulary& v,
                                       std::string_view text) {
    std::vector<std::string> out;
    for (auto& chunk : detail::symbol_chunks(db, text, v.config.split_by_whitespace)) {
        detail::expand_uncovered(v, chunk);
        detail::apply_merges(v, chunk);
        for (auto& sym : chunk) out.push_back(std::move(sym));
    }
    return out;
}

inline std::string decode(const vocabulary&, std::span<const std::string> tokens) {
    std::string bytes;
    std::string pending;
    auto flush = [&] {
        if (pending.empty()) return;
        if (!detail::is_valid_utf8(pending))
            throw data_error("byte-fallback tokens form an invalid UTF-8 sequence");
        bytes += pending;
        pending.clear();
    };
    for (const std::string& tok : tokens) {
        if (auto b = parse_byte_token(tok)) {
            pending.push_back(static_cast<char>(*b));
            continue;
        }
        flush();
        if (tok == kUnkToken) {
            bytes += "\xEF\xBF\xBD";
            continue;
        }
        bytes += tok;
    }
    flush();
    // boundary markers back to spaces, minus the sentence-leading one
    std::string out;
    out.reserve(bytes.size());
    const std::string marker = to_utf8(kBoundaryMarker);
    std::size_t i = 0;
    while (i < bytes.size()) {
        if (bytes.compare(i, marker.size(), marker) == 0) {
            out.push_back(' ');
            i += marker.size();
        } else {
            out.push_back(bytes[i++]);
        }
    }
    if (!out.empty() && out.front() == ' ') out.erase(out.begin());
    return out;
}

enum class word_count_mode { whitespace, character };

inline std::string_view word_count_mode_name(word_count_mode m) {
    return m == word_count_mode::whitespace ? "whitespace" : "character";
}

inline std::optional<word_count_mode> parse_word_count_mode(std::string_view name) {
    if (name == "whitespace") return word_count_mode::whitespace;
    if (name == "character") return word_count_mode::character;
    return std::nullopt;
}

inline std::uint64_t count_words(std::string_view text, word_count_mode mode) {
    std::uint64_t count = 0;
    bool in_word = false;
    std::size_t i = 0;
    while (i < text.size()) {
        char32_t cp = next_codepoint(text, i);
        bool ws = detail::is_word_whitespace(cp);
        if (mode == word_count_mode::character) {
            if (!ws) ++count;
        } else if (!ws && !in_word) {
            ++count;
            in_word = true;
        } else if (ws) {
            in_word = false;
        }
    }
    return count;
}

struct fertility_report {
    std::uint64_t token_count = 0;
    std::uint64_t word_count = 0;
    word_count_mode mode = word_count_mode::whitespace;

    double fertility() const { return static_cast<double>(token_count) / static_cast<double>(word_count); }

    nlohmann::ordered_json to_json() const {
        return {{"token_count", token_count},
                {"word_count", word_count},
                {"word_count_mode", std::string(word_count_mode_name(mode))},
                {"fertility", fertility()}};
    }

    static fertility_report from_json(const nlohmann::json& j) {
        fertility_report r;
        r.token_count = j.at("token_count").get<std::uint64_t>();
        r.word_count = j.at("word_count").get<std::uint64_t>();
        auto mode = parse_word_count_mode(j.at("word_count_mode").get<std::string>());
        if (!mode) throw data_error("bad word_count_mode in report");
        r.mode = *mode;
        return r;
    }
};

inline fertility_report fertility(const character_database& db, const vocabulary& v,
                                  const std::vector<std::string>& corpus, word_count_mode mode) {
    fertility_report report;
    report.mode = mode;
    for (const std::string& doc : corpus) {
        report.token_count += encode(db, v, doc).size();
        report.word_count += count_words(doc, mode);
    }
    if (report.word_count == 0) throw data_error("empty corpus");
    return report;
}

// Figure-1a sign convention: test/baseline − 1, so an improvement is negative.
inline double relative_fertility_change(const fertility_report& test,
                                        const fertility_report& baseline) {
    if (test.mode != baseline.mode) throw data_error("mismatched word-count mode");
    return test.fertility() / baseline.fertility() - 1.0;
}

struct collapse_report {
    std::uint64_t unique_orig = 0;
    std::uint64_t unique_romanized = 0;
    std::vector<std::pair<std::string, std::vector<std::string>>> collision_groups;

    double loss() const {
        return 1.0 - static_cast<double>(unique_romanized) / static_cast<double>(unique_orig);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json groups = nlohmann::ordered_json::array();
        for (const auto& [form, members] : collision_groups)
            groups.push_back({{"romanized", form}, {"tokens", members}});
        return {{"unique_orig", unique_orig},
                {"unique_romanized", unique_romanized},
                {"loss", loss()},
                {"collision_groups", std::move(groups)}};
    }
};

// Unique observed tokens, romanized after shedding their leading boundary
// markers; groups of size >= 2 witness the information loss.
inline collapse_report token_collapse(const std::vector<std::string>& observed_tokens,
                                      const std::function<std::string(std::string_view)>& romanizer) {
    std::set<std::string> domain(observed_tokens.begin(), observed_tokens.end());
    if (domain.empty()) throw data_error("empty token set");
    const std::string marker = to_utf8(kBoundaryMarker);
    std::map<std::string, std::vector<std::string>> groups;
    for (const std::string& token : domain) {
        std::string_view stripped = token;
        while (stripped.size() >= marker.size() &&
               stripped.compare(0, marker.size(), marker) == 0)
            stripped.remove_prefix(marker.size());
        groups[romanizer(stripped)].push_back(token);
    }
    collapse_report report;
    report.unique_orig = domain.size();
    report.unique_romanized = groups.size();
    for (auto& [form, members] : groups) {
        if (members.size() >= 2) report.collision_groups.emplace_back(form, std::move(members));
    }
    return report;
}

// Smaller view of a trained vocabulary: first `vocab_size` tokens plus every
// merge that stays within them. Sweeps rely on this nesting.
inline vocabulary truncate_vocabulary(const vocabulary& full, std::size_t vocab_size) {
    if (vocab_size < full.base_size || vocab_size > full.tokens.size())
        throw data_error("truncation size " + std::to_string(vocab_size) +
                         " outside [" + std::to_string(full.base_size) + ", " +
                         std::to_string(full.tokens.size()) + "]");
    vocabulary v;
    v.config = full.config;
    v.config.vocab_size = vocab_size;
    v.base_size = full.base_size;
    v.tokens.assign(full.tokens.begin(), full.tokens.begin() + static_cast<std::ptrdiff_t>(vocab_size));
    std::set<std::string> kept(v.tokens.begin(), v.tokens.end());
    for (const auto& [l, r] : full.merges) {
        if (kept.count(l + r) && kept.count(l) && kept.count(r)) v.merges.emplace_back(l, r);
    }
    v.rebuild_index();
    return v;
}

}  // namespace romakit
