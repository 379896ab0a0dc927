#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "romakit/scheme.hpp"
#include "romakit/tokenlab.hpp"
#include "romakit/uroman.hpp"

namespace romakit {

enum class record_format { plain_lines, json_lines };

struct romanizer_choice {
    enum class kind { uroman, uconv_auto, scheme };
    kind k = kind::uroman;
    scheme_id scheme = scheme_id::iso9;

    static std::optional<romanizer_choice> parse(std::string_view name) {
        if (name == "uroman") return romanizer_choice{kind::uroman, scheme_id::iso9};
        if (name == "uconv-auto") return romanizer_choice{kind::uconv_auto, scheme_id::iso9};
        if (auto sid = parse_scheme_id(name)) return romanizer_choice{kind::scheme, *sid};
        return std::nullopt;
    }

    std::string name() const {
        switch (k) {
            case kind::uroman: return "uroman";
            case kind::uconv_auto: return "uconv-auto";
            case kind::scheme: return std::string(scheme_name(scheme));
        }
        return "uroman";
    }
};

struct pipeline_config {
    std::vector<std::filesystem::path> inputs;  // empty reads stdin
    std::filesystem::path output;               // empty writes stdout
    romanizer_choice scheme;
    unsigned worker_count = 1;
    record_format format = record_format::plain_lines;
    std::string text_field = "text";
    std::filesystem::path stats_path;  // optional JSON summary dump
};

struct stream_summary {
    std::uint64_t documents = 0;
    std::uint64_t chars_in = 0;
    std::uint64_t chars_out = 0;
    std::uint64_t chars_dropped = 0;
    std::uint64_t malformed_records = 0;
    std::uint64_t unregistered_runs = 0;
    double wall_seconds = 0;

    std::uint64_t chars_passed() const { return chars_in - chars_dropped; }
    double chars_per_second() const {
        return wall_seconds > 0 ? static_cast<double>(chars_in) / wall_seconds : 0.0;
    }

    void merge(const stream_summary& other) {
        documents += other.documents;
        chars_in += other.chars_in;
        chars_out += other.chars_out;
        chars_dropped += other.chars_dropped;
        malformed_records += other.malformed_records;
        unregistered_runs += other.unregistered_runs;
    }

    nlohmann::ordered_json to_json() const {
        return {{"documents", documents},
                {"chars_in", chars_in},
                {"chars_out", chars_out},
                {"chars_passed", chars_passed()},
                {"chars_dropped", chars_dropped},
                {"malformed_records", malformed_records},
                {"unregistered_runs", unregistered_runs},
                {"wall_seconds", wall_seconds},
                {"chars_per_second", chars_per_second()}};
    }
};

struct doc_result {
    std::string text;
    std::uint64_t chars_in = 0;
    std::uint64_t chars_dropped = 0;
    std::uint64_t unregistered_runs = 0;
};

using doc_romanizer = std::function<doc_result(std::string_view)>;

inline doc_romanizer make_doc_romanizer(const uroman_engine& ur, const scheme_engine& sc,
                                        romanizer_choice choice) {
    switch (choice.k) {
        case romanizer_choice::kind::uroman:
            return [&ur](std::string_view text) {
                auto r = ur.romanize_counted(text);
                return doc_result{std::move(r.text), r.chars_in, r.chars_dropped, 0};
            };
        case romanizer_choice::kind::uconv_auto:
            return [&sc](std::string_view text) {
                scheme_engine::uconv_stats stats;
                std::string out = sc.uconv(text, &stats);
                return doc_result{std::move(out), codepoint_count(text), 0,
                                  stats.unregistered_runs};
            };
        case romanizer_choice::kind::scheme: {
            scheme_id sid = choice.scheme;
            return [&sc, sid](std::string_view text) {
                std::string out = sc.romanize(sid, text);
                return doc_result{std::move(out), codepoint_count(text), 0, 0};
            };
        }
    }
    throw config_error("unknown romanizer choice");
}

namespace detail {

struct line_source {
    std::vector<std::unique_ptr<std::ifstream>> files;
    std::vector<std::istream*> streams;
    std::size_t current = 0;

    explicit line_source(const std::vector<std::filesystem::path>& inputs) {
        if (inputs.empty()) {
            streams.push_back(&std::cin);
            return;
        }
        for (const auto& p : inputs) {
            auto f = std::make_unique<std::ifstream>(p, std::ios::binary);
            if (!*f) throw config_error("cannot open input " + p.string());
            streams.push_back(f.get());
            files.push_back(std::move(f));
        }
    }

    bool next(std::string& line) {
        while (current < streams.size()) {
            if (std::getline(*streams[current], line)) return true;
            ++current;
        }
        return false;
    }
};

}  // namespace detail

// Streams records through N workers; a sequence number per block restores the
// input order before anything is written, so output bytes do not depend on
// the worker count.
inline stream_summary stream_romanize(const pipeline_config& cfg, const doc_romanizer& romanize) {
    auto start = std::chrono::steady_clock::now();

    detail::line_source source(cfg.inputs);
    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
        out_file.open(cfg.output, std::ios::binary);
        if (!out_file) throw config_error("cannot open output " + cfg.output.string());
        out = &out_file;
    }

    struct job {
        std::uint64_t seq = 0;
        std::uint64_t first_record = 0;
        std::vector<std::string> lines;
    };
    struct block_result {
        std::vector<std::string> lines;
        stream_summary partial;
        std::vector<std::uint64_t> malformed;
    };

    std::mutex in_mutex;
    std::condition_variable in_cv, space_cv;
    std::deque<job> pending;
    bool closed = false;

    std::mutex out_mutex;
    std::condition_variable out_cv;
    std::map<std::uint64_t, block_result> ready;
    std::atomic<std::int64_t> total_blocks{-1};

    const unsigned workers = std::max(1u, cfg.worker_count);
    const std::size_t block_lines = 256;
    const std::size_t max_pending = static_cast<std::size_t>(workers) * 4;

    auto process_line = [&](const std::string& line, std::uint64_t record_index,
                            block_result& result) {
        if (cfg.format == record_format::plain_lines) {
            doc_result r = romanize(line);
            result.partial.documents += 1;
            result.partial.chars_in += r.chars_in;
            result.partial.chars_out += codepoint_count(r.text);
            result.partial.chars_dropped += r.chars_dropped;
            result.partial.unregistered_runs += r.unregistered_runs;
            result.lines.push_back(std::move(r.text));
            return;
        }
        try {
            auto record = nlohmann::ordered_json::parse(line);
            if (!record.is_object() || !record.contains(cfg.text_field) ||
                !record[cfg.text_field].is_string())
                throw data_error("record has no text field");
            std::string text = record[cfg.text_field].get<std::string>();
            doc_result r = romanize(text);
            result.partial.documents += 1;
            result.partial.chars_in += r.chars_in;
            result.partial.chars_out += codepoint_count(r.text);
            result.partial.chars_dropped += r.chars_dropped;
            result.partial.unregistered_runs += r.unregistered_runs;
            record[cfg.text_field] = std::move(r.text);
            result.lines.push_back(record.dump());
        } catch (const std::exception&) {
            result.partial.documents += 1;
            result.partial.malformed_records += 1;
            result.malformed.push_back(record_index);
            result.lines.push_back(line);  // malformed records pass through unchanged
        }
    };

    auto worker = [&] {
        for (;;) {
            job j;
            {
                std::unique_lock lock(in_mutex);
                in_cv.wait(lock, [&] { return !pending.empty() || closed; });
                if (pending.empty()) return;
                j = std::move(pending.front());
                pending.pop_front();
                space_cv.notify_one();
            }
            block_result result;
            for (std::size_t k = 0; k < j.lines.size(); ++k)
                process_line(j.lines[k], j.first_record + k, result);
            {
                std::lock_guard lock(out_mutex);
                ready.emplace(j.seq, std::move(result));
            }
            out_cv.notify_all();
        }
    };

    stream_summary total;
    auto writer = [&] {
        std::uint64_t next = 0;
        for (;;) {
            block_result result;
            {
                std::unique_lock lock(out_mutex);
                out_cv.wait(lock, [&] {
                    return ready.count(next) > 0 ||
                           (total_blocks.load() >= 0 &&
                            next == static_cast<std::uint64_t>(total_blocks.load()));
                });
                if (!ready.count(next)) return;
                result = std::move(ready.at(next));
                ready.erase(next);
            }
            for (const std::string& line : result.lines) (*out) << line << '\n';
            for (std::uint64_t idx : result.malformed)
                std::cerr << "romakit: record " << idx << ": malformed json-lines record\n";
            total.merge(result.partial);
            ++next;
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    std::thread writer_thread(writer);

    std::uint64_t seq = 0, record_index = 0;
    {
        job current;
        current.seq = seq;
        current.first_record = 0;
        std::string line;
        while (source.next(line)) {
            current.lines.push_back(std::move(line));
            ++record_index;
            if (current.lines.size() >= block_lines) {
                {
                    std::unique_lock lock(in_mutex);
                    space_cv.wait(lock, [&] { return pending.size() < max_pending; });
                    pending.push_back(std::move(current));
                }
                in_cv.notify_one();
                current = job{};
                current.seq = ++seq;
                current.first_record = record_index;
            }
        }
        if (!current.lines.empty()) {
            {
                std::lock_guard lock(in_mutex);
                pending.push_back(std::move(current));
            }
            in_cv.notify_one();
            ++seq;
        }
    }
    {
        std::lock_guard lock(in_mutex);
        closed = true;
    }
    in_cv.notify_all();
    for (auto& t : pool) t.join();
    total_blocks.store(static_cast<std::int64_t>(seq));
    out_cv.notify_all();
    writer_thread.join();
    out->flush();

    total.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!cfg.stats_path.empty()) {
        std::ofstream stats(cfg.stats_path, std::ios::binary);
        if (!stats) throw config_error("cannot open stats file " + cfg.stats_path.string());
        stats << total.to_json().dump(1, '\t') << '\n';
    }
    return total;
}

struct sweep_row {
    std::string language;
    std::size_t vocab_size = 0;
    double fertility_native = 0;
    double fertility_romanized = 0;
    double rel_fertility_change = 0;
    double collapse_loss = 0;
    std::string error;  // non-empty when the row aborted
};

inline constexpr std::string_view kSweepCsvHeader =
    "language,vocab_size,fertility_native,fertility_romanized,rel_fertility_change,collapse_loss";

// One vocabulary per corpus is trained at max(sizes); smaller sizes come from
// merge-list truncation so the vocabularies nest. The word-count denominator
// always comes from the native corpus.
inline std::vector<sweep_row> sweep_vocab_sizes(
    const character_database& db, const std::vector<std::string>& native_corpus,
    const std::vector<std::string>& romanized_corpus, std::vector<std::size_t> sizes,
    word_count_mode mode, const std::function<std::string(std::string_view)>& romanizer,
    const std::string& language, bool split_by_whitespace = true) {
    if (sizes.empty()) throw data_error("empty sweep");
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

    bpe_config cfg;
    cfg.vocab_size = sizes.back();
    cfg.split_by_whitespace = split_by_whitespace;
    vocabulary native_full = train_bpe(db, native_corpus, cfg);
    vocabulary romanized_full = train_bpe(db, romanized_corpus, cfg);

    std::uint64_t words = 0;
    for (const std::string& doc : native_corpus) words += count_words(doc, mode);
    if (words == 0) throw data_error("empty corpus");

    std::vector<sweep_row> rows;
    for (std::size_t v_size : sizes) {
        sweep_row row;
        row.language = language;
        row.vocab_size = v_size;
        try {
            vocabulary native_v = truncate_vocabulary(native_full, v_size);
            vocabulary romanized_v = truncate_vocabulary(romanized_full, v_size);

            fertility_report native_report{0, words, mode};
            std::set<std::string> observed;
            for (const std::string& doc : native_corpus) {
                auto pieces = encode(db, native_v, doc);
                native_report.token_count += pieces.size();
                observed.insert(pieces.begin(), pieces.end());
            }
            fertility_report romanized_report{0, words, mode};
            for (const std::string& doc : romanized_corpus)
                romanized_report.token_count += encode(db, romanized_v, doc).size();

            row.fertility_native = native_report.fertility();
            row.fertility_romanized = romanized_report.fertility();
            row.rel_fertility_change = relative_fertility_change(romanized_report, native_report);
            std::vector<std::string> observed_vec(observed.begin(), observed.end());
            row.collapse_loss = token_collapse(observed_vec, romanizer).loss();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline void write_sweep_csv(const std::vector<sweep_row>& rows, std::ostream& out) {
    out << kSweepCsvHeader << '\n';
    char buf[160];
    for (const sweep_row& row : rows) {
        if (!row.error.empty()) continue;
        std::snprintf(buf, sizeof buf, "%s,%zu,%.10g,%.10g,%.10g,%.10g", row.language.c_str(),
                      row.vocab_size, row.fertility_native, row.fertility_romanized,
                      row.rel_fertility_change, row.collapse_loss);
        out << buf << '\n';
    }
}

}  // namespace romakit
