// romakit: romanize text at corpus scale, train and probe BPE tokenizers.
//
// Verbs: romanize, transliterate, invert, tokenizer-train, encode, fertility,
// collapse, sweep, bench. All text I/O is UTF-8, one record per line.
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "romakit/pipeline.hpp"
#include "romakit/scheme.hpp"
#include "romakit/tokenlab.hpp"
#include "romakit/ucd.hpp"
#include "romakit/uroman.hpp"

namespace {

namespace fs = std::filesystem;

fs::path data_root_default() {
    if (const char* env = std::getenv("ROMAKIT_DATA")) return env;
#ifdef ROMAKIT_DEFAULT_DATA_ROOT
    return ROMAKIT_DEFAULT_DATA_ROOT;
#else
    return ".";
#endif
}

// engines are constructed once, on first use
struct toolbox {
    fs::path root;
    std::optional<romakit::character_database> db;
    std::optional<romakit::uroman_engine> uroman;
    std::optional<romakit::scheme_engine> schemes;

    const romakit::character_database& database() {
        if (!db) db = romakit::character_database::load(root / "data" / "ucd");
        return *db;
    }
    const romakit::uroman_engine& uroman_eng() {
        if (!uroman) uroman.emplace(database(), root / "data" / "tables");
        return *uroman;
    }
    const romakit::scheme_engine& scheme_eng() {
        if (!schemes) schemes.emplace(database(), root / "schemes", root / "data" / "tables");
        return *schemes;
    }

    std::function<std::string(std::string_view)> text_romanizer(romakit::romanizer_choice choice) {
        switch (choice.k) {
            case romakit::romanizer_choice::kind::uroman:
                return [this](std::string_view s) { return uroman_eng().romanize(s); };
            case romakit::romanizer_choice::kind::uconv_auto:
                return [this](std::string_view s) { return scheme_eng().uconv(s); };
            case romakit::romanizer_choice::kind::scheme:
                return [this, sid = choice.scheme](std::string_view s) {
                    return scheme_eng().romanize(sid, s);
                };
        }
        throw romakit::config_error("unknown scheme");
    }
};

std::vector<std::string> read_documents(const std::vector<std::string>& files) {
    std::vector<std::string> docs;
    std::string line;
    if (files.empty()) {
        while (std::getline(std::cin, line)) docs.push_back(line);
        return docs;
    }
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        if (!in) throw romakit::config_error("cannot open input " + f);
        while (std::getline(in, line)) docs.push_back(line);
    }
    return docs;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw romakit::config_error("cannot open output " + path);
    return file;
}

romakit::romanizer_choice parse_choice_or_throw(const std::string& name) {
    auto choice = romakit::romanizer_choice::parse(name);
    if (!choice)
        throw CLI::ValidationError("--scheme",
                                   "unknown scheme '" + name +
                                       "' (uroman, uconv-auto, iso9, iso15919, pinyin, hepburn, adegn)");
    return *choice;
}

struct stream_options {
    std::vector<std::string> files;
    std::string out;
    std::string stats;
    std::string format = "plain";
    std::string text_field = "text";
    unsigned workers = 1;
};

void add_stream_options(CLI::App* cmd, stream_options& opt) {
    cmd->add_option("files", opt.files, "input files (default: stdin)");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
    cmd->add_option("--stats", opt.stats, "write a JSON run summary here");
    cmd->add_option("--format", opt.format, "record format: plain|jsonl")
        ->check(CLI::IsMember({"plain", "jsonl"}));
    cmd->add_option("--text-field", opt.text_field, "text field name for jsonl records");
    cmd->add_option("--workers", opt.workers, "worker thread count")->check(CLI::PositiveNumber);
}

int run_stream(toolbox& box, const stream_options& opt, const std::string& scheme) {
    romakit::pipeline_config cfg;
    for (const auto& f : opt.files) cfg.inputs.emplace_back(f);
    cfg.output = opt.out;
    cfg.stats_path = opt.stats;
    cfg.scheme = parse_choice_or_throw(scheme);
    cfg.worker_count = opt.workers;
    cfg.format = opt.format == "jsonl" ? romakit::record_format::json_lines
                                       : romakit::record_format::plain_lines;
    cfg.text_field = opt.text_field;
    auto romanize = romakit::make_doc_romanizer(box.uroman_eng(), box.scheme_eng(), cfg.scheme);
    romakit::stream_romanize(cfg, romanize);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"romanization toolkit and tokenizer analysis suite"};
    app.require_subcommand(1);
    toolbox box;
    std::string data_root = data_root_default().string();
    app.add_option("--data-root", data_root,
                   "directory holding data/ and schemes/ (env ROMAKIT_DATA)");

    // romanize / transliterate
    std::string rom_scheme;
    stream_options rom_opt;
    auto* rom = app.add_subcommand("romanize", "romanize lines with the chosen scheme");
    rom->add_option("--scheme", rom_scheme,
                    "uroman | uconv-auto | iso9 | iso15919 | pinyin | hepburn | adegn")
        ->required();
    add_stream_options(rom, rom_opt);

    std::string tr_scheme;
    stream_options tr_opt;
    auto* tr = app.add_subcommand("transliterate", "apply a standard transliteration scheme");
    tr->add_option("--scheme", tr_scheme, "uconv-auto | iso9 | iso15919 | pinyin | hepburn | adegn")
        ->required();
    add_stream_options(tr, tr_opt);

    // invert
    std::string inv_scheme = "iso9";
    std::vector<std::string> inv_files;
    std::string inv_out;
    auto* inv = app.add_subcommand("invert", "invert an invertible transliteration");
    inv->add_option("--scheme", inv_scheme, "scheme to invert (iso9)");
    inv->add_option("files", inv_files, "input files (default: stdin)");
    inv->add_option("--out", inv_out, "output file (default: stdout)");

    // tokenizer-train
    std::size_t train_vocab = 0;
    std::string train_split = "true";
    std::string train_fallback = "true";
    double train_coverage = 0.9999;
    std::vector<std::string> train_files;
    std::string train_out;
    auto* train = app.add_subcommand("tokenizer-train", "train a BPE vocabulary");
    train->add_option("--vocab-size", train_vocab, "target vocabulary size")->required();
    train->add_option("--split-ws", train_split, "split by whitespace: true|false")
        ->check(CLI::IsMember({"true", "false"}));
    train->add_option("--byte-fallback", train_fallback, "reserve byte tokens: true|false")
        ->check(CLI::IsMember({"true", "false"}));
    train->add_option("--coverage", train_coverage, "character coverage mass");
    train->add_option("--out", train_out, "vocabulary file to write")->required();
    train->add_option("files", train_files, "training corpus files (default: stdin)");

    // encode
    std::string enc_vocab;
    std::vector<std::string> enc_files;
    std::string enc_out;
    auto* enc = app.add_subcommand("encode", "encode lines into subword tokens");
    enc->add_option("--vocab", enc_vocab, "vocabulary file")->required();
    enc->add_option("files", enc_files, "input files (default: stdin)");
    enc->add_option("--out", enc_out, "output file (default: stdout)");

    // fertility
    std::string fert_vocab, fert_mode, fert_baseline, fert_out;
    std::vector<std::string> fert_files;
    auto* fert = app.add_subcommand("fertility", "tokens-per-word report for a corpus");
    fert->add_option("--vocab", fert_vocab, "vocabulary file")->required();
    fert->add_option("--word-mode", fert_mode, "whitespace | character")
        ->required()
        ->check(CLI::IsMember({"whitespace", "character"}));
    fert->add_option("--baseline", fert_baseline, "baseline report for relative change");
    fert->add_option("--out", fert_out, "output file (default: stdout)");
    fert->add_option("files", fert_files, "corpus files (default: stdin)");

    // collapse
    std::string col_vocab, col_corpus, col_tokens, col_scheme = "uroman", col_out;
    auto* col = app.add_subcommand("collapse", "token collapse under a romanizer");
    col->add_option("--vocab", col_vocab, "vocabulary for encoding --corpus");
    col->add_option("--corpus", col_corpus, "corpus to encode for observed tokens");
    col->add_option("--tokens", col_tokens, "file with one observed token per line");
    col->add_option("--scheme", col_scheme, "romanizer: uroman | uconv-auto | scheme name");
    col->add_option("--out", col_out, "output file (default: stdout)");

    // sweep
    std::string sweep_sizes, sweep_native, sweep_romanized, sweep_scheme = "uroman";
    std::string sweep_mode = "whitespace", sweep_out, sweep_language = "und";
    std::string sweep_split = "true";
    auto* sweep = app.add_subcommand("sweep", "vocabulary-size sweep over a corpus pair");
    sweep->add_option("--sizes", sweep_sizes, "comma-separated vocabulary sizes")->required();
    sweep->add_option("--native", sweep_native, "native-script corpus file")->required();
    sweep->add_option("--romanized", sweep_romanized, "romanized corpus file")->required();
    sweep->add_option("--scheme", sweep_scheme, "romanizer for the collapse column");
    sweep->add_option("--word-mode", sweep_mode, "whitespace | character")
        ->check(CLI::IsMember({"whitespace", "character"}));
    sweep->add_option("--split-ws", sweep_split, "tokenizer split-by-whitespace: true|false")
        ->check(CLI::IsMember({"true", "false"}));
    sweep->add_option("--language", sweep_language, "language label for the csv");
    sweep->add_option("--out", sweep_out, "csv file (default: stdout)");

    // bench
    std::string bench_scheme = "uroman";
    stream_options bench_opt;
    auto* bench = app.add_subcommand("bench", "parallel streaming run with a summary");
    bench->add_option("--scheme", bench_scheme, "romanizer");
    add_stream_options(bench, bench_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n";
        for (auto* sub : app.get_subcommands()) std::cerr << sub->help();
        if (app.get_subcommands().empty()) std::cerr << app.help();
        return 1;
    }

    box.root = data_root;
    try {
        if (rom->parsed()) return run_stream(box, rom_opt, rom_scheme);

        if (tr->parsed()) {
            if (tr_scheme == "uroman")
                throw CLI::ValidationError("--scheme", "transliterate covers the standard schemes;"
                                                       " use 'romanize --scheme uroman'");
            return run_stream(box, tr_opt, tr_scheme);
        }

        if (inv->parsed()) {
            auto sid = romakit::parse_scheme_id(inv_scheme);
            if (!sid) throw CLI::ValidationError("--scheme", "unknown scheme '" + inv_scheme + "'");
            std::ofstream out_file;
            std::ostream& out = open_output(out_file, inv_out);
            for (const std::string& line : read_documents(inv_files))
                out << box.scheme_eng().invert(*sid, line) << '\n';
            return 0;
        }

        if (train->parsed()) {
            romakit::bpe_config cfg;
            cfg.vocab_size = train_vocab;
            cfg.split_by_whitespace = train_split == "true";
            cfg.byte_fallback = train_fallback == "true";
            cfg.character_coverage = train_coverage;
            auto corpus = read_documents(train_files);
            auto vocab = romakit::train_bpe(box.database(), corpus, cfg);
            vocab.save(train_out);
            std::cerr << "trained " << vocab.tokens.size() << " tokens ("
                      << vocab.merges.size() << " merges) -> " << train_out << '\n';
            return 0;
        }

        if (enc->parsed()) {
            auto vocab = romakit::vocabulary::load(enc_vocab);
            std::ofstream out_file;
            std::ostream& out = open_output(out_file, enc_out);
            for (const std::string& line : read_documents(enc_files)) {
                auto pieces = romakit::encode(box.database(), vocab, line);
                for (std::size_t i = 0; i < pieces.size(); ++i)
                    out << (i ? " " : "") << pieces[i];
                out << '\n';
            }
            return 0;
        }

        if (fert->parsed()) {
            auto vocab = romakit::vocabulary::load(fert_vocab);
            auto mode = *romakit::parse_word_count_mode(fert_mode);
            auto corpus = read_documents(fert_files);
            auto report = romakit::fertility(box.database(), vocab, corpus, mode);
            auto j = report.to_json();
            if (!fert_baseline.empty()) {
                std::ifstream base_in(fert_baseline, std::ios::binary);
                if (!base_in)
                    throw romakit::config_error("cannot open baseline " + fert_baseline);
                nlohmann::json base_j;
                base_in >> base_j;
                auto baseline = romakit::fertility_report::from_json(base_j);
                j["relative_change"] = romakit::relative_fertility_change(report, baseline);
            }
            std::ofstream out_file;
            open_output(out_file, fert_out) << j.dump(1, '\t') << '\n';
            return 0;
        }

        if (col->parsed()) {
            std::vector<std::string> observed;
            if (!col_tokens.empty()) {
                observed = read_documents({col_tokens});
            } else if (!col_vocab.empty() && !col_corpus.empty()) {
                auto vocab = romakit::vocabulary::load(col_vocab);
                std::set<std::string> unique;
                for (const std::string& line : read_documents({col_corpus})) {
                    auto pieces = romakit::encode(box.database(), vocab, line);
                    unique.insert(pieces.begin(), pieces.end());
                }
                observed.assign(unique.begin(), unique.end());
            } else {
                throw CLI::ValidationError("collapse",
                                           "pass --tokens FILE or --vocab FILE --corpus FILE");
            }
            observed.erase(std::remove(observed.begin(), observed.end(), std::string()),
                           observed.end());
            auto romanizer = box.text_romanizer(parse_choice_or_throw(col_scheme));
            if (observed.empty()) throw romakit::data_error("empty token set");
            auto report = romakit::token_collapse(observed, romanizer);
            std::ofstream out_file;
            open_output(out_file, col_out) << report.to_json().dump(1, '\t') << '\n';
            return 0;
        }

        if (sweep->parsed()) {
            std::vector<std::size_t> sizes;
            std::stringstream ss(sweep_sizes);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                sizes.push_back(static_cast<std::size_t>(std::stoull(item)));
            }
            auto native = read_documents({sweep_native});
            auto romanized = read_documents({sweep_romanized});
            auto mode = *romakit::parse_word_count_mode(sweep_mode);
            auto romanizer = box.text_romanizer(parse_choice_or_throw(sweep_scheme));
            auto rows = romakit::sweep_vocab_sizes(box.database(), native, romanized, sizes, mode,
                                                   romanizer, sweep_language,
                                                   sweep_split == "true");
            for (const auto& row : rows)
                if (!row.error.empty())
                    std::cerr << "romakit: sweep row V=" << row.vocab_size
                              << " aborted: " << row.error << '\n';
            std::ofstream out_file;
            romakit::write_sweep_csv(rows, open_output(out_file, sweep_out));
            return 0;
        }

        if (bench->parsed()) {
            if (bench_opt.out.empty()) bench_opt.out = "/dev/null";
            romakit::pipeline_config cfg;
            for (const auto& f : bench_opt.files) cfg.inputs.emplace_back(f);
            cfg.output = bench_opt.out;
            cfg.stats_path = bench_opt.stats;
            cfg.scheme = parse_choice_or_throw(bench_scheme);
            cfg.worker_count = bench_opt.workers;
            cfg.format = bench_opt.format == "jsonl" ? romakit::record_format::json_lines
                                                     : romakit::record_format::plain_lines;
            cfg.text_field = bench_opt.text_field;
            auto romanize =
                romakit::make_doc_romanizer(box.uroman_eng(), box.scheme_eng(), cfg.scheme);
            auto summary = romakit::stream_romanize(cfg, romanize);
            std::cout << summary.to_json().dump(1, '\t') << '\n';
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "romakit: " << e.what() << '\n';
        return 1;
    } catch (const romakit::parse_error& e) {
        std::cerr << "romakit: " << e.what() << '\n';
        return 2;
    } catch (const romakit::config_error& e) {
        std::cerr << "romakit: " << e.what() << '\n';
        return 2;
    } catch (const romakit::data_error& e) {
        std::cerr << "romakit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "romakit: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
