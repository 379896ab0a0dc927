#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "romakit/tokenlab.hpp"
#include "romakit/uroman.hpp"
#include "test_support.hpp"

using namespace romakit;
using testsup::db;

static const std::string kMarker = to_utf8(kBoundaryMarker);

static bpe_config make_config(std::size_t v, bool split = true, double coverage = 1.0) {
    bpe_config c;
    c.vocab_size = v;
    c.split_by_whitespace = split;
    c.byte_fallback = true;
    c.character_coverage = coverage;
    return c;
}

static std::vector<std::string> naive_encode(const vocabulary& v, std::string_view text) {
    return oracles::naive_encode(db(), v, text);
}

static std::uint64_t naive_word_count(std::string_view text) {
    return oracles::naive_word_count(text);
}

TEST_CASE("training follows hand-simulated pair counts") {
    std::vector<std::string> corpus = {"low", "low", "lower", "newest", "widest"};
    auto v = train_bpe(db(), corpus, make_config(268 + 5));
    REQUIRE(v.base_size == 268);  // <unk> + 256 bytes + 11 characters
    std::vector<std::pair<std::string, std::string>> expected = {
        {kMarker, "l"}, {kMarker + "l", "o"}, {kMarker + "lo", "w"}, {"e", "s"}, {"es", "t"}};
    CHECK(v.merges == expected);
    CHECK(v.contains("est"));
    CHECK(v.contains(kMarker + "low"));
    CHECK(v.tokens.size() == 273);
}

TEST_CASE("repeated-letter corpus merges bottom-up") {
    auto v = train_bpe(db(), {"aaaa"}, make_config(259 + 3));
    std::vector<std::pair<std::string, std::string>> expected = {
        {"a", "a"}, {kMarker, "aa"}, {kMarker + "aa", "aa"}};
    CHECK(v.merges == expected);
    auto pieces = encode(db(), v, "aaaa");
    CHECK(pieces == std::vector<std::string>{kMarker + "aaaa"});
}

TEST_CASE("vocab size equal to the base inventory trains zero merges") {
    auto v = train_bpe(db(), {"aaaa"}, make_config(259));
    CHECK(v.merges.empty());
    CHECK(v.tokens.size() == 259);
}

TEST_CASE("unreachable vocab sizes report the achievable maximum") {
    CHECK_THROWS_WITH_AS(train_bpe(db(), {"ab"}, make_config(400)),
                         doctest::Contains("achievable maximum is 262"), data_error);
    CHECK_THROWS_WITH_AS(train_bpe(db(), {"ab"}, make_config(10)),
                         doctest::Contains("below the base inventory"), data_error);
    CHECK_THROWS_WITH_AS(train_bpe(db(), {}, make_config(300)), "empty corpus", data_error);
}

TEST_CASE("whole-word vocabulary encodes whole words") {
    auto v = train_bpe(db(), {"hello world"}, make_config(275));
    auto pieces = encode(db(), v, "hello world");
    CHECK(pieces == std::vector<std::string>{kMarker + "hello", kMarker + "world"});
}

TEST_CASE("merge-free vocabulary encodes one token per base symbol") {
    auto v = train_bpe(db(), {"ab"}, make_config(260));
    CHECK(encode(db(), v, "ab") == std::vector<std::string>{kMarker, "a", "b"});
}

TEST_CASE("uncovered characters fall back to utf-8 byte tokens") {
    auto v = train_bpe(db(), {"hello world"}, make_config(270));
    auto pieces = encode(db(), v, "☃");
    CHECK(pieces == std::vector<std::string>{kMarker, "<0xE2>", "<0x98>", "<0x83>"});
}

TEST_CASE("decode reassembles byte runs and boundary markers") {
    auto v = train_bpe(db(), {"hello world"}, make_config(275));
    CHECK(decode(v, std::vector<std::string>{kMarker + "hello", kMarker + "world"}) == "hello world");
    CHECK(decode(v, std::vector<std::string>{}) == "");
    CHECK(decode(v, std::vector<std::string>{"<0xE2>", "<0x98>", "<0x83>"}) == "☃");
    CHECK_THROWS_WITH_AS(decode(v, std::vector<std::string>{"<0xE2>", "<0x28>"}),
                         doctest::Contains("invalid UTF-8"), data_error);
}

TEST_CASE("encode/decode round-trips the normalized text") {
    std::vector<std::string> corpus = {"the quick brown fox", "жил был пёс",
                                       "人人生而自由", "tabs\tstay put"};
    auto v = train_bpe(db(), corpus, make_config(300, true, 0.9999));
    std::mt19937 rng(5);
    std::vector<std::string> pool = {"the", "fox", "пёс", "人", "自由", "☃", "x",
                                     " ", "  ", "\t", "12", "ｱ"};
    for (int iter = 0; iter < 300; ++iter) {
        std::string text;
        std::size_t n = rng() % 8;
        for (std::size_t k = 0; k < n; ++k) text += pool[rng() % pool.size()];
        CAPTURE(text);
        auto round = decode(v, encode(db(), v, text));
        CHECK(round == db().normalize(text, norm_form::nfkc));
    }
}

TEST_CASE("encode agrees with the merge-by-merge reference encoder") {
    std::mt19937 rng(17);
    const std::string letters = "abcde";
    auto random_doc = [&] {
        std::string doc;
        std::size_t words = 3 + rng() % 12;
        for (std::size_t w = 0; w < words; ++w) {
            if (w) doc.push_back(' ');
            std::size_t len = 1 + rng() % 5;
            for (std::size_t c = 0; c < len; ++c) doc.push_back(letters[rng() % letters.size()]);
        }
        return doc;
    };
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<std::string> corpus;
        std::size_t docs = 1 + rng() % 4;
        for (std::size_t d = 0; d < docs; ++d) corpus.push_back(random_doc());
        bool split = rng() % 2 == 0;
        auto v = train_bpe(db(), corpus, make_config(263 + rng() % 10, split));
        for (int probe = 0; probe < 4; ++probe) {
            std::string text = random_doc();
            CAPTURE(text);
            CHECK(encode(db(), v, text) == naive_encode(v, text));
        }
    }
}

TEST_CASE("count_words") {
    CHECK(count_words("ab cd", word_count_mode::whitespace) == 2);
    CHECK(count_words("人人生而自由平等。", word_count_mode::character) == 9);
    CHECK(count_words("", word_count_mode::whitespace) == 0);
    CHECK(count_words("", word_count_mode::character) == 0);
    CHECK(count_words("  a  b  ", word_count_mode::whitespace) == 2);
    CHECK(count_words("a\tb\nc", word_count_mode::whitespace) == 3);
}

TEST_CASE("fertility of a whole-word vocabulary is one") {
    auto v = train_bpe(db(), {"hello world"}, make_config(275));
    auto report = fertility(db(), v, {"hello world"}, word_count_mode::whitespace);
    CHECK(report.token_count == 2);
    CHECK(report.word_count == 2);
    CHECK(report.fertility() == doctest::Approx(1.0));
    CHECK(relative_fertility_change(report, report) == doctest::Approx(0.0));
}

TEST_CASE("fertility rejects empty corpora") {
    auto v = train_bpe(db(), {"ab"}, make_config(260));
    CHECK_THROWS_WITH_AS(fertility(db(), v, {"   "}, word_count_mode::whitespace),
                         "empty corpus", data_error);
}

TEST_CASE("relative fertility change uses the figure sign convention") {
    fertility_report baseline{100, 100, word_count_mode::whitespace};
    fertility_report better{93, 100, word_count_mode::whitespace};
    fertility_report worse{200, 100, word_count_mode::whitespace};
    CHECK(relative_fertility_change(better, baseline) == doctest::Approx(-0.07));
    CHECK(relative_fertility_change(worse, baseline) == doctest::Approx(1.0));
    fertility_report chars{100, 100, word_count_mode::character};
    CHECK_THROWS_WITH_AS(relative_fertility_change(chars, baseline),
                         doctest::Contains("mismatched"), data_error);
}

TEST_CASE("fertility matches an independent recount on random corpora") {
    std::mt19937 rng(23);
    const std::string letters = "abcdef";
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<std::string> corpus;
        std::size_t docs = 2 + rng() % 3;
        for (std::size_t d = 0; d < docs; ++d) {
            std::string doc;
            std::size_t words = 8 + rng() % 10;
            for (std::size_t w = 0; w < words; ++w) {
                if (w) doc.push_back(' ');
                std::size_t len = 1 + rng() % 6;
                for (std::size_t c = 0; c < len; ++c) doc.push_back(letters[rng() % letters.size()]);
            }
            corpus.push_back(doc);
        }
        auto v = train_bpe(db(), corpus, make_config(264 + rng() % 6));
        auto report = fertility(db(), v, corpus, word_count_mode::whitespace);
        std::uint64_t tokens = 0, words = 0;
        for (const auto& doc : corpus) {
            tokens += naive_encode(v, doc).size();
            words += naive_word_count(doc);
        }
        CHECK(report.token_count == tokens);
        CHECK(report.word_count == words);
        // exact rational identity: fertility * word_count == token_count
        CHECK(report.token_count == static_cast<std::uint64_t>(report.fertility() *
                                                               static_cast<double>(report.word_count) + 0.5));
    }
}

TEST_CASE("token collapse counts collision groups exactly") {
    auto identity = [](std::string_view s) { return std::string(s); };
    auto a = token_collapse({"a", "b", "c"}, identity);
    CHECK(a.unique_orig == 3);
    CHECK(a.unique_romanized == 3);
    CHECK(a.loss() == doctest::Approx(0.0));
    CHECK(a.collision_groups.empty());

    auto constant = [](std::string_view) { return std::string("z"); };
    auto b = token_collapse({"x", "y"}, constant);
    CHECK(b.unique_romanized == 1);
    CHECK(b.loss() == doctest::Approx(0.5));
    REQUIRE(b.collision_groups.size() == 1);
    CHECK(b.collision_groups[0].second.size() == 2);

    CHECK_THROWS_WITH_AS(token_collapse({}, identity), "empty token set", data_error);
}

TEST_CASE("boundary markers are shed before romanizing tokens") {
    auto identity = [](std::string_view s) { return std::string(s); };
    auto report = token_collapse({kMarker + "ab", "ab"}, identity);
    CHECK(report.unique_orig == 2);
    CHECK(report.unique_romanized == 1);
}

TEST_CASE("collapse under uroman matches a set-cardinality oracle") {
    static uroman_engine ur(db(), testsup::tables_dir());
    std::vector<std::string> tokens = {"是", "市", "事", "十", "人", "仁", "任", "好", kMarker + "是"};
    auto romanizer = [&](std::string_view s) { return ur.romanize(s); };
    auto report = token_collapse(tokens, romanizer);
    std::set<std::string> image;
    std::set<std::string> domain(tokens.begin(), tokens.end());
    for (const auto& t : domain) {
        std::string s = t;
        if (s.rfind(kMarker, 0) == 0) s = s.substr(kMarker.size());
        image.insert(ur.romanize(s));
    }
    CHECK(report.unique_orig == domain.size());
    CHECK(report.unique_romanized == image.size());
    std::uint64_t surplus = 0;
    for (const auto& [form, members] : report.collision_groups) surplus += members.size() - 1;
    CHECK(surplus == report.unique_orig - report.unique_romanized);
    CHECK(report.loss() > 0.0);  // the shipped readings table collapses shi-group tokens
}

TEST_CASE("truncated vocabularies nest and keep fertility monotone") {
    std::mt19937 rng(31);
    const std::string letters = "abcd";
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<std::string> corpus;
        for (int d = 0; d < 3; ++d) {
            std::string doc;
            for (int w = 0; w < 12; ++w) {
                if (w) doc.push_back(' ');
                std::size_t len = 1 + rng() % 6;
                for (std::size_t c = 0; c < len; ++c) doc.push_back(letters[rng() % letters.size()]);
            }
            corpus.push_back(doc);
        }
        auto full = train_bpe(db(), corpus, make_config(261 + 14));
        std::uint64_t prev_tokens = UINT64_MAX;
        for (std::size_t v_size = full.base_size; v_size <= full.tokens.size(); v_size += 2) {
            auto v = truncate_vocabulary(full, v_size);
            auto report = fertility(db(), v, corpus, word_count_mode::whitespace);
            CHECK(report.token_count <= prev_tokens);
            prev_tokens = report.token_count;
        }
    }
}

TEST_CASE("vocabulary serialization round-trips") {
    auto v = train_bpe(db(), {"low", "lower", "newest"}, make_config(270));
    auto dir = testsup::make_temp_dir("romakit_vocab");
    auto path = dir / "vocab.json";
    v.save(path);
    auto loaded = vocabulary::load(path);
    CHECK(loaded.tokens == v.tokens);
    CHECK(loaded.merges == v.merges);
    CHECK(loaded.base_size == v.base_size);
    CHECK(loaded.config.split_by_whitespace == v.config.split_by_whitespace);
    CHECK(encode(db(), loaded, "lowest") == encode(db(), v, "lowest"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("training is deterministic") {
    std::vector<std::string> corpus = {"abab baba", "aabb bbaa", "ab ba"};
    auto a = train_bpe(db(), corpus, make_config(266));
    auto b = train_bpe(db(), corpus, make_config(266));
    CHECK(a.tokens == b.tokens);
    CHECK(a.merges == b.merges);
}
