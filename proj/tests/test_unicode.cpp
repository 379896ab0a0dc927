#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "romakit/ucd.hpp"
#include "test_support.hpp"

using romakit::character_database;
using romakit::norm_form;
using romakit::script;
using testsup::db;

TEST_CASE("database loads the pinned UCD snapshot") {
    CHECK(db().version() == "13.0.0");
    CHECK(db().record_count() > 30000);
}

TEST_CASE("record fields transcribe the UnicodeData line") {
    auto zhe = db().lookup(0x416);
    REQUIRE(zhe.has_value());
    CHECK(zhe->name == "CYRILLIC CAPITAL LETTER ZHE");
    CHECK(zhe->general_category == "Lu");
    CHECK(zhe->script_of.kind == script::cyrillic);

    auto ma = db().lookup(0x92E);
    REQUIRE(ma.has_value());
    CHECK(ma->name == "DEVANAGARI LETTER MA");
    CHECK(ma->script_of.kind == script::devanagari);
}

TEST_CASE("surrogates are rejected as non-scalar") {
    CHECK_THROWS_WITH_AS(db().lookup(0xD800), doctest::Contains("not a scalar value"),
                         romakit::data_error);
    CHECK_THROWS_AS(db().lookup(0x110000), romakit::data_error);
}

TEST_CASE("unassigned codepoints report as unassigned, not as records") {
    CHECK_FALSE(db().lookup(0x378).has_value());
    CHECK(db().general_category_of(0x378) == "Cn");
    CHECK_FALSE(db().lookup(0xE000).has_value());  // private use stays out
}

TEST_CASE("ranged blocks synthesize names") {
    auto ren = db().lookup(0x4EBA);
    REQUIRE(ren.has_value());
    CHECK(ren->name == "CJK UNIFIED IDEOGRAPH-4EBA");
    CHECK(ren->general_category == "Lo");
    CHECK(ren->script_of.kind == script::han);

    auto ga = db().lookup(0xAC00);
    REQUIRE(ga.has_value());
    CHECK(ga->name == "HANGUL SYLLABLE GA");
    auto seo = db().lookup(0xC11C);
    REQUIRE(seo.has_value());
    CHECK(seo->name == "HANGUL SYLLABLE SEO");
    auto ul = db().lookup(0xC6B8);
    REQUIRE(ul.has_value());
    CHECK(ul->name == "HANGUL SYLLABLE UL");
}

TEST_CASE("normalization matches the reference vectors") {
    auto rows = testsup::load_norm_vectors();
    REQUIRE(rows.size() > 100);
    for (const auto& row : rows) {
        CAPTURE(row.input);
        CHECK(db().normalize(row.input, norm_form::nfc) == row.nfc);
        CHECK(db().normalize(row.input, norm_form::nfkc) == row.nfkc);
        CHECK(db().normalize(row.input, norm_form::nfkd) == row.nfkd);
        CHECK(db().strip_combining_marks(row.input) == row.stripped);
    }
}

TEST_CASE("normalization is idempotent per form") {
    auto rows = testsup::load_norm_vectors();
    for (const auto& row : rows) {
        for (auto form : {norm_form::nfc, norm_form::nfkc, norm_form::nfkd}) {
            auto once = db().normalize(row.input, form);
            CHECK(db().normalize(once, form) == once);
        }
    }
}

TEST_CASE("normalization spot checks") {
    CHECK(db().normalize(std::string("e\xcc\x81"), norm_form::nfc) == "\xc3\xa9");  // e + acute
    CHECK(db().normalize(std::string("\xef\xbd\xb1"), norm_form::nfkc) == "\xe3\x82\xa2");  // halfwidth -> ア
    CHECK(db().normalize(std::string("abc"), norm_form::nfc) == "abc");
}

TEST_CASE("strip_combining_marks spot checks") {
    CHECK(db().strip_combining_marks(std::string("tiếng Việt")) == "tieng Viet");
    CHECK(db().strip_combining_marks(std::string("abc")) == "abc");
    CHECK(db().strip_combining_marks(std::string("ž")) == "z");
}

TEST_CASE("stripped output contains no nonspacing marks") {
    for (const auto& row : testsup::load_norm_vectors()) {
        auto stripped = db().strip_combining_marks(row.input);
        auto decomposed = db().normalize(romakit::to_u32(stripped), norm_form::nfkd);
        for (char32_t cp : decomposed) CHECK_FALSE(db().is_nonspacing_mark(cp));
    }
}

TEST_CASE("script runs partition text with precede-wins attachment") {
    auto runs = db().script_runs(std::string("Все abc"));
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].begin == 0);
    CHECK(runs[0].end == 4);  // space attaches to the Cyrillic run
    CHECK(runs[0].tag.kind == script::cyrillic);
    CHECK(runs[1].begin == 4);
    CHECK(runs[1].end == 7);
    CHECK(runs[1].tag.kind == script::latin);

    CHECK(db().script_runs(std::string("")).empty());

    auto han = db().script_runs(std::string("人人"));
    REQUIRE(han.size() == 1);
    CHECK(han[0].begin == 0);
    CHECK(han[0].end == 2);
    CHECK(han[0].tag.kind == script::han);
}

TEST_CASE("leading common characters attach to the following run") {
    auto runs = db().script_runs(std::string("  人"));
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].begin == 0);
    CHECK(runs[0].end == 3);
    CHECK(runs[0].tag.kind == script::han);
}

TEST_CASE("script runs cover the input, disjoint and adjacent-distinct") {
    std::mt19937 rng(7);
    std::vector<char32_t> pool = {U'a', U'Z', U'ж', U'Ш', U'人', U'す', U'ア', U'म',
                                  U'ا', U' ', U'.', U'3', U'́', U'ε', U'ת'};
    for (int iter = 0; iter < 200; ++iter) {
        std::u32string text;
        std::size_t n = rng() % 40;
        for (std::size_t i = 0; i < n; ++i) text.push_back(pool[rng() % pool.size()]);
        auto runs = db().script_runs(text);
        if (text.empty()) {
            CHECK(runs.empty());
            continue;
        }
        REQUIRE(!runs.empty());
        CHECK(runs.front().begin == 0);
        CHECK(runs.back().end == text.size());
        for (std::size_t i = 0; i < runs.size(); ++i) {
            CHECK(runs[i].begin < runs[i].end);
            if (i > 0) {
                CHECK(runs[i].begin == runs[i - 1].end);
                CHECK(runs[i].tag != runs[i - 1].tag);
            }
        }
    }
}

TEST_CASE("loading is deterministic") {
    auto second = character_database::load(testsup::ucd_dir());
    CHECK(second.record_count() == db().record_count());
    CHECK(second.version() == db().version());
    auto a = second.lookup(0x416);
    auto b = db().lookup(0x416);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->name == b->name);
}

TEST_CASE("malformed UnicodeData lines raise parse errors with line numbers") {
    auto dir = testsup::make_temp_dir("romakit_ucd_bad");
    testsup::write_file(dir / "UnicodeData.txt",
                        "0041;LATIN CAPITAL LETTER A;Lu;0;;;;;;N;;;;;\n"
                        "0042;broken line\n");
    try {
        character_database::load(dir);
        FAIL("expected parse_error");
    } catch (const romakit::parse_error& e) {
        CHECK(e.line() == 2);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("missing files raise config errors") {
    auto dir = testsup::make_temp_dir("romakit_ucd_missing");
    CHECK_THROWS_WITH_AS(character_database::load(dir), doctest::Contains("missing required file"),
                         romakit::config_error);
    testsup::write_file(dir / "UnicodeData.txt", "");
    CHECK_THROWS_AS(character_database::load(dir), romakit::config_error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("decimal digit values come from the UCD") {
    CHECK(db().decimal_value(U'7') == 7);
    CHECK(db().decimal_value(0x0667) == 7);   // arabic-indic seven
    CHECK(db().decimal_value(0x096D) == 7);   // devanagari seven
    CHECK(db().decimal_value(U'a') == -1);
}
