#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "romakit/uroman.hpp"
#include "test_support.hpp"

using romakit::map_tier;
using romakit::uroman_engine;
using testsup::db;

static const uroman_engine& engine() {
    static uroman_engine instance(db(), testsup::tables_dir());
    return instance;
}

// "All human beings are born free and equal" in the five covered scripts.
static const struct {
    const char* input;
    const char* expected;
} kGoldens[] = {
    {"Все люди рождаются свободными и равными.",
     "Vse lyudi rozhdayutsya svobodnymi i ravnymi."},
    {"人人生而自由平等。", "renrenshengerziyoupingdeng."},
    {"मनुष्य जन्म से स्वतंत्र और समान होते हैं।",
     "manussya janma se svatamtra aur samaan hote haim."},
    {"すべての人は、生まれながら自由で平等である。",
     "subetenorenha, shengmarenagaraziyoudepingdengdearu."},
    {"الناس يولدون أحرارًا ومتساوين.", "alnas ywldwn ahrara wmtsawyn."},
};

TEST_CASE("romanization goldens hold byte-exactly") {
    for (const auto& g : kGoldens) {
        CAPTURE(g.input);
        CHECK(engine().romanize(g.input) == g.expected);
    }
}

TEST_CASE("ascii input is a fixed point") {
    CHECK(engine().romanize("subeteno") == "subeteno");
    CHECK(engine().romanize("a b\tc 123 .,!?") == "a b\tc 123 .,!?");
}

TEST_CASE("vietnamese loses diacritics only") {
    CHECK(engine().romanize("tiếng Việt") == "tieng Viet");
    CHECK(engine().romanize("đi Đà Nẵng") == "di Da Nang");
}

TEST_CASE("name payload extraction") {
    auto zhe = db().lookup(0x416);
    REQUIRE(zhe.has_value());
    auto payload = engine().latin_from_unicode_name(*zhe);
    REQUIRE(payload.has_value());
    CHECK(*payload == "Zhe");

    auto ma = db().lookup(0x92E);
    REQUIRE(ma.has_value());
    CHECK(engine().latin_from_unicode_name(*ma) == "ma");

    auto a = db().lookup(U'a');
    REQUIRE(a.has_value());
    CHECK(engine().latin_from_unicode_name(*a) == "a");

    auto stroke = db().lookup(0x111);  // d with stroke
    REQUIRE(stroke.has_value());
    CHECK(engine().latin_from_unicode_name(*stroke) == "d");

    auto period = db().lookup(U'.');
    REQUIRE(period.has_value());
    CHECK_FALSE(engine().latin_from_unicode_name(*period).has_value());
}

TEST_CASE("curated tables shadow the name heuristic") {
    // the raw ZHE payload would be "Zhe"; the table pins the digraph onset
    CHECK(engine().romanize("Ж") == "Zh");
    CHECK(engine().romanize("ж") == "zh");
}

TEST_CASE("han readings") {
    CHECK(engine().han_reading_ascii(U'人') == "ren");
    CHECK(engine().han_reading_ascii(U'生') == "sheng");
    CHECK(engine().han_reading_ascii(U'平') == "ping");
    CHECK(engine().han_reading_ascii(U'绿') == "lu");  // u-diaeresis folds
    CHECK_FALSE(engine().han_reading_ascii(0x9B31).has_value());
}

TEST_CASE("han characters without readings are dropped and recorded") {
    auto result = engine().romanize_counted("人\U0002A6A5鬱");
    CHECK(result.text == "ren");
    CHECK(result.chars_in == 3);
    CHECK(result.chars_dropped == 2);
}

TEST_CASE("two distinct han characters share a romanization") {
    CHECK(engine().han_reading_ascii(U'是') == "shi");
    CHECK(engine().han_reading_ascii(U'市') == "shi");
    CHECK(engine().romanize("是") == engine().romanize("市"));
}

TEST_CASE("korean romanizes through syllable names") {
    CHECK(engine().romanize("서울") == "seoul");
}

TEST_CASE("greek and hebrew fall back to curated alphabets") {
    CHECK(engine().romanize("Ελλάδα") == "Ellada");
    CHECK(engine().romanize("שלום") == "shlvm");
}

TEST_CASE("cjk punctuation maps to ascii punctuation") {
    CHECK(engine().romanize("。") == ".");
    CHECK(engine().romanize("、") == ", ");
    CHECK(engine().romanize("，") == ",");
}

TEST_CASE("non-ascii digits map through decimal values") {
    CHECK(engine().romanize("٣١٤") == "314");
    CHECK(engine().romanize("१२३") == "123");
    CHECK(engine().romanize("42") == "42");
}

TEST_CASE("unmappable symbols are dropped") {
    auto result = engine().romanize_counted("a😀b");
    CHECK(result.text == "ab");
    CHECK(result.chars_dropped == 1);
}

static std::vector<std::string> sample_inputs() {
    std::vector<std::string> inputs;
    for (const auto& g : kGoldens) inputs.push_back(g.input);
    inputs.push_back("tiếng Việt");
    inputs.push_back("mixed Вот 人 です 123 ٤");
    inputs.push_back("emoji 😀🎉 and «quotes» — dashes…");
    inputs.push_back("서울특별시 Ελλάδα שלום");
    std::mt19937 rng(99);
    std::vector<char32_t> pool;
    for (char32_t cp = 0x20; cp < 0x7F; ++cp) pool.push_back(cp);
    for (char32_t cp : {U'ж', U'Щ', U'人', U'時', U'す', U'ギ', U'म', U'ि', U'्',
                        U'ا', U'ً', U'é', U'ǝ', U'☃', U'½', U'Ω'})
        pool.push_back(cp);
    for (int k = 0; k < 120; ++k) {
        std::u32string s;
        std::size_t n = rng() % 32;
        for (std::size_t j = 0; j < n; ++j) s.push_back(pool[rng() % pool.size()]);
        inputs.push_back(romakit::to_utf8(s));
    }
    return inputs;
}

TEST_CASE("ascii closure and idempotence") {
    for (const auto& input : sample_inputs()) {
        CAPTURE(input);
        std::string once = engine().romanize(input);
        for (unsigned char c : once) CHECK(c <= 0x7F);
        CHECK(engine().romanize(once) == once);
    }
}

TEST_CASE("spans partition the input and concatenate to the romanization") {
    for (const auto& input : sample_inputs()) {
        CAPTURE(input);
        std::u32string normalized = db().normalize(romakit::to_u32(input), romakit::norm_form::nfkc);
        auto spans = engine().spans(normalized);
        std::string concat;
        std::size_t cursor = 0;
        for (const auto& span : spans) {
            CHECK(span.begin == cursor);
            CHECK(span.begin < span.end);
            cursor = span.end;
            concat += span.text;
        }
        CHECK(cursor == normalized.size());
        CHECK(concat == engine().romanize(input));
    }
}

TEST_CASE("identical engines produce identical bytes") {
    uroman_engine second(db(), testsup::tables_dir());
    for (const auto& input : sample_inputs()) CHECK(second.romanize(input) == engine().romanize(input));
}

TEST_CASE("goldens hold regardless of the input normalization form") {
    for (const auto& g : kGoldens) {
        std::string decomposed = db().normalize(g.input, romakit::norm_form::nfkd);
        CHECK(engine().romanize(decomposed) == g.expected);
    }
}

TEST_CASE("table loader enforces the format") {
    auto dir = testsup::make_temp_dir("romakit_tables_bad");
    testsup::write_file(dir / "uroman_x.tsv", "0416\tЖ\tscript\n");
    CHECK_THROWS_WITH_AS(romakit::load_mapping_tables(dir), doctest::Contains("ASCII"),
                         romakit::parse_error);
    testsup::write_file(dir / "uroman_x.tsv", "0416\tzh\tbogus\n");
    CHECK_THROWS_WITH_AS(romakit::load_mapping_tables(dir), doctest::Contains("tier"),
                         romakit::parse_error);
    testsup::write_file(dir / "uroman_x.tsv", "0416\tzh\tscript\n0416\tz\tscript\n");
    try {
        romakit::load_mapping_tables(dir);
        FAIL("expected parse_error");
    } catch (const romakit::parse_error& e) {
        CHECK(e.line() == 2);
    }
    std::filesystem::remove_all(dir);
}
