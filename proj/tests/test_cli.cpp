#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "romakit/scheme.hpp"
#include "romakit/uroman.hpp"
#include "test_support.hpp"

namespace {

struct cli_result {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch() {
    static auto dir = testsup::make_temp_dir("romakit_cli");
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cli_result run_cli(const std::string& args) {
    auto out = scratch() / "stdout.txt";
    auto err = scratch() / "stderr.txt";
    std::string cmd = std::string(ROMAKIT_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string() + " </dev/null";
    int status = std::system(cmd.c_str());
    cli_result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::filesystem::path write_lines(const std::string& name, const std::vector<std::string>& lines) {
    auto p = scratch() / name;
    std::ofstream out(p, std::ios::binary);
    for (const auto& l : lines) out << l << '\n';
    return p;
}

}  // namespace

TEST_CASE("romanize emits exactly the module output plus one newline per record") {
    auto in = write_lines("ru.txt", {"Все люди рождаются свободными и равными.", "привет"});
    auto r = run_cli("romanize --scheme uroman " + in.string());
    REQUIRE(r.exit_code == 0);
    romakit::uroman_engine engine(testsup::db(), testsup::tables_dir());
    CHECK(r.out == engine.romanize("Все люди рождаются свободными и равными.") + "\n" +
                       engine.romanize("привет") + "\n");
}

TEST_CASE("repeated invocations produce identical bytes") {
    auto in = write_lines("mixed.txt", {"Все 人人 すべて 123", "tiếng Việt"});
    auto first = run_cli("romanize --scheme uconv-auto " + in.string());
    auto second = run_cli("romanize --scheme uconv-auto " + in.string());
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("usage errors exit 1 and print help to stderr") {
    auto bad_flag = run_cli("romanize --scheme uroman --no-such-flag");
    CHECK(bad_flag.exit_code == 1);
    CHECK(bad_flag.err.find("--no-such-flag") != std::string::npos);

    auto no_verb = run_cli("");
    CHECK(no_verb.exit_code == 1);

    auto bad_scheme = run_cli("romanize --scheme bogus /dev/null");
    CHECK(bad_scheme.exit_code == 1);
    CHECK(bad_scheme.err.find("unknown scheme") != std::string::npos);
}

TEST_CASE("empty token file is a data error with exit 2") {
    auto tokens = write_lines("empty_tokens.txt", {});
    auto r = run_cli("collapse --tokens " + tokens.string() + " --scheme uroman");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("empty token set") != std::string::npos);
}

TEST_CASE("invert rejects text outside the image with exit 2") {
    auto in = write_lines("bad_invert.txt", {"Čajkovskij quartet"});
    auto r = run_cli("invert --scheme iso9 " + in.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("image") != std::string::npos);
}

TEST_CASE("train, encode, fertility and collapse compose through files") {
    auto corpus = write_lines("corpus.txt", {"жил был пёс", "пёс жил у ворот",
                                             "серый кот był у ворот"});
    auto vocab = (scratch() / "vocab.json").string();
    auto trained = run_cli("tokenizer-train --vocab-size 295 --split-ws true --out " + vocab +
                           " " + corpus.string());
    REQUIRE(trained.exit_code == 0);

    auto encoded = run_cli("encode --vocab " + vocab + " " + corpus.string());
    REQUIRE(encoded.exit_code == 0);
    CHECK(encoded.out.find(' ') != std::string::npos);

    auto fert = run_cli("fertility --vocab " + vocab + " --word-mode whitespace " +
                        corpus.string());
    REQUIRE(fert.exit_code == 0);
    auto j = nlohmann::json::parse(fert.out);
    CHECK(j["word_count"] == 12);
    CHECK(j["fertility"].get<double>() > 0.0);

    auto col = run_cli("collapse --vocab " + vocab + " --corpus " + corpus.string() +
                       " --scheme uroman");
    REQUIRE(col.exit_code == 0);
    auto cj = nlohmann::json::parse(col.out);
    CHECK(cj["unique_orig"].get<std::uint64_t>() >= cj["unique_romanized"].get<std::uint64_t>());
}

TEST_CASE("sweep rejects an empty size list with exit 2") {
    auto native = write_lines("nat.txt", {"a b"});
    auto rom = write_lines("rom.txt", {"a b"});
    auto r = run_cli("sweep --sizes , --native " + native.string() + " --romanized " +
                     rom.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("empty sweep") != std::string::npos);
}

TEST_CASE("missing data root is a data error") {
    auto in = write_lines("x.txt", {"abc"});
    auto r = run_cli("--data-root /nonexistent romanize --scheme uroman " + in.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("missing required file") != std::string::npos);
}
