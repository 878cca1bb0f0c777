#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dialforge/corpus.hpp"
#include "helpers.hpp"

using namespace dialforge;
using testutil::TempDir;

namespace {

Corpus tiny_corpus(const std::string& name, Lang lang, Kind kind,
                   std::initializer_list<std::pair<std::string, std::string>> id_text) {
    Corpus c;
    c.name = name;
    c.lang = lang;
    c.kind = kind;
    for (const auto& [id, text] : id_text) {
        c.pairs.push_back({id, text, "summary of " + id, lang, kind});
    }
    return c;
}

}  // namespace

TEST_CASE("read preserves line order") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"),
                         R"({"id":"a","text":"First text.","summary":"First."})"
                         "\n"
                         R"({"id":"b","text":"Second text.","summary":"Second."})"
                         "\n");
    const auto c = read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document);
    REQUIRE(c.size() == 2);
    CHECK(c.pairs[0].id == "a");
    CHECK(c.pairs[1].id == "b");
    CHECK(c.name == "c");
    CHECK(c.pairs[0].lang == Lang::en);
    CHECK(c.pairs[0].kind == Kind::document);
}

TEST_CASE("two reads of the same file are identical") {
    TempDir tmp("corpus");
    write_corpus(testutil::synthetic_docset(25, 9), tmp.file("c.jsonl"));
    const auto first = read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document);
    const auto second = read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document);
    CHECK(first.pairs == second.pairs);
}

TEST_CASE("missing field reports the line number") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"),
                         R"({"id":"a","text":"Fine.","summary":"Ok."})"
                         "\n"
                         R"({"id":"b","text":"No summary here."})"
                         "\n");
    try {
        read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document);
        FAIL("expected Error");
    } catch (const Error& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":2") != std::string::npos);
        CHECK(msg.find("summary") != std::string::npos);
    }
}

TEST_CASE("duplicate id names the offender") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"),
                         R"({"id":"x","text":"One.","summary":"S."})"
                         "\n"
                         R"({"id":"x","text":"Two.","summary":"S."})"
                         "\n");
    CHECK_THROWS_WITH(read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document),
                      Catch::Matchers::ContainsSubstring("duplicate id 'x'"));
}

TEST_CASE("empty or blank-only files are errors") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("empty.jsonl"), "");
    testutil::write_file(tmp.file("blank.jsonl"), "\n\n  \n");
    CHECK_THROWS_AS(read_corpus(tmp.file("empty.jsonl"), Lang::en, Kind::document), Error);
    CHECK_THROWS_AS(read_corpus(tmp.file("blank.jsonl"), Lang::en, Kind::document), Error);
    CHECK_THROWS_AS(read_corpus(tmp.file("missing.jsonl"), Lang::en, Kind::document), Error);
}

TEST_CASE("blank lines are skipped, not counted") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"),
                         "\n"
                         R"({"id":"a","text":"T.","summary":"S."})"
                         "\n\n"
                         R"({"id":"b","text":"T.","summary":"S."})"
                         "\n\n");
    CHECK(read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document).size() == 2);
}

TEST_CASE("ids are synthesized from corpus name and line index") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("news.jsonl"),
                         R"({"text":"T.","summary":"S."})"
                         "\n"
                         R"({"text":"U.","summary":"V."})"
                         "\n");
    const auto c = read_corpus(tmp.file("news.jsonl"), Lang::en, Kind::document);
    CHECK(c.pairs[0].id == "news-000001");
    CHECK(c.pairs[1].id == "news-000002");
}

TEST_CASE("record lang/kind fields override the defaults") {
    TempDir tmp("corpus");
    testutil::write_file(
        tmp.file("c.jsonl"),
        R"({"id":"a","text":"A: hi","summary":"greeting","lang":"ko","kind":"dialogue"})"
        "\n");
    const auto c = read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document);
    CHECK(c.lang == Lang::ko);
    CHECK(c.kind == Kind::dialogue);
}

TEST_CASE("mixed kinds within one file are rejected") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"),
                         R"({"id":"a","text":"T.","summary":"S.","kind":"document"})"
                         "\n"
                         R"({"id":"b","text":"T.","summary":"S.","kind":"dialogue"})"
                         "\n");
    CHECK_THROWS_WITH(read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document),
                      Catch::Matchers::ContainsSubstring("kind"));
}

TEST_CASE("blank text or summary is rejected") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"), R"({"id":"a","text":"  ","summary":"S."})"
                                              "\n");
    CHECK_THROWS_WITH(read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document),
                      Catch::Matchers::ContainsSubstring("'text' is empty"));
}

TEST_CASE("write refuses an empty corpus") {
    TempDir tmp("corpus");
    Corpus c;
    c.name = "empty";
    CHECK_THROWS_AS(write_corpus(c, tmp.file("c.jsonl")), Error);
}

TEST_CASE("one pair writes one line") {
    TempDir tmp("corpus");
    write_corpus(tiny_corpus("one", Lang::en, Kind::document, {{"a", "Text."}}),
                 tmp.file("c.jsonl"));
    const auto content = testutil::read_file(tmp.file("c.jsonl"));
    CHECK(std::count(content.begin(), content.end(), '\n') == 1);
}

TEST_CASE("write then read round-trips field for field") {
    TempDir tmp("corpus");
    Corpus c = tiny_corpus("rt", Lang::ko, Kind::dialogue,
                           {{"a", "A: 안녕\n B: \"quoted\"\ttab"},
                            {"b", "plain enough"}});
    write_corpus(c, tmp.file("c.jsonl"));
    const auto back = read_corpus(tmp.file("c.jsonl"), Lang::ko, Kind::dialogue);
    CHECK(back.pairs == c.pairs);

    // read(write(read(p))) is byte-identical on disk
    write_corpus(back, tmp.file("c2.jsonl"));
    CHECK(testutil::read_file(tmp.file("c.jsonl")) == testutil::read_file(tmp.file("c2.jsonl")));
}

TEST_CASE("round trip holds for randomized corpora") {
    TempDir tmp("corpus");
    std::mt19937_64 rng(1234);
    const std::string alphabet[] = {"a", "B", " ", "\n", "\t", "\"", "\\", "{", "}",
                                    "안", "녕", "café", "1", ".", "?"};
    for (int iter = 0; iter < 30; ++iter) {
        Corpus c;
        c.name = "rand";
        c.lang = iter % 2 ? Lang::en : Lang::ko;
        c.kind = iter % 3 ? Kind::document : Kind::dialogue;
        const std::size_t count = 1 + rng() % 6;
        for (std::size_t i = 0; i < count; ++i) {
            auto scramble = [&](std::size_t len) {
                std::string s;
                for (std::size_t k = 0; k < len; ++k) {
                    s += alphabet[rng() % std::size(alphabet)];
                }
                s += "x";  // never blank
                return s;
            };
            c.pairs.push_back({"id-" + std::to_string(i), scramble(1 + rng() % 12),
                               scramble(1 + rng() % 6), c.lang, c.kind});
        }
        write_corpus(c, tmp.file("r.jsonl"));
        const auto back = read_corpus(tmp.file("r.jsonl"), c.lang, c.kind);
        REQUIRE(back.pairs == c.pairs);
    }
}

TEST_CASE("concat cardinality and order") {
    const auto a =
        tiny_corpus("a", Lang::en, Kind::document, {{"1", "T."}, {"2", "T."}, {"3", "T."}});
    const auto b = tiny_corpus("b", Lang::en, Kind::document, {{"4", "T."}, {"5", "T."}});
    const auto c = concat_corpora(a, b);
    REQUIRE(c.size() == 5);
    CHECK(c.pairs[0].id == "1");
    CHECK(c.pairs[4].id == "5");
    CHECK(c.kind == Kind::document);
}

TEST_CASE("concat with an empty corpus leaves pairs unchanged") {
    const auto a = tiny_corpus("a", Lang::en, Kind::document, {{"1", "T."}, {"2", "T."}});
    Corpus empty;
    empty.name = "none";
    empty.lang = Lang::en;
    const auto c = concat_corpora(a, empty);
    CHECK(c.pairs == a.pairs);
}

TEST_CASE("concat rejects language mismatch") {
    const auto a = tiny_corpus("a", Lang::en, Kind::document, {{"1", "T."}});
    const auto b = tiny_corpus("b", Lang::ko, Kind::document, {{"2", "T."}});
    CHECK_THROWS_WITH(concat_corpora(a, b),
                      Catch::Matchers::ContainsSubstring("language mismatch"));
}

TEST_CASE("concat disambiguates colliding ids with a corpus-name prefix") {
    const auto a = tiny_corpus("left", Lang::en, Kind::document, {{"x", "T."}});
    const auto b = tiny_corpus("right", Lang::en, Kind::document, {{"x", "U."}});
    const auto c = concat_corpora(a, b);
    REQUIRE(c.size() == 2);
    CHECK(c.pairs[0].id == "x");
    CHECK(c.pairs[1].id == "right-x");
}

TEST_CASE("concat harmonizes kind to dialogue when either side is dialogue") {
    const auto a = tiny_corpus("docs", Lang::en, Kind::document, {{"1", "T."}});
    const auto b = tiny_corpus("dial", Lang::en, Kind::dialogue, {{"2", "A: hi"}});
    const auto c = concat_corpora(a, b);
    CHECK(c.kind == Kind::dialogue);
    for (const auto& p : c.pairs) CHECK(p.kind == Kind::dialogue);
}

TEST_CASE("reader tolerates CRLF endings") {
    TempDir tmp("corpus");
    testutil::write_file(tmp.file("c.jsonl"), "{\"id\":\"a\",\"text\":\"T.\",\"summary\":\"S.\"}\r\n");
    CHECK(read_corpus(tmp.file("c.jsonl"), Lang::en, Kind::document).size() == 1);
}
