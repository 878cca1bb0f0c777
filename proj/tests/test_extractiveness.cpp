#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dialforge/extractiveness.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace dialforge;

namespace {

std::string random_ascii(std::mt19937_64& rng, std::size_t max_len) {
    static const std::string chars = "abcdefgh THE.cat";
    std::string s;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) s += chars[rng() % chars.size()];
    return s;
}

std::string join_tokens(const std::vector<std::string>& toks) {
    std::string s;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) s += ' ';
        s += toks[i];
    }
    return s;
}

std::vector<std::string> random_tokens(std::mt19937_64& rng, std::size_t min_len,
                                       std::size_t max_len) {
    static const std::vector<std::string> pool = {"the", "cat", "sat", "mat", "dog", "ran"};
    std::vector<std::string> toks;
    const std::size_t len = min_len + rng() % (max_len - min_len + 1);
    for (std::size_t i = 0; i < len; ++i) toks.push_back(pool[rng() % pool.size()]);
    return toks;
}

}  // namespace

TEST_CASE("normalize folds case and collapses whitespace") {
    CHECK(normalize("AB  cd").chars == "ab cd");
    CHECK(normalize("  Hello\tWorld \n").chars == "hello world");
    CHECK(normalize("안녕  하세요").chars == "안녕 하세요");
    CHECK(normalize("   ").chars.empty());
}

TEST_CASE("normalized text has no runs or foldable uppercase") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 200; ++iter) {
        const auto n = normalize(random_ascii(rng, 40)).chars;
        CHECK(n.find("  ") == std::string::npos);
        for (char c : n) {
            CHECK_FALSE((c >= 'A' && c <= 'Z'));
        }
        if (!n.empty()) {
            CHECK(n.front() != ' ');
            CHECK(n.back() != ' ');
        }
    }
}

TEST_CASE("char_ngrams enumerates distinct substrings") {
    CHECK(char_ngrams("abcab", 3) == std::set<std::string>{"abc", "bca", "cab"});
    CHECK(char_ngrams("ab", 3).empty());
    CHECK(char_ngrams("AB  cd", 2) == std::set<std::string>{"ab", "b ", " c", "cd"});
    CHECK_THROWS_AS(char_ngrams("abc", 0), Error);
}

TEST_CASE("char_ngrams works over code points, not bytes") {
    // three Hangul syllables -> exactly one 3-gram
    const auto grams = char_ngrams("안녕하", 3);
    REQUIRE(grams.size() == 1);
    CHECK(*grams.begin() == "안녕하");
}

TEST_CASE("shared_ngram_count worked examples") {
    CHECK(shared_ngram_count("abc", "abc", 3) == 1);
    CHECK(shared_ngram_count("abc", "xyz", 3) == 0);
    // frozen from the brute-force oracle: { ca, cat, at , t s, sa}
    CHECK(shared_ngram_count("the cat sat", "a cat sam", 3) == 5);
    CHECK(shared_ngram_count("the cat sat", "a cat sam", 3) ==
          oracle::shared_ngram_count("the cat sat", "a cat sam", 3));
}

TEST_CASE("shared_ngram_count matches the oracle on random input") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 300; ++iter) {
        const auto a = random_ascii(rng, 30);
        const auto b = random_ascii(rng, 30);
        const std::size_t n = 1 + rng() % 4;
        CHECK(shared_ngram_count(a, b, n) == oracle::shared_ngram_count(a, b, n));
        CHECK(shared_ngram_count(a, b, n) == shared_ngram_count(b, a, n));
    }
}

TEST_CASE("char_ngrams cardinality bound") {
    std::mt19937_64 rng(44);
    for (int iter = 0; iter < 100; ++iter) {
        const auto s = random_ascii(rng, 25);
        const std::size_t n = 1 + rng() % 4;
        const auto norm_len = normalize(s).chars.size();  // ascii input: bytes == cps
        const auto grams = char_ngrams(s, n);
        if (norm_len >= n) {
            CHECK(grams.size() <= norm_len - n + 1);
        } else {
            CHECK(grams.empty());
        }
    }
}

TEST_CASE("fragments: verbatim copy is one full-length fragment") {
    const auto f = extractive_fragments("the cat sat on a mat", "the cat sat on a mat");
    REQUIRE(f.fragments.size() == 1);
    CHECK(f.fragments[0] == Fragment{0, 0, 6});
}

TEST_CASE("fragments: fully novel summary has none") {
    CHECK(extractive_fragments("alpha beta", "gamma delta epsilon").fragments.empty());
}

TEST_CASE("fragments: worked example") {
    const auto f = extractive_fragments("the cat sat quietly", "the cat sat on the mat");
    REQUIRE(f.fragments.size() == 1);
    CHECK(f.fragments[0] == Fragment{0, 0, 3});
}

TEST_CASE("fragments match the exhaustive oracle") {
    std::mt19937_64 rng(45);
    for (int iter = 0; iter < 400; ++iter) {
        const auto sum_toks = random_tokens(rng, 1, 7);
        const auto src_toks = random_tokens(rng, 1, 9);
        const auto got = extractive_fragments(join_tokens(sum_toks), join_tokens(src_toks));
        const auto want = oracle::fragments(sum_toks, src_toks);
        REQUIRE(got.fragments.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) {
            CHECK(got.fragments[i].summary_offset == want[i].summary_offset);
            CHECK(got.fragments[i].source_offset == want[i].source_offset);
            CHECK(got.fragments[i].length_tokens == want[i].length);
        }
        // every fragment is a verbatim token match in both strings
        for (const auto& fr : got.fragments) {
            for (std::size_t k = 0; k < fr.length_tokens; ++k) {
                CHECK(sum_toks[fr.summary_offset + k] == src_toks[fr.source_offset + k]);
            }
        }
    }
}

TEST_CASE("density and coverage worked examples") {
    CHECK(density("the cat sat on a mat", "the cat sat on a mat") == 6.0);
    CHECK(coverage("the cat sat on a mat", "the cat sat on a mat") == 1.0);
    CHECK(density("alpha beta", "gamma delta") == 0.0);
    CHECK(coverage("alpha beta", "gamma delta") == 0.0);
    CHECK(density("the cat sat quietly", "the cat sat on the mat") ==
          Catch::Approx(2.25).epsilon(1e-12));
    CHECK(coverage("the cat sat quietly", "the cat sat on the mat") ==
          Catch::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("density(s, s) equals token count, coverage 1") {
    std::mt19937_64 rng(46);
    for (int iter = 0; iter < 100; ++iter) {
        const auto toks = random_tokens(rng, 1, 10);
        const auto s = join_tokens(toks);
        CHECK(density(s, s) == Catch::Approx(static_cast<double>(toks.size())));
        CHECK(coverage(s, s) == Catch::Approx(1.0));
    }
}

TEST_CASE("coverage stays in [0,1]; density bounded by coverage times max fragment") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 200; ++iter) {
        const auto sum = join_tokens(random_tokens(rng, 1, 8));
        const auto src = join_tokens(random_tokens(rng, 1, 10));
        const double c = coverage(sum, src);
        const double d = density(sum, src);
        const auto frags = extractive_fragments(sum, src);
        CHECK(c >= 0.0);
        CHECK(c <= 1.0 + 1e-12);
        CHECK(d <= c * static_cast<double>(std::max<std::size_t>(frags.max_length(), 1)) +
                       1e-12);
    }
}

TEST_CASE("empty inputs are errors") {
    CHECK_THROWS_AS(extractive_fragments("", "source"), Error);
    CHECK_THROWS_AS(extractive_fragments("summary", "  "), Error);
    CHECK_THROWS_AS(density("", "x"), Error);
}

TEST_CASE("corpus extractiveness aggregates per-pair values") {
    Corpus c;
    c.name = "mix";
    c.pairs.push_back({"copy", "the cat sat on a mat", "the cat sat on a mat", Lang::en,
                       Kind::document});
    c.pairs.push_back({"novel", "gamma delta epsilon", "alpha beta", Lang::en,
                       Kind::document});
    const auto stats = corpus_extractiveness(c);
    REQUIRE(stats.per_pair.size() == 2);
    CHECK(stats.per_pair[0].density == Catch::Approx(6.0));
    CHECK(stats.per_pair[0].coverage == Catch::Approx(1.0));
    CHECK(stats.per_pair[1].density == Catch::Approx(0.0));
    CHECK(stats.density_stats.mean == Catch::Approx(3.0));
    CHECK(stats.coverage_stats.mean == Catch::Approx(0.5));
    CHECK(stats.density_stats.median == Catch::Approx(3.0));
    CHECK(stats.coverage_stats.count == 2);
}

TEST_CASE("corpus extractiveness on a single verbatim pair") {
    Corpus c;
    c.pairs.push_back({"a", "one two three four", "one two three four", Lang::en,
                       Kind::document});
    const auto stats = corpus_extractiveness(c);
    CHECK(stats.density_stats.mean == Catch::Approx(4.0));
    CHECK(stats.coverage_stats.mean == Catch::Approx(1.0));
    CHECK(stats.density_stats.q1 == Catch::Approx(4.0));
    CHECK(stats.density_stats.q3 == Catch::Approx(4.0));
}

TEST_CASE("corpus extractiveness rejects an empty corpus") {
    CHECK_THROWS_AS(corpus_extractiveness(Corpus{}), Error);
}
