#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "dialforge/corpus.hpp"

namespace testutil {

// Scratch directory removed on scope exit.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("dialforge_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Small English-ish word pool for synthetic text.
inline const std::vector<std::string>& word_pool() {
    static const std::vector<std::string> pool = {
        "the",    "cat",   "sat",    "on",     "a",      "mat",    "today",  "dogs",
        "bark",   "loud",  "rain",   "fell",   "all",    "night",  "market", "rose",
        "sharply","gains", "nobody", "saw",    "it",     "coming", "team",   "won",
        "final",  "match", "crowd",  "cheered","wildly", "river",  "flows",  "north",
        "old",    "bridge","closed", "for",    "repairs","mayor",  "spoke",  "briefly",
    };
    return pool;
}

inline std::string random_sentence(std::mt19937_64& rng, std::size_t max_chars = 60) {
    const auto& pool = word_pool();
    std::string s;
    const std::size_t words = 3 + rng() % 8;
    for (std::size_t i = 0; i < words; ++i) {
        const auto& w = pool[rng() % pool.size()];
        if (!s.empty()) {
            if (s.size() + 1 + w.size() + 1 > max_chars) break;
            s += ' ';
        }
        s += w;
    }
    s += '.';
    return s;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t min_sentences,
                               std::size_t max_sentences, std::size_t max_chars = 60) {
    const std::size_t count = min_sentences + rng() % (max_sentences - min_sentences + 1);
    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
        if (!text.empty()) text += ' ';
        text += random_sentence(rng, max_chars);
    }
    // soft wraps and ragged spacing, as found in real corpora
    for (auto& ch : text) {
        if (ch == ' ' && rng() % 10 == 0) ch = '\n';
    }
    return text;
}

inline dialforge::Corpus synthetic_docset(std::size_t pairs, std::uint64_t seed,
                                          const std::string& name = "synthetic") {
    std::mt19937_64 rng(seed);
    dialforge::Corpus corpus;
    corpus.name = name;
    corpus.lang = dialforge::Lang::en;
    corpus.kind = dialforge::Kind::document;
    corpus.pairs.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i) {
        dialforge::SummaryPair p;
        p.id = name + "-" + std::to_string(i);
        p.text = random_text(rng, 2, 6);
        p.summary = random_sentence(rng);
        corpus.pairs.push_back(std::move(p));
    }
    return corpus;
}

}  // namespace testutil
