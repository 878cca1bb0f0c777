#pragma once

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/unicode.hpp"

// Rule-based sentence segmentation.
//
// A boundary is placed after terminal punctuation (. ! ? … and full-width
// forms), optionally followed by closing quotes/brackets, when the next
// character is whitespace or end of text. Two guards suppress a period
// boundary: the preceding token is a known abbreviation ("Dr.", "U.S.") or
// the period sits between digits ("3.14"). Segmentation is lossless modulo
// whitespace: characters are never rewritten, but whitespace runs inside a
// sentence collapse to single spaces so sentences stay newline-free
// (dialogue formatting turns each sentence into one transcript line).

namespace dialforge {

struct SegmenterConfig {
    Lang lang = Lang::en;
    std::set<std::string> abbreviations;   // period-bearing tokens that do not end sentences
    std::size_t min_sentence_chars = 1;    // shorter candidates merge into a neighbor

    // English ships with a stock abbreviation list; Korean defaults to none.
    static SegmenterConfig defaults(Lang lang) {
        SegmenterConfig cfg;
        cfg.lang = lang;
        if (lang == Lang::en) cfg.abbreviations = english_abbreviations();
        return cfg;
    }

    // Plain-text list, one token per line; every entry must end with '.'.
    void load_abbreviations(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw Error("cannot open abbreviation list: " + path.string());
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.erase(0, 1);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
            if (line.empty()) continue;
            if (line.back() != '.') {
                throw Error(path.string() + ":" + std::to_string(line_no) +
                            ": abbreviation '" + line + "' must end with '.'");
            }
            abbreviations.insert(line);
        }
    }

    static const std::set<std::string>& english_abbreviations() {
        static const std::set<std::string> list = {
            "Mr.",   "Mrs.",  "Ms.",   "Dr.",   "Prof.", "Rev.",  "Hon.",  "St.",
            "Mt.",   "Ft.",   "Sr.",   "Jr.",   "Gen.",  "Col.",  "Maj.",  "Capt.",
            "Lt.",   "Sgt.",  "Adm.",  "Gov.",  "Sen.",  "Rep.",  "Pres.", "Supt.",
            "Det.",  "Insp.", "e.g.",  "i.e.",  "etc.",  "vs.",   "cf.",   "al.",
            "Inc.",  "Ltd.",  "Co.",   "Corp.", "Ave.",  "Blvd.", "Rd.",   "Dept.",
            "Univ.", "Est.",  "Fig.",  "No.",   "Vol.",  "pp.",   "approx.",
            "Jan.",  "Feb.",  "Mar.",  "Apr.",  "Jun.",  "Jul.",  "Aug.",  "Sep.",
            "Sept.", "Oct.",  "Nov.",  "Dec.",  "U.S.",  "U.K.",  "U.N.",
        };
        return list;
    }
};

namespace detail {

// Token ending at cps[dot] (inclusive), back to the previous whitespace,
// with leading quote/bracket wrappers stripped.
inline std::string token_ending_at(const std::u32string& cps, std::size_t dot) {
    std::size_t start = dot;
    while (start > 0 && !is_space_cp(cps[start - 1])) --start;
    while (start < dot && is_opening_wrapper_cp(cps[start])) ++start;
    return utf8_encode(std::u32string_view(cps).substr(start, dot - start + 1));
}

inline bool period_is_guarded(const std::u32string& cps, std::size_t i,
                              const SegmenterConfig& config) {
    if (cps[i] != U'.' && cps[i] != 0xFF0E) return false;
    // decimal number: digit on both sides
    if (i > 0 && i + 1 < cps.size() && is_ascii_digit(cps[i - 1]) && is_ascii_digit(cps[i + 1])) {
        return true;
    }
    if (!config.abbreviations.empty()) {
        if (config.abbreviations.count(token_ending_at(cps, i))) return true;
    }
    return false;
}

}  // namespace detail

// Splits text into the ordered sentence sequence (a_0 ... a_m).
inline SentenceDoc segment(std::string_view text, const SegmenterConfig& config,
                           std::string source_id = {}) {
    std::vector<std::size_t> offsets;
    const std::u32string cps = utf8_decode(text, &offsets);
    const std::size_t n = cps.size();

    auto skip_ws = [&](std::size_t i) {
        while (i < n && is_space_cp(cps[i])) ++i;
        return i;
    };

    std::size_t start = skip_ws(0);
    if (start == n) throw Error("segment: empty input");

    // Sentence spans as code-point ranges [begin, end).
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::size_t i = start;
    while (i < n) {
        if (is_terminal_punct_cp(cps[i]) && !detail::period_is_guarded(cps, i, config)) {
            std::size_t j = i;
            while (j + 1 < n && is_closing_wrapper_cp(cps[j + 1])) ++j;
            if (j + 1 == n || is_space_cp(cps[j + 1])) {
                spans.emplace_back(start, j + 1);
                start = skip_ws(j + 1);
                i = start;
                continue;
            }
        }
        ++i;
    }
    if (start < n) {
        std::size_t end = n;
        while (end > start && is_space_cp(cps[end - 1])) --end;
        if (end > start) spans.emplace_back(start, end);
    }

    // Merge candidates below the length floor into a neighbor so no text is
    // dropped. The default floor of 1 never triggers this.
    if (config.min_sentence_chars > 1) {
        std::vector<std::pair<std::size_t, std::size_t>> merged;
        for (auto span : spans) {
            if (!merged.empty() && merged.back().second - merged.back().first <
                                       config.min_sentence_chars) {
                merged.back().second = span.second;
            } else {
                merged.push_back(span);
            }
        }
        if (merged.size() > 1 &&
            merged.back().second - merged.back().first < config.min_sentence_chars) {
            auto tail = merged.back();
            merged.pop_back();
            merged.back().second = tail.second;
        }
        spans = std::move(merged);
    }

    SentenceDoc doc;
    doc.source_id = std::move(source_id);
    doc.sentences.reserve(spans.size());
    for (auto [b, e] : spans) {
        std::string sentence;
        sentence.reserve(offsets[e] - offsets[b]);
        std::size_t k = b;
        while (k < e) {
            if (is_space_cp(cps[k])) {
                while (k < e && is_space_cp(cps[k])) ++k;
                if (k < e) sentence += ' ';
                continue;
            }
            const std::size_t run = k;
            while (k < e && !is_space_cp(cps[k])) ++k;
            sentence.append(text, offsets[run], offsets[k] - offsets[run]);
        }
        doc.sentences.push_back(std::move(sentence));
    }
    return doc;
}

}  // namespace dialforge
