#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/unicode.hpp"

// Character n-gram machinery shared with the omission transform, plus
// Extractive Fragment Density and Coverage for profiling how much of a
// reference summary is copied verbatim from its source.
//
// One normalization underlies every metric here: case fold, collapse
// whitespace runs to single spaces, strip the ends. Input is assumed NFC.

namespace dialforge {

// Case-folded, whitespace-collapsed, edge-trimmed text.
struct NormalizedText {
    std::string chars;
};

namespace detail {

inline std::u32string normalized_cps(std::string_view text) {
    std::u32string out;
    out.reserve(text.size() / 2);
    bool pending_space = false;
    for (char32_t cp : utf8_decode(text)) {
        if (is_space_cp(cp)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(U' ');
            pending_space = false;
        }
        out.push_back(fold_case_cp(cp));
    }
    return out;
}

inline std::unordered_set<std::u32string> ngram_set(const std::u32string& cps, std::size_t n) {
    std::unordered_set<std::u32string> grams;
    if (cps.size() >= n) {
        grams.reserve(cps.size() - n + 1);
        for (std::size_t i = 0; i + n <= cps.size(); ++i) grams.insert(cps.substr(i, n));
    }
    return grams;
}

inline std::size_t intersection_size(const std::unordered_set<std::u32string>& a,
                                     const std::unordered_set<std::u32string>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::size_t shared = 0;
    for (const auto& g : small) shared += large.count(g);
    return shared;
}

// Tokens of normalized text: maximal runs between single spaces.
inline std::vector<std::u32string> space_tokens_cps(std::string_view text) {
    const std::u32string cps = normalized_cps(text);
    std::vector<std::u32string> tokens;
    std::u32string cur;
    for (char32_t cp : cps) {
        if (cp == U' ') {
            if (!cur.empty()) tokens.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(cp);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

}  // namespace detail

inline NormalizedText normalize(std::string_view text) {
    return NormalizedText{utf8_encode(detail::normalized_cps(text))};
}

// All distinct length-n code-point substrings of the normalized text.
inline std::set<std::string> char_ngrams(std::string_view text, std::size_t n) {
    if (n == 0) throw Error("char_ngrams: n must be >= 1");
    const std::u32string cps = detail::normalized_cps(text);
    std::set<std::string> grams;
    if (cps.size() >= n) {
        for (std::size_t i = 0; i + n <= cps.size(); ++i) {
            grams.insert(utf8_encode(std::u32string_view(cps).substr(i, n)));
        }
    }
    return grams;
}

// |char_ngrams(a, n) ∩ char_ngrams(b, n)|, over distinct n-grams.
inline std::size_t shared_ngram_count(std::string_view a, std::string_view b, std::size_t n) {
    if (n == 0) throw Error("shared_ngram_count: n must be >= 1");
    return detail::intersection_size(detail::ngram_set(detail::normalized_cps(a), n),
                                     detail::ngram_set(detail::normalized_cps(b), n));
}

// One copied span: summary tokens [summary_offset, summary_offset+length)
// occur verbatim in the source at source_offset.
struct Fragment {
    std::size_t summary_offset = 0;
    std::size_t source_offset = 0;
    std::size_t length_tokens = 0;

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct FragmentSet {
    std::vector<Fragment> fragments;

    std::size_t total_tokens() const {
        std::size_t t = 0;
        for (const auto& f : fragments) t += f.length_tokens;
        return t;
    }
    std::size_t max_length() const {
        std::size_t m = 0;
        for (const auto& f : fragments) m = std::max(m, f.length_tokens);
        return m;
    }
};

// Greedy left-to-right scan over summary tokens: at every position take the
// longest span that also occurs contiguously in the source (earliest source
// offset on ties), emit it as a fragment and jump past it; unmatched tokens
// advance by one.
inline FragmentSet extractive_fragments(std::string_view summary, std::string_view source) {
    const auto sum = detail::space_tokens_cps(summary);
    const auto src = detail::space_tokens_cps(source);
    if (sum.empty()) throw Error("extractive_fragments: empty summary");
    if (src.empty()) throw Error("extractive_fragments: empty source");

    FragmentSet out;
    std::size_t i = 0;
    while (i < sum.size()) {
        std::size_t best_len = 0;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < src.size(); ++j) {
            if (src[j] != sum[i]) continue;
            std::size_t k = 0;
            while (i + k < sum.size() && j + k < src.size() && sum[i + k] == src[j + k]) ++k;
            if (k > best_len) {
                best_len = k;
                best_j = j;
            }
        }
        if (best_len > 0) {
            out.fragments.push_back({i, best_j, best_len});
            i += best_len;
        } else {
            ++i;
        }
    }
    return out;
}

// (1/|S|) * sum of |f|^2 over fragments; |S| = summary token count.
inline double density(std::string_view summary, std::string_view source) {
    const auto frags = extractive_fragments(summary, source);
    const std::size_t s_tokens = detail::space_tokens_cps(summary).size();
    double acc = 0.0;
    for (const auto& f : frags.fragments) {
        acc += static_cast<double>(f.length_tokens) * static_cast<double>(f.length_tokens);
    }
    return acc / static_cast<double>(s_tokens);
}

// (1/|S|) * sum of |f| over fragments; in [0, 1].
inline double coverage(std::string_view summary, std::string_view source) {
    const auto frags = extractive_fragments(summary, source);
    const std::size_t s_tokens = detail::space_tokens_cps(summary).size();
    return static_cast<double>(frags.total_tokens()) / static_cast<double>(s_tokens);
}

struct PairExtractiveness {
    std::string id;
    double density = 0.0;
    double coverage = 0.0;
};

// Distribution summary of one metric: mean, median, quartiles by linear
// interpolation on the sorted values.
struct DistStats {
    std::size_t count = 0;
    double mean = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
};

namespace detail {

inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    if (sorted.size() == 1) return sorted.front();
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = static_cast<std::size_t>(std::ceil(h));
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline DistStats dist_stats(std::vector<double> values) {
    DistStats s;
    s.count = values.size();
    if (values.empty()) return s;
    double total = 0.0;
    for (double v : values) total += v;
    s.mean = total / static_cast<double>(values.size());
    std::sort(values.begin(), values.end());
    s.q1 = quantile_sorted(values, 0.25);
    s.median = quantile_sorted(values, 0.5);
    s.q3 = quantile_sorted(values, 0.75);
    return s;
}

}  // namespace detail

struct CorpusExtractiveness {
    std::vector<PairExtractiveness> per_pair;
    DistStats density_stats;
    DistStats coverage_stats;
};

// Per-pair density/coverage of reference summaries against their sources,
// plus aggregate statistics.
inline CorpusExtractiveness corpus_extractiveness(const Corpus& corpus) {
    if (corpus.empty()) throw Error("corpus_extractiveness: empty corpus");
    CorpusExtractiveness out;
    out.per_pair.reserve(corpus.size());
    std::vector<double> densities, coverages;
    densities.reserve(corpus.size());
    coverages.reserve(corpus.size());
    for (const auto& p : corpus.pairs) {
        const auto frags = extractive_fragments(p.summary, p.text);
        const auto s_tokens = detail::space_tokens_cps(p.summary).size();
        double d = 0.0;
        for (const auto& f : frags.fragments) {
            d += static_cast<double>(f.length_tokens) * static_cast<double>(f.length_tokens);
        }
        d /= static_cast<double>(s_tokens);
        const double c =
            static_cast<double>(frags.total_tokens()) / static_cast<double>(s_tokens);
        out.per_pair.push_back({p.id, d, c});
        densities.push_back(d);
        coverages.push_back(c);
    }
    out.density_stats = detail::dist_stats(std::move(densities));
    out.coverage_stats = detail::dist_stats(std::move(coverages));
    return out;
}

}  // namespace dialforge
