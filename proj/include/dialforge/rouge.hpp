#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/extractiveness.hpp"

// Model-free summary similarity: ROUGE-1 and ROUGE-2 (token n-gram overlap,
// clipped multiset counting) and ROUGE-L (token-level longest common
// subsequence). Tokenization splits normalized text on spaces and detaches
// punctuation into standalone tokens; there is no stemming or stopword
// removal so English and Korean are scored identically.

namespace dialforge {

struct RougeScore {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

namespace detail {

inline RougeScore make_score(double overlap, double cand_total, double ref_total) {
    RougeScore s;
    s.precision = cand_total > 0.0 ? overlap / cand_total : 0.0;
    s.recall = ref_total > 0.0 ? overlap / ref_total : 0.0;
    s.f1 = (s.precision + s.recall) > 0.0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    return s;
}

}  // namespace detail

inline std::vector<std::string> rouge_tokens(std::string_view text) {
    const std::u32string cps = detail::normalized_cps(text);
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) tokens.push_back(std::move(cur));
        cur.clear();
    };
    for (char32_t cp : cps) {
        if (cp == U' ') {
            flush();
        } else if (is_tokenizer_punct_cp(cp)) {
            flush();
            std::string punct;
            utf8_append(punct, cp);
            tokens.push_back(std::move(punct));
        } else {
            utf8_append(cur, cp);
        }
    }
    flush();
    return tokens;
}

// Token n-gram overlap, n in {1, 2}. An empty candidate scores zero; a
// reference too short to yield any n-gram also scores zero.
inline RougeScore rouge_n(std::string_view candidate, std::string_view reference,
                          std::size_t n) {
    if (n != 1 && n != 2) throw Error("rouge_n: n must be 1 or 2");
    if (is_blank(reference)) throw Error("rouge_n: empty reference");

    const auto cand = rouge_tokens(candidate);
    const auto ref = rouge_tokens(reference);

    auto count_ngrams = [n](const std::vector<std::string>& toks) {
        std::unordered_map<std::string, std::size_t> counts;
        if (toks.size() >= n) {
            for (std::size_t i = 0; i + n <= toks.size(); ++i) {
                std::string key = toks[i];
                for (std::size_t j = 1; j < n; ++j) {
                    key += '\x1f';
                    key += toks[i + j];
                }
                ++counts[key];
            }
        }
        return counts;
    };

    const auto cand_counts = count_ngrams(cand);
    const auto ref_counts = count_ngrams(ref);
    std::size_t cand_total = cand.size() >= n ? cand.size() - n + 1 : 0;
    std::size_t ref_total = ref.size() >= n ? ref.size() - n + 1 : 0;

    std::size_t overlap = 0;
    for (const auto& [gram, count] : cand_counts) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) overlap += std::min(count, it->second);
    }
    return detail::make_score(static_cast<double>(overlap), static_cast<double>(cand_total),
                              static_cast<double>(ref_total));
}

namespace detail {

inline std::size_t lcs_length(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) return 0;
    std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace detail

// Token-level LCS. precision = LCS/|candidate|, recall = LCS/|reference|.
inline RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
    if (is_blank(reference)) throw Error("rouge_l: empty reference");
    const auto cand = rouge_tokens(candidate);
    const auto ref = rouge_tokens(reference);
    const std::size_t lcs = detail::lcs_length(cand, ref);
    return detail::make_score(static_cast<double>(lcs), static_cast<double>(cand.size()),
                              static_cast<double>(ref.size()));
}

struct PairRouge {
    std::string id;
    RougeScore r1;
    RougeScore r2;
    RougeScore rl;
};

// Corpus-level scores: unweighted mean of per-pair F1, scaled x100 to match
// the conventional reporting scale. Per-pair scores stay on [0, 1].
struct CorpusRouge {
    std::vector<PairRouge> per_pair;
    double r1 = 0.0;
    double r2 = 0.0;
    double rl = 0.0;
};

// Scores candidate summaries against reference summaries, aligned by id.
inline CorpusRouge corpus_rouge(const Corpus& candidates, const Corpus& references) {
    if (candidates.size() != references.size()) {
        throw Error("corpus_rouge: size mismatch (" + std::to_string(candidates.size()) +
                    " candidates vs " + std::to_string(references.size()) + " references)");
    }
    if (candidates.empty()) throw Error("corpus_rouge: empty corpora");
    std::unordered_map<std::string_view, const SummaryPair*> by_id;
    by_id.reserve(references.size());
    for (const auto& r : references.pairs) by_id.emplace(r.id, &r);

    CorpusRouge out;
    out.per_pair.reserve(candidates.size());
    double sum1 = 0.0, sum2 = 0.0, suml = 0.0;
    for (const auto& c : candidates.pairs) {
        auto it = by_id.find(c.id);
        if (it == by_id.end()) {
            throw Error("corpus_rouge: id '" + c.id + "' has no matching reference");
        }
        PairRouge pr;
        pr.id = c.id;
        pr.r1 = rouge_n(c.summary, it->second->summary, 1);
        pr.r2 = rouge_n(c.summary, it->second->summary, 2);
        pr.rl = rouge_l(c.summary, it->second->summary);
        sum1 += pr.r1.f1;
        sum2 += pr.r2.f1;
        suml += pr.rl.f1;
        out.per_pair.push_back(std::move(pr));
    }
    const auto n = static_cast<double>(candidates.size());
    out.r1 = 100.0 * sum1 / n;
    out.r2 = 100.0 * sum2 / n;
    out.rl = 100.0 * suml / n;
    return out;
}

}  // namespace dialforge
