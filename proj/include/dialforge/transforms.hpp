#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/extractiveness.hpp"
#include "dialforge/random.hpp"
#include "dialforge/segmenter.hpp"

// The three sentence-level edits that turn document summarization data into
// dialogue-summarization training data, and their compositions:
//
//   omit      drop the sentence sharing the most distinct character 3-grams
//             with the reference summary
//   shuffle   seeded uniform permutation of the sentence order
//   dialogue  prefix every sentence with a pseudo speaker and join with
//             newlines, transcript style
//
// Composition order is fixed: omit, then shuffle, then dialogue. Content
// removal happens before reordering, and formatting comes last so speaker
// labels never leak into the 3-gram scoring. The empty composition is the
// naive transform: the text is rebuilt from its own sentences unchanged.
// Every transform keeps the reference summary as is.

namespace dialforge {

enum class TransformOp { omit, shuffle, dialogue };

struct TransformSpec {
    std::vector<TransformOp> ops;        // applied in order; empty = naive
    std::uint64_t seed = 0;              // base seed; per-record seeds derive from it
    std::string speaker_label = "Speaker 1";
    std::size_t ngram_size = 3;          // character n-gram size for omit scoring
};

// Corpus-level accounting. Transforms never drop records: a record whose
// omission would be degenerate passes through unchanged and is counted.
struct TransformReport {
    std::size_t input_pairs = 0;
    std::size_t output_pairs = 0;
    std::size_t omit_skipped_single_sentence = 0;
    std::size_t omit_skipped_zero_overlap = 0;
};

// Canonical variant vocabulary, also used for CLI flags and file suffixes.
inline constexpr std::array<std::string_view, 7> kVariantNames = {
    "D", "S", "O", "D+S", "D+O", "S+O", "D+S+O",
};

inline void validate_spec(const TransformSpec& spec) {
    bool seen[3] = {false, false, false};
    for (std::size_t i = 0; i < spec.ops.size(); ++i) {
        const auto idx = static_cast<std::size_t>(spec.ops[i]);
        if (seen[idx]) throw Error("transform spec: duplicate op");
        seen[idx] = true;
        if (spec.ops[i] == TransformOp::dialogue && i + 1 != spec.ops.size()) {
            throw Error("transform spec: dialogue formatting must be the final op");
        }
    }
    if (spec.ngram_size == 0) throw Error("transform spec: ngram_size must be >= 1");
}

// Ops for one of the seven canonical variant names, in the fixed
// omit -> shuffle -> dialogue application order.
inline std::vector<TransformOp> variant_ops(std::string_view name) {
    for (auto known : kVariantNames) {
        if (name != known) continue;
        std::vector<TransformOp> ops;
        if (name.find('O') != std::string_view::npos) ops.push_back(TransformOp::omit);
        if (name.find('S') != std::string_view::npos) ops.push_back(TransformOp::shuffle);
        if (name.find('D') != std::string_view::npos) ops.push_back(TransformOp::dialogue);
        return ops;
    }
    throw Error("unknown variant '" + std::string(name) +
                "' (expected one of D, S, O, D+S, D+O, S+O, D+S+O)");
}

inline TransformSpec spec_for_variant(std::string_view name, std::uint64_t seed,
                                      std::string_view speaker_label = "Speaker 1",
                                      std::size_t ngram_size = 3) {
    TransformSpec spec;
    spec.ops = variant_ops(name);
    spec.seed = seed;
    spec.speaker_label = speaker_label;
    spec.ngram_size = ngram_size;
    return spec;
}

// "Speaker 1: sentence" per line, newline-joined.
inline std::string to_dialogue_format(const SentenceDoc& doc,
                                      std::string_view speaker_label = "Speaker 1") {
    if (doc.sentences.empty()) throw Error("to_dialogue_format: empty document");
    std::string out;
    std::size_t total = 0;
    for (const auto& s : doc.sentences) total += s.size() + speaker_label.size() + 3;
    out.reserve(total);
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        if (i) out += '\n';
        out += speaker_label;
        out += ": ";
        out += doc.sentences[i];
    }
    return out;
}

// Seeded uniform permutation of the sentences. Same (doc, seed) in, same
// order out, on every platform.
inline SentenceDoc shuffle_sentences(const SentenceDoc& doc, std::uint64_t seed) {
    if (doc.sentences.empty()) throw Error("shuffle_sentences: empty document");
    SentenceDoc out = doc;
    seeded_shuffle(out.sentences, seed);
    return out;
}

// Removes the sentence with the highest distinct character n-gram overlap
// with the reference (ties to the lowest index) and reports its index.
// Single-sentence docs and docs with zero overlap pass through unchanged.
inline std::pair<SentenceDoc, std::optional<std::size_t>> omit_most_extractive(
    const SentenceDoc& doc, std::string_view reference, std::size_t ngram_size = 3) {
    if (doc.sentences.empty()) throw Error("omit_most_extractive: empty document");
    if (is_blank(reference)) throw Error("omit_most_extractive: empty reference");
    if (ngram_size == 0) throw Error("omit_most_extractive: ngram_size must be >= 1");
    if (doc.sentences.size() < 2) return {doc, std::nullopt};

    const auto ref_grams =
        detail::ngram_set(detail::normalized_cps(reference), ngram_size);
    std::size_t best_index = 0;
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        const auto grams =
            detail::ngram_set(detail::normalized_cps(doc.sentences[i]), ngram_size);
        const std::size_t score = detail::intersection_size(grams, ref_grams);
        if (score > best_score) {
            best_score = score;
            best_index = i;
        }
    }
    if (best_score == 0) return {doc, std::nullopt};

    SentenceDoc out;
    out.source_id = doc.source_id;
    out.sentences.reserve(doc.sentences.size() - 1);
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        if (i != best_index) out.sentences.push_back(doc.sentences[i]);
    }
    return {std::move(out), best_index};
}

namespace detail {

struct ApplyOutcome {
    SummaryPair pair;
    bool omit_skipped_single = false;
    bool omit_skipped_zero = false;
};

inline ApplyOutcome apply_spec_ex(const SummaryPair& input, const TransformSpec& spec,
                                  const SegmenterConfig& seg_config) {
    if (input.kind != Kind::document) {
        throw Error("apply_spec: record '" + input.id + "' is not a document");
    }
    ApplyOutcome outcome;
    SentenceDoc doc = segment(input.text, seg_config, input.id);
    bool dialogue = false;
    for (TransformOp op : spec.ops) {
        switch (op) {
            case TransformOp::omit: {
                auto [trimmed, index] =
                    omit_most_extractive(doc, input.summary, spec.ngram_size);
                if (!index) {
                    if (doc.sentences.size() < 2) outcome.omit_skipped_single = true;
                    else outcome.omit_skipped_zero = true;
                }
                doc = std::move(trimmed);
                break;
            }
            case TransformOp::shuffle:
                doc = shuffle_sentences(doc, record_seed(spec.seed, input.id));
                break;
            case TransformOp::dialogue:
                dialogue = true;
                break;
        }
    }

    SummaryPair out;
    out.id = input.id;
    out.summary = input.summary;
    out.lang = input.lang;
    if (dialogue) {
        out.text = to_dialogue_format(doc, spec.speaker_label);
        out.kind = Kind::dialogue;
    } else {
        std::string joined;
        for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
            if (i) joined += ' ';
            joined += doc.sentences[i];
        }
        out.text = std::move(joined);
        out.kind = Kind::document;
    }
    outcome.pair = std::move(out);
    return outcome;
}

// Index-parallel loop with deterministic output placement. fn(i) must only
// touch slot i of shared state.
template <typename Fn>
inline void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    constexpr std::size_t kChunk = 64;
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t begin = cursor.fetch_add(kChunk);
            if (begin >= n) return;
            const std::size_t end = std::min(n, begin + kChunk);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                cursor.store(n);
                return;
            }
        }
    };
    const unsigned count = static_cast<unsigned>(
        std::min<std::size_t>(workers, (n + kChunk - 1) / kChunk));
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// Applies one named composition to a single record. The transformed text is
// paired with the untouched reference summary; kind flips to dialogue only
// when dialogue formatting is part of the spec. The shuffle seed derives
// from (spec.seed, record id), so results do not depend on record position.
inline SummaryPair apply_spec(const SummaryPair& input, const TransformSpec& spec,
                              const SegmenterConfig& seg_config) {
    validate_spec(spec);
    return detail::apply_spec_ex(input, spec, seg_config).pair;
}

// Applies a spec across a corpus, optionally fanning out across worker
// threads. Output is identical for any worker count.
inline std::pair<Corpus, TransformReport> transform_corpus(
    const Corpus& docset, const TransformSpec& spec, const SegmenterConfig& seg_config,
    unsigned workers = 1) {
    validate_spec(spec);
    if (docset.kind != Kind::document) {
        throw Error("transform_corpus: corpus '" + docset.name + "' is not a document corpus");
    }
    bool dialogue = false;
    for (auto op : spec.ops) dialogue = dialogue || op == TransformOp::dialogue;

    Corpus out;
    out.name = docset.name;
    out.lang = docset.lang;
    out.kind = dialogue ? Kind::dialogue : Kind::document;
    out.pairs.resize(docset.size());

    std::atomic<std::size_t> skipped_single{0}, skipped_zero{0};
    detail::parallel_for(docset.size(), workers, [&](std::size_t i) {
        auto outcome = detail::apply_spec_ex(docset.pairs[i], spec, seg_config);
        if (outcome.omit_skipped_single) skipped_single.fetch_add(1);
        if (outcome.omit_skipped_zero) skipped_zero.fetch_add(1);
        out.pairs[i] = std::move(outcome.pair);
    });

    TransformReport report;
    report.input_pairs = docset.size();
    report.output_pairs = out.pairs.size();
    report.omit_skipped_single_sentence = skipped_single.load();
    report.omit_skipped_zero_overlap = skipped_zero.load();
    return {std::move(out), report};
}

// Streaming variant: records flow from reader to a fresh file at out_path in
// bounded chunks, so memory stays flat on arbitrarily large corpora. The
// output is byte-identical to writing transform_corpus's result.
inline TransformReport transform_stream(CorpusReader& reader,
                                        const std::filesystem::path& out_path,
                                        const TransformSpec& spec,
                                        const SegmenterConfig& seg_config,
                                        unsigned workers = 1, std::size_t chunk_size = 4096) {
    validate_spec(spec);
    if (chunk_size == 0) chunk_size = 1;
    TransformReport report;
    std::optional<CorpusWriter> writer;

    try {
        std::vector<SummaryPair> chunk;
        std::vector<detail::ApplyOutcome> results;
        chunk.reserve(chunk_size);
        for (;;) {
            chunk.clear();
            while (chunk.size() < chunk_size) {
                auto p = reader.next();
                if (!p) break;
                chunk.push_back(std::move(*p));
            }
            if (chunk.empty()) break;
            results.assign(chunk.size(), {});
            detail::parallel_for(chunk.size(), workers, [&](std::size_t i) {
                results[i] = detail::apply_spec_ex(chunk[i], spec, seg_config);
            });
            if (!writer) writer.emplace(out_path);
            for (auto& r : results) {
                if (r.omit_skipped_single) ++report.omit_skipped_single_sentence;
                if (r.omit_skipped_zero) ++report.omit_skipped_zero_overlap;
                writer->write(r.pair);
            }
            report.input_pairs += chunk.size();
        }
    } catch (...) {
        // do not leave a partial output file behind
        if (writer) {
            writer->close();
            std::error_code ec;
            std::filesystem::remove(out_path, ec);
        }
        throw;
    }
    if (!writer) throw Error("empty corpus: nothing to transform");
    writer->close();
    report.output_pairs = writer->count();
    return report;
}

// The seven NewDocSet variants of one document corpus, keyed by canonical
// name. Each output corpus has exactly one record per input record.
inline std::map<std::string, Corpus> generate_variants(
    const Corpus& docset, std::uint64_t base_seed, const SegmenterConfig& seg_config,
    std::string_view speaker_label = "Speaker 1", std::size_t ngram_size = 3,
    unsigned workers = 1) {
    std::map<std::string, Corpus> variants;
    for (auto name : kVariantNames) {
        auto spec = spec_for_variant(name, base_seed, speaker_label, ngram_size);
        auto [corpus, report] = transform_corpus(docset, spec, seg_config, workers);
        (void)report;
        corpus.name = docset.name + "." + std::string(name);
        variants.emplace(std::string(name), std::move(corpus));
    }
    return variants;
}

inline std::map<std::string, Corpus> generate_variants(const Corpus& docset,
                                                       std::uint64_t base_seed) {
    return generate_variants(docset, base_seed, SegmenterConfig::defaults(docset.lang));
}

}  // namespace dialforge
