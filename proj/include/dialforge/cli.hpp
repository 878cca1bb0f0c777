#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dialforge/composer.hpp"
#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/extractiveness.hpp"
#include "dialforge/rouge.hpp"
#include "dialforge/segmenter.hpp"
#include "dialforge/transforms.hpp"

// Command implementations behind the dialforge binary: transform, stats,
// score, compose. The binary itself only parses flags into CliConfig and
// dispatches here. All results go to `out`, diagnostics to `err`; the return
// value is the process exit status (0 success, 1 failure, 2 usage).

namespace dialforge::cli {

struct CliConfig {
    std::filesystem::path input;
    std::filesystem::path dialset;
    std::filesystem::path candidates;
    std::filesystem::path references;
    std::filesystem::path output_dir = ".";
    Lang lang = Lang::en;
    std::vector<std::string> variants;
    std::uint64_t seed = 0;
    std::string speaker_label = "Speaker 1";
    std::size_t ngram_size = 3;
    std::filesystem::path abbrev_file;
    std::vector<std::string> regimes;
    std::vector<std::size_t> ks;
    unsigned workers = 0;  // 0 = pick from hardware
};

namespace detail {

inline unsigned effective_workers(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? std::min(hw, 8u) : 1u;
}

inline SegmenterConfig segmenter_for(const CliConfig& config) {
    auto seg = SegmenterConfig::defaults(config.lang);
    if (!config.abbrev_file.empty()) seg.load_abbreviations(config.abbrev_file);
    return seg;
}

inline std::vector<std::string> expand_variants(const std::vector<std::string>& requested) {
    std::vector<std::string> names;
    for (const auto& v : requested) {
        if (v == "all") {
            for (auto n : kVariantNames) names.emplace_back(n);
        } else {
            names.push_back(v);
        }
    }
    // dedupe, preserving first occurrence
    std::vector<std::string> unique;
    for (auto& n : names) {
        if (std::find(unique.begin(), unique.end(), n) == unique.end()) {
            unique.push_back(std::move(n));
        }
    }
    return unique;
}

inline double round2(double v) { return std::round(v * 100.0) / 100.0; }

}  // namespace detail

// transform: one output corpus per requested variant, named
// <input-stem>.<variant>.jsonl under output_dir.
inline int run_transform(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.input.empty()) {
        err << "transform: --input is required\n";
        return 2;
    }
    if (config.variants.empty()) {
        err << "transform: --variants is required (comma list of D,S,O,D+S,D+O,S+O,D+S+O or all)\n";
        return 2;
    }
    const auto names = detail::expand_variants(config.variants);
    for (const auto& name : names) {
        try {
            variant_ops(name);
        } catch (const Error& e) {
            err << "transform: " << e.what() << "\n";
            return 2;
        }
    }

    const auto seg = detail::segmenter_for(config);
    const unsigned workers = detail::effective_workers(config.workers);
    std::filesystem::create_directories(config.output_dir);
    const std::string stem = config.input.stem().string();

    for (const auto& name : names) {
        const auto spec = spec_for_variant(name, config.seed, config.speaker_label,
                                           config.ngram_size);
        CorpusReader reader(config.input, config.lang, Kind::document);
        const auto out_path = config.output_dir / (stem + "." + name + ".jsonl");
        const auto report = transform_stream(reader, out_path, spec, seg, workers);
        out << name << ": " << report.output_pairs << " pairs -> " << out_path.string()
            << " (omit skipped: single-sentence " << report.omit_skipped_single_sentence
            << ", zero-overlap " << report.omit_skipped_zero_overlap << ")\n";
    }
    return 0;
}

// stats: per-pair density/coverage records followed by one aggregate record,
// line-delimited JSON on stdout.
inline int run_stats(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.input.empty()) {
        err << "stats: --input is required\n";
        return 2;
    }
    CorpusReader reader(config.input, config.lang, Kind::document);
    std::vector<double> densities, coverages;
    while (auto p = reader.next()) {
        const auto frags = extractive_fragments(p->summary, p->text);
        const auto s_tokens = dialforge::detail::space_tokens_cps(p->summary).size();
        double d = 0.0;
        for (const auto& f : frags.fragments) {
            d += static_cast<double>(f.length_tokens) * static_cast<double>(f.length_tokens);
        }
        d /= static_cast<double>(s_tokens);
        const double c =
            static_cast<double>(frags.total_tokens()) / static_cast<double>(s_tokens);
        nlohmann::ordered_json j;
        j["id"] = p->id;
        j["density"] = d;
        j["coverage"] = c;
        out << j.dump() << '\n';
        densities.push_back(d);
        coverages.push_back(c);
    }
    if (densities.empty()) throw Error("empty corpus: " + config.input.string());

    auto stats_json = [](const DistStats& s) {
        nlohmann::ordered_json j;
        j["mean"] = s.mean;
        j["q1"] = s.q1;
        j["median"] = s.median;
        j["q3"] = s.q3;
        return j;
    };
    nlohmann::ordered_json agg;
    agg["pairs"] = densities.size();
    agg["density"] = stats_json(dialforge::detail::dist_stats(std::move(densities)));
    agg["coverage"] = stats_json(dialforge::detail::dist_stats(std::move(coverages)));
    out << agg.dump() << '\n';
    return 0;
}

// score: ROUGE-1/2/L of candidate summaries against references, aligned by
// id. Values reported x100 with 2-decimal display.
inline int run_score(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.candidates.empty() || config.references.empty()) {
        err << "score: --candidates and --references are required\n";
        return 2;
    }
    const auto cands = read_corpus(config.candidates, config.lang, Kind::document);
    const auto refs = read_corpus(config.references, config.lang, Kind::document);
    const auto scored = corpus_rouge(cands, refs);

    for (const auto& pr : scored.per_pair) {
        nlohmann::ordered_json j;
        j["id"] = pr.id;
        j["r1"] = detail::round2(100.0 * pr.r1.f1);
        j["r2"] = detail::round2(100.0 * pr.r2.f1);
        j["rl"] = detail::round2(100.0 * pr.rl.f1);
        out << j.dump() << '\n';
    }
    nlohmann::ordered_json agg;
    agg["pairs"] = scored.per_pair.size();
    agg["r1"] = detail::round2(scored.r1);
    agg["r2"] = detail::round2(scored.r2);
    agg["rl"] = detail::round2(scored.rl);
    out << agg.dump() << '\n';

    char line[128];
    std::snprintf(line, sizeof line, "R1 / R2 / RL = %.2f / %.2f / %.2f\n", scored.r1,
                  scored.r2, scored.rl);
    out << line;
    return 0;
}

// compose: one output corpus per requested (variant x regime [x k]) cell,
// named <variant>_<regime>[_k<k>]_s<seed>.jsonl under output_dir.
inline int run_compose(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.dialset.empty()) {
        err << "compose: --dialset is required\n";
        return 2;
    }
    if (config.variants.empty()) {
        err << "compose: --variants is required\n";
        return 2;
    }
    if (config.regimes.empty()) {
        err << "compose: --regime is required (comma list of zero,few,full)\n";
        return 2;
    }
    std::vector<std::string> variants = detail::expand_variants(config.variants);
    for (const auto& v : variants) {
        try {
            validate_compose_variant(v);
        } catch (const Error& e) {
            err << "compose: " << e.what() << "\n";
            return 2;
        }
    }
    std::vector<Regime> regimes;
    for (const auto& r : config.regimes) {
        try {
            regimes.push_back(regime_from_token(r));
        } catch (const Error& e) {
            err << "compose: " << e.what() << "\n";
            return 2;
        }
    }
    const bool wants_few =
        std::find(regimes.begin(), regimes.end(), Regime::few_shot) != regimes.end();
    if (wants_few && config.ks.empty()) {
        err << "compose: few-shot regime requires --k\n";
        return 2;
    }
    const bool needs_docset =
        std::any_of(variants.begin(), variants.end(),
                    [](const std::string& v) { return v != "Original"; });
    if (needs_docset && config.input.empty()) {
        err << "compose: --input (the document corpus) is required for variant "
            << "compositions other than Original\n";
        return 2;
    }

    const auto dialset = read_corpus(config.dialset, config.lang, Kind::dialogue);
    Corpus docset;
    if (needs_docset) docset = read_corpus(config.input, config.lang, Kind::document);

    const auto seg = detail::segmenter_for(config);
    const unsigned workers = detail::effective_workers(config.workers);
    std::filesystem::create_directories(config.output_dir);

    for (const auto& variant : variants) {
        Corpus newdocset;
        if (variant == "Naive") {
            TransformSpec naive;
            naive.seed = config.seed;
            newdocset = transform_corpus(docset, naive, seg, workers).first;
            newdocset.name = docset.name + ".Naive";
        } else if (variant != "Original") {
            const auto spec = spec_for_variant(variant, config.seed, config.speaker_label,
                                               config.ngram_size);
            newdocset = transform_corpus(docset, spec, seg, workers).first;
            newdocset.name = docset.name + "." + variant;
        }
        for (Regime regime : regimes) {
            const bool few = regime == Regime::few_shot;
            const auto& cell_ks = few ? config.ks : std::vector<std::size_t>{0};
            for (std::size_t k : cell_ks) {
                RegimeSpec spec;
                spec.regime = regime;
                spec.k = k;
                spec.seed = config.seed;
                spec.variant = variant;
                const Corpus composed = compose(newdocset, dialset, spec);
                const auto path = config.output_dir / (composed.name + ".jsonl");
                write_corpus(composed, path);
                out << composed.name << ": " << composed.size() << " pairs -> "
                    << path.string() << "\n";
            }
        }
    }
    return 0;
}

}  // namespace dialforge::cli
