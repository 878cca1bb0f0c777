// dialforge command-line front end.
//
//   dialforge transform --input docs.jsonl --variants all --seed 7 --output-dir out/
//   dialforge stats     --input docs.jsonl
//   dialforge score     --candidates sys.jsonl --references gold.jsonl
//   dialforge compose   --input docs.jsonl --dialset dial.jsonl
//                       --variants D+O --regime few --k 100 --seed 7

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dialforge/cli.hpp"

namespace {

void add_common_flags(CLI::App* cmd, dialforge::cli::CliConfig& config, std::string& lang) {
    cmd->add_option("--lang", lang, "Corpus language: en or ko")->default_val("en");
    cmd->add_option("--seed", config.seed, "Base seed for all randomness")
        ->envname("DIALFORGE_SEED");
    cmd->add_option("--workers", config.workers,
                    "Worker threads for per-record work (0 = auto)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dialforge: adapt document summarization corpora for dialogue "
                 "summarization training"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read flags from an INI file (command line overrides)");

    dialforge::cli::CliConfig config;
    std::string lang = "en";

    std::filesystem::path positional_input;

    auto* transform = app.add_subcommand(
        "transform", "Generate NewDocSet variants (D, S, O and compositions)");
    transform->add_option("--input", config.input, "Document corpus (jsonl)");
    transform->add_option("corpus", positional_input, "Document corpus (jsonl)");
    transform->add_option("--output-dir", config.output_dir, "Output directory");
    transform->add_option("--variants", config.variants,
                          "Comma list of D,S,O,D+S,D+O,S+O,D+S+O, or all")
        ->delimiter(',')
        ->required();
    transform->add_option("--speaker-label", config.speaker_label,
                          "Pseudo speaker prefix for dialogue formatting");
    transform->add_option("--ngram-size", config.ngram_size,
                          "Character n-gram size for omission scoring");
    transform->add_option("--abbrev-file", config.abbrev_file,
                          "Extra sentence-segmenter abbreviations, one per line");
    add_common_flags(transform, config, lang);

    auto* stats = app.add_subcommand(
        "stats", "Extractive fragment density/coverage of reference summaries");
    stats->add_option("--input", config.input, "Corpus to profile (jsonl)");
    stats->add_option("corpus", positional_input, "Corpus to profile (jsonl)");
    add_common_flags(stats, config, lang);

    auto* score = app.add_subcommand("score", "ROUGE-1/2/L of candidates vs references");
    score->add_option("--candidates", config.candidates, "Candidate corpus (jsonl)")
        ->required();
    score->add_option("--references", config.references, "Reference corpus (jsonl)")
        ->required();
    add_common_flags(score, config, lang);

    auto* compose = app.add_subcommand(
        "compose", "Build zero/few/full training mixes of NewDocSet and DialSet");
    compose->footer("Output files are named <variant>_<regime>[_k<k>]_s<seed>.jsonl, "
                    "e.g. D+O_few_k100_s7.jsonl.");
    compose->add_option("--input", config.input, "Document corpus (jsonl)");
    compose->add_option("--dialset", config.dialset, "Dialogue corpus (jsonl)")->required();
    compose->add_option("--output-dir", config.output_dir, "Output directory");
    compose->add_option("--variants", config.variants,
                        "Comma list of Original,Naive,D,S,O,D+S,D+O,S+O,D+S+O, or all")
        ->delimiter(',')
        ->required();
    compose->add_option("--regime", config.regimes, "Comma list of zero,few,full")
        ->delimiter(',')
        ->required();
    compose->add_option("--k", config.ks, "Few-shot sample sizes (comma list)")
        ->delimiter(',');
    compose->add_option("--speaker-label", config.speaker_label,
                        "Pseudo speaker prefix for dialogue formatting");
    compose->add_option("--ngram-size", config.ngram_size,
                        "Character n-gram size for omission scoring");
    compose->add_option("--abbrev-file", config.abbrev_file,
                        "Extra sentence-segmenter abbreviations, one per line");
    add_common_flags(compose, config, lang);

    CLI11_PARSE(app, argc, argv);

    try {
        config.lang = dialforge::lang_from_string(lang);
        if (config.input.empty()) config.input = positional_input;
        if (transform->parsed()) {
            return dialforge::cli::run_transform(config, std::cout, std::cerr);
        }
        if (stats->parsed()) return dialforge::cli::run_stats(config, std::cout, std::cerr);
        if (score->parsed()) return dialforge::cli::run_score(config, std::cout, std::cerr);
        if (compose->parsed()) {
            return dialforge::cli::run_compose(config, std::cout, std::cerr);
        }
    } catch (const dialforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
