#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>

#include "dialforge/corpus.hpp"
#include "dialforge/error.hpp"
#include "dialforge/random.hpp"

// Builds training mixes: zero-shot (NewDocSet alone), few-shot (NewDocSet
// plus a k-sample of DialSet), and full (NewDocSet plus all of DialSet),
// plus the two baselines (Original = DialSet alone, Naive = untransformed
// DocSet). Few-shot sampling is a single deterministic draw per (k, seed)
// that keeps the sampled pairs in their original relative order.

namespace dialforge {

enum class Regime { zero_shot, few_shot, full };

inline constexpr std::array<std::string_view, 9> kComposeVariants = {
    "Original", "Naive", "D", "S", "O", "D+S", "D+O", "S+O", "D+S+O",
};

inline std::string_view regime_token(Regime r) {
    switch (r) {
        case Regime::zero_shot: return "zero";
        case Regime::few_shot: return "few";
        case Regime::full: return "full";
    }
    return "";
}

inline Regime regime_from_token(std::string_view s) {
    if (s == "zero") return Regime::zero_shot;
    if (s == "few") return Regime::few_shot;
    if (s == "full") return Regime::full;
    throw Error("unknown regime '" + std::string(s) + "' (expected zero, few or full)");
}

inline std::string_view validate_compose_variant(std::string_view name) {
    for (auto v : kComposeVariants) {
        if (name == v) return v;
    }
    throw Error("unknown variant '" + std::string(name) +
                "' (expected Original, Naive, D, S, O, D+S, D+O, S+O or D+S+O)");
}

struct RegimeSpec {
    Regime regime = Regime::zero_shot;
    std::size_t k = 0;               // required iff few_shot
    std::uint64_t seed = 0;
    std::string variant = "D";       // one of kComposeVariants

    friend bool operator==(const RegimeSpec&, const RegimeSpec&) = default;
};

inline void validate_regime_spec(const RegimeSpec& spec, std::size_t dialset_size) {
    validate_compose_variant(spec.variant);
    if (spec.variant == "Original" && spec.regime == Regime::zero_shot) {
        throw Error("variant Original cannot be composed zero-shot (no training data)");
    }
    if (spec.regime == Regime::few_shot) {
        if (spec.k == 0) throw Error("few-shot composition requires k >= 1");
        if (spec.k > dialset_size) {
            throw Error("few-shot k=" + std::to_string(spec.k) + " exceeds dialset size " +
                        std::to_string(dialset_size));
        }
    }
}

// Uniform sample of k pairs, without replacement, original order preserved.
inline Corpus sample_dialset(const Corpus& dialset, std::size_t k, std::uint64_t seed) {
    if (k == 0) throw Error("sample_dialset: k must be >= 1");
    if (k > dialset.size()) {
        throw Error("sample_dialset: k=" + std::to_string(k) + " exceeds corpus size " +
                    std::to_string(dialset.size()));
    }
    Corpus out;
    out.name = dialset.name + ".k" + std::to_string(k);
    out.lang = dialset.lang;
    out.kind = dialset.kind;
    out.pairs.reserve(k);
    for (std::size_t idx : sample_indices(dialset.size(), k, seed)) {
        out.pairs.push_back(dialset.pairs[idx]);
    }
    return out;
}

// Provenance name: <variant>_<regime>[_k<k>]_s<seed>
inline std::string compose_name(const RegimeSpec& spec) {
    std::string name = spec.variant;
    name += '_';
    name += regime_token(spec.regime);
    if (spec.regime == Regime::few_shot) {
        name += "_k";
        name += std::to_string(spec.k);
    }
    name += "_s";
    name += std::to_string(spec.seed);
    return name;
}

inline RegimeSpec parse_compose_name(std::string_view name) {
    auto fail = [&] { throw Error("malformed compose name '" + std::string(name) + "'"); };
    auto parse_num = [&](std::string_view digits, auto& value) {
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) fail();
    };

    RegimeSpec spec;
    const auto seed_at = name.rfind("_s");
    if (seed_at == std::string_view::npos || seed_at + 2 == name.size()) fail();
    parse_num(name.substr(seed_at + 2), spec.seed);
    std::string_view rest = name.substr(0, seed_at);

    if (const auto k_at = rest.rfind("_k"); k_at != std::string_view::npos) {
        std::string_view digits = rest.substr(k_at + 2);
        bool numeric = !digits.empty();
        for (char c : digits) numeric = numeric && c >= '0' && c <= '9';
        if (numeric) {
            parse_num(digits, spec.k);
            rest = rest.substr(0, k_at);
        }
    }

    const auto regime_at = rest.rfind('_');
    if (regime_at == std::string_view::npos) fail();
    spec.regime = regime_from_token(rest.substr(regime_at + 1));
    spec.variant = std::string(validate_compose_variant(rest.substr(0, regime_at)));
    if (spec.regime == Regime::few_shot && spec.k == 0) fail();
    if (spec.regime != Regime::few_shot && spec.k != 0) fail();
    return spec;
}

// Training-set composition. newdocset is ignored for variant Original.
inline Corpus compose(const Corpus& newdocset, const Corpus& dialset, const RegimeSpec& spec) {
    validate_regime_spec(spec, dialset.size());
    const bool original = spec.variant == "Original";
    if (!original && !newdocset.empty() && newdocset.lang != dialset.lang) {
        throw Error("compose: language mismatch between '" + newdocset.name + "' and '" +
                    dialset.name + "'");
    }

    Corpus result;
    switch (spec.regime) {
        case Regime::zero_shot:
            result = newdocset;
            break;
        case Regime::few_shot: {
            Corpus sampled = sample_dialset(dialset, spec.k, spec.seed);
            result = original ? std::move(sampled) : concat_corpora(newdocset, sampled);
            break;
        }
        case Regime::full:
            result = original ? dialset : concat_corpora(newdocset, dialset);
            break;
    }
    result.name = compose_name(spec);
    return result;
}

}  // namespace dialforge
