#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dialforge/error.hpp"
#include "dialforge/unicode.hpp"

// Data model for summarization corpora plus streaming ingestion/persistence.
//
// On-disk format: one JSON object per line (UTF-8, LF endings) with fields
//   id, text, summary            required (id synthesized when absent)
//   lang, kind                   optional; default to the reader's arguments
// Dialogue transcripts keep turns inside the text field, one
// "Speaker: utterance" per newline-separated line.

namespace dialforge {

enum class Lang { en, ko };
enum class Kind { document, dialogue };

inline std::string_view to_string(Lang lang) { return lang == Lang::en ? "en" : "ko"; }
inline std::string_view to_string(Kind kind) {
    return kind == Kind::document ? "document" : "dialogue";
}

inline Lang lang_from_string(std::string_view s) {
    if (s == "en") return Lang::en;
    if (s == "ko") return Lang::ko;
    throw Error("unknown lang '" + std::string(s) + "' (expected en or ko)");
}

inline Kind kind_from_string(std::string_view s) {
    if (s == "document") return Kind::document;
    if (s == "dialogue") return Kind::dialogue;
    throw Error("unknown kind '" + std::string(s) + "' (expected document or dialogue)");
}

// One (source text, reference summary) record.
struct SummaryPair {
    std::string id;
    std::string text;
    std::string summary;
    Lang lang = Lang::en;
    Kind kind = Kind::document;

    friend bool operator==(const SummaryPair&, const SummaryPair&) = default;
};

// A source text resolved into its ordered sentence sequence.
struct SentenceDoc {
    std::vector<std::string> sentences;
    std::string source_id;
};

// Ordered collection of SummaryPairs. Immutable once loaded; safe to share
// across concurrent readers.
struct Corpus {
    std::string name;
    Lang lang = Lang::en;
    Kind kind = Kind::document;
    std::vector<SummaryPair> pairs;

    std::size_t size() const { return pairs.size(); }
    bool empty() const { return pairs.empty(); }
};

namespace detail {

inline std::string synthesized_id(const std::string& corpus_name, std::size_t line_no) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06zu", line_no);
    return corpus_name + "-" + buf;
}

}  // namespace detail

// Streams records from a line-delimited file, validating as it goes:
// required fields present and non-blank, ids unique, lang/kind homogeneous.
// The lang/kind passed to the constructor are defaults for records that do
// not carry the fields; the first record fixes the effective values and
// later records must agree.
class CorpusReader {
public:
    CorpusReader(const std::filesystem::path& path, Lang lang, Kind kind)
        : path_(path), default_lang_(lang), default_kind_(kind), in_(path, std::ios::binary) {
        if (!in_) throw Error("cannot open corpus file: " + path.string());
        name_ = path.stem().string();
    }

    std::optional<SummaryPair> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (is_blank(line)) continue;
            return parse_record(line);
        }
        return std::nullopt;
    }

    const std::string& name() const { return name_; }
    std::size_t count() const { return count_; }
    std::size_t line() const { return line_no_; }
    Lang lang() const { return effective_lang_ ? *effective_lang_ : default_lang_; }
    Kind kind() const { return effective_kind_ ? *effective_kind_ : default_kind_; }

private:
    std::string where() const { return path_.string() + ":" + std::to_string(line_no_); }

    std::string required_string(const nlohmann::json& j, const char* key) const {
        auto it = j.find(key);
        if (it == j.end()) throw Error(where() + ": missing field '" + key + "'");
        if (!it->is_string()) throw Error(where() + ": field '" + key + "' must be a string");
        return it->get<std::string>();
    }

    SummaryPair parse_record(const std::string& line) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error(where() + ": malformed record: " + e.what());
        }
        if (!j.is_object()) throw Error(where() + ": malformed record: expected a JSON object");

        SummaryPair p;
        p.text = required_string(j, "text");
        p.summary = required_string(j, "summary");
        if (is_blank(p.text)) throw Error(where() + ": field 'text' is empty");
        if (is_blank(p.summary)) throw Error(where() + ": field 'summary' is empty");

        if (auto it = j.find("id"); it != j.end()) {
            if (!it->is_string()) throw Error(where() + ": field 'id' must be a string");
            p.id = it->get<std::string>();
            if (p.id.empty()) throw Error(where() + ": field 'id' is empty");
        } else {
            p.id = detail::synthesized_id(name_, line_no_);
        }
        if (!seen_ids_.insert(p.id).second) {
            throw Error(where() + ": duplicate id '" + p.id + "'");
        }

        p.lang = default_lang_;
        p.kind = default_kind_;
        if (auto it = j.find("lang"); it != j.end()) {
            if (!it->is_string()) throw Error(where() + ": field 'lang' must be a string");
            p.lang = lang_from_string(it->get<std::string>());
        }
        if (auto it = j.find("kind"); it != j.end()) {
            if (!it->is_string()) throw Error(where() + ": field 'kind' must be a string");
            p.kind = kind_from_string(it->get<std::string>());
        }
        if (!effective_lang_) effective_lang_ = p.lang;
        if (!effective_kind_) effective_kind_ = p.kind;
        if (p.lang != *effective_lang_) {
            throw Error(where() + ": record lang '" + std::string(to_string(p.lang)) +
                        "' differs from corpus lang '" + std::string(to_string(*effective_lang_)) + "'");
        }
        if (p.kind != *effective_kind_) {
            throw Error(where() + ": record kind '" + std::string(to_string(p.kind)) +
                        "' differs from corpus kind '" + std::string(to_string(*effective_kind_)) + "'");
        }

        ++count_;
        return p;
    }

    std::filesystem::path path_;
    std::string name_;
    Lang default_lang_;
    Kind default_kind_;
    std::optional<Lang> effective_lang_;
    std::optional<Kind> effective_kind_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
    std::size_t count_ = 0;
    std::unordered_set<std::string> seen_ids_;
};

// Streams records to a line-delimited file. Serialization is deterministic:
// fixed key order id, text, summary, lang, kind; compact JSON; LF endings.
class CorpusWriter {
public:
    explicit CorpusWriter(const std::filesystem::path& path)
        : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
        if (!out_) throw Error("cannot open for writing: " + path.string());
    }

    void write(const SummaryPair& p) {
        nlohmann::ordered_json j;
        j["id"] = p.id;
        j["text"] = p.text;
        j["summary"] = p.summary;
        j["lang"] = to_string(p.lang);
        j["kind"] = to_string(p.kind);
        out_ << j.dump() << '\n';
        if (!out_) throw Error("write failed: " + path_.string());
        ++count_;
    }

    void close() {
        if (!out_.is_open()) return;
        out_.flush();
        if (!out_) throw Error("write failed: " + path_.string());
        out_.close();
    }

    std::size_t count() const { return count_; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t count_ = 0;
};

// Loads a whole corpus. Line order is preserved; blank lines are skipped;
// an empty (zero-record) file is an error.
inline Corpus read_corpus(const std::filesystem::path& path, Lang lang, Kind kind) {
    CorpusReader reader(path, lang, kind);
    Corpus corpus;
    corpus.name = reader.name();
    while (auto p = reader.next()) corpus.pairs.push_back(std::move(*p));
    if (corpus.empty()) throw Error("empty corpus: " + path.string());
    corpus.lang = reader.lang();
    corpus.kind = reader.kind();
    return corpus;
}

inline void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    if (corpus.empty()) throw Error("refusing to write empty corpus: " + path.string());
    CorpusWriter writer(path);
    for (const auto& p : corpus.pairs) writer.write(p);
    writer.close();
}

// Concatenation: a's pairs precede b's. Ids colliding with an already used
// id gain a corpus-name prefix. Result kind is dialogue when either input is
// dialogue-formatted; pair kinds are harmonized to the result kind so the
// corpus stays homogeneous.
inline Corpus concat_corpora(const Corpus& a, const Corpus& b) {
    if (a.lang != b.lang) {
        throw Error("language mismatch: cannot concatenate '" + a.name + "' (" +
                    std::string(to_string(a.lang)) + ") with '" + b.name + "' (" +
                    std::string(to_string(b.lang)) + ")");
    }
    Corpus out;
    out.name = a.name + "+" + b.name;
    out.lang = a.lang;
    out.kind = (a.kind == Kind::dialogue || b.kind == Kind::dialogue) ? Kind::dialogue
                                                                      : Kind::document;
    out.pairs.reserve(a.size() + b.size());

    std::unordered_set<std::string> used;
    used.reserve(a.size() + b.size());
    auto add = [&](const SummaryPair& p, const std::string& prefix) {
        SummaryPair q = p;
        if (used.count(q.id)) {
            q.id = prefix + "-" + p.id;
            for (int k = 2; used.count(q.id); ++k) {
                q.id = prefix + "-" + p.id + "-" + std::to_string(k);
            }
        }
        q.kind = out.kind;
        used.insert(q.id);
        out.pairs.push_back(std::move(q));
    };
    for (const auto& p : a.pairs) add(p, a.name);
    for (const auto& p : b.pairs) add(p, b.name);
    return out;
}

}  // namespace dialforge
