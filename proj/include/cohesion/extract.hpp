#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohesion/document.hpp"
#include "cohesion/error.hpp"
#include "cohesion/lexicon.hpp"

namespace cohesion {

enum class ExtractorMode {
    kAnnotatedOnly,       ///< trust input phrases; error on sentences without any
    kHeuristicFallback,   ///< keep input phrases, fill bare sentences heuristically
    kHeuristicAlways,     ///< ignore input phrases, always run the heuristic
};

inline const char* to_string(ExtractorMode mode) {
    switch (mode) {
        case ExtractorMode::kAnnotatedOnly: return "annotated-only";
        case ExtractorMode::kHeuristicFallback: return "heuristic-fallback";
        case ExtractorMode::kHeuristicAlways: return "heuristic-always";
    }
    return "?";
}

inline std::optional<ExtractorMode> extractor_mode_from_string(const std::string& s) {
    if (s == "annotated-only") return ExtractorMode::kAnnotatedOnly;
    if (s == "heuristic-fallback") return ExtractorMode::kHeuristicFallback;
    if (s == "heuristic-always") return ExtractorMode::kHeuristicAlways;
    return std::nullopt;
}

struct ExtractorConfig {
    ExtractorMode mode = ExtractorMode::kHeuristicFallback;
    /// Empty path means the built-in default lexicon.
    std::string verb_lexicon_path;
};

/// The lexicon a config points at. The built-in default is aliased, a file
/// path is loaded fresh; callers hold the result for as long as they need
/// it, so extraction itself stays a pure function.
inline std::shared_ptr<const VerbLexicon> resolve_lexicon(const ExtractorConfig& config) {
    if (config.verb_lexicon_path.empty()) {
        return std::shared_ptr<const VerbLexicon>(std::shared_ptr<const VerbLexicon>(),
                                                  &default_verb_lexicon());
    }
    return std::make_shared<VerbLexicon>(load_verb_lexicon_file(config.verb_lexicon_path));
}

namespace detail {

/// Positional subject-verb-object split: everything before the first
/// lexicon verb is the subject, the maximal contiguous run of lexicon verbs
/// is the relation, the rest is the object. No verb means a single
/// all-subject tuple. No stop-word removal happens at any point.
inline PhraseTuple heuristic_tuple(const Sentence& sentence, const VerbLexicon& lexicon) {
    const int n = static_cast<int>(sentence.tokens.size());
    int verb_begin = -1;
    for (int i = 0; i < n; ++i) {
        if (lexicon.count(sentence.tokens[i].key)) {
            verb_begin = i;
            break;
        }
    }
    PhraseTuple tuple;
    if (verb_begin < 0) {
        tuple.subject.resize(n);
        for (int i = 0; i < n; ++i) {
            tuple.subject[i] = i;
        }
        return tuple;
    }
    int verb_end = verb_begin;
    while (verb_end + 1 < n && lexicon.count(sentence.tokens[verb_end + 1].key)) {
        ++verb_end;
    }
    for (int i = 0; i < verb_begin; ++i) {
        tuple.subject.push_back(i);
    }
    for (int i = verb_begin; i <= verb_end; ++i) {
        tuple.relation.push_back(i);
    }
    for (int i = verb_end + 1; i < n; ++i) {
        tuple.object.push_back(i);
    }
    return tuple;
}

}  // namespace detail

namespace detail {

inline std::vector<PhraseTuple> extract_with(const Sentence& sentence, ExtractorMode mode,
                                             const ExtractorConfig& config,
                                             std::shared_ptr<const VerbLexicon>& lexicon) {
    switch (mode) {
        case ExtractorMode::kAnnotatedOnly:
            if (sentence.phrases.empty()) {
                throw MissingAnnotationError(
                    "sentences[" + std::to_string(sentence.index) +
                        "]: no phrase annotations in annotated-only mode",
                    sentence.index);
            }
            return sentence.phrases;
        case ExtractorMode::kHeuristicFallback:
            if (!sentence.phrases.empty()) {
                return sentence.phrases;
            }
            [[fallthrough]];
        case ExtractorMode::kHeuristicAlways:
            break;
    }
    if (!lexicon) {
        lexicon = resolve_lexicon(config);
    }
    return {heuristic_tuple(sentence, *lexicon)};
}

}  // namespace detail

/// Returns the phrase tuples for one sentence under the configured mode.
inline std::vector<PhraseTuple> extract_phrases(const Sentence& sentence,
                                                const ExtractorConfig& config) {
    std::shared_ptr<const VerbLexicon> lexicon;
    return detail::extract_with(sentence, config.mode, config, lexicon);
}

/// Returns a copy of the document in which every sentence carries at least
/// one phrase tuple. Tokens and chains are never touched; the lexicon is
/// resolved at most once per call.
inline Document annotate_document(const Document& doc, const ExtractorConfig& config) {
    Document out = doc;
    std::shared_ptr<const VerbLexicon> lexicon;
    for (Sentence& sentence : out.sentences) {
        sentence.phrases = detail::extract_with(sentence, config.mode, config, lexicon);
    }
    return out;
}

}  // namespace cohesion
