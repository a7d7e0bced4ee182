#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "cohesion/document.hpp"
#include "cohesion/error.hpp"
#include "cohesion/rng.hpp"

namespace cohesion {

struct SynthesisOptions {
    /// Base vocabulary per sentence; round(overlap * base) words are shared
    /// with each neighbor.
    int words_per_sentence = 8;
    /// Add one chain linking sentence 0 and sentence M-1, exercising the
    /// long-distance coreference override.
    bool long_chain = false;
};

/// Desk-scale corpus generator: chained documents in which consecutive
/// sentences share a fraction `overlap` of their base vocabulary through
/// pair-specific link words, and non-consecutive sentences share nothing
/// (every other word is fresh per position). Deterministic per seed; the
/// seed only shuffles token order inside sentences, which the scorer is
/// insensitive to by construction.
inline std::vector<Document> synthesize_corpus(int num_docs, int m, double overlap,
                                               std::uint64_t seed,
                                               const SynthesisOptions& options = {}) {
    if (num_docs < 1) {
        throw ValidationError("num_docs: must be >= 1, got " + std::to_string(num_docs));
    }
    if (m < 3) {
        throw ValidationError("M: must be >= 3, got " + std::to_string(m));
    }
    if (!(overlap >= 0.0 && overlap <= 1.0)) {
        throw ValidationError("overlap: must be in [0,1], got " + std::to_string(overlap));
    }
    const int base = options.words_per_sentence;
    const int links = static_cast<int>(std::llround(overlap * base));

    std::vector<Document> corpus;
    corpus.reserve(num_docs);
    SplitMix64 mixer(seed);
    for (int d = 0; d < num_docs; ++d) {
        Xoshiro256StarStar rng(mixer.next());
        Document doc;
        char id[32];
        std::snprintf(id, sizeof(id), "synth-%04d", d);
        doc.doc_id = id;
        for (int k = 0; k < m; ++k) {
            std::vector<std::string> words;
            const auto link_word = [&](int pair, int t) {
                return "d" + std::to_string(d) + "l" + std::to_string(pair) + "w" +
                       std::to_string(t);
            };
            if (k > 0) {
                for (int t = 0; t < links; ++t) {
                    words.push_back(link_word(k - 1, t));
                }
            }
            if (k + 1 < m) {
                for (int t = 0; t < links; ++t) {
                    words.push_back(link_word(k, t));
                }
            }
            for (int t = 0; t < base - links; ++t) {
                words.push_back("d" + std::to_string(d) + "s" + std::to_string(k) + "w" +
                                std::to_string(t));
            }
            for (int i = static_cast<int>(words.size()) - 1; i > 0; --i) {
                const auto j =
                    static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
                std::swap(words[i], words[j]);
            }

            Sentence sentence;
            sentence.index = k;
            const int n = static_cast<int>(words.size());
            for (int t = 0; t < n; ++t) {
                Token token;
                token.sentence_index = k;
                token.token_index = t;
                token.surface = std::move(words[t]);
                token.key = normalize(token.surface);
                sentence.tokens.push_back(std::move(token));
            }
            PhraseTuple tuple;
            for (int t = 0; t < n; ++t) {
                if (t < n / 3) {
                    tuple.subject.push_back(t);
                } else if (t < 2 * n / 3) {
                    tuple.relation.push_back(t);
                } else {
                    tuple.object.push_back(t);
                }
            }
            sentence.phrases.push_back(std::move(tuple));
            doc.sentences.push_back(std::move(sentence));
        }
        if (options.long_chain) {
            CorefChain chain;
            chain.chain_id = "long-range";
            chain.mentions.push_back({0, 0, 0});
            chain.mentions.push_back({m - 1, 0, 0});
            doc.chains.push_back(std::move(chain));
        }
        corpus.push_back(std::move(doc));
    }
    return corpus;
}

}  // namespace cohesion
