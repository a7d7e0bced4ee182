#pragma once

// Independent reference implementations of the scoring formulas, written
// against the raw definitions with plain sorted-vector arithmetic. These
// deliberately share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cohesion/document.hpp"

namespace oracle {

inline std::vector<std::string> element_set(const cohesion::Sentence& sentence,
                                            const cohesion::PhraseTuple& tuple) {
    std::vector<std::string> keys;
    for (const int t : tuple.subject) {
        keys.push_back(sentence.tokens[t].key);
    }
    for (const int t : tuple.relation) {
        keys.push_back(sentence.tokens[t].key);
    }
    for (const int t : tuple.object) {
        keys.push_back(sentence.tokens[t].key);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

/// |A ∩ B| / |A ∪ B| by exhaustive scan.
inline double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::size_t common = 0;
    for (const std::string& x : a) {
        for (const std::string& y : b) {
            if (x == y) {
                ++common;
                break;
            }
        }
    }
    const std::size_t unique = a.size() + b.size() - common;
    return static_cast<double>(common) / static_cast<double>(unique);
}

/// True when `chain` has a mention covering token (sentence, token).
inline bool chain_covers(const cohesion::CorefChain& chain, int sentence, int token) {
    for (const cohesion::Mention& mention : chain.mentions) {
        if (mention.sentence_index == sentence && mention.start <= token &&
            token <= mention.end) {
            return true;
        }
    }
    return false;
}

inline std::vector<int> tuple_tokens(const cohesion::PhraseTuple& tuple) {
    std::vector<int> tokens = tuple.subject;
    tokens.insert(tokens.end(), tuple.relation.begin(), tuple.relation.end());
    tokens.insert(tokens.end(), tuple.object.begin(), tuple.object.end());
    return tokens;
}

/// Any token of one tuple in the same chain as any token of the other.
inline bool coreferent(const cohesion::Document& doc, int i,
                       const cohesion::PhraseTuple& left, int j,
                       const cohesion::PhraseTuple& right) {
    for (const cohesion::CorefChain& chain : doc.chains) {
        bool covers_left = false;
        for (const int t : tuple_tokens(left)) {
            if (chain_covers(chain, i, t)) {
                covers_left = true;
                break;
            }
        }
        if (!covers_left) {
            continue;
        }
        for (const int t : tuple_tokens(right)) {
            if (chain_covers(chain, j, t)) {
                return true;
            }
        }
    }
    return false;
}

inline double edge_weight(const cohesion::Document& doc, int i,
                          const cohesion::PhraseTuple& left, int j,
                          const cohesion::PhraseTuple& right) {
    if (coreferent(doc, i, left, j, right)) {
        return 1.0;
    }
    return jaccard(element_set(doc.sentences[i], left), element_set(doc.sentences[j], right));
}

inline double similarity(const cohesion::Document& doc, int i, int j) {
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    const auto& left = doc.sentences[lo].phrases;
    const auto& right = doc.sentences[hi].phrases;
    const std::size_t edges = left.size() * right.size();
    if (edges == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const cohesion::PhraseTuple& l : left) {
        for (const cohesion::PhraseTuple& m : right) {
            sum += edge_weight(doc, lo, l, hi, m);
        }
    }
    return sum / (static_cast<double>(edges) * (hi - lo));
}

inline double coherence(const cohesion::Document& doc) {
    const int m = doc.sentence_count();
    if (m < 2) {
        return 0.0;
    }
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            sum += similarity(doc, i, j);
        }
    }
    return sum / m;
}

}  // namespace oracle
