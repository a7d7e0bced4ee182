#pragma once

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "cohesion/coref.hpp"
#include "cohesion/document.hpp"
#include "cohesion/error.hpp"

namespace cohesion {

struct CohesionEdge {
    int left_phrase = 0;   ///< phrase index within the left sentence
    int right_phrase = 0;  ///< phrase index within the right sentence
    double weight = 0.0;
    bool coref_override = false;

    friend bool operator==(const CohesionEdge&, const CohesionEdge&) = default;
};

/// Complete weighted bipartite graph between the phrase sets of two
/// sentences. The left sentence is always the lower document index; the
/// direction is kept for explanation output only, the weights themselves
/// are symmetric.
struct CohesionGraph {
    int left_sentence = 0;
    int right_sentence = 0;
    std::vector<CohesionEdge> edges;

    friend bool operator==(const CohesionGraph&, const CohesionGraph&) = default;
};

struct EdgeWeight {
    double weight = 0.0;
    bool coref_override = false;
};

namespace detail {

/// Element set of a phrase: the distinct normalized keys across all three
/// roles. Duplicate keys within a phrase collapse.
inline std::set<std::string> element_set(const Sentence& sentence, const PhraseTuple& tuple) {
    std::set<std::string> elements;
    for (const std::vector<int>* role : {&tuple.subject, &tuple.relation, &tuple.object}) {
        for (const int t : *role) {
            elements.insert(sentence.tokens[t].key);
        }
    }
    return elements;
}

inline bool sets_intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

inline bool tuples_coreferent(const Sentence& left_sentence, const PhraseTuple& left,
                              const Sentence& right_sentence, const PhraseTuple& right,
                              const CorefIndex& index) {
    for (const std::vector<int>* lrole : {&left.subject, &left.relation, &left.object}) {
        for (const int lt : *lrole) {
            const auto* lchains = index.chains_of(left_sentence.index, lt);
            if (!lchains) {
                continue;
            }
            for (const std::vector<int>* rrole :
                 {&right.subject, &right.relation, &right.object}) {
                for (const int rt : *rrole) {
                    const auto* rchains = index.chains_of(right_sentence.index, rt);
                    if (rchains && sets_intersect(*lchains, *rchains)) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

}  // namespace detail

/// Weight of one edge: |A ∩ B| / |A ∪ B| over the two element sets, forced
/// to 1 when any token of one phrase shares a coreference chain with any
/// token of the other (the override wins over the ratio).
inline EdgeWeight edge_weight(const Sentence& left_sentence, const PhraseTuple& left,
                              const Sentence& right_sentence, const PhraseTuple& right,
                              const CorefIndex& index) {
    if (detail::tuples_coreferent(left_sentence, left, right_sentence, right, index)) {
        return {1.0, true};
    }
    const std::set<std::string> a = detail::element_set(left_sentence, left);
    const std::set<std::string> b = detail::element_set(right_sentence, right);
    std::size_t common = 0;
    for (const std::string& key : a) {
        common += b.count(key);
    }
    const std::size_t unique = a.size() + b.size() - common;
    return {static_cast<double>(common) / static_cast<double>(unique), false};
}

/// Builds the complete bipartite graph for a sentence pair. Edges are laid
/// out left-phrase-major (l ascending, then m), which fixes the summation
/// order everywhere downstream.
inline CohesionGraph build_graph(const Document& doc, int i, int j, const CorefIndex& index) {
    if (i == j) {
        throw InvalidPairError("sentence pair (" + std::to_string(i) + "," +
                               std::to_string(j) + "): indices must differ");
    }
    CohesionGraph graph;
    graph.left_sentence = std::min(i, j);
    graph.right_sentence = std::max(i, j);
    const Sentence& left = doc.sentences[graph.left_sentence];
    const Sentence& right = doc.sentences[graph.right_sentence];
    graph.edges.reserve(left.phrases.size() * right.phrases.size());
    for (std::size_t l = 0; l < left.phrases.size(); ++l) {
        for (std::size_t m = 0; m < right.phrases.size(); ++m) {
            const EdgeWeight w =
                edge_weight(left, left.phrases[l], right, right.phrases[m], index);
            graph.edges.push_back({static_cast<int>(l), static_cast<int>(m), w.weight,
                                   w.coref_override});
        }
    }
    return graph;
}

/// Sum of edge weights in the fixed l-then-m order, plus the edge count.
/// Position-independent: permuting the document changes neither value.
struct PairCohesion {
    double weight_sum = 0.0;
    long edge_count = 0;
};

inline PairCohesion pair_cohesion(const Document& doc, int i, int j,
                                  const CorefIndex& index) {
    const CohesionGraph graph = build_graph(doc, i, j, index);
    PairCohesion out;
    out.edge_count = static_cast<long>(graph.edges.size());
    for (const CohesionEdge& edge : graph.edges) {
        out.weight_sum += edge.weight;
    }
    return out;
}

inline double similarity_from(const PairCohesion& pair, int distance) {
    if (pair.edge_count == 0) {
        return 0.0;
    }
    return pair.weight_sum / (static_cast<double>(pair.edge_count) * distance);
}

/// Normalized average edge weight of the pair graph: Σw / (|E|·|i−j|).
/// Symmetric in (i, j); an empty edge set scores 0 rather than erroring so
/// degenerate sentences penalize instead of aborting corpus runs.
inline double similarity(const Document& doc, int i, int j, const CorefIndex& index) {
    return similarity_from(pair_cohesion(doc, i, j, index), std::abs(i - j));
}

}  // namespace cohesion
