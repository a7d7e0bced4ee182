#pragma once

#include <string>
#include <vector>

#include "cohesion/coref.hpp"
#include "cohesion/document.hpp"
#include "cohesion/graph.hpp"

namespace cohesion {

struct PairSimilarity {
    int i = 0;  ///< lower sentence index
    int j = 0;  ///< higher sentence index
    double sim = 0.0;

    friend bool operator==(const PairSimilarity&, const PairSimilarity&) = default;
};

struct CoherenceReport {
    std::string doc_id;
    int m = 0;
    double coherence = 0.0;
    std::vector<PairSimilarity> pairs;  ///< all unordered pairs, i ascending then j
    bool degenerate = false;            ///< true when M = 1 (no pairs exist)

    friend bool operator==(const CoherenceReport&, const CoherenceReport&) = default;
};

/// Document coherence: the sum of sim(s_i, s_j) over all unordered pairs
/// i < j, divided by the sentence count M. The coref index is built once
/// and shared across pairs; iteration order is fixed (i ascending, then j)
/// so results are bit-stable.
inline CoherenceReport coherence(const Document& doc) {
    CoherenceReport report;
    report.doc_id = doc.doc_id;
    report.m = doc.sentence_count();
    if (report.m < 2) {
        report.degenerate = true;
        return report;
    }
    const CorefIndex index = build_coref_index(doc);
    double sum = 0.0;
    for (int i = 0; i < report.m; ++i) {
        for (int j = i + 1; j < report.m; ++j) {
            const double sim = similarity(doc, i, j, index);
            report.pairs.push_back({i, j, sim});
            sum += sim;
        }
    }
    report.coherence = sum / report.m;
    return report;
}

/// The coherence report plus the full cohesion graph of every sentence
/// pair, for DOT/JSON explanation export.
struct ExplanationBundle {
    CoherenceReport report;
    std::vector<CohesionGraph> graphs;  ///< same (i, j) order as report.pairs
};

inline ExplanationBundle explain(const Document& doc) {
    ExplanationBundle bundle;
    bundle.report.doc_id = doc.doc_id;
    bundle.report.m = doc.sentence_count();
    if (bundle.report.m < 2) {
        bundle.report.degenerate = true;
        return bundle;
    }
    const CorefIndex index = build_coref_index(doc);
    double sum = 0.0;
    for (int i = 0; i < bundle.report.m; ++i) {
        for (int j = i + 1; j < bundle.report.m; ++j) {
            CohesionGraph graph = build_graph(doc, i, j, index);
            PairCohesion pair;
            pair.edge_count = static_cast<long>(graph.edges.size());
            for (const CohesionEdge& edge : graph.edges) {
                pair.weight_sum += edge.weight;
            }
            const double sim = similarity_from(pair, j - i);
            bundle.report.pairs.push_back({i, j, sim});
            sum += sim;
            bundle.graphs.push_back(std::move(graph));
        }
    }
    bundle.report.coherence = sum / bundle.report.m;
    return bundle;
}

}  // namespace cohesion
