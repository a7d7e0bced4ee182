#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cohesion/eval.hpp"
#include "cohesion/graph.hpp"
#include "cohesion/score.hpp"

namespace cohesion {

/// Doubles are printed with up to 17 significant digits, enough for an
/// exact round trip through decimal.
inline std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

/// Fixed 4-decimal form used for DOT edge labels.
inline std::string format_weight4(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    return nlohmann::json(s).dump();
}

inline void write_graph_json(std::ostream& out, const CohesionGraph& graph) {
    out << "{\"left_sentence\":" << graph.left_sentence
        << ",\"right_sentence\":" << graph.right_sentence << ",\"edges\":[";
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const CohesionEdge& edge = graph.edges[e];
        if (e) {
            out << ",";
        }
        out << "{\"l\":" << edge.left_phrase << ",\"m\":" << edge.right_phrase
            << ",\"weight\":" << format_double(edge.weight)
            << ",\"coref_override\":" << (edge.coref_override ? "true" : "false") << "}";
    }
    out << "]}";
}

inline void write_coherence_report_json(std::ostream& out, const CoherenceReport& report) {
    out << "{\"doc_id\":" << json_escape(report.doc_id) << ",\"m\":" << report.m
        << ",\"coherence\":" << format_double(report.coherence) << ",\"pairs\":[";
    for (std::size_t k = 0; k < report.pairs.size(); ++k) {
        const PairSimilarity& pair = report.pairs[k];
        if (k) {
            out << ",";
        }
        out << "{\"i\":" << pair.i << ",\"j\":" << pair.j
            << ",\"sim\":" << format_double(pair.sim) << "}";
    }
    out << "],\"degenerate\":" << (report.degenerate ? "true" : "false") << "}";
}

inline void write_explanation_json(std::ostream& out, const ExplanationBundle& bundle) {
    out << "{\"report\":";
    write_coherence_report_json(out, bundle.report);
    out << ",\"graphs\":[";
    for (std::size_t g = 0; g < bundle.graphs.size(); ++g) {
        if (g) {
            out << ",";
        }
        write_graph_json(out, bundle.graphs[g]);
    }
    out << "]}\n";
}

inline void write_eval_report_json(std::ostream& out, const EvalReport& report) {
    out << "{\"task\":\"" << to_string(report.task) << "\",\"accuracy\":"
        << format_double(report.accuracy) << ",\"config\":{";
    if (report.permutations_per_doc) {
        out << "\"permutations_per_doc\":" << *report.permutations_per_doc << ",";
    }
    out << "\"seed\":" << report.seed << ",\"tie_policy\":\"" << to_string(report.tie_policy)
        << "\"},\"per_doc\":[";
    for (std::size_t d = 0; d < report.per_doc.size(); ++d) {
        const DocResult& doc = report.per_doc[d];
        if (d) {
            out << ",";
        }
        out << "{\"doc_id\":" << json_escape(doc.doc_id) << ",\"trials\":" << doc.trials
            << ",\"successes\":" << format_double(doc.successes) << "}";
    }
    out << "]}\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

}  // namespace detail

inline void write_eval_report_csv(std::ostream& out, const EvalReport& report) {
    out << "doc_id,trials,successes\n";
    for (const DocResult& doc : report.per_doc) {
        out << detail::csv_field(doc.doc_id) << "," << doc.trials << ","
            << format_double(doc.successes) << "\n";
    }
}

/// One row of a per-corpus accuracy summary (the shape used to compare the
/// two tasks across corpora).
struct CorpusAccuracy {
    std::string corpus;
    std::optional<double> ddt;
    std::optional<double> it;
};

inline void write_accuracy_table_json(std::ostream& out,
                                      const std::vector<CorpusAccuracy>& rows) {
    out << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) {
            out << ",";
        }
        out << "{\"corpus\":" << json_escape(rows[r].corpus);
        if (rows[r].ddt) {
            out << ",\"ddt\":" << format_double(*rows[r].ddt);
        }
        if (rows[r].it) {
            out << ",\"it\":" << format_double(*rows[r].it);
        }
        out << "}";
    }
    out << "]\n";
}

inline void write_accuracy_table_text(std::ostream& out,
                                      const std::vector<CorpusAccuracy>& rows) {
    std::size_t width = 6;
    for (const CorpusAccuracy& row : rows) {
        width = std::max(width, row.corpus.size());
    }
    out << std::string(width - 6, ' ') << "corpus  ddt     it\n";
    for (const CorpusAccuracy& row : rows) {
        out << std::string(width - row.corpus.size(), ' ') << row.corpus << "  ";
        char buf[16];
        if (row.ddt) {
            std::snprintf(buf, sizeof(buf), "%.3f", *row.ddt);
            out << buf;
        } else {
            out << "  -  ";
        }
        out << "   ";
        if (row.it) {
            std::snprintf(buf, sizeof(buf), "%.3f", *row.it);
            out << buf;
        } else {
            out << "  -  ";
        }
        out << "\n";
    }
}

namespace detail {

/// Quoted DOT string literal: escape backslash and double quote.
inline std::string dot_quote(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (const char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace detail

/// One cluster subgraph per sentence pair. Node ids are pair-local so each
/// cluster renders self-contained; edge labels carry the weight to four
/// decimals and coreference-override edges are drawn bold.
inline void write_explanation_dot(std::ostream& out, const ExplanationBundle& bundle) {
    out << "digraph cohesion {\n";
    out << "  label=" << detail::dot_quote(bundle.report.doc_id) << ";\n";
    for (const CohesionGraph& graph : bundle.graphs) {
        const int i = graph.left_sentence;
        const int j = graph.right_sentence;
        const std::string prefix = "b" + std::to_string(i) + "_" + std::to_string(j);
        int left_phrases = 0;
        int right_phrases = 0;
        for (const CohesionEdge& edge : graph.edges) {
            left_phrases = std::max(left_phrases, edge.left_phrase + 1);
            right_phrases = std::max(right_phrases, edge.right_phrase + 1);
        }
        out << "  subgraph cluster_" << i << "_" << j << " {\n";
        out << "    label=\"s" << i << " -> s" << j << "\";\n";
        for (int l = 0; l < left_phrases; ++l) {
            out << "    " << prefix << "_l" << l << " [label=\"s" << i << ".p" << l << "\"];\n";
        }
        for (int m = 0; m < right_phrases; ++m) {
            out << "    " << prefix << "_r" << m << " [label=\"s" << j << ".p" << m << "\"];\n";
        }
        for (const CohesionEdge& edge : graph.edges) {
            out << "    " << prefix << "_l" << edge.left_phrase << " -> " << prefix << "_r"
                << edge.right_phrase << " [label=\"" << format_weight4(edge.weight) << "\"";
            if (edge.coref_override) {
                out << ", style=bold";
            }
            out << "];\n";
        }
        out << "  }\n";
    }
    out << "}\n";
}

}  // namespace cohesion
