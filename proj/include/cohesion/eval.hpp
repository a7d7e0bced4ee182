#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohesion/document.hpp"
#include "cohesion/error.hpp"
#include "cohesion/parallel.hpp"
#include "cohesion/permutation.hpp"
#include "cohesion/rng.hpp"
#include "cohesion/score.hpp"

namespace cohesion {

enum class TiePolicy {
    kFailure,  ///< a tied trial counts 0 (conservative default)
    kHalf,     ///< a tied trial counts 0.5
};

inline const char* to_string(TiePolicy policy) {
    return policy == TiePolicy::kFailure ? "fail" : "half";
}

inline std::optional<TiePolicy> tie_policy_from_string(const std::string& s) {
    if (s == "fail") return TiePolicy::kFailure;
    if (s == "half") return TiePolicy::kHalf;
    return std::nullopt;
}

struct DdtConfig {
    std::uint64_t permutations_per_doc = 20;
    std::uint64_t seed = 0;
    TiePolicy tie_policy = TiePolicy::kFailure;
};

struct ItConfig {
    std::uint64_t seed = 0;  ///< echoed for report symmetry; IT is exhaustive
    TiePolicy tie_policy = TiePolicy::kFailure;
};

enum class EvalTask { kDdt, kIt };

inline const char* to_string(EvalTask task) {
    return task == EvalTask::kDdt ? "ddt" : "it";
}

struct DocResult {
    std::string doc_id;
    long trials = 0;        ///< 0 for documents skipped because M < 2
    double successes = 0.0; ///< fractional under tie-is-half

    friend bool operator==(const DocResult&, const DocResult&) = default;
};

struct EvalReport {
    EvalTask task = EvalTask::kDdt;
    std::uint64_t seed = 0;
    TiePolicy tie_policy = TiePolicy::kFailure;
    /// Set for DDT only.
    std::optional<std::uint64_t> permutations_per_doc;
    std::vector<DocResult> per_doc;
    double accuracy = 0.0;  ///< Σ successes / Σ trials

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

namespace detail {

inline double aggregate_accuracy(EvalReport& report) {
    double successes = 0.0;
    long trials = 0;
    for (const DocResult& doc : report.per_doc) {
        successes += doc.successes;
        trials += doc.trials;
    }
    if (trials == 0) {
        throw EmptyCorpusError("no documents with M >= 2 in corpus; nothing to evaluate");
    }
    report.accuracy = successes / static_cast<double>(trials);
    return report.accuracy;
}

inline double tie_credit(TiePolicy policy) {
    return policy == TiePolicy::kHalf ? 0.5 : 0.0;
}

}  // namespace detail

/// Document discrimination: one trial per (document, permutation); success
/// when the original order scores strictly higher than the shuffle. Each
/// document draws its permutations from its own splitmix64-derived seed, so
/// results do not depend on thread scheduling.
inline EvalReport run_ddt(const std::vector<Document>& corpus, const DdtConfig& config,
                          int threads = 0) {
    if (config.permutations_per_doc < 1) {
        throw ValidationError("permutations_per_doc: must be >= 1");
    }
    EvalReport report;
    report.task = EvalTask::kDdt;
    report.seed = config.seed;
    report.tie_policy = config.tie_policy;
    report.permutations_per_doc = config.permutations_per_doc;
    report.per_doc.resize(corpus.size());

    std::vector<std::uint64_t> doc_seeds(corpus.size());
    SplitMix64 mixer(config.seed);
    for (auto& seed : doc_seeds) {
        seed = mixer.next();
    }

    parallel_for(corpus.size(), threads, [&](std::size_t d) {
        const Document& doc = corpus[d];
        DocResult result;
        result.doc_id = doc.doc_id;
        if (doc.sentence_count() >= 2) {
            const double original = coherence(doc).coherence;
            const auto permutations = generate_permutations(
                doc.sentence_count(), config.permutations_per_doc, doc_seeds[d]);
            result.trials = static_cast<long>(permutations.size());
            for (const auto& order : permutations) {
                const double permuted = coherence(permute_document(doc, order)).coherence;
                if (original > permuted) {
                    result.successes += 1.0;
                } else if (original == permuted) {
                    result.successes += detail::tie_credit(config.tie_policy);
                }
            }
        }
        report.per_doc[d] = std::move(result);
    });

    detail::aggregate_accuracy(report);
    return report;
}

/// Insertion: for each sentence r, the document is rebuilt with r moved to
/// every position p; the trial succeeds when the original position is the
/// strict argmax of the coherence score.
inline EvalReport run_it(const std::vector<Document>& corpus, const ItConfig& config,
                         int threads = 0) {
    EvalReport report;
    report.task = EvalTask::kIt;
    report.seed = config.seed;
    report.tie_policy = config.tie_policy;
    report.per_doc.resize(corpus.size());

    parallel_for(corpus.size(), threads, [&](std::size_t d) {
        const Document& doc = corpus[d];
        DocResult result;
        result.doc_id = doc.doc_id;
        const int m = doc.sentence_count();
        if (m >= 2) {
            const double original = coherence(doc).coherence;
            result.trials = m;
            for (int r = 0; r < m; ++r) {
                bool beaten = false;
                bool tied = false;
                for (int p = 0; p < m && !beaten; ++p) {
                    if (p == r) {
                        continue;  // reinsertion at r reproduces the document
                    }
                    std::vector<int> order;
                    order.reserve(m);
                    for (int s = 0; s < m; ++s) {
                        if (s != r) {
                            order.push_back(s);
                        }
                    }
                    order.insert(order.begin() + p, r);
                    const double variant = coherence(permute_document(doc, order)).coherence;
                    if (variant > original) {
                        beaten = true;
                    } else if (variant == original) {
                        tied = true;
                    }
                }
                if (!beaten) {
                    result.successes += tied ? detail::tie_credit(config.tie_policy) : 1.0;
                }
            }
        }
        report.per_doc[d] = std::move(result);
    });

    detail::aggregate_accuracy(report);
    return report;
}

}  // namespace cohesion
