#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cohesion/json_io.hpp"
#include "cohesion/score.hpp"
#include "cohesion/synthesize.hpp"
#include "oracle.hpp"
#include "support.hpp"

using cohesion::coherence;
using cohesion::CoherenceReport;
using cohesion::Document;
using cohesion::explain;
using testsupport::all_subject;
using testsupport::make_sentence;

TEST_CASE("a single-sentence document is degenerate") {
    Document doc;
    doc.doc_id = "one";
    doc.sentences.push_back(make_sentence(0, {"hello"}, {all_subject(1)}));
    const CoherenceReport report = coherence(doc);
    CHECK(report.coherence == 0.0);
    CHECK(report.degenerate);
    CHECK(report.pairs.empty());
    CHECK(report.m == 1);
}

TEST_CASE("two identical sentences score one half") {
    Document doc;
    doc.doc_id = "twins";
    doc.sentences.push_back(make_sentence(0, {"a", "b"}, {all_subject(2)}));
    doc.sentences.push_back(make_sentence(1, {"a", "b"}, {all_subject(2)}));
    const CoherenceReport report = coherence(doc);
    REQUIRE(report.pairs.size() == 1);
    CHECK(report.pairs[0].sim == 1.0);
    CHECK(report.coherence == 0.5);
    CHECK_FALSE(report.degenerate);
}

TEST_CASE("the fixture coherence matches the end-to-end oracle") {
    const Document doc =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    const CoherenceReport report = coherence(doc);
    REQUIRE(report.pairs.size() == 3);
    CHECK(report.pairs[0].i == 0);
    CHECK(report.pairs[0].j == 1);
    CHECK(std::abs(report.coherence - oracle::coherence(doc)) <= 1e-12);
    CHECK(report.coherence == Catch::Approx(13.0 / 24.0).epsilon(1e-15));
}

TEST_CASE("coherence matches the oracle on randomized documents") {
    std::mt19937 rng(808);
    for (int iter = 0; iter < 100; ++iter) {
        const Document doc = testsupport::random_document(rng);
        CHECK(std::abs(coherence(doc).coherence - oracle::coherence(doc)) <= 1e-12);
    }
}

TEST_CASE("coherence is permutation sensitive on a chained document") {
    // Adjacent sentences share vocabulary, distant ones share none.
    const Document doc = cohesion::synthesize_corpus(1, 4, 1.0, 33)[0];
    const Document reordered = cohesion::permute_document(doc, {0, 2, 1, 3});
    const double original = coherence(doc).coherence;
    const double shuffled = coherence(reordered).coherence;
    CHECK(original != shuffled);
    // the oracle fixes the direction: breaking the chain lowers the score
    CHECK(std::abs(original - oracle::coherence(doc)) <= 1e-12);
    CHECK(std::abs(shuffled - oracle::coherence(reordered)) <= 1e-12);
    CHECK(shuffled < original);
}

TEST_CASE("duplicating the sentence pattern tracks the formula oracle") {
    Document doc;
    doc.doc_id = "ab";
    doc.sentences.push_back(make_sentence(0, {"a", "b", "c"}, {all_subject(3)}));
    doc.sentences.push_back(make_sentence(1, {"b", "c", "d"}, {all_subject(3)}));

    Document doubled;
    doubled.doc_id = "abab";
    for (int s = 0; s < 4; ++s) {
        const auto& words = (s % 2 == 0) ? std::vector<std::string>{"a", "b", "c"}
                                         : std::vector<std::string>{"b", "c", "d"};
        doubled.sentences.push_back(make_sentence(s, words, {all_subject(3)}));
    }

    const double base = coherence(doc).coherence;
    const double grown = coherence(doubled).coherence;
    CHECK(std::abs(base - oracle::coherence(doc)) <= 1e-12);
    CHECK(std::abs(grown - oracle::coherence(doubled)) <= 1e-12);
    CHECK(grown != base);
}

TEST_CASE("coherence ignores chain ids and chain order") {
    std::mt19937 rng(919);
    for (int iter = 0; iter < 50; ++iter) {
        Document doc = testsupport::random_document(rng);
        if (doc.chains.size() < 2) {
            continue;
        }
        const double before = coherence(doc).coherence;
        std::reverse(doc.chains.begin(), doc.chains.end());
        for (std::size_t c = 0; c < doc.chains.size(); ++c) {
            doc.chains[c].chain_id = "relabeled-" + std::to_string(c * 17);
        }
        CHECK(coherence(doc).coherence == before);
    }
}

TEST_CASE("coherence stays within the pair-count bound") {
    std::mt19937 rng(1212);
    for (int iter = 0; iter < 200; ++iter) {
        const Document doc = testsupport::random_document(rng);
        const CoherenceReport report = coherence(doc);
        CHECK(report.coherence >= 0.0);
        CHECK(report.coherence <= (report.m - 1) / 2.0);
    }
}

TEST_CASE("explain bundles one graph per pair") {
    Document doc;
    doc.doc_id = "pairs";
    for (int s = 0; s < 4; ++s) {
        doc.sentences.push_back(make_sentence(s, {"w" + std::to_string(s)}, {all_subject(1)}));
    }
    const auto bundle = explain(doc);
    REQUIRE(bundle.graphs.size() == 6);
    const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {0, 3},
                                                       {1, 2}, {1, 3}, {2, 3}};
    for (std::size_t g = 0; g < bundle.graphs.size(); ++g) {
        CHECK(bundle.graphs[g].left_sentence == expected[g].first);
        CHECK(bundle.graphs[g].right_sentence == expected[g].second);
    }

    Document two;
    two.doc_id = "two";
    two.sentences.push_back(make_sentence(0, {"a"}, {all_subject(1)}));
    two.sentences.push_back(make_sentence(1, {"a"}, {all_subject(1)}));
    CHECK(explain(two).graphs.size() == 1);
}

TEST_CASE("explain agrees with coherence") {
    std::mt19937 rng(343);
    for (int iter = 0; iter < 50; ++iter) {
        const Document doc = testsupport::random_document(rng);
        const auto bundle = explain(doc);
        const auto report = coherence(doc);
        CHECK(bundle.report == report);
    }
}
