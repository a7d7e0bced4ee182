#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cohesion/graph.hpp"
#include "cohesion/json_io.hpp"
#include "oracle.hpp"
#include "support.hpp"

using cohesion::build_coref_index;
using cohesion::build_graph;
using cohesion::CorefIndex;
using cohesion::Document;
using cohesion::edge_weight;
using cohesion::PhraseTuple;
using cohesion::Sentence;
using cohesion::similarity;
using testsupport::all_subject;
using testsupport::make_sentence;

namespace {

/// Two sentences holding one phrase each, built from explicit element sets.
Document two_phrase_doc(const std::vector<std::string>& left,
                        const std::vector<std::string>& right) {
    Document doc;
    doc.doc_id = "pairwise";
    doc.sentences.push_back(make_sentence(0, left, {all_subject(left.size())}));
    doc.sentences.push_back(make_sentence(1, right, {all_subject(right.size())}));
    return doc;
}

}  // namespace

TEST_CASE("edge_weight is the shared-element ratio") {
    const Document doc = two_phrase_doc({"a", "b", "c"}, {"b", "c", "d"});
    const CorefIndex index;
    const auto w = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                               doc.sentences[1], doc.sentences[1].phrases[0], index);
    CHECK(w.weight == 0.5);  // 2 common of 4 unique
    CHECK_FALSE(w.coref_override);
}

TEST_CASE("edge_weight of identical tuples is 1") {
    const Document doc = two_phrase_doc({"a", "b"}, {"b", "a"});
    const auto w = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                               doc.sentences[1], doc.sentences[1].phrases[0], CorefIndex());
    CHECK(w.weight == 1.0);
    CHECK_FALSE(w.coref_override);
}

TEST_CASE("edge_weight of disjoint tuples is 0") {
    const Document doc = two_phrase_doc({"a", "b"}, {"c", "d"});
    const auto w = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                               doc.sentences[1], doc.sentences[1].phrases[0], CorefIndex());
    CHECK(w.weight == 0.0);
}

TEST_CASE("a coreferent pair forces the weight to 1") {
    Document doc = two_phrase_doc({"a", "b"}, {"c", "d"});
    doc.chains.push_back({"x", {{0, 1, 1}, {1, 0, 0}}});
    const CorefIndex index = build_coref_index(doc);
    const auto w = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                               doc.sentences[1], doc.sentences[1].phrases[0], index);
    CHECK(w.weight == 1.0);
    CHECK(w.coref_override);
}

TEST_CASE("duplicate keys inside a phrase collapse") {
    const Document doc = two_phrase_doc({"a", "a", "b"}, {"a", "b", "b"});
    const auto w = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                               doc.sentences[1], doc.sentences[1].phrases[0], CorefIndex());
    CHECK(w.weight == 1.0);  // both element sets are {a, b}
}

TEST_CASE("edge_weight matches the brute-force set computation") {
    std::mt19937 rng(424242);
    const std::vector<std::string> alphabet = {"q0", "q1", "q2", "q3", "q4", "q5",
                                               "q6", "q7", "q8", "q9", "qa", "qb"};
    for (int iter = 0; iter < 1000; ++iter) {
        const auto draw = [&] {
            const int n = std::uniform_int_distribution<int>(1, 8)(rng);
            std::vector<std::string> words;
            for (int k = 0; k < n; ++k) {
                words.push_back(alphabet[std::uniform_int_distribution<std::size_t>(
                    0, alphabet.size() - 1)(rng)]);
            }
            return words;
        };
        const Document doc = two_phrase_doc(draw(), draw());
        const auto got = edge_weight(doc.sentences[0], doc.sentences[0].phrases[0],
                                     doc.sentences[1], doc.sentences[1].phrases[0],
                                     CorefIndex());
        const double expected =
            oracle::edge_weight(doc, 0, doc.sentences[0].phrases[0], 1,
                                doc.sentences[1].phrases[0]);
        CHECK(std::abs(got.weight - expected) <= 1e-12);
    }
}

TEST_CASE("build_graph is complete bipartite") {
    Document doc;
    doc.doc_id = "kij";
    doc.sentences.push_back(
        make_sentence(0, {"a", "b"}, {{{0}, {}, {}}, {{1}, {}, {}}}));
    doc.sentences.push_back(
        make_sentence(1, {"c", "d", "e"}, {{{0}, {}, {}}, {{1}, {}, {}}, {{2}, {}, {}}}));
    const CorefIndex index;
    const auto graph = build_graph(doc, 0, 1, index);
    CHECK(graph.edges.size() == 6);
    CHECK(graph.left_sentence == 0);
    CHECK(graph.right_sentence == 1);
    // l-major ordering
    CHECK(graph.edges[0].left_phrase == 0);
    CHECK(graph.edges[0].right_phrase == 0);
    CHECK(graph.edges[1].right_phrase == 1);
    CHECK(graph.edges[5].left_phrase == 1);
    CHECK(graph.edges[5].right_phrase == 2);
}

TEST_CASE("build_graph with an empty side has no edges") {
    Document doc;
    doc.doc_id = "empty-side";
    doc.sentences.push_back(make_sentence(0, {"a"}, {}));
    doc.sentences.push_back(make_sentence(1, {"b"}, {all_subject(1)}));
    const CorefIndex index;
    CHECK(build_graph(doc, 0, 1, index).edges.empty());
    CHECK(similarity(doc, 0, 1, index) == 0.0);
}

TEST_CASE("build_graph rejects a self pair") {
    Document doc;
    doc.sentences.push_back(make_sentence(0, {"a"}, {all_subject(1)}));
    const CorefIndex index;
    CHECK_THROWS_AS(build_graph(doc, 0, 0, index), cohesion::InvalidPairError);
    CHECK_THROWS_AS(similarity(doc, 0, 0, index), cohesion::InvalidPairError);
}

TEST_CASE("build_graph edges equal an exhaustive double loop") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 100; ++iter) {
        const Document doc = testsupport::random_document(rng, 4);
        if (doc.sentence_count() < 2) {
            continue;
        }
        const CorefIndex index = build_coref_index(doc);
        const auto graph = build_graph(doc, 0, 1, index);
        const auto& left = doc.sentences[0];
        const auto& right = doc.sentences[1];
        REQUIRE(graph.edges.size() == left.phrases.size() * right.phrases.size());
        std::size_t e = 0;
        for (std::size_t l = 0; l < left.phrases.size(); ++l) {
            for (std::size_t m = 0; m < right.phrases.size(); ++m, ++e) {
                CHECK(graph.edges[e].left_phrase == static_cast<int>(l));
                CHECK(graph.edges[e].right_phrase == static_cast<int>(m));
                const double expected =
                    oracle::edge_weight(doc, 0, left.phrases[l], 1, right.phrases[m]);
                CHECK(std::abs(graph.edges[e].weight - expected) <= 1e-12);
            }
        }
    }
}

TEST_CASE("similarity of adjacent identical tuples is exactly 1") {
    Document doc = two_phrase_doc({"a", "b", "c"}, {"a", "b", "c"});
    const CorefIndex index;
    CHECK(similarity(doc, 0, 1, index) == 1.0);
}

TEST_CASE("similarity divides by sentence distance") {
    for (int distance = 2; distance <= 4; ++distance) {
        Document doc;
        doc.doc_id = "spread";
        for (int s = 0; s <= distance; ++s) {
            doc.sentences.push_back(make_sentence(s, {"x", "y"}, {all_subject(2)}));
        }
        const CorefIndex index;
        CHECK(similarity(doc, 0, distance, index) == 1.0 / distance);
    }
}

TEST_CASE("similarity matches the formula oracle on the fixture") {
    const Document doc =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    const CorefIndex index = build_coref_index(doc);
    CHECK(similarity(doc, 0, 1, index) == 1.0);    // coreferent pair, adjacent
    CHECK(similarity(doc, 0, 2, index) == 0.5);    // coreferent pair at distance 2
    CHECK(similarity(doc, 1, 2, index) == 0.125);  // one shared element of eight
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            CHECK(std::abs(similarity(doc, i, j, index) - oracle::similarity(doc, i, j)) <=
                  1e-12);
        }
    }
}

TEST_CASE("similarity is exactly symmetric") {
    std::mt19937 rng(31337);
    int checked = 0;
    while (checked < 500) {
        const Document doc = testsupport::random_document(rng);
        const int m = doc.sentence_count();
        if (m < 2) {
            continue;
        }
        const CorefIndex index = build_coref_index(doc);
        const int i = std::uniform_int_distribution<int>(0, m - 2)(rng);
        const int j = std::uniform_int_distribution<int>(i + 1, m - 1)(rng);
        CHECK(similarity(doc, i, j, index) == similarity(doc, j, i, index));
        ++checked;
    }
}

TEST_CASE("similarity is bounded by the inverse distance") {
    std::mt19937 rng(2718);
    for (int iter = 0; iter < 200; ++iter) {
        const Document doc = testsupport::random_document(rng);
        const int m = doc.sentence_count();
        if (m < 2) {
            continue;
        }
        const CorefIndex index = build_coref_index(doc);
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const double sim = similarity(doc, i, j, index);
                CHECK(sim >= 0.0);
                CHECK(sim <= 1.0 / (j - i));
            }
        }
    }
}

TEST_CASE("adding a chain never lowers an edge weight") {
    std::mt19937 rng(560);
    for (int iter = 0; iter < 200; ++iter) {
        Document doc = testsupport::random_document(rng);
        const int m = doc.sentence_count();
        if (m < 2) {
            continue;
        }
        const CorefIndex before = build_coref_index(doc);
        const int i = std::uniform_int_distribution<int>(0, m - 2)(rng);
        const int j = std::uniform_int_distribution<int>(i + 1, m - 1)(rng);
        const auto old_graph = build_graph(doc, i, j, before);

        cohesion::CorefChain chain;
        chain.chain_id = "added";
        const auto pick = [&](int s) {
            const int n = static_cast<int>(doc.sentences[s].tokens.size());
            const int t = std::uniform_int_distribution<int>(0, n - 1)(rng);
            return cohesion::Mention{s, t, t};
        };
        chain.mentions = {pick(i), pick(j)};
        doc.chains.push_back(chain);
        const CorefIndex after = build_coref_index(doc);
        const auto new_graph = build_graph(doc, i, j, after);

        REQUIRE(new_graph.edges.size() == old_graph.edges.size());
        for (std::size_t e = 0; e < new_graph.edges.size(); ++e) {
            CHECK(new_graph.edges[e].weight >= old_graph.edges[e].weight);
        }
    }
}
