#include <random>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "cohesion/extract.hpp"
#include "cohesion/json_io.hpp"
#include "support.hpp"

using cohesion::ExtractorConfig;
using cohesion::ExtractorMode;
using cohesion::PhraseTuple;
using cohesion::Sentence;
using cohesion::VerbLexicon;
using testsupport::make_sentence;

namespace {

/// Independent restatement of the scan rule: first lexicon verb starts the
/// relation, the relation extends while tokens stay in the lexicon,
/// everything before is subject and everything after is object.
PhraseTuple reference_scan(const Sentence& sentence, const VerbLexicon& lexicon) {
    PhraseTuple expected;
    const int n = static_cast<int>(sentence.tokens.size());
    int first = -1;
    for (int t = 0; t < n && first < 0; ++t) {
        if (lexicon.count(sentence.tokens[t].key) > 0) {
            first = t;
        }
    }
    if (first < 0) {
        for (int t = 0; t < n; ++t) {
            expected.subject.push_back(t);
        }
        return expected;
    }
    int last = first;
    while (last + 1 < n && lexicon.count(sentence.tokens[last + 1].key) > 0) {
        ++last;
    }
    for (int t = 0; t < first; ++t) {
        expected.subject.push_back(t);
    }
    for (int t = first; t <= last; ++t) {
        expected.relation.push_back(t);
    }
    for (int t = last + 1; t < n; ++t) {
        expected.object.push_back(t);
    }
    return expected;
}

}  // namespace

TEST_CASE("heuristic splits around the first lexicon verb") {
    const Sentence s = make_sentence(0, {"the", "cat", "chased", "the", "mouse"});
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    const auto tuples = extract_phrases(s, config);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0].subject == std::vector<int>{0, 1});
    CHECK(tuples[0].relation == std::vector<int>{2});
    CHECK(tuples[0].object == std::vector<int>{3, 4});
}

TEST_CASE("heuristic emits an all-subject tuple when no verb matches") {
    const Sentence s = make_sentence(0, {"red", "apples"});
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    const auto tuples = extract_phrases(s, config);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0].subject == std::vector<int>{0, 1});
    CHECK(tuples[0].relation.empty());
    CHECK(tuples[0].object.empty());
}

TEST_CASE("heuristic takes the maximal contiguous verb run") {
    const Sentence s = make_sentence(0, {"they", "have", "been", "running", "home"});
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    const auto tuples = extract_phrases(s, config);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0].subject == std::vector<int>{0});
    CHECK(tuples[0].relation == std::vector<int>{1, 2, 3});
    CHECK(tuples[0].object == std::vector<int>{4});
}

TEST_CASE("heuristic handles a sentence-initial verb") {
    const Sentence s = make_sentence(0, {"run", "home"});
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    const auto tuples = extract_phrases(s, config);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0].subject.empty());
    CHECK(tuples[0].relation == std::vector<int>{0});
    CHECK(tuples[0].object == std::vector<int>{1});
}

TEST_CASE("annotated-only errors on a bare sentence") {
    const Sentence s = make_sentence(4, {"red", "apples"});
    ExtractorConfig config;
    config.mode = ExtractorMode::kAnnotatedOnly;
    try {
        extract_phrases(s, config);
        FAIL("expected MissingAnnotationError");
    } catch (const cohesion::MissingAnnotationError& e) {
        CHECK(e.sentence_index() == 4);
        CHECK(std::string(e.what()).find("sentences[4]") != std::string::npos);
    }
}

TEST_CASE("heuristic-fallback keeps existing annotations") {
    Sentence s = make_sentence(0, {"the", "cat", "chased", "the", "mouse"});
    PhraseTuple custom;
    custom.subject = {1};
    custom.object = {4};
    s.phrases = {custom};
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicFallback;
    CHECK(extract_phrases(s, config) == s.phrases);
}

TEST_CASE("heuristic matches an independent restatement of the rule") {
    std::mt19937 rng(321);
    const std::vector<std::string> vocabulary = {"is",   "was",  "ran", "cat", "dog",
                                                 "tree", "blue", "saw", "run", "home"};
    for (int iter = 0; iter < 300; ++iter) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        std::vector<std::string> words;
        for (int t = 0; t < n; ++t) {
            words.push_back(
                vocabulary[std::uniform_int_distribution<std::size_t>(0, 9)(rng)]);
        }
        VerbLexicon lexicon;
        for (const std::string& w : vocabulary) {
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                lexicon.insert(w);
            }
        }
        const Sentence s = make_sentence(0, words);
        const PhraseTuple got = cohesion::detail::heuristic_tuple(s, lexicon);
        const PhraseTuple expected = reference_scan(s, lexicon);
        CHECK(got == expected);
    }
}

TEST_CASE("annotate_document fills only bare sentences in fallback mode") {
    const cohesion::Document doc =
        cohesion::read_document_file(testsupport::fixture_path("bare.json"));
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicFallback;
    const cohesion::Document annotated = annotate_document(doc, config);
    REQUIRE(annotated.sentences[0].phrases.size() == 1);
    REQUIRE(annotated.sentences[1].phrases.size() == 1);
    CHECK(annotated.sentences[0].phrases[0].relation == std::vector<int>{2});
    // idempotent: a second pass changes nothing
    CHECK(annotate_document(annotated, config) == annotated);
    // tokens and chains untouched
    CHECK(annotated.sentences[0].tokens == doc.sentences[0].tokens);
    CHECK(annotated.chains == doc.chains);
    cohesion::validate(annotated);
}

TEST_CASE("annotate_document leaves fully annotated documents unchanged") {
    const cohesion::Document doc =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    ExtractorConfig fallback;
    fallback.mode = ExtractorMode::kHeuristicFallback;
    CHECK(annotate_document(doc, fallback) == doc);
    ExtractorConfig annotated_only;
    annotated_only.mode = ExtractorMode::kAnnotatedOnly;
    CHECK(annotate_document(doc, annotated_only) == doc);
}

TEST_CASE("annotate_document propagates the sentence index on error") {
    const cohesion::Document doc =
        cohesion::read_document_file(testsupport::fixture_path("bare.json"));
    ExtractorConfig config;
    config.mode = ExtractorMode::kAnnotatedOnly;
    CHECK_THROWS_AS(annotate_document(doc, config), cohesion::MissingAnnotationError);
}

TEST_CASE("extracted tuples always satisfy the phrase invariants") {
    std::mt19937 rng(11);
    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    for (int iter = 0; iter < 100; ++iter) {
        cohesion::Document doc = testsupport::random_document(rng, 4, 1);
        for (auto& sentence : doc.sentences) {
            sentence.phrases.clear();
        }
        const cohesion::Document annotated = annotate_document(doc, config);
        cohesion::validate(annotated);
        for (const auto& sentence : annotated.sentences) {
            REQUIRE(sentence.phrases.size() == 1);
        }
    }
}

TEST_CASE("lexicon files support comments and blank lines") {
    const std::string path = testsupport::temp_path("lexicon");
    testsupport::write_file(path, "# comment\n\nzoomed\nflew  \nWALKED\n");
    const VerbLexicon lexicon = cohesion::load_verb_lexicon_file(path);
    CHECK(lexicon.count("zoomed") == 1);
    CHECK(lexicon.count("flew") == 1);
    CHECK(lexicon.count("walked") == 1);  // normalized on load
    CHECK(lexicon.count("# comment") == 0);
    std::remove(path.c_str());

    ExtractorConfig config;
    config.mode = ExtractorMode::kHeuristicAlways;
    config.verb_lexicon_path = "/nonexistent/lexicon.txt";
    const Sentence s = make_sentence(0, {"a", "b"});
    CHECK_THROWS_AS(extract_phrases(s, config), cohesion::Error);
}
