#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "catch_amalgamated.hpp"
#include "json.hpp"

#include "cohesion/document.hpp"
#include "cohesion/json_io.hpp"
#include "support.hpp"

using cohesion::Document;
using cohesion::parse_document;
using cohesion::permute_document;
using nlohmann::json;

TEST_CASE("parse_document accepts a minimal document") {
    const Document doc =
        parse_document(R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"Hi"}]}]})");
    CHECK(doc.sentence_count() == 1);
    CHECK(doc.sentences[0].tokens[0].key == "hi");
    CHECK(doc.sentences[0].phrases.empty());
}

TEST_CASE("parse_document computes keys from lemma when present") {
    const Document doc = parse_document(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"ran","lemma":"Run"}]}]})");
    CHECK(doc.sentences[0].tokens[0].key == "run");
}

TEST_CASE("parse_document loads the three-sentence fixture") {
    const Document doc =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    CHECK(doc.sentence_count() == 3);
    CHECK(doc.chains.size() == 2);
    CHECK(doc.sentences[1].tokens.size() == 7);
}

TEST_CASE("parse_document reports malformed JSON with a byte offset") {
    try {
        parse_document("{\"doc_id\": \"d\", ");
        FAIL("expected ParseError");
    } catch (const cohesion::ParseError& e) {
        CHECK(e.byte_offset() > 0);
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("parse_document names the offending path") {
    const auto expect_path = [](const std::string& body, const std::string& path) {
        try {
            parse_document(body);
            FAIL("expected ValidationError for " << path);
        } catch (const cohesion::ValidationError& e) {
            INFO(e.what());
            CHECK(std::string(e.what()).find(path) != std::string::npos);
        }
    };

    // mention end < start
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"},{"surface":"b"}]}],
            "chains":[{"chain_id":"c","mentions":[
              {"sentence":0,"start":1,"end":0},{"sentence":0,"start":0,"end":0}]}]})",
        "chains[0].mentions[0].start");
    // phrase index out of range
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}],
            "phrases":[{"subject":[0],"relation":[],"object":[7]}]}]})",
        "sentences[0].phrases[0].object[0]");
    // duplicated token across roles
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}],
            "phrases":[{"subject":[0],"relation":[0],"object":[]}]}]})",
        "sentences[0].phrases[0].relation[0]");
    // empty tuple
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}],
            "phrases":[{"subject":[],"relation":[],"object":[]}]}]})",
        "sentences[0].phrases[0]");
    // empty surface
    expect_path(R"({"doc_id":"d","sentences":[{"tokens":[{"surface":""}]}]})",
                "sentences[0].tokens[0].surface");
    // chain with a single mention
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}]}],
            "chains":[{"chain_id":"c","mentions":[{"sentence":0,"start":0,"end":0}]}]})",
        "chains[0].mentions");
    // mention citing a missing sentence
    expect_path(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}]}],
            "chains":[{"chain_id":"c","mentions":[
              {"sentence":0,"start":0,"end":0},{"sentence":3,"start":0,"end":0}]}]})",
        "chains[0].mentions[1].sentence");
    // no sentences at all
    expect_path(R"({"doc_id":"d","sentences":[]})", "sentences");
    // missing required field
    expect_path(R"({"doc_id":"d","sentences":[{"tokens":[{}]}]})",
                "sentences[0].tokens[0].surface");
}

TEST_CASE("parse/serialize round trip is the identity") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const Document doc = testsupport::random_document(rng);
        const Document again = parse_document(cohesion::serialize_document(doc));
        CHECK(again == doc);
    }
    const Document fixture =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    CHECK(parse_document(cohesion::serialize_document(fixture)) == fixture);
}

TEST_CASE("validation rejects mutated documents") {
    const std::string base =
        testsupport::read_file(testsupport::fixture_path("three_sentence.json"));
    const auto mutate = [&](const std::function<void(json&)>& fn) {
        json j = json::parse(base);
        fn(j);
        return j.dump();
    };
    CHECK_THROWS_AS(
        parse_document(mutate([](json& j) { j["sentences"][0]["tokens"][1]["surface"] = ""; })),
        cohesion::ValidationError);
    CHECK_THROWS_AS(parse_document(mutate([](json& j) {
                        j["sentences"][2]["phrases"][0]["subject"].push_back(99);
                    })),
                    cohesion::ValidationError);
    CHECK_THROWS_AS(parse_document(mutate([](json& j) {
                        j["chains"][1]["mentions"][0]["end"] = 50;
                    })),
                    cohesion::ValidationError);
    CHECK_THROWS_AS(parse_document(mutate([](json& j) { j["sentences"] = json::array(); })),
                    cohesion::ValidationError);
    CHECK_THROWS_AS(parse_document(mutate([](json& j) {
                        j["chains"][0]["mentions"] = json::array(
                            {{{"sentence", 0}, {"start", 0}, {"end", 0}}});
                    })),
                    cohesion::ValidationError);
}

TEST_CASE("permute_document identity returns an equal document") {
    const Document doc =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    CHECK(permute_document(doc, {0, 1, 2}) == doc);
}

TEST_CASE("permute_document swaps sentences and remaps mentions") {
    const Document doc = parse_document(
        R"({"doc_id":"d","sentences":[
             {"tokens":[{"surface":"a"},{"surface":"b"}]},
             {"tokens":[{"surface":"c"}]}],
            "chains":[{"chain_id":"x","mentions":[
             {"sentence":0,"start":0,"end":1},{"sentence":1,"start":0,"end":0}]}]})");
    const Document swapped = permute_document(doc, {1, 0});
    CHECK(swapped.sentences[0].tokens[0].surface == "c");
    CHECK(swapped.sentences[0].index == 0);
    CHECK(swapped.sentences[1].tokens[0].sentence_index == 1);
    // the old sentence-0 mention now cites index 1
    CHECK(swapped.chains[0].mentions[0].sentence_index == 1);
    CHECK(swapped.chains[0].mentions[1].sentence_index == 0);
    cohesion::validate(swapped);
}

TEST_CASE("permute_document composed with its inverse is the identity") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        const Document doc = testsupport::random_document(rng);
        const int m = doc.sentence_count();
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> inverse(m);
        for (int pos = 0; pos < m; ++pos) {
            inverse[order[pos]] = pos;
        }
        const Document there = permute_document(doc, order);
        cohesion::validate(there);
        CHECK(permute_document(there, inverse) == doc);
    }
}

TEST_CASE("permute_document rejects non-permutations") {
    const Document doc =
        parse_document(R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}]}]})");
    CHECK_THROWS_AS(permute_document(doc, {0, 0}), cohesion::ValidationError);
    CHECK_THROWS_AS(permute_document(doc, {}), cohesion::ValidationError);
    CHECK_THROWS_AS(permute_document(doc, {1}), cohesion::ValidationError);
}

TEST_CASE("read_corpus reports the offending line") {
    const std::string path = testsupport::temp_path("corpus");
    testsupport::write_file(path,
                            "{\"doc_id\":\"a\",\"sentences\":[{\"tokens\":[{\"surface\":\"x\"}]}]}\n"
                            "\n"
                            "{\"doc_id\":\"b\",\"sentences\":[]}\n");
    try {
        cohesion::read_corpus_file(path);
        FAIL("expected ValidationError");
    } catch (const cohesion::ValidationError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::remove(path.c_str());
}
