#include <map>
#include <random>
#include <set>
#include <string>

#include "catch_amalgamated.hpp"

#include "cohesion/coref.hpp"
#include "cohesion/json_io.hpp"
#include "support.hpp"

using cohesion::build_coref_index;
using cohesion::CorefIndex;
using cohesion::Document;

namespace {

/// Brute-force restatement: walk all chains x mentions x offsets.
std::map<std::pair<int, int>, std::set<std::string>> brute_force_index(const Document& doc) {
    std::map<std::pair<int, int>, std::set<std::string>> expected;
    for (const auto& chain : doc.chains) {
        for (const auto& mention : chain.mentions) {
            for (int t = mention.start; t <= mention.end; ++t) {
                expected[{mention.sentence_index, t}].insert(chain.chain_id);
            }
        }
    }
    return expected;
}

}  // namespace

TEST_CASE("build_coref_index of a chainless document is empty") {
    const Document doc = cohesion::parse_document(
        R"({"doc_id":"d","sentences":[{"tokens":[{"surface":"a"}]}]})");
    CHECK(build_coref_index(doc).empty());
}

TEST_CASE("build_coref_index expands mention spans") {
    const Document doc = cohesion::parse_document(
        R"({"doc_id":"d","sentences":[
             {"tokens":[{"surface":"a"},{"surface":"b"}]},
             {"tokens":[{"surface":"c"}]},
             {"tokens":[{"surface":"d"},{"surface":"e"},{"surface":"f"},{"surface":"g"}]}],
            "chains":[{"chain_id":"x","mentions":[
             {"sentence":0,"start":0,"end":1},{"sentence":2,"start":3,"end":3}]}]})");
    const CorefIndex index = build_coref_index(doc);
    CHECK(index.size() == 3);
    REQUIRE(index.chains_of(0, 0) != nullptr);
    REQUIRE(index.chains_of(0, 1) != nullptr);
    REQUIRE(index.chains_of(2, 3) != nullptr);
    CHECK(index.chains_of(2, 3)->count("x") == 1);
    CHECK(index.chains_of(1, 0) == nullptr);
    CHECK(index.chains_of(2, 0) == nullptr);
}

TEST_CASE("build_coref_index matches a brute-force span expansion") {
    const Document fixture =
        cohesion::read_document_file(testsupport::fixture_path("three_sentence.json"));
    CHECK(build_coref_index(fixture).entries() == brute_force_index(fixture));

    std::mt19937 rng(5150);
    for (int iter = 0; iter < 200; ++iter) {
        const Document doc = testsupport::random_document(rng);
        CHECK(build_coref_index(doc).entries() == brute_force_index(doc));
    }
}

TEST_CASE("overlapping mentions accumulate every chain id") {
    const Document doc = cohesion::parse_document(
        R"({"doc_id":"d","sentences":[
             {"tokens":[{"surface":"a"},{"surface":"b"}]},{"tokens":[{"surface":"c"}]}],
            "chains":[
             {"chain_id":"x","mentions":[
               {"sentence":0,"start":0,"end":1},{"sentence":1,"start":0,"end":0}]},
             {"chain_id":"y","mentions":[
               {"sentence":0,"start":1,"end":1},{"sentence":1,"start":0,"end":0}]}]})");
    const CorefIndex index = build_coref_index(doc);
    REQUIRE(index.chains_of(0, 1) != nullptr);
    CHECK(index.chains_of(0, 1)->size() == 2);
    REQUIRE(index.chains_of(1, 0) != nullptr);
    CHECK(index.chains_of(1, 0)->size() == 2);
}
