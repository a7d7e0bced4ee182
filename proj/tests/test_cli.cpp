#include <cstdio>
#include <string>

#include "catch_amalgamated.hpp"
#include "json.hpp"

#include "cohesion/json_io.hpp"
#include "cohesion/score.hpp"
#include "oracle.hpp"
#include "support.hpp"

using nlohmann::json;
using testsupport::fixture_path;
using testsupport::run_cli;

TEST_CASE("score prints a coherence report on stdout") {
    const auto result = run_cli("score " + fixture_path("three_sentence.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.err.empty());
    const json report = json::parse(result.out);
    const auto doc = cohesion::read_document_file(fixture_path("three_sentence.json"));
    CHECK(report["coherence"].get<double>() == oracle::coherence(doc));
    CHECK(report["m"] == 3);
}

TEST_CASE("score fails cleanly on a missing file") {
    const auto result = run_cli("score /nonexistent/missing.json");
    CHECK(result.exit_code == 1);
    CHECK(result.out.empty());
    CHECK(result.err.find("/nonexistent/missing.json") != std::string::npos);
}

TEST_CASE("score in annotated-only mode names the bare sentence") {
    const auto result =
        run_cli("score --extractor annotated-only " + fixture_path("bare.json"));
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("sentences[0]") != std::string::npos);
}

TEST_CASE("score heuristics lift bare documents") {
    const auto result = run_cli("score " + fixture_path("bare.json"));
    REQUIRE(result.exit_code == 0);
    const json report = json::parse(result.out);
    CHECK(report["m"] == 2);
}

TEST_CASE("explain rejects formats that do not apply") {
    const auto result =
        run_cli("explain --format csv " + fixture_path("three_sentence.json"));
    CHECK(result.exit_code == 2);
}

TEST_CASE("unknown flags and subcommands are usage errors") {
    CHECK(run_cli("score --no-such-flag x.json").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("explain of a single-sentence document warns and stays empty") {
    const auto result = run_cli("explain " + fixture_path("minimal.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.err.find("single sentence") != std::string::npos);
    const json bundle = json::parse(result.out);
    CHECK(bundle["graphs"].empty());
    CHECK(bundle["report"]["degenerate"] == true);
}

TEST_CASE("explain emits the golden DOT bundle") {
    const auto result = run_cli("explain --format dot " + fixture_path("pair.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out == testsupport::read_file(fixture_path("golden/pair_explain.dot")));
}

TEST_CASE("eval runs reproduce byte-identically from their config") {
    const std::string corpus = testsupport::temp_path("corpus") + ".jsonl";
    REQUIRE(run_cli("gen-corpus --docs 6 --sentences 5 --overlap 0.8 --seed 12 --output " +
                    corpus)
                .exit_code == 0);

    const auto first = run_cli("eval-ddt --seed 42 --perms 12 " + corpus);
    REQUIRE(first.exit_code == 0);
    const auto second = run_cli("eval-ddt --seed 42 --perms 12 " + corpus);
    CHECK(first.out == second.out);

    const auto one_thread = run_cli("eval-ddt --seed 42 --perms 12 --threads 1 " + corpus);
    const auto all_threads = run_cli("eval-ddt --seed 42 --perms 12 --threads 0 " + corpus);
    CHECK(one_thread.out == all_threads.out);
    CHECK(one_thread.out == first.out);

    const auto other_seed = run_cli("eval-ddt --seed 43 --perms 12 " + corpus);
    const json a = json::parse(first.out);
    const json b = json::parse(other_seed.out);
    CHECK(a["config"]["seed"] == 42);
    CHECK(b["config"]["seed"] == 43);

    const auto it_first = run_cli("eval-it --seed 42 " + corpus);
    const auto it_second = run_cli("eval-it --seed 42 --threads 1 " + corpus);
    REQUIRE(it_first.exit_code == 0);
    CHECK(it_first.out == it_second.out);

    const auto csv = run_cli("eval-ddt --seed 42 --perms 12 --format csv " + corpus);
    REQUIRE(csv.exit_code == 0);
    CHECK(csv.out.rfind("doc_id,trials,successes\n", 0) == 0);

    std::remove(corpus.c_str());
}

TEST_CASE("eval over an all-degenerate corpus exits with an error") {
    const std::string corpus = testsupport::temp_path("tiny") + ".jsonl";
    testsupport::write_file(
        corpus, R"({"doc_id":"one","sentences":[{"tokens":[{"surface":"hi"}]}]})"
                "\n");
    const auto result = run_cli("eval-it " + corpus);
    CHECK(result.exit_code == 1);
    CHECK(result.err.find("no documents") != std::string::npos);
    std::remove(corpus.c_str());
}

TEST_CASE("gen-corpus is deterministic and parseable") {
    const auto a = run_cli("gen-corpus --docs 3 --sentences 4 --overlap 0.5 --seed 9");
    const auto b = run_cli("gen-corpus --docs 3 --sentences 4 --overlap 0.5 --seed 9");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    const std::string path = testsupport::temp_path("gen") + ".jsonl";
    testsupport::write_file(path, a.out);
    const auto corpus = cohesion::read_corpus_file(path);
    CHECK(corpus.size() == 3);
    std::remove(path.c_str());

    CHECK(run_cli("gen-corpus --docs 0").exit_code == 1);
    CHECK(run_cli("gen-corpus --overlap 1.5").exit_code == 1);
}

TEST_CASE("the lexicon environment variable is honored") {
    const auto broken = run_cli("score --extractor heuristic-always " + fixture_path("bare.json"),
                                "COHESION_LEXICON=/nonexistent/lexicon.txt ");
    CHECK(broken.exit_code == 1);
    CHECK(broken.err.find("lexicon") != std::string::npos);

    const std::string lexicon = testsupport::temp_path("lex") + ".txt";
    testsupport::write_file(lexicon, "chased\n");
    const auto ok = run_cli("score --extractor heuristic-always " + fixture_path("bare.json"),
                            "COHESION_LEXICON=" + lexicon + " ");
    CHECK(ok.exit_code == 0);
    std::remove(lexicon.c_str());
}

TEST_CASE("reports can be written to a file instead of stdout") {
    const std::string out_path = testsupport::temp_path("report") + ".json";
    const auto result =
        run_cli("score --output " + out_path + " " + fixture_path("three_sentence.json"));
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.empty());
    const json report = json::parse(testsupport::read_file(out_path));
    CHECK(report["doc_id"] == "cat-mouse");
    std::remove(out_path.c_str());
}
