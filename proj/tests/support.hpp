#pragma once

// Shared helpers for the test suites: fixture paths, CLI subprocess
// execution, temp files, and randomized document generators.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cohesion/document.hpp"

#ifndef COHESION_CLI_PATH
#define COHESION_CLI_PATH "cohesion"
#endif
#ifndef COHESION_FIXTURES_DIR
#define COHESION_FIXTURES_DIR "fixtures"
#endif

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
    return std::string(COHESION_FIXTURES_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

/// Unique path under the system temp directory; not created.
inline std::string temp_path(const std::string& stem) {
    static int counter = 0;
    return (std::filesystem::temp_directory_path() /
            (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++)))
        .string();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Runs the CLI binary with `args` appended, capturing stdout/stderr.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = temp_path("cli-out");
    const std::string err_path = temp_path("cli-err");
    const std::string command = env_prefix + std::string(COHESION_CLI_PATH) + " " + args +
                                " >" + out_path + " 2>" + err_path;
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = read_file(out_path);
    result.err = read_file(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

/// Builds a valid token whose key equals its surface (lowercase alnum).
inline cohesion::Token make_token(int sentence, int index, const std::string& word) {
    cohesion::Token token;
    token.sentence_index = sentence;
    token.token_index = index;
    token.surface = word;
    token.key = word;
    return token;
}

/// One sentence whose tokens are `words` and whose phrases are given as
/// index lists split subject/relation/object.
inline cohesion::Sentence make_sentence(int index, const std::vector<std::string>& words,
                                        std::vector<cohesion::PhraseTuple> phrases = {}) {
    cohesion::Sentence sentence;
    sentence.index = index;
    for (std::size_t t = 0; t < words.size(); ++t) {
        sentence.tokens.push_back(make_token(index, static_cast<int>(t), words[t]));
    }
    sentence.phrases = std::move(phrases);
    return sentence;
}

/// A phrase over all tokens of a sentence (subject role).
inline cohesion::PhraseTuple all_subject(std::size_t token_count) {
    cohesion::PhraseTuple tuple;
    for (std::size_t t = 0; t < token_count; ++t) {
        tuple.subject.push_back(static_cast<int>(t));
    }
    return tuple;
}

/// Randomized valid document: M sentences of 3..8 tokens over a 12-word
/// alphabet, 1..max_tuples phrases per sentence with disjoint roles, and
/// 0..2 coreference chains with valid spans.
inline cohesion::Document random_document(std::mt19937& rng, int max_sentences = 6,
                                          int max_tuples = 3, bool with_chains = true) {
    static const std::array<std::string, 12> kAlphabet = {
        "alpha", "bravo", "carol", "delta", "echo", "fox",
        "golf", "hotel", "india", "julia", "kilo", "lima"};
    std::uniform_int_distribution<int> m_dist(1, max_sentences);
    std::uniform_int_distribution<int> word_dist(0, 11);

    cohesion::Document doc;
    doc.doc_id = "random-" + std::to_string(rng());
    const int m = m_dist(rng);
    for (int s = 0; s < m; ++s) {
        std::uniform_int_distribution<int> len_dist(3, 8);
        const int n = len_dist(rng);
        std::vector<std::string> words;
        words.reserve(n);
        for (int t = 0; t < n; ++t) {
            words.push_back(kAlphabet[word_dist(rng)]);
        }
        cohesion::Sentence sentence = make_sentence(s, words);
        std::uniform_int_distribution<int> tuple_dist(1, max_tuples);
        const int tuples = tuple_dist(rng);
        for (int k = 0; k < tuples; ++k) {
            std::vector<int> indices(n);
            for (int t = 0; t < n; ++t) {
                indices[t] = t;
            }
            std::shuffle(indices.begin(), indices.end(), rng);
            std::uniform_int_distribution<int> take_dist(1, n);
            const int take = take_dist(rng);
            cohesion::PhraseTuple tuple;
            for (int t = 0; t < take; ++t) {
                const int bucket = std::uniform_int_distribution<int>(0, 2)(rng);
                if (bucket == 0) {
                    tuple.subject.push_back(indices[t]);
                } else if (bucket == 1) {
                    tuple.relation.push_back(indices[t]);
                } else {
                    tuple.object.push_back(indices[t]);
                }
            }
            sentence.phrases.push_back(std::move(tuple));
        }
        doc.sentences.push_back(std::move(sentence));
    }
    if (with_chains && m >= 2) {
        std::uniform_int_distribution<int> chain_count_dist(0, 2);
        const int chains = chain_count_dist(rng);
        for (int c = 0; c < chains; ++c) {
            cohesion::CorefChain chain;
            chain.chain_id = "chain-" + std::to_string(c);
            std::uniform_int_distribution<int> mention_dist(2, 3);
            const int mentions = mention_dist(rng);
            for (int k = 0; k < mentions; ++k) {
                std::uniform_int_distribution<int> s_dist(0, m - 1);
                const int s = s_dist(rng);
                const int n = static_cast<int>(doc.sentences[s].tokens.size());
                std::uniform_int_distribution<int> start_dist(0, n - 1);
                const int start = start_dist(rng);
                std::uniform_int_distribution<int> end_dist(start, n - 1);
                chain.mentions.push_back({s, start, end_dist(rng)});
            }
            doc.chains.push_back(std::move(chain));
        }
    }
    return doc;
}

}  // namespace testsupport
