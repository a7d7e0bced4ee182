// Command-line front end: score documents, export cohesion-graph
// explanations, run the discrimination/insertion evaluation protocols, and
// synthesize benchmark corpora.
//
// Exit codes: 0 success, 1 input/validation error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cohesion/cohesion.hpp"

namespace {

struct CommonOptions {
    std::string extractor = "heuristic-fallback";
    std::string lexicon_path;
    std::string output_path;
    std::string format = "json";
    int threads = 0;
};

cohesion::ExtractorConfig extractor_config(const CommonOptions& options) {
    cohesion::ExtractorConfig config;
    config.mode = *cohesion::extractor_mode_from_string(options.extractor);
    config.verb_lexicon_path = options.lexicon_path;
    return config;
}

/// Reports go to --output when given, otherwise to standard output.
class ReportSink {
public:
    explicit ReportSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw cohesion::Error("cannot open output file: " + path);
            }
        }
    }

    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void add_extractor_flags(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--extractor", options.extractor, "Phrase source")
        ->check(CLI::IsMember({"annotated-only", "heuristic-fallback", "heuristic-always"}))
        ->capture_default_str();
    cmd->add_option("--lexicon", options.lexicon_path,
                    "Verb lexicon file for the heuristic extractor")
        ->envname("COHESION_LEXICON");
}

std::vector<cohesion::Document> load_annotated_corpus(const std::string& path,
                                                      const cohesion::ExtractorConfig& config) {
    std::vector<cohesion::Document> corpus = cohesion::read_corpus_file(path);
    for (auto& doc : corpus) {
        doc = cohesion::annotate_document(doc, config);
    }
    return corpus;
}

int run_score(const std::string& input, const CommonOptions& options) {
    const cohesion::Document doc = cohesion::annotate_document(
        cohesion::read_document_file(input), extractor_config(options));
    const cohesion::CoherenceReport report = cohesion::coherence(doc);
    ReportSink sink(options.output_path);
    cohesion::write_coherence_report_json(sink.stream(), report);
    sink.stream() << "\n";
    return 0;
}

int run_explain(const std::string& input, const CommonOptions& options) {
    const cohesion::Document doc = cohesion::annotate_document(
        cohesion::read_document_file(input), extractor_config(options));
    const cohesion::ExplanationBundle bundle = cohesion::explain(doc);
    if (bundle.report.degenerate) {
        std::cerr << "warning: document " << doc.doc_id
                  << " has a single sentence; explanation bundle is empty\n";
    }
    ReportSink sink(options.output_path);
    if (options.format == "dot") {
        cohesion::write_explanation_dot(sink.stream(), bundle);
    } else {
        cohesion::write_explanation_json(sink.stream(), bundle);
    }
    return 0;
}

void warn_skipped(const std::vector<cohesion::Document>& corpus) {
    long skipped = 0;
    for (const auto& doc : corpus) {
        if (doc.sentence_count() < 2) {
            ++skipped;
        }
    }
    if (skipped > 0) {
        std::cerr << "warning: skipped " << skipped
                  << " document(s) with fewer than 2 sentences\n";
    }
}

void write_eval(const cohesion::EvalReport& report, const CommonOptions& options) {
    ReportSink sink(options.output_path);
    if (options.format == "csv") {
        cohesion::write_eval_report_csv(sink.stream(), report);
    } else {
        cohesion::write_eval_report_json(sink.stream(), report);
    }
}

int run_eval_ddt(const std::string& input, const CommonOptions& options,
                 const cohesion::DdtConfig& config) {
    const auto corpus = load_annotated_corpus(input, extractor_config(options));
    warn_skipped(corpus);
    write_eval(cohesion::run_ddt(corpus, config, options.threads), options);
    return 0;
}

int run_eval_it(const std::string& input, const CommonOptions& options,
                const cohesion::ItConfig& config) {
    const auto corpus = load_annotated_corpus(input, extractor_config(options));
    warn_skipped(corpus);
    write_eval(cohesion::run_it(corpus, config, options.threads), options);
    return 0;
}

int run_gen_corpus(int docs, int sentences, double overlap, std::uint64_t seed,
                   const cohesion::SynthesisOptions& synth, const CommonOptions& options) {
    const auto corpus = cohesion::synthesize_corpus(docs, sentences, overlap, seed, synth);
    ReportSink sink(options.output_path);
    for (const auto& doc : corpus) {
        sink.stream() << cohesion::serialize_document(doc) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Text coherence scoring via phrase-level cohesion graphs"};
    app.require_subcommand(1);

    CommonOptions score_opts;
    std::string score_input;
    CLI::App* score = app.add_subcommand("score", "Score one document's coherence");
    score->add_option("input", score_input, "Document JSON file")->required();
    add_extractor_flags(score, score_opts);
    score->add_option("--format", score_opts.format, "Report format")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();
    score->add_option("--output", score_opts.output_path, "Write report to file");

    CommonOptions explain_opts;
    std::string explain_input;
    CLI::App* explain =
        app.add_subcommand("explain", "Export per-pair cohesion graphs with the score");
    explain->add_option("input", explain_input, "Document JSON file")->required();
    add_extractor_flags(explain, explain_opts);
    explain->add_option("--format", explain_opts.format, "Bundle format")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();
    explain->add_option("--output", explain_opts.output_path, "Write bundle to file");

    CommonOptions ddt_opts;
    std::string ddt_input;
    cohesion::DdtConfig ddt_config;
    std::string ddt_tie = "fail";
    CLI::App* ddt = app.add_subcommand("eval-ddt", "Document discrimination task over a corpus");
    ddt->add_option("corpus", ddt_input, "Corpus .jsonl file")->required();
    add_extractor_flags(ddt, ddt_opts);
    ddt->add_option("--seed", ddt_config.seed, "PRNG seed")->capture_default_str();
    ddt->add_option("--perms", ddt_config.permutations_per_doc, "Permutations per document")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ddt->add_option("--tie", ddt_tie, "Tie policy")
        ->check(CLI::IsMember({"fail", "half"}))
        ->capture_default_str();
    ddt->add_option("--format", ddt_opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    ddt->add_option("--output", ddt_opts.output_path, "Write report to file");
    ddt->add_option("--threads", ddt_opts.threads, "Worker cap (0 = machine parallelism)")
        ->capture_default_str();

    CommonOptions it_opts;
    std::string it_input;
    cohesion::ItConfig it_config;
    std::string it_tie = "fail";
    CLI::App* it = app.add_subcommand("eval-it", "Insertion task over a corpus");
    it->add_option("corpus", it_input, "Corpus .jsonl file")->required();
    add_extractor_flags(it, it_opts);
    it->add_option("--seed", it_config.seed, "Echoed in the report; IT is exhaustive")
        ->capture_default_str();
    it->add_option("--tie", it_tie, "Tie policy")
        ->check(CLI::IsMember({"fail", "half"}))
        ->capture_default_str();
    it->add_option("--format", it_opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    it->add_option("--output", it_opts.output_path, "Write report to file");
    it->add_option("--threads", it_opts.threads, "Worker cap (0 = machine parallelism)")
        ->capture_default_str();

    CommonOptions gen_opts;
    int gen_docs = 10;
    int gen_sentences = 6;
    double gen_overlap = 0.9;
    std::uint64_t gen_seed = 0;
    cohesion::SynthesisOptions synth;
    CLI::App* gen = app.add_subcommand("gen-corpus", "Synthesize a chained benchmark corpus");
    gen->add_option("--docs", gen_docs, "Number of documents")->capture_default_str();
    gen->add_option("--sentences", gen_sentences, "Sentences per document (M >= 3)")
        ->capture_default_str();
    gen->add_option("--overlap", gen_overlap, "Fraction of shared neighbor vocabulary [0,1]")
        ->capture_default_str();
    gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
    gen->add_option("--words", synth.words_per_sentence, "Base words per sentence")
        ->capture_default_str();
    gen->add_flag("--long-chain", synth.long_chain,
                  "Add a coreference chain linking the first and last sentences");
    gen->add_option("--output", gen_opts.output_path, "Write corpus to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (score->parsed()) {
            return run_score(score_input, score_opts);
        }
        if (explain->parsed()) {
            return run_explain(explain_input, explain_opts);
        }
        if (ddt->parsed()) {
            ddt_config.tie_policy = *cohesion::tie_policy_from_string(ddt_tie);
            return run_eval_ddt(ddt_input, ddt_opts, ddt_config);
        }
        if (it->parsed()) {
            it_config.tie_policy = *cohesion::tie_policy_from_string(it_tie);
            return run_eval_it(it_input, it_opts, it_config);
        }
        if (gen->parsed()) {
            return run_gen_corpus(gen_docs, gen_sentences, gen_overlap, gen_seed, synth,
                                  gen_opts);
        }
    } catch (const cohesion::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
