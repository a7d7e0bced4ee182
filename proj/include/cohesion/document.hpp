#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohesion/error.hpp"
#include "cohesion/unicode.hpp"

namespace cohesion {

/// One surface unit of a sentence. `key` is the normalized comparison form
/// (lemma preferred over surface) and is what all element-set arithmetic
/// operates on.
struct Token {
    int sentence_index = 0;
    int token_index = 0;
    std::string surface;
    std::optional<std::string> lemma;
    std::string key;

    friend bool operator==(const Token&, const Token&) = default;
};

/// A subject/relation/object triple of token references, sentence-local.
/// The element set of the tuple is the union of the keys of all referenced
/// tokens across the three roles.
struct PhraseTuple {
    std::vector<int> subject;
    std::vector<int> relation;
    std::vector<int> object;

    friend bool operator==(const PhraseTuple&, const PhraseTuple&) = default;
};

struct Sentence {
    int index = 0;
    std::vector<Token> tokens;
    std::vector<PhraseTuple> phrases;

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// A contiguous token span [start, end] (inclusive) inside one sentence.
struct Mention {
    int sentence_index = 0;
    int start = 0;
    int end = 0;

    friend bool operator==(const Mention&, const Mention&) = default;
};

struct CorefChain {
    std::string chain_id;
    std::vector<Mention> mentions;

    friend bool operator==(const CorefChain&, const CorefChain&) = default;
};

struct Document {
    std::string doc_id;
    std::optional<std::string> language;
    std::vector<Sentence> sentences;
    std::vector<CorefChain> chains;

    int sentence_count() const { return static_cast<int>(sentences.size()); }

    friend bool operator==(const Document&, const Document&) = default;
};

namespace detail {

inline std::string at(const std::string& base, const char* field) {
    return base.empty() ? std::string(field) : base + "." + field;
}

inline std::string idx(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

}  // namespace detail

/// Checks every declared invariant, throwing ValidationError with the path
/// of the first violation. Token keys are assumed to be already computed.
inline void validate(const Document& doc) {
    using detail::at;
    using detail::idx;
    if (doc.sentences.empty()) {
        throw ValidationError("sentences: document must contain at least one sentence");
    }
    for (std::size_t si = 0; si < doc.sentences.size(); ++si) {
        const Sentence& s = doc.sentences[si];
        const std::string spath = idx("sentences", si);
        if (s.index != static_cast<int>(si)) {
            throw ValidationError(at(spath, "index") + ": expected " + std::to_string(si) +
                                  ", got " + std::to_string(s.index));
        }
        if (s.tokens.empty()) {
            throw ValidationError(at(spath, "tokens") + ": sentence has no tokens");
        }
        for (std::size_t ti = 0; ti < s.tokens.size(); ++ti) {
            const Token& t = s.tokens[ti];
            const std::string tpath = idx(at(spath, "tokens"), ti);
            if (t.surface.empty()) {
                throw ValidationError(at(tpath, "surface") + ": empty");
            }
            if (t.lemma && t.lemma->empty()) {
                throw ValidationError(at(tpath, "lemma") + ": empty");
            }
            if (t.sentence_index != static_cast<int>(si)) {
                throw ValidationError(at(tpath, "sentence_index") + ": expected " +
                                      std::to_string(si) + ", got " +
                                      std::to_string(t.sentence_index));
            }
            if (t.token_index != static_cast<int>(ti)) {
                throw ValidationError(at(tpath, "token_index") + ": expected " +
                                      std::to_string(ti) + ", got " +
                                      std::to_string(t.token_index));
            }
            if (t.key.empty()) {
                throw ValidationError(at(tpath, "key") + ": empty");
            }
            if (t.key != normalize(t.lemma ? *t.lemma : t.surface)) {
                throw ValidationError(at(tpath, "key") + ": does not match normalize(" +
                                      (t.lemma ? "lemma" : "surface") + ")");
            }
        }
        for (std::size_t pi = 0; pi < s.phrases.size(); ++pi) {
            const PhraseTuple& p = s.phrases[pi];
            const std::string ppath = idx(at(spath, "phrases"), pi);
            std::vector<bool> seen(s.tokens.size(), false);
            const auto check_role = [&](const std::vector<int>& role, const char* name) {
                for (std::size_t k = 0; k < role.size(); ++k) {
                    const int ti = role[k];
                    const std::string rpath = idx(at(ppath, name), k);
                    if (ti < 0 || ti >= static_cast<int>(s.tokens.size())) {
                        throw ValidationError(rpath + ": token index " + std::to_string(ti) +
                                              " out of range");
                    }
                    if (seen[ti]) {
                        throw ValidationError(rpath + ": token index " + std::to_string(ti) +
                                              " appears in more than one role");
                    }
                    seen[ti] = true;
                }
            };
            check_role(p.subject, "subject");
            check_role(p.relation, "relation");
            check_role(p.object, "object");
            if (p.subject.empty() && p.relation.empty() && p.object.empty()) {
                throw ValidationError(ppath + ": all three roles are empty");
            }
        }
    }
    for (std::size_t ci = 0; ci < doc.chains.size(); ++ci) {
        const CorefChain& chain = doc.chains[ci];
        const std::string cpath = detail::idx("chains", ci);
        if (chain.mentions.size() < 2) {
            throw ValidationError(at(cpath, "mentions") + ": chain needs at least 2 mentions");
        }
        for (std::size_t mi = 0; mi < chain.mentions.size(); ++mi) {
            const Mention& m = chain.mentions[mi];
            const std::string mpath = idx(at(cpath, "mentions"), mi);
            if (m.sentence_index < 0 || m.sentence_index >= doc.sentence_count()) {
                throw ValidationError(at(mpath, "sentence") + ": index " +
                                      std::to_string(m.sentence_index) + " out of range");
            }
            const auto token_count =
                static_cast<int>(doc.sentences[m.sentence_index].tokens.size());
            if (m.start < 0 || m.start > m.end) {
                throw ValidationError(at(mpath, "start") + ": invalid span [" +
                                      std::to_string(m.start) + "," + std::to_string(m.end) +
                                      "]");
            }
            if (m.end >= token_count) {
                throw ValidationError(at(mpath, "end") + ": " + std::to_string(m.end) +
                                      " past last token " + std::to_string(token_count - 1));
            }
        }
    }
}

/// Reorders sentences so that new position k holds old sentence order[k].
/// Sentence indices, token sentence_index fields, and mention sentence
/// references are remapped consistently; phrase token references are
/// sentence-local and stay unchanged.
inline Document permute_document(const Document& doc, const std::vector<int>& order) {
    const int m = doc.sentence_count();
    if (static_cast<int>(order.size()) != m) {
        throw ValidationError("order: expected length " + std::to_string(m) + ", got " +
                              std::to_string(order.size()));
    }
    std::vector<int> new_index_of(m, -1);
    for (int pos = 0; pos < m; ++pos) {
        const int old = order[pos];
        if (old < 0 || old >= m) {
            throw ValidationError(detail::idx("order", pos) + ": value " + std::to_string(old) +
                                  " out of range");
        }
        if (new_index_of[old] != -1) {
            throw ValidationError(detail::idx("order", pos) + ": value " + std::to_string(old) +
                                  " repeated; order is not a permutation");
        }
        new_index_of[old] = pos;
    }
    Document out;
    out.doc_id = doc.doc_id;
    out.language = doc.language;
    out.sentences.reserve(doc.sentences.size());
    for (int pos = 0; pos < m; ++pos) {
        Sentence s = doc.sentences[order[pos]];
        s.index = pos;
        for (Token& t : s.tokens) {
            t.sentence_index = pos;
        }
        out.sentences.push_back(std::move(s));
    }
    out.chains = doc.chains;
    for (CorefChain& chain : out.chains) {
        for (Mention& mention : chain.mentions) {
            mention.sentence_index = new_index_of[mention.sentence_index];
        }
    }
    return out;
}

}  // namespace cohesion
