#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cohesion/document.hpp"
#include "cohesion/error.hpp"

namespace cohesion {

namespace detail {

using nlohmann::json;

inline const json& require(const json& obj, const char* field, const std::string& path) {
    const auto it = obj.find(field);
    if (it == obj.end()) {
        throw ValidationError(at(path, field) + ": missing");
    }
    return *it;
}

inline std::string require_string(const json& obj, const char* field,
                                  const std::string& path) {
    const json& v = require(obj, field, path);
    if (!v.is_string()) {
        throw ValidationError(at(path, field) + ": expected string");
    }
    return v.get<std::string>();
}

inline int require_int(const json& obj, const char* field, const std::string& path) {
    const json& v = require(obj, field, path);
    if (!v.is_number_integer()) {
        throw ValidationError(at(path, field) + ": expected integer");
    }
    return v.get<int>();
}

inline const json& require_array(const json& obj, const char* field,
                                 const std::string& path) {
    const json& v = require(obj, field, path);
    if (!v.is_array()) {
        throw ValidationError(at(path, field) + ": expected array");
    }
    return v;
}

inline std::vector<int> int_list(const json& arr, const std::string& path) {
    std::vector<int> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer()) {
            throw ValidationError(idx(path, i) + ": expected integer");
        }
        out.push_back(arr[i].get<int>());
    }
    return out;
}

}  // namespace detail

/// Parses and validates one document from UTF-8 JSON bytes. Token keys are
/// computed here; phrase lists may be absent (extraction fills them later).
inline Document parse_document(std::string_view bytes) {
    using nlohmann::json;
    json root;
    try {
        root = json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what(),
                         e.byte);
    }
    if (!root.is_object()) {
        throw ValidationError("document: expected JSON object");
    }

    Document doc;
    doc.doc_id = detail::require_string(root, "doc_id", "");
    if (const auto it = root.find("language"); it != root.end() && !it->is_null()) {
        if (!it->is_string()) {
            throw ValidationError("language: expected string");
        }
        doc.language = it->get<std::string>();
    }

    const json& sentences = detail::require_array(root, "sentences", "");
    for (std::size_t si = 0; si < sentences.size(); ++si) {
        const std::string spath = detail::idx("sentences", si);
        const json& snode = sentences[si];
        if (!snode.is_object()) {
            throw ValidationError(spath + ": expected object");
        }
        Sentence s;
        s.index = static_cast<int>(si);
        const json& tokens = detail::require_array(snode, "tokens", spath);
        for (std::size_t ti = 0; ti < tokens.size(); ++ti) {
            const std::string tpath = detail::idx(detail::at(spath, "tokens"), ti);
            const json& tnode = tokens[ti];
            if (!tnode.is_object()) {
                throw ValidationError(tpath + ": expected object");
            }
            Token t;
            t.sentence_index = static_cast<int>(si);
            t.token_index = static_cast<int>(ti);
            t.surface = detail::require_string(tnode, "surface", tpath);
            if (const auto it = tnode.find("lemma"); it != tnode.end() && !it->is_null()) {
                if (!it->is_string()) {
                    throw ValidationError(detail::at(tpath, "lemma") + ": expected string");
                }
                t.lemma = it->get<std::string>();
            }
            if (t.surface.empty()) {
                throw ValidationError(detail::at(tpath, "surface") + ": empty");
            }
            if (t.lemma && t.lemma->empty()) {
                throw ValidationError(detail::at(tpath, "lemma") + ": empty");
            }
            t.key = normalize(t.lemma ? *t.lemma : t.surface);
            s.tokens.push_back(std::move(t));
        }
        if (const auto it = snode.find("phrases"); it != snode.end() && !it->is_null()) {
            if (!it->is_array()) {
                throw ValidationError(detail::at(spath, "phrases") + ": expected array");
            }
            for (std::size_t pi = 0; pi < it->size(); ++pi) {
                const std::string ppath = detail::idx(detail::at(spath, "phrases"), pi);
                const nlohmann::json& pnode = (*it)[pi];
                if (!pnode.is_object()) {
                    throw ValidationError(ppath + ": expected object");
                }
                PhraseTuple p;
                p.subject =
                    detail::int_list(detail::require_array(pnode, "subject", ppath),
                                     detail::at(ppath, "subject"));
                p.relation =
                    detail::int_list(detail::require_array(pnode, "relation", ppath),
                                     detail::at(ppath, "relation"));
                p.object = detail::int_list(detail::require_array(pnode, "object", ppath),
                                            detail::at(ppath, "object"));
                s.phrases.push_back(std::move(p));
            }
        }
        doc.sentences.push_back(std::move(s));
    }

    if (const auto it = root.find("chains"); it != root.end() && !it->is_null()) {
        if (!it->is_array()) {
            throw ValidationError("chains: expected array");
        }
        for (std::size_t ci = 0; ci < it->size(); ++ci) {
            const std::string cpath = detail::idx("chains", ci);
            const nlohmann::json& cnode = (*it)[ci];
            if (!cnode.is_object()) {
                throw ValidationError(cpath + ": expected object");
            }
            CorefChain chain;
            chain.chain_id = detail::require_string(cnode, "chain_id", cpath);
            const nlohmann::json& mentions = detail::require_array(cnode, "mentions", cpath);
            for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
                const std::string mpath = detail::idx(detail::at(cpath, "mentions"), mi);
                const nlohmann::json& mnode = mentions[mi];
                if (!mnode.is_object()) {
                    throw ValidationError(mpath + ": expected object");
                }
                Mention m;
                m.sentence_index = detail::require_int(mnode, "sentence", mpath);
                m.start = detail::require_int(mnode, "start", mpath);
                m.end = detail::require_int(mnode, "end", mpath);
                chain.mentions.push_back(m);
            }
            doc.chains.push_back(std::move(chain));
        }
    }

    validate(doc);
    return doc;
}

inline nlohmann::json document_to_json(const Document& doc) {
    using nlohmann::json;
    json root;
    root["doc_id"] = doc.doc_id;
    if (doc.language) {
        root["language"] = *doc.language;
    }
    json sentences = json::array();
    for (const Sentence& s : doc.sentences) {
        json snode;
        json tokens = json::array();
        for (const Token& t : s.tokens) {
            json tnode;
            tnode["surface"] = t.surface;
            if (t.lemma) {
                tnode["lemma"] = *t.lemma;
            }
            tokens.push_back(std::move(tnode));
        }
        snode["tokens"] = std::move(tokens);
        if (!s.phrases.empty()) {
            json phrases = json::array();
            for (const PhraseTuple& p : s.phrases) {
                phrases.push_back(
                    {{"subject", p.subject}, {"relation", p.relation}, {"object", p.object}});
            }
            snode["phrases"] = std::move(phrases);
        }
        sentences.push_back(std::move(snode));
    }
    root["sentences"] = std::move(sentences);
    if (!doc.chains.empty()) {
        json chains = json::array();
        for (const CorefChain& chain : doc.chains) {
            json mentions = json::array();
            for (const Mention& m : chain.mentions) {
                mentions.push_back(
                    {{"sentence", m.sentence_index}, {"start", m.start}, {"end", m.end}});
            }
            chains.push_back({{"chain_id", chain.chain_id}, {"mentions", std::move(mentions)}});
        }
        root["chains"] = std::move(chains);
    }
    return root;
}

inline std::string serialize_document(const Document& doc) {
    return document_to_json(doc).dump();
}

/// Reads a `.jsonl` corpus: one document per line, blank lines ignored.
/// Errors are rethrown with the 1-based line number prepended.
inline std::vector<Document> read_corpus(std::istream& in) {
    std::vector<Document> corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            corpus.push_back(parse_document(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                             e.byte_offset());
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return corpus;
}

inline std::vector<Document> read_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open corpus file: " + path);
    }
    return read_corpus(in);
}

inline Document read_document_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open document file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

}  // namespace cohesion
