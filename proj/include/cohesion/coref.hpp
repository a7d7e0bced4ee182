#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "cohesion/document.hpp"

namespace cohesion {

/// Lookup from (sentence_index, token_index) to the ids of every chain with
/// a mention span covering that token. Tokens outside all mentions are
/// absent.
class CorefIndex {
public:
    using Key = std::pair<int, int>;

    void add(int sentence_index, int token_index, const std::string& chain_id) {
        entries_[{sentence_index, token_index}].insert(chain_id);
    }

    const std::set<std::string>* chains_of(int sentence_index, int token_index) const {
        const auto it = entries_.find({sentence_index, token_index});
        return it == entries_.end() ? nullptr : &it->second;
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const std::map<Key, std::set<std::string>>& entries() const { return entries_; }

    friend bool operator==(const CorefIndex&, const CorefIndex&) = default;

private:
    std::map<Key, std::set<std::string>> entries_;
};

/// Expands every mention span of every chain into per-token entries.
inline CorefIndex build_coref_index(const Document& doc) {
    CorefIndex index;
    for (const CorefChain& chain : doc.chains) {
        for (const Mention& mention : chain.mentions) {
            for (int t = mention.start; t <= mention.end; ++t) {
                index.add(mention.sentence_index, t, chain.chain_id);
            }
        }
    }
    return index;
}

}  // namespace cohesion
