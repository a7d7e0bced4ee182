#pragma once

#include <fstream>
#include <istream>
#include <string>
#include <unordered_set>

#include "cohesion/error.hpp"
#include "cohesion/unicode.hpp"

namespace cohesion {

/// Set of verb forms used by the heuristic extractor. Entries are matched
/// against normalized token keys.
using VerbLexicon = std::unordered_set<std::string>;

/// Common English verb forms (auxiliaries, modals, and frequent verbs with
/// their inflections). Used when no lexicon file is supplied.
inline const VerbLexicon& default_verb_lexicon() {
    static const VerbLexicon lexicon = [] {
        static constexpr const char* kForms[] = {
            "am", "is", "are", "was", "were", "be", "been", "being",
            "have", "has", "had", "having",
            "do", "does", "did", "doing", "done",
            "will", "would", "shall", "should", "can", "could", "may", "might", "must",
            "say", "says", "said", "saying",
            "get", "gets", "got", "gotten", "getting",
            "make", "makes", "made", "making",
            "go", "goes", "went", "gone", "going",
            "know", "knows", "knew", "known", "knowing",
            "take", "takes", "took", "taken", "taking",
            "see", "sees", "saw", "seen", "seeing",
            "come", "comes", "came", "coming",
            "think", "thinks", "thought", "thinking",
            "look", "looks", "looked", "looking",
            "want", "wants", "wanted", "wanting",
            "give", "gives", "gave", "given", "giving",
            "use", "uses", "used", "using",
            "find", "finds", "found", "finding",
            "tell", "tells", "told", "telling",
            "ask", "asks", "asked", "asking",
            "work", "works", "worked", "working",
            "seem", "seems", "seemed", "seeming",
            "feel", "feels", "felt", "feeling",
            "try", "tries", "tried", "trying",
            "leave", "leaves", "left", "leaving",
            "call", "calls", "called", "calling",
            "need", "needs", "needed", "needing",
            "become", "becomes", "became", "becoming",
            "mean", "means", "meant", "meaning",
            "keep", "keeps", "kept", "keeping",
            "let", "lets", "letting",
            "begin", "begins", "began", "begun", "beginning",
            "show", "shows", "showed", "shown", "showing",
            "hear", "hears", "heard", "hearing",
            "play", "plays", "played", "playing",
            "run", "runs", "ran", "running",
            "move", "moves", "moved", "moving",
            "live", "lives", "lived", "living",
            "believe", "believes", "believed", "believing",
            "hold", "holds", "held", "holding",
            "bring", "brings", "brought", "bringing",
            "happen", "happens", "happened", "happening",
            "write", "writes", "wrote", "written", "writing",
            "provide", "provides", "provided", "providing",
            "sit", "sits", "sat", "sitting",
            "stand", "stands", "stood", "standing",
            "lose", "loses", "lost", "losing",
            "pay", "pays", "paid", "paying",
            "meet", "meets", "met", "meeting",
            "include", "includes", "included", "including",
            "continue", "continues", "continued", "continuing",
            "set", "sets", "setting",
            "learn", "learns", "learned", "learnt", "learning",
            "change", "changes", "changed", "changing",
            "lead", "leads", "led", "leading",
            "understand", "understands", "understood", "understanding",
            "watch", "watches", "watched", "watching",
            "follow", "follows", "followed", "following",
            "stop", "stops", "stopped", "stopping",
            "create", "creates", "created", "creating",
            "speak", "speaks", "spoke", "spoken", "speaking",
            "read", "reads", "reading",
            "spend", "spends", "spent", "spending",
            "grow", "grows", "grew", "grown", "growing",
            "open", "opens", "opened", "opening",
            "walk", "walks", "walked", "walking",
            "win", "wins", "won", "winning",
            "teach", "teaches", "taught", "teaching",
            "offer", "offers", "offered", "offering",
            "remember", "remembers", "remembered", "remembering",
            "consider", "considers", "considered", "considering",
            "appear", "appears", "appeared", "appearing",
            "buy", "buys", "bought", "buying",
            "serve", "serves", "served", "serving",
            "send", "sends", "sent", "sending",
            "build", "builds", "built", "building",
            "stay", "stays", "stayed", "staying",
            "fall", "falls", "fell", "fallen", "falling",
            "cut", "cuts", "cutting",
            "reach", "reaches", "reached", "reaching",
            "kill", "kills", "killed", "killing",
            "raise", "raises", "raised", "raising",
            "pass", "passes", "passed", "passing",
            "sell", "sells", "sold", "selling",
            "decide", "decides", "decided", "deciding",
            "return", "returns", "returned", "returning",
            "explain", "explains", "explained", "explaining",
            "hope", "hopes", "hoped", "hoping",
            "develop", "develops", "developed", "developing",
            "carry", "carries", "carried", "carrying",
            "break", "breaks", "broke", "broken", "breaking",
            "receive", "receives", "received", "receiving",
            "agree", "agrees", "agreed", "agreeing",
            "support", "supports", "supported", "supporting",
            "hit", "hits", "hitting",
            "produce", "produces", "produced", "producing",
            "eat", "eats", "ate", "eaten", "eating",
            "cover", "covers", "covered", "covering",
            "catch", "catches", "caught", "catching",
            "chase", "chases", "chased", "chasing",
            "draw", "draws", "drew", "drawn", "drawing",
            "choose", "chooses", "chose", "chosen", "choosing",
            "hide", "hides", "hid", "hidden", "hiding",
            "sleep", "sleeps", "slept", "sleeping",
            "drive", "drives", "drove", "driven", "driving",
            "fly", "flies", "flew", "flown", "flying",
            "wear", "wears", "wore", "worn", "wearing",
            "jump", "jumps", "jumped", "jumping",
            "wait", "waits", "waited", "waiting",
        };
        VerbLexicon set;
        set.reserve(std::size(kForms));
        for (const char* form : kForms) {
            set.insert(form);
        }
        return set;
    }();
    return lexicon;
}

/// Reads a lexicon file: UTF-8, one lowercase verb form per line,
/// `#` comments allowed. Entries are normalized on load.
inline VerbLexicon load_verb_lexicon(std::istream& in) {
    VerbLexicon lexicon;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        lexicon.insert(normalize(line.substr(first, last - first + 1)));
    }
    return lexicon;
}

inline VerbLexicon load_verb_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open verb lexicon: " + path);
    }
    return load_verb_lexicon(in);
}

}  // namespace cohesion
