#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>

#include "cohesion/error.hpp"
#include "cohesion/unicode_data.hpp"

namespace cohesion {
namespace unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes UTF-8, replacing ill-formed sequences with U+FFFD.
inline std::u32string decode_utf8(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    std::size_t i = 0;
    while (i < in.size()) {
        const auto b0 = static_cast<unsigned char>(in[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = i + len <= in.size();
        for (int k = 1; ok && k < len; ++k) {
            const auto bk = static_cast<unsigned char>(in[i + k]);
            if ((bk & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (bk & 0x3F);
            }
        }
        // Reject overlongs, surrogates, and out-of-range values.
        if (ok) {
            ok = !(cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) ||
                   (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                   (len == 4 && cp < 0x10000));
        }
        if (ok) {
            out.push_back(cp);
            i += len;
        } else {
            out.push_back(kReplacement);
            ++i;
        }
    }
    return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(std::u32string_view in) {
    std::string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        append_utf8(out, cp);
    }
    return out;
}

inline std::uint8_t combining_class(char32_t cp) {
    const auto* begin = std::begin(unicode_data::kCombiningClass);
    const auto* end = std::end(unicode_data::kCombiningClass);
    const auto* it = std::lower_bound(
        begin, end, cp,
        [](const unicode_data::CccEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

inline bool is_punctuation(char32_t cp) {
    const auto* begin = std::begin(unicode_data::kPunctuation);
    const auto* end = std::end(unicode_data::kPunctuation);
    const auto* it = std::upper_bound(
        begin, end, cp,
        [](char32_t v, const unicode_data::Range& r) { return v < r.lo; });
    return it != begin && cp <= (it - 1)->hi;
}

namespace detail {

// Hangul syllable composition constants (Unicode ch. 3.12).
inline constexpr char32_t kHangulSBase = 0xAC00;
inline constexpr char32_t kHangulLBase = 0x1100;
inline constexpr char32_t kHangulVBase = 0x1161;
inline constexpr char32_t kHangulTBase = 0x11A7;
inline constexpr int kHangulLCount = 19;
inline constexpr int kHangulVCount = 21;
inline constexpr int kHangulTCount = 28;
inline constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
inline constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline const unicode_data::SeqEntry* find_seq(const unicode_data::SeqEntry* begin,
                                              const unicode_data::SeqEntry* end,
                                              char32_t cp) {
    const auto* it = std::lower_bound(
        begin, end, cp,
        [](const unicode_data::SeqEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it : nullptr;
}

inline void decompose_cp(char32_t cp, std::u32string& out) {
    const int s_index = static_cast<int>(cp) - static_cast<int>(kHangulSBase);
    if (s_index >= 0 && s_index < kHangulSCount) {
        out.push_back(kHangulLBase + s_index / kHangulNCount);
        out.push_back(kHangulVBase + (s_index % kHangulNCount) / kHangulTCount);
        const int t = s_index % kHangulTCount;
        if (t > 0) {
            out.push_back(kHangulTBase + t);
        }
        return;
    }
    if (const auto* e = find_seq(std::begin(unicode_data::kDecomposition),
                                 std::end(unicode_data::kDecomposition), cp)) {
        for (int k = 0; k < e->length; ++k) {
            out.push_back(unicode_data::kDecompositionPool[e->offset + k]);
        }
        return;
    }
    out.push_back(cp);
}

// Canonical ordering: stable-sort runs of nonzero-ccc marks by class.
inline void canonical_order(std::u32string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        const std::uint8_t cc = combining_class(s[i]);
        if (cc == 0) {
            continue;
        }
        std::size_t j = i;
        while (j > 0) {
            const std::uint8_t prev = combining_class(s[j - 1]);
            if (prev == 0 || prev <= cc) {
                break;
            }
            std::swap(s[j - 1], s[j]);
            --j;
        }
    }
}

inline char32_t compose_pair(char32_t a, char32_t b) {
    const int l_index = static_cast<int>(a) - static_cast<int>(kHangulLBase);
    const int v_index = static_cast<int>(b) - static_cast<int>(kHangulVBase);
    if (l_index >= 0 && l_index < kHangulLCount && v_index >= 0 &&
        v_index < kHangulVCount) {
        return kHangulSBase + (l_index * kHangulVCount + v_index) * kHangulTCount;
    }
    const int s_index = static_cast<int>(a) - static_cast<int>(kHangulSBase);
    const int t_index = static_cast<int>(b) - static_cast<int>(kHangulTBase);
    if (s_index >= 0 && s_index < kHangulSCount && s_index % kHangulTCount == 0 &&
        t_index > 0 && t_index < kHangulTCount) {
        return a + t_index;
    }
    const auto* begin = std::begin(unicode_data::kComposition);
    const auto* end = std::end(unicode_data::kComposition);
    const auto* it = std::lower_bound(
        begin, end, std::pair<char32_t, char32_t>{a, b},
        [](const unicode_data::CompEntry& e, const std::pair<char32_t, char32_t>& v) {
            return e.first != v.first ? e.first < v.first : e.second < v.second;
        });
    if (it != end && it->first == a && it->second == b) {
        return it->composite;
    }
    return 0;
}

inline void compose(std::u32string& s) {
    if (s.empty()) {
        return;
    }
    std::size_t read = 0;
    while (read < s.size() && combining_class(s[read]) != 0) {
        ++read;
    }
    if (read == s.size()) {
        return;
    }
    std::u32string out(s.begin(), s.begin() + read);
    std::size_t starter_pos = out.size();
    out.push_back(s[read]);
    int prev_cc = -1;  // nothing between the starter and the cursor yet
    for (std::size_t i = read + 1; i < s.size(); ++i) {
        const char32_t ch = s[i];
        const int cc = combining_class(ch);
        if (prev_cc < cc) {
            if (const char32_t comp = compose_pair(out[starter_pos], ch)) {
                out[starter_pos] = comp;
                continue;
            }
        }
        if (cc == 0) {
            starter_pos = out.size();
            prev_cc = -1;
        } else {
            prev_cc = cc;
        }
        out.push_back(ch);
    }
    s = std::move(out);
}

}  // namespace detail

inline std::u32string nfd(std::u32string_view in) {
    std::u32string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        detail::decompose_cp(cp, out);
    }
    detail::canonical_order(out);
    return out;
}

inline std::u32string nfc(std::u32string_view in) {
    std::u32string out = nfd(in);
    detail::compose(out);
    return out;
}

inline std::u32string casefold(std::u32string_view in) {
    std::u32string out;
    out.reserve(in.size());
    for (char32_t cp : in) {
        if (const auto* e = detail::find_seq(std::begin(unicode_data::kCaseFold),
                                             std::end(unicode_data::kCaseFold), cp)) {
            for (int k = 0; k < e->length; ++k) {
                out.push_back(unicode_data::kCaseFoldPool[e->offset + k]);
            }
        } else {
            out.push_back(cp);
        }
    }
    return out;
}

}  // namespace unicode

/// Comparison key of a surface form or lemma: case-folded, in NFC form,
/// with leading/trailing punctuation stripped. Folding can denormalize
/// (its expansions may recompose or reorder), so NFC is applied after it
/// as well; that second pass is what makes the key idempotent. If
/// stripping consumes the whole string (a pure-punctuation token), the
/// unstripped folded form is kept.
inline std::string normalize(std::string_view raw) {
    if (raw.empty()) {
        throw ValidationError("normalize: empty input");
    }
    const std::u32string folded =
        unicode::nfc(unicode::casefold(unicode::nfc(unicode::decode_utf8(raw))));
    std::size_t lo = 0;
    std::size_t hi = folded.size();
    while (lo < hi && unicode::is_punctuation(folded[lo])) {
        ++lo;
    }
    while (hi > lo && unicode::is_punctuation(folded[hi - 1])) {
        --hi;
    }
    if (lo == hi) {
        return unicode::encode_utf8(folded);
    }
    return unicode::encode_utf8(std::u32string_view(folded).substr(lo, hi - lo));
}

}  // namespace cohesion
