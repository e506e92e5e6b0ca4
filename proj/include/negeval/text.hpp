#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "negeval/errors.hpp"
#include "negeval/unicode_tables.hpp"

namespace negeval {

/// A tokenized sentence together with the scheme that produced it.
struct TokenizedText {
    std::vector<std::string> tokens;
    std::string scheme;
};

namespace detail {

inline void utf8_append(std::string& out, char32_t cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
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

/// Decodes UTF-8; ill-formed byte sequences become U+FFFD.
inline std::u32string utf8_decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        std::size_t len = 1;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 >> 5) == 0x6 && i + 1 < s.size()) {
            const auto b1 = static_cast<unsigned char>(s[i + 1]);
            if ((b1 >> 6) == 0x2) {
                cp = (char32_t(b0 & 0x1F) << 6) | (b1 & 0x3F);
                len = 2;
                if (cp < 0x80) cp = 0xFFFD;
            }
        } else if ((b0 >> 4) == 0xE && i + 2 < s.size()) {
            const auto b1 = static_cast<unsigned char>(s[i + 1]);
            const auto b2 = static_cast<unsigned char>(s[i + 2]);
            if ((b1 >> 6) == 0x2 && (b2 >> 6) == 0x2) {
                cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(b1 & 0x3F) << 6) | (b2 & 0x3F);
                len = 3;
                if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
            }
        } else if ((b0 >> 3) == 0x1E && i + 3 < s.size()) {
            const auto b1 = static_cast<unsigned char>(s[i + 1]);
            const auto b2 = static_cast<unsigned char>(s[i + 2]);
            const auto b3 = static_cast<unsigned char>(s[i + 3]);
            if ((b1 >> 6) == 0x2 && (b2 >> 6) == 0x2 && (b3 >> 6) == 0x2) {
                cp = (char32_t(b0 & 0x07) << 18) | (char32_t(b1 & 0x3F) << 12) |
                     (char32_t(b2 & 0x3F) << 6) | (b3 & 0x3F);
                len = 4;
                if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
            }
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline std::string utf8_encode(const std::u32string& s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) utf8_append(out, cp);
    return out;
}

inline std::uint8_t combining_class(char32_t cp) {
    const auto* begin = std::begin(unicode::kCccTable);
    const auto* end = std::end(unicode::kCccTable);
    auto it = std::lower_bound(begin, end, cp,
                               [](const unicode::CccEntry& e, char32_t c) { return e.cp < c; });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19, kHangulVCount = 21, kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

inline void canonical_decompose(char32_t cp, std::u32string& out) {
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        const int idx = static_cast<int>(cp - kHangulSBase);
        out.push_back(kHangulLBase + idx / kHangulNCount);
        out.push_back(kHangulVBase + (idx % kHangulNCount) / kHangulTCount);
        if (idx % kHangulTCount != 0) out.push_back(kHangulTBase + idx % kHangulTCount);
        return;
    }
    const auto* begin = std::begin(unicode::kDecompIndex);
    const auto* end = std::end(unicode::kDecompIndex);
    auto it = std::lower_bound(begin, end, cp,
                               [](const unicode::DecompEntry& e, char32_t c) { return e.cp < c; });
    if (it != end && it->cp == cp) {
        for (std::uint32_t i = 0; i < it->len; ++i)
            out.push_back(unicode::kDecompData[it->offset + i]);
    } else {
        out.push_back(cp);
    }
}

inline char32_t compose_pair(char32_t a, char32_t b) {
    // Hangul LV / LVT composition.
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        return kHangulSBase +
               (char32_t(a - kHangulLBase) * kHangulNCount +
                char32_t(b - kHangulVBase) * kHangulTCount);
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    const auto* begin = std::begin(unicode::kCompTable);
    const auto* end = std::end(unicode::kCompTable);
    auto it = std::lower_bound(begin, end, std::pair<char32_t, char32_t>{a, b},
                               [](const unicode::CompEntry& e, const std::pair<char32_t, char32_t>& k) {
                                   return e.first != k.first ? e.first < k.first
                                                             : e.second < k.second;
                               });
    if (it != end && it->first == a && it->second == b) return it->composed;
    return 0;
}

} // namespace detail

/// Canonical composition (NFC) of a UTF-8 string. Ill-formed sequences are
/// replaced with U+FFFD.
inline std::string nfc(std::string_view utf8) {
    const std::u32string in = detail::utf8_decode(utf8);

    std::u32string dec;
    dec.reserve(in.size());
    for (char32_t cp : in) detail::canonical_decompose(cp, dec);

    // Canonical ordering: stable-sort maximal runs of nonzero-ccc marks.
    std::size_t i = 0;
    while (i < dec.size()) {
        if (detail::combining_class(dec[i]) == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < dec.size() && detail::combining_class(dec[j]) != 0) ++j;
        std::stable_sort(dec.begin() + static_cast<std::ptrdiff_t>(i),
                         dec.begin() + static_cast<std::ptrdiff_t>(j),
                         [](char32_t a, char32_t b) {
                             return detail::combining_class(a) < detail::combining_class(b);
                         });
        i = j;
    }

    // Canonical composition per UAX #15. A character combines with the last
    // starter unless blocked by an intervening starter or a mark of equal or
    // higher combining class.
    std::u32string out;
    out.reserve(dec.size());
    std::ptrdiff_t last_starter = -1;
    int last_ccc = -1;
    for (char32_t cp : dec) {
        const int ccc = detail::combining_class(cp);
        if (last_starter >= 0) {
            const bool directly_after =
                out.size() == static_cast<std::size_t>(last_starter) + 1;
            if (directly_after || (ccc > 0 && last_ccc < ccc)) {
                if (char32_t c = detail::compose_pair(
                        out[static_cast<std::size_t>(last_starter)], cp)) {
                    out[static_cast<std::size_t>(last_starter)] = c;
                    continue;
                }
            }
        }
        out.push_back(cp);
        if (ccc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
            last_ccc = -1;
        } else {
            last_ccc = ccc;
        }
    }
    return detail::utf8_encode(out);
}

namespace detail {

inline bool in_13a_punct_class(char c) {
    const auto u = static_cast<unsigned char>(c);
    // ASCII ranges of the mteval-13a punctuation class:
    // space-&, (-+, :-@, [-`, {-~, and '/'.
    return (u >= 0x20 && u <= 0x26) || (u >= 0x28 && u <= 0x2B) || u == 0x2F ||
           (u >= 0x3A && u <= 0x40) || (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E);
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline void replace_all(std::string& s, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
}

} // namespace detail

/// Splits on runs of whitespace (space, tab, CR, LF, vertical space).
inline std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// International mteval-13a tokenization: the convention used by the
/// standard corpus-BLEU tooling. Separates ASCII punctuation, and period or
/// comma outside digit context; non-ASCII text passes through untouched.
inline std::vector<std::string> tokenize_13a(std::string_view text) {
    std::string line(text);
    detail::replace_all(line, "<skipped>", "");
    detail::replace_all(line, "-\n", "");
    detail::replace_all(line, "\n", " ");
    if (line.find('&') != std::string::npos) {
        detail::replace_all(line, "&quot;", "\"");
        detail::replace_all(line, "&amp;", "&");
        detail::replace_all(line, "&lt;", "<");
        detail::replace_all(line, "&gt;", ">");
    }
    line = " " + line + " ";

    // Rule 1: wrap punctuation-class bytes in spaces.
    std::string r1;
    r1.reserve(line.size() * 2);
    for (char c : line) {
        if (detail::in_13a_punct_class(c)) {
            r1.push_back(' ');
            r1.push_back(c);
            r1.push_back(' ');
        } else {
            r1.push_back(c);
        }
    }

    // Rule 2: ([^0-9])([.,]) -> "\1 \2 "  (left-to-right, non-overlapping)
    std::string r2;
    r2.reserve(r1.size() * 2);
    for (std::size_t i = 0; i < r1.size();) {
        if (i + 1 < r1.size() && !detail::is_ascii_digit(r1[i]) &&
            (r1[i + 1] == '.' || r1[i + 1] == ',')) {
            r2.push_back(r1[i]);
            r2.push_back(' ');
            r2.push_back(r1[i + 1]);
            r2.push_back(' ');
            i += 2;
        } else {
            r2.push_back(r1[i]);
            ++i;
        }
    }

    // Rule 3: ([.,])([^0-9]) -> " \1 \2"
    std::string r3;
    r3.reserve(r2.size() * 2);
    for (std::size_t i = 0; i < r2.size();) {
        if (i + 1 < r2.size() && (r2[i] == '.' || r2[i] == ',') &&
            !detail::is_ascii_digit(r2[i + 1])) {
            r3.push_back(' ');
            r3.push_back(r2[i]);
            r3.push_back(' ');
            r3.push_back(r2[i + 1]);
            i += 2;
        } else {
            r3.push_back(r2[i]);
            ++i;
        }
    }

    // Rule 4: ([0-9])(-) -> "\1 - "
    std::string r4;
    r4.reserve(r3.size() * 2);
    for (std::size_t i = 0; i < r3.size();) {
        if (i + 1 < r3.size() && detail::is_ascii_digit(r3[i]) && r3[i + 1] == '-') {
            r4.push_back(r3[i]);
            r4.push_back(' ');
            r4.push_back('-');
            r4.push_back(' ');
            i += 2;
        } else {
            r4.push_back(r3[i]);
            ++i;
        }
    }

    return split_whitespace(r4);
}

inline constexpr std::string_view kScheme13a = "13a-style";
inline constexpr std::string_view kSchemeWhitespace = "whitespace";

/// Deterministic tokenization under one of the supported schemes.
/// Throws ConfigError for unknown schemes.
inline TokenizedText tokenize(std::string_view text, std::string_view scheme) {
    TokenizedText out;
    out.scheme = std::string(scheme);
    if (scheme == kScheme13a) {
        out.tokens = tokenize_13a(text);
    } else if (scheme == kSchemeWhitespace) {
        out.tokens = split_whitespace(text);
    } else {
        throw ConfigError("unknown tokenizer scheme: " + std::string(scheme));
    }
    return out;
}

/// ASCII lowercasing plus folding of the typographic apostrophe (U+2019)
/// to "'" so contraction cues match either spelling.
inline std::string fold_token(std::string_view token) {
    std::string out;
    out.reserve(token.size());
    for (std::size_t i = 0; i < token.size(); ++i) {
        const auto u = static_cast<unsigned char>(token[i]);
        if (u == 0xE2 && i + 2 < token.size() &&
            static_cast<unsigned char>(token[i + 1]) == 0x80 &&
            static_cast<unsigned char>(token[i + 2]) == 0x99) {
            out.push_back('\'');
            i += 2;
        } else if (u >= 'A' && u <= 'Z') {
            out.push_back(static_cast<char>(u - 'A' + 'a'));
        } else {
            out.push_back(token[i]);
        }
    }
    return out;
}

} // namespace negeval
