#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 machinery for the text pipeline. Inputs are assumed to be
// NFC-normalized UTF-8 (true of the targeted news and transcript corpora);
// malformed byte sequences decode to U+FFFD rather than failing.

namespace dialforge {

inline constexpr char32_t kReplacementChar = 0xFFFD;

inline void utf8_append(std::string& out, char32_t cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

inline std::string utf8_encode(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) utf8_append(out, cp);
    return out;
}

// Decodes s into code points. When offsets is non-null it receives the byte
// offset of each code point plus one final entry equal to s.size(), so
// callers can slice the original bytes exactly.
inline std::u32string utf8_decode(std::string_view s, std::vector<std::size_t>* offsets = nullptr) {
    std::u32string out;
    out.reserve(s.size());
    const std::size_t n = s.size();
    std::size_t i = 0;
    while (i < n) {
        if (offsets) offsets->push_back(i);
        const auto b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = kReplacementChar;
        std::size_t len = 1;
        auto cont = [&](std::size_t k) {
            return i + k < n && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
        };
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0 && cont(1)) {
            cp = (static_cast<char32_t>(b0 & 0x1F) << 6) |
                 (static_cast<unsigned char>(s[i + 1]) & 0x3F);
            len = 2;
            if (cp < 0x80) cp = kReplacementChar;
        } else if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
            cp = (static_cast<char32_t>(b0 & 0x0F) << 12) |
                 (static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3F);
            len = 3;
            if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacementChar;
        } else if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
            cp = (static_cast<char32_t>(b0 & 0x07) << 18) |
                 (static_cast<char32_t>(static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                 (static_cast<char32_t>(static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3F);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) cp = kReplacementChar;
        }
        out.push_back(cp);
        i += len;
    }
    if (offsets) offsets->push_back(n);
    return out;
}

inline bool is_space_cp(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' ||
           cp == 0x0B || cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
           cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F || cp == 0x3000;
}

// Case folding over ASCII and the Latin-1 supplement. Hangul has no case;
// scripts outside this range pass through unchanged.
inline char32_t fold_case_cp(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

// Sentence-terminal punctuation: . ! ? ellipsis, plus full-width forms.
inline bool is_terminal_punct_cp(char32_t cp) {
    return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026 /* … */ ||
           cp == 0x3002 /* 。 */ || cp == 0xFF01 /* ！ */ || cp == 0xFF1F /* ？ */ ||
           cp == 0xFF0E /* ． */;
}

// Closing quotes/brackets that may trail terminal punctuation and still
// belong to the finished sentence.
inline bool is_closing_wrapper_cp(char32_t cp) {
    switch (cp) {
        case U'"': case U'\'': case U')': case U']': case U'}':
        case 0x2019: /* ’ */ case 0x201D: /* ” */ case 0x00BB: /* » */
        case 0x300D: /* 」 */ case 0x300F: /* 』 */ case 0x3009: /* 〉 */
        case 0x300B: /* 》 */ case 0x3011: /* 】 */
        case 0xFF09: /* ） */ case 0xFF3D: /* ］ */ case 0xFF5D: /* ｝ */
            return true;
        default:
            return false;
    }
}

inline bool is_opening_wrapper_cp(char32_t cp) {
    switch (cp) {
        case U'"': case U'\'': case U'(': case U'[': case U'{':
        case 0x2018: /* ‘ */ case 0x201C: /* “ */ case 0x00AB: /* « */
        case 0x300C: /* 「 */ case 0x300E: /* 『 */ case 0x3008: /* 〈 */
        case 0x300A: /* 《 */ case 0x3010: /* 【 */
        case 0xFF08: /* （ */ case 0xFF3B: /* ［ */ case 0xFF5B: /* ｛ */
            return true;
        default:
            return false;
    }
}

// Punctuation detached into standalone tokens by the scoring tokenizer.
// ASCII punctuation, the full-width ASCII block, and common CJK marks.
inline bool is_tokenizer_punct_cp(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    if (cp >= 0xFF01 && cp <= 0xFF0F) return true;
    if (cp >= 0xFF1A && cp <= 0xFF20) return true;
    if (cp >= 0xFF3B && cp <= 0xFF40) return true;
    if (cp >= 0xFF5B && cp <= 0xFF65) return true;
    switch (cp) {
        case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x2026:
        case 0x00AB: case 0x00BB: case 0x00B7: case 0x30FB:
        case 0x3001: case 0x3002: case 0x3008: case 0x3009: case 0x300A:
        case 0x300B: case 0x300C: case 0x300D: case 0x300E: case 0x300F:
        case 0x3010: case 0x3011: case 0x2013: case 0x2014:
            return true;
        default:
            return false;
    }
}

// True when s contains nothing but whitespace.
inline bool is_blank(std::string_view s) {
    for (char32_t cp : utf8_decode(s)) {
        if (!is_space_cp(cp)) return false;
    }
    return true;
}

}  // namespace dialforge
