#pragma once

// The three equivalent descriptions of a tunnel's principal path: the binary
// invariants s_2 ... s_{n}, the reader's-viewpoint step sequence over
// {D, L, R}, and the traveler's turn sequence over {L, R}, with strict
// validation and exact conversions between them.

#include "gst/common.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gst {

/// The bit sequence s_2, s_3, ..., s_{m+1}. May be empty.
struct BinaryInvariants {
    std::vector<std::uint8_t> bits;

    std::size_t size() const { return bits.size(); }

    std::string str() const {
        std::string out;
        out.reserve(bits.size());
        for (auto b : bits) out.push_back(b ? '1' : '0');
        return out;
    }

    bool operator==(const BinaryInvariants&) const = default;
};

/// Principal path drawn on the page: first step down, second to the right,
/// then L runs, R runs and D's. Grammar: starts with 'D'; the second letter
/// (if any) is 'R'; 'L' is followed only by 'L' or 'D'; 'R' only by 'R' or
/// 'D'; 'D' only by 'L' or 'R'. The one-letter sequence "D" is the simple
/// tunnel.
struct StepSequence {
    std::string letters;

    bool is_simple() const { return letters == "D"; }
    std::size_t size() const { return letters.size(); }

    bool operator==(const StepSequence&) const = default;
};

/// Turns t_1, t_2, ... taken by a traveler along the principal path.
/// t_1 is always 'L'.
struct TurnSequence {
    std::string turns;

    bool operator==(const TurnSequence&) const = default;
};

struct Run {
    char letter;  // 'L' or 'R'
    int length;   // >= 1

    bool operator==(const Run&) const = default;
};

/// Canonical factorization of a step sequence as
///   D run_1 D run_2 D ... run_k [D]
/// where each run is a maximal block of equal letters. The first run is
/// always an R run.
struct RunDecomposition {
    std::vector<Run> runs;
    bool trailing_d = false;
};

inline BinaryInvariants parse_binary(std::string_view text) {
    BinaryInvariants b;
    b.bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1') {
            throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1) + "; expected '0' or '1'",
                             i + 1);
        }
        b.bits.push_back(c == '1' ? 1 : 0);
    }
    return b;
}

inline StepSequence parse_steps(std::string_view text) {
    if (text.empty()) throw ParseError("empty step sequence", 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c != 'D' && c != 'L' && c != 'R') {
            throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                                 std::to_string(i + 1) + "; expected 'D', 'L' or 'R'",
                             i + 1);
        }
        if (i == 0) {
            if (c != 'D') throw ParseError("step sequence must start with 'D' (position 1)", 1);
        } else if (i == 1) {
            if (c != 'R') throw ParseError("second step must be 'R' (position 2)", 2);
        } else {
            const char prev = text[i - 1];
            const bool ok = prev == 'L'   ? (c == 'L' || c == 'D')
                            : prev == 'R' ? (c == 'R' || c == 'D')
                                          : (c == 'L' || c == 'R');
            if (!ok) {
                throw ParseError("'" + std::string(1, c) + "' cannot follow '" +
                                     std::string(1, prev) + "' at position " +
                                     std::to_string(i + 1),
                                 i + 1);
            }
        }
    }
    return StepSequence{std::string(text)};
}

/// The initial step is down and the second is to the reader's right; after
/// that each bit keeps the current direction (0) or changes it (1), where a
/// change out of an 'L' or 'R' run passes through a 'D' and the letter after
/// a 'D' depends on the letter before it.
inline StepSequence binary_to_steps(const BinaryInvariants& b) {
    std::string s = "DR";
    s.reserve(b.bits.size() + 2);
    for (const auto bit : b.bits) {
        const char prev = s.back();
        char next;
        if (prev == 'L') {
            next = bit ? 'D' : 'L';
        } else if (prev == 'R') {
            next = bit ? 'D' : 'R';
        } else {  // prev == 'D'; the letter before it decides
            const char before = s[s.size() - 2];
            if (before == 'L') {
                next = bit ? 'L' : 'R';
            } else {
                next = bit ? 'R' : 'L';
            }
        }
        s.push_back(next);
    }
    return StepSequence{std::move(s)};
}

/// Exact inverse of binary_to_steps. The simple tunnel "D" carries no binary
/// invariants and raises SimpleTunnelError instead.
inline BinaryInvariants steps_to_binary(const StepSequence& s) {
    if (s.is_simple()) throw SimpleTunnelError();
    const std::string& L = s.letters;
    BinaryInvariants b;
    b.bits.reserve(L.size() - 2);
    for (std::size_t i = 2; i < L.size(); ++i) {
        const char prev = L[i - 1];
        const char cur = L[i];
        std::uint8_t bit;
        if (prev == 'L' || prev == 'R') {
            bit = cur == 'D' ? 1 : 0;
        } else {
            const char before = L[i - 2];
            bit = (before == 'L') ? (cur == 'L' ? 1 : 0) : (cur == 'R' ? 1 : 0);
        }
        b.bits.push_back(bit);
    }
    return b;
}

/// t_1 = L; afterwards bit 0 repeats the previous turn and bit 1 reverses it.
inline TurnSequence binary_to_turns(const BinaryInvariants& b) {
    std::string t = "L";
    t.reserve(b.bits.size() + 1);
    for (const auto bit : b.bits) {
        const char prev = t.back();
        t.push_back(bit ? (prev == 'L' ? 'R' : 'L') : prev);
    }
    return TurnSequence{std::move(t)};
}

inline RunDecomposition run_decomposition(const StepSequence& s) {
    if (s.is_simple()) throw SimpleTunnelError();
    const std::string& L = s.letters;
    RunDecomposition rd;
    std::size_t i = 1;  // skip the leading 'D'
    while (i < L.size()) {
        if (L[i] == 'D') {
            if (i + 1 == L.size()) rd.trailing_d = true;
            ++i;
            continue;
        }
        const char c = L[i];
        std::size_t j = i;
        while (j < L.size() && L[j] == c) ++j;
        rd.runs.push_back(Run{c, static_cast<int>(j - i)});
        i = j;
    }
    return rd;
}

}  // namespace gst
