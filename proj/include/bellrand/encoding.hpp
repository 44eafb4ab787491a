#pragma once

#include <cstdint>
#include <vector>

#include "bellrand/errors.hpp"

namespace bellrand {

/// An n-bit string. Bit index y runs 1..n with y=1 the most significant
/// position, matching the left-to-right reading order of the strings.
struct BitString {
    int n = 0;
    std::uint32_t bits = 0;

    /// Bit at position y (1-based, y=1 is the leading bit).
    int bit(int y) const {
        if (y < 1 || y > n) throw IndexError("bit index out of range");
        return static_cast<int>((bits >> (n - y)) & 1u);
    }

    int weight() const { return __builtin_popcount(bits); }

    bool operator==(const BitString&) const = default;
};

/// The canonical family of 2^{n-1} representative n-bit strings, one per
/// complement pair, fixing the sign pattern of the Bell functional.
///
/// Representatives are all strings of Hamming weight < n/2 plus, for even n,
/// the weight-n/2 strings whose leading bit is 0; ordered by (weight, value).
/// For n=3 and n=4 this reproduces the printed inequalities row by row.
struct EncodingScheme {
    int n = 0;
    std::vector<BitString> strings;

    std::size_t settings_alice() const { return strings.size(); }
    int settings_bob() const { return n; }
};

inline constexpr int kMaxSettings = 24;

EncodingScheme build_scheme(int n);

/// Sign (-1)^{x^i_y} of the i-th string at bit y. Indices are 1-based.
int coefficient(const EncodingScheme& scheme, int i, int y);

/// Local bound n * C(n-1, floor((n-1)/2)).
std::int64_t local_bound_closed(int n);

/// Independent oracle: maximum of the functional over all deterministic
/// strategies, enumerating Bob's 2^n sign assignments (Alice's best response
/// is the sign of each inner sum). Guarded to n <= 12.
std::int64_t local_bound_bruteforce(int n);

} // namespace bellrand
