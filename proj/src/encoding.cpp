#include "bellrand/encoding.hpp"

#include <algorithm>
#include <cstdlib>

namespace bellrand {

EncodingScheme build_scheme(int n) {
    if (n < 2 || n > kMaxSettings)
        throw InvalidSettingCount("settings count n must be in [2, " +
                                  std::to_string(kMaxSettings) + "], got " + std::to_string(n));

    EncodingScheme scheme;
    scheme.n = n;
    scheme.strings.reserve(std::size_t{1} << (n - 1));

    // One representative per complement pair: weight below n/2 always, and
    // for even n the weight-n/2 strings with leading bit 0.
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
        const int w = __builtin_popcount(v);
        if (2 * w < n || (2 * w == n && ((v >> (n - 1)) & 1u) == 0)) {
            scheme.strings.push_back(BitString{n, v});
        }
    }
    std::sort(scheme.strings.begin(), scheme.strings.end(),
              [](const BitString& a, const BitString& b) {
                  if (a.weight() != b.weight()) return a.weight() < b.weight();
                  return a.bits < b.bits;
              });
    return scheme;
}

int coefficient(const EncodingScheme& scheme, int i, int y) {
    if (i < 1 || static_cast<std::size_t>(i) > scheme.strings.size())
        throw IndexError("setting index i out of range");
    return scheme.strings[i - 1].bit(y) ? -1 : +1;
}

namespace {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace

std::int64_t local_bound_closed(int n) {
    if (n < 2) throw InvalidSettingCount("n must be >= 2");
    return n * binomial(n - 1, (n - 1) / 2);
}

std::int64_t local_bound_bruteforce(int n) {
    if (n < 2) throw InvalidSettingCount("n must be >= 2");
    if (n > 12) throw TooLargeForBruteForce("brute-force local bound guarded to n <= 12");

    const EncodingScheme scheme = build_scheme(n);
    std::int64_t best = 0;
    for (std::uint32_t b = 0; b < (1u << n); ++b) {
        std::int64_t total = 0;
        for (const BitString& s : scheme.strings) {
            int inner = 0;
            for (int y = 1; y <= n; ++y) {
                const int sign = s.bit(y) ? -1 : +1;
                const int bob = ((b >> (y - 1)) & 1u) ? -1 : +1;
                inner += sign * bob;
            }
            total += std::abs(inner);
        }
        best = std::max(best, total);
    }
    return best;
}

} // namespace bellrand
