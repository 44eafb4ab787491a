#include <doctest.h>

#include <cstdlib>
#include <set>

#include "bellrand/encoding.hpp"

using namespace bellrand;

namespace {

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

// Alice-optimized value for a fixed Bob sign assignment.
std::int64_t alice_best(const EncodingScheme& scheme, std::uint32_t bob) {
    std::int64_t total = 0;
    for (std::size_t i = 1; i <= scheme.settings_alice(); ++i) {
        int inner = 0;
        for (int y = 1; y <= scheme.n; ++y)
            inner += coefficient(scheme, static_cast<int>(i), y) *
                     (((bob >> (y - 1)) & 1u) ? -1 : 1);
        total += std::abs(inner);
    }
    return total;
}

} // namespace

TEST_CASE("scheme for n=3 matches the printed inequality") {
    const EncodingScheme s = build_scheme(3);
    REQUIRE(s.strings.size() == 4);
    CHECK(s.strings[0].bits == 0b000);
    CHECK(s.strings[1].bits == 0b001);
    CHECK(s.strings[2].bits == 0b010);
    CHECK(s.strings[3].bits == 0b100);
    // first row all plus, fourth row (-,+,+)
    CHECK(coefficient(s, 1, 1) == 1);
    CHECK(coefficient(s, 1, 2) == 1);
    CHECK(coefficient(s, 1, 3) == 1);
    CHECK(coefficient(s, 4, 1) == -1);
    CHECK(coefficient(s, 4, 2) == 1);
    CHECK(coefficient(s, 4, 3) == 1);
}

TEST_CASE("scheme for n=4 matches the printed inequality") {
    const EncodingScheme s = build_scheme(4);
    const std::uint32_t expected[] = {0b0000, 0b0001, 0b0010, 0b0100,
                                      0b1000, 0b0011, 0b0101, 0b0110};
    REQUIRE(s.strings.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK(s.strings[i].bits == expected[i]);
}

TEST_CASE("scheme for n=2 gives the CHSH signs") {
    const EncodingScheme s = build_scheme(2);
    REQUIRE(s.strings.size() == 2);
    CHECK(s.strings[0].bits == 0b00);
    CHECK(s.strings[1].bits == 0b01);
    // A_1 (B_1 + B_2) + A_2 (B_1 - B_2)
    CHECK(coefficient(s, 1, 1) == 1);
    CHECK(coefficient(s, 1, 2) == 1);
    CHECK(coefficient(s, 2, 1) == 1);
    CHECK(coefficient(s, 2, 2) == -1);
}

TEST_CASE("scheme errors") {
    CHECK_THROWS_AS(build_scheme(1), InvalidSettingCount);
    CHECK_THROWS_AS(build_scheme(25), InvalidSettingCount);
    const EncodingScheme s = build_scheme(3);
    CHECK_THROWS_AS(coefficient(s, 0, 1), IndexError);
    CHECK_THROWS_AS(coefficient(s, 5, 1), IndexError);
    CHECK_THROWS_AS(coefficient(s, 1, 4), IndexError);
}

TEST_CASE("representatives cover every string exactly once with complements") {
    for (int n = 2; n <= 10; ++n) {
        const EncodingScheme s = build_scheme(n);
        REQUIRE(s.strings.size() == (std::size_t{1} << (n - 1)));
        const std::uint32_t full = (1u << n) - 1;
        std::set<std::uint32_t> seen;
        for (const BitString& b : s.strings) {
            CHECK(seen.insert(b.bits).second);
            CHECK(seen.insert(b.bits ^ full).second);
        }
        CHECK(seen.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("local bound closed form values") {
    CHECK(local_bound_closed(3) == 6);
    CHECK(local_bound_closed(4) == 12);
    CHECK(local_bound_closed(5) == 30); // 5 * C(4,2)
}

TEST_CASE("brute force equals the closed form for n = 2..12") {
    CHECK(local_bound_bruteforce(2) == 2);
    CHECK(local_bound_bruteforce(4) == 12);
    CHECK(local_bound_bruteforce(6) == 60);
    for (int n = 2; n <= 12; ++n)
        CHECK(local_bound_bruteforce(n) == local_bound_closed(n));
    CHECK_THROWS_AS(local_bound_bruteforce(13), TooLargeForBruteForce);
}

TEST_CASE("complement-pair identity holds exactly up to n = 20") {
    for (int n = 2; n <= 20; ++n) {
        std::int64_t sum = 0;
        for (int k = 0; k <= n; ++k) sum += binom(n, k) * std::abs(n - 2 * k);
        CHECK(local_bound_closed(n) == sum / 2);
    }
}

TEST_CASE("Alice-optimized value is independent of Bob's assignment") {
    for (int n = 2; n <= 10; ++n) {
        const EncodingScheme s = build_scheme(n);
        const std::int64_t reference = alice_best(s, 0);
        CHECK(reference == local_bound_closed(n));
        for (std::uint32_t bob = 1; bob < (1u << n); ++bob)
            CHECK(alice_best(s, bob) == reference);
    }
}
