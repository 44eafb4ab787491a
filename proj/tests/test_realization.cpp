#include <doctest.h>

#include <cmath>

#include "bellrand/realization.hpp"

using namespace bellrand;

namespace {

double dense_distance(const MatrixXcd& a, const MatrixXcd& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

} // namespace

TEST_CASE("canonical Bob families") {
    SUBCASE("n=2") {
        const auto fam = canonical_bob_observables(2);
        REQUIRE(fam.size() == 2);
        CHECK(fam[0] == PauliString::sigma_x(1, 1));
        CHECK(fam[1] == PauliString::sigma_y(1, 1));
    }
    SUBCASE("n=3 is x, y, z") {
        const auto fam = canonical_bob_observables(3);
        REQUIRE(fam.size() == 3);
        CHECK(fam[0] == PauliString::sigma_x(1, 1));
        CHECK(fam[1] == PauliString::sigma_y(1, 1));
        CHECK(fam[2] == PauliString::sigma_z(1, 1));
    }
    SUBCASE("n=4 on two qubits") {
        const auto fam = canonical_bob_observables(4);
        REQUIRE(fam.size() == 4);
        CHECK(fam[0] == PauliString::sigma_x(2, 1));
        CHECK(fam[1] == PauliString::sigma_y(2, 1));
        CHECK(fam[2] == multiply(PauliString::sigma_z(2, 1), PauliString::sigma_x(2, 2)));
        CHECK(fam[3] == multiply(PauliString::sigma_z(2, 1), PauliString::sigma_y(2, 2)));
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b) {
                CHECK(anticommutes(fam[a], fam[b]));
                const MatrixXcd anti = to_dense(fam[a]) * to_dense(fam[b]) +
                                       to_dense(fam[b]) * to_dense(fam[a]);
                CHECK(anti.cwiseAbs().maxCoeff() < 1e-14);
            }
    }
    SUBCASE("general n: pairwise anticommuting, squaring to identity") {
        for (int n = 2; n <= 11; ++n) {
            const auto fam = canonical_bob_observables(n);
            REQUIRE(fam.size() == static_cast<std::size_t>(n));
            for (std::size_t a = 0; a < fam.size(); ++a) {
                const PauliString sq = multiply(fam[a], fam[a]);
                CHECK(sq.is_identity_up_to_phase());
                CHECK(sq.phase() == Complex(1, 0));
                for (std::size_t b = a + 1; b < fam.size(); ++b)
                    CHECK(anticommutes(fam[a], fam[b]));
            }
        }
    }
}

TEST_CASE("Alice observables are dichotomic steered sums") {
    const EncodingScheme scheme3 = build_scheme(3);
    Realization r3 = canonical_realization(3);
    // (sigma_x + sigma_y + sigma_z)/sqrt(3) up to the transpose compensation,
    // which flips the sigma_y weight.
    const Observable& a1 = r3.alice[0];
    REQUIRE(a1.terms.size() == 3);
    for (const auto& [c, p] : a1.terms) {
        const double expected = p.same_letters(PauliString::sigma_y(1, 1)) ? -1.0 : 1.0;
        CHECK(c == doctest::Approx(expected / std::sqrt(3.0)).epsilon(1e-14));
    }

    Realization r2 = canonical_realization(2);
    for (const auto& [c, p] : r2.alice[1].terms)
        CHECK(std::abs(c) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    Realization r4 = canonical_realization(4);
    for (const auto& [c, p] : r4.alice[0].terms)
        CHECK(std::abs(c) == doctest::Approx(0.5).epsilon(1e-14));

    for (int n = 2; n <= 8; ++n) {
        const Realization r = canonical_realization(n);
        for (const Observable& a : r.alice) {
            CHECK(is_dichotomic(a));
            const MatrixXcd sq = a.to_dense() * a.to_dense();
            CHECK(dense_distance(sq, MatrixXcd::Identity(sq.rows(), sq.cols())) < 1e-12);
        }
    }

    // Non-anticommuting Bob input is rejected.
    std::vector<Observable> bad = {
        Observable::from_pauli(PauliString::sigma_x(1, 1)),
        Observable::from_pauli(PauliString::sigma_x(1, 1)),
        Observable::from_pauli(PauliString::sigma_z(1, 1))};
    CHECK_THROWS_AS(alice_observable(scheme3, bad, 1), NotAnticommuting);
}

TEST_CASE("canonical realization copy counts") {
    CHECK(canonical_realization(2).copies == 1);
    CHECK(canonical_realization(4).copies == 2);
    CHECK(canonical_realization(7).copies == 3);
}

TEST_CASE("omegas all equal sqrt(n) on the canonical realization") {
    for (int n : {2, 3, 4, 5, 6}) {
        const Realization r = canonical_realization(n);
        for (std::size_t i = 1; i <= r.alice.size(); ++i)
            CHECK(omega(r, static_cast<int>(i)) ==
                  doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-13));
    }
}

TEST_CASE("canonical Bell value is 2^(n-1) sqrt(n)") {
    CHECK(bell_value(canonical_realization(2)) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bell_value(canonical_realization(4)) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK(bell_value(canonical_realization(9)) == doctest::Approx(768.0).epsilon(1e-12));
    for (int n = 2; n <= 10; ++n) {
        const double expected = std::exp2(n - 1) * std::sqrt(static_cast<double>(n));
        CHECK(std::abs(bell_value(canonical_realization(n)) - expected) < 1e-9);
        CHECK(bell_value(canonical_realization(n)) >
              static_cast<double>(local_bound_closed(n)));
    }
}

TEST_CASE("symbolic and dense Bell values agree") {
    for (int n : {2, 3, 4, 5}) {
        Realization r = canonical_realization(n);
        const double symbolic = bell_value(r);
        r.state = maxent_state_vector(r.local_dim());
        CHECK(std::abs(bell_value(r) - symbolic) < 1e-10);
        for (std::size_t i = 1; i <= r.alice.size(); ++i)
            for (int y = 1; y <= n; ++y) {
                Realization sym = canonical_realization(n);
                CHECK(std::abs(correlator(r, static_cast<int>(i), y) -
                               correlator(sym, static_cast<int>(i), y)) < 1e-10);
            }
    }
}

TEST_CASE("single-copy n=4 realization") {
    const Realization r = single_copy_realization_n4();
    CHECK(bell_value(r) ==
          doctest::Approx(4 * (std::sqrt(2.0) + std::sqrt(6.0))).epsilon(1e-12));
    for (const Observable& o : r.alice) CHECK(is_dichotomic(o));
    for (const Observable& o : r.bob) CHECK(is_dichotomic(o));
    // omega is sqrt(6) where the two sigma_z settings carry equal signs.
    const int big[] = {1, 4, 5, 6};
    const int small[] = {2, 3, 7, 8};
    for (int i : big) CHECK(omega(r, i) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-13));
    for (int i : small) CHECK(omega(r, i) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("duplicated construction for even n") {
    // n = 4 reproduces the dedicated single-copy realization exactly.
    const Realization r4 = duplicated_realization(4);
    const Realization ref = single_copy_realization_n4();
    CHECK(r4.copies == 1);
    CHECK(bell_value(r4) == doctest::Approx(bell_value(ref)).epsilon(1e-14));
    for (int i = 1; i <= 8; ++i)
        for (int y = 1; y <= 4; ++y)
            CHECK(correlator(r4, i, y) ==
                  doctest::Approx(correlator(ref, i, y)).epsilon(1e-14));

    // n = 6 on two copies: B_6 = B_5, omegas sqrt(8) or sqrt(4), and the
    // Bell value is the omega sum.
    const Realization r6 = duplicated_realization(6);
    CHECK(r6.copies == 2);
    for (const Observable& o : r6.alice) CHECK(is_dichotomic(o));
    for (const Observable& o : r6.bob) CHECK(is_dichotomic(o));
    double omega_sum = 0;
    int eights = 0;
    for (int i = 1; i <= 32; ++i) {
        const double w = omega(r6, i);
        const double expected = coefficient(r6.scheme, i, 5) == coefficient(r6.scheme, i, 6)
                                    ? std::sqrt(8.0)
                                    : 2.0;
        CHECK(w == doctest::Approx(expected).epsilon(1e-13));
        if (expected > 2.5) ++eights;
        omega_sum += w;
    }
    CHECK(eights == 16);
    CHECK(bell_value(r6) == doctest::Approx(omega_sum).epsilon(1e-13));
    CHECK(bell_value(r6) == doctest::Approx(32 + 32 * std::sqrt(2.0)).epsilon(1e-13));

    CHECK_THROWS_AS(duplicated_realization(5), InvalidSettingCount);
    CHECK_THROWS_AS(duplicated_realization(2), InvalidSettingCount);
}

TEST_CASE("padding leaves the Bell value unchanged") {
    CHECK(bell_value(padded_realization(2, 3)) ==
          doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(bell_value(padded_realization(3, 2)) ==
          doctest::Approx(4 * std::sqrt(3.0)).epsilon(1e-12));
    CHECK(bell_value(padded_realization(4, 3)) == doctest::Approx(16.0).epsilon(1e-12));
    CHECK_THROWS_AS(padded_realization(4, 1), InsufficientCopies);
}

TEST_CASE("SOS certificate on canonical realizations") {
    for (int n = 2; n <= 6; ++n) {
        const SosCertificate cert = sos_certificate(canonical_realization(n));
        CHECK(cert.beta ==
              doctest::Approx(std::exp2(n - 1) * std::sqrt(static_cast<double>(n)))
                  .epsilon(1e-12));
        CHECK(std::abs(cert.gap) < 1e-9);
        REQUIRE(cert.min_eigenvalue.has_value());
        CHECK(*cert.min_eigenvalue > -1e-9);
    }
}

TEST_CASE("SOS certificate on the single-copy n=4 realization") {
    const SosCertificate cert = sos_certificate(single_copy_realization_n4());
    // beta = sum of omegas = realized value, so the gap closes here too; the
    // realization is not globally optimal so the spectrum may dip negative.
    CHECK(cert.beta ==
          doctest::Approx(4 * (std::sqrt(2.0) + std::sqrt(6.0))).epsilon(1e-12));
    CHECK(std::abs(cert.gap) < 1e-9);
    REQUIRE(cert.min_eigenvalue.has_value());
}

TEST_CASE("largest anticommuting Pauli sets by exhaustive search") {
    CHECK(max_anticommuting_set_size_pauli(1) == 3);
    CHECK(max_anticommuting_set_size_pauli(2) == 5);
    CHECK(max_anticommuting_set_size_pauli(3) == 7);
    CHECK_THROWS_AS(max_anticommuting_set_size_pauli(4), TooLargeForDense);
}
