#include <doctest.h>

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "bellrand/seesaw.hpp"

using namespace bellrand;

namespace {

std::vector<MatrixXcd> dense_observables(const std::vector<Observable>& obs) {
    std::vector<MatrixXcd> out;
    for (const Observable& o : obs) out.push_back(o.to_dense());
    return out;
}

} // namespace

TEST_CASE("spectral sign") {
    MatrixXcd diag = MatrixXcd::Zero(2, 2);
    diag(0, 0) = 3;
    diag(1, 1) = -2;
    MatrixXcd expected = MatrixXcd::Zero(2, 2);
    expected(0, 0) = 1;
    expected(1, 1) = -1;
    CHECK((spectral_sign(diag) - expected).cwiseAbs().maxCoeff() < 1e-14);

    // zero matrix ties break to +1
    CHECK((spectral_sign(MatrixXcd::Zero(3, 3)) - MatrixXcd::Identity(3, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-14);

    MatrixXcd xz(2, 2);
    xz << 1, 1, 1, -1;
    CHECK((spectral_sign(xz) - xz / std::sqrt(2.0)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Bell operator top eigenvalues") {
    const Realization r2 = canonical_realization(2);
    const MatrixXcd op2 =
        bell_operator(r2.scheme, dense_observables(r2.alice), dense_observables(r2.bob));
    CHECK((op2 - op2.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> s2(op2);
    CHECK(s2.eigenvalues().maxCoeff() == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));

    const Realization r4 = canonical_realization(4);
    const MatrixXcd op4 =
        bell_operator(r4.scheme, dense_observables(r4.alice), dense_observables(r4.bob));
    Eigen::SelfAdjointEigenSolver<MatrixXcd> s4(op4);
    CHECK(s4.eigenvalues().maxCoeff() == doctest::Approx(16.0).epsilon(1e-12));

    const Realization single = single_copy_realization_n4();
    const MatrixXcd op_single = bell_operator(single.scheme, dense_observables(single.alice),
                                              dense_observables(single.bob));
    Eigen::SelfAdjointEigenSolver<MatrixXcd> ss(op_single);
    CHECK(ss.eigenvalues().maxCoeff() ==
          doctest::Approx(4 * (std::sqrt(2.0) + std::sqrt(6.0))).epsilon(1e-12));
}

TEST_CASE("see-saw recovers the CHSH optimum") {
    SeesawConfig cfg;
    cfg.n = 2;
    cfg.local_dim = 2;
    cfg.restarts = 10;
    cfg.seed = 3;
    const SeesawResult result = seesaw_optimize(cfg);
    CHECK(result.converged);
    CHECK(std::abs(result.best_value - 2 * std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("see-saw reaches the restricted n=4 optimum at local dimension 2") {
    SeesawConfig cfg;
    cfg.n = 4;
    cfg.local_dim = 2;
    cfg.restarts = 50;
    cfg.seed = 17;
    const SeesawResult result = seesaw_optimize(cfg);
    CHECK(std::abs(result.best_value - 4 * (std::sqrt(2.0) + std::sqrt(6.0))) < 1e-6);
    const double restart_max = *std::max_element(result.per_restart_values.begin(),
                                                 result.per_restart_values.end());
    CHECK(result.best_value == restart_max);
}

TEST_CASE("full local dimension recovers the SOS optimum") {
    for (int n : {2, 3, 4}) {
        SeesawConfig cfg;
        cfg.n = n;
        cfg.local_dim = 1 << std::max(1, n / 2);
        cfg.restarts = 10;
        cfg.seed = 23;
        const SeesawResult result = seesaw_optimize(cfg);
        const double optimum = std::exp2(n - 1) * std::sqrt(static_cast<double>(n));
        CHECK(std::abs(result.best_value - optimum) < 1e-6);
        CHECK(result.best_value <= optimum + 1e-9);
    }
}

TEST_CASE("restarts clear the local bound and respect the quantum ceiling") {
    for (int n : {3, 5, 6}) {
        SeesawConfig cfg;
        cfg.n = n;
        cfg.local_dim = 2;
        cfg.restarts = 10;
        cfg.seed = 31;
        const SeesawResult result = seesaw_optimize(cfg);
        CHECK(result.best_value >= static_cast<double>(local_bound_closed(n)) - 1e-9);
        CHECK(result.best_value <=
              std::exp2(n - 1) * std::sqrt(static_cast<double>(n)) + 1e-9);
        for (double v : result.per_restart_values) CHECK(v <= result.best_value + 1e-15);
    }
}

TEST_CASE("identical seeds reproduce identical restart values") {
    SeesawConfig cfg;
    cfg.n = 4;
    cfg.local_dim = 2;
    cfg.restarts = 8;
    cfg.seed = 1234;
    const SeesawResult a = seesaw_optimize(cfg);
    const SeesawResult b = seesaw_optimize(cfg);
    REQUIRE(a.per_restart_values.size() == b.per_restart_values.size());
    for (std::size_t k = 0; k < a.per_restart_values.size(); ++k)
        CHECK(a.per_restart_values[k] == b.per_restart_values[k]); // bitwise
}

TEST_CASE("invalid configurations are rejected") {
    SeesawConfig cfg;
    cfg.n = 4;
    cfg.local_dim = 3;
    CHECK_THROWS_AS(seesaw_optimize(cfg), DimensionMismatch);
    cfg.local_dim = 2;
    cfg.restarts = 0;
    CHECK_THROWS_AS(seesaw_optimize(cfg), DomainError);
}
