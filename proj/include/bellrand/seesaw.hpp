#pragma once

#include <cstdint>
#include <vector>

#include "bellrand/realization.hpp"

namespace bellrand {

struct SeesawConfig {
    int n = 4;
    int local_dim = 2;   // power of two
    int restarts = 50;
    int max_iterations = 500;
    double convergence_tol = 1e-13;
    std::uint64_t seed = 1;
    /// Extra sweeps after the value has plateaued, driving the iterate (not
    /// just the value) to a fixed point; tightens the induced behavior.
    int polish_iterations = 100;
};

struct SeesawResult {
    double best_value = 0;
    Realization best_realization;
    int iterations_used = 0;
    std::vector<double> per_restart_values;
    bool converged = false;
};

/// sum_{i,y} (-1)^{x^i_y} A_i (x) B_y as a dense matrix.
MatrixXcd bell_operator(const EncodingScheme& scheme,
                        const std::vector<MatrixXcd>& alice,
                        const std::vector<MatrixXcd>& bob);

/// U diag(sign(lambda)) U^dagger; eigenvalues within 1e-12 of zero map to +1.
MatrixXcd spectral_sign(const MatrixXcd& m);

/// Alternating maximization of the Bell value at fixed local dimension:
/// state <- top eigenvector, then each observable <- spectral sign of its
/// steering operator. Every half-step is an exact partial maximizer, so the
/// value sequence within a restart is nondecreasing.
SeesawResult seesaw_optimize(const SeesawConfig& config);

} // namespace bellrand
