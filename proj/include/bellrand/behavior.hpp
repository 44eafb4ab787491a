#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bellrand/realization.hpp"

namespace bellrand {

/// Joint probability table p(a,b | A_{n,i}, B_{n,y}), n*2^{n+1} entries.
///
/// For n <= kTableSettingsLimit the table is materialized; above that the
/// behavior is held as correlators plus single-party marginals, from which
/// every entry of a product-projector behavior is reconstructed exactly.
struct Behavior {
    static constexpr int kTableSettingsLimit = 8;

    int n = 2;
    std::vector<double> table; // empty when not materialized
    Eigen::MatrixXd correlators;     // settings_alice x n
    Eigen::VectorXd alice_marginals; // <A_i>
    Eigen::VectorXd bob_marginals;   // <B_y>

    std::size_t settings_alice() const { return static_cast<std::size_t>(correlators.rows()); }
    bool has_table() const { return !table.empty(); }

    double entry(int i, int y, int a, int b) const;

    /// Build from an explicit table (also used to inject perturbed tables in
    /// validation tests); marginals and correlators are derived from it.
    static Behavior from_table(int n, std::vector<double> entries);
};

Behavior compute_behavior(const Realization& r);

double bell_value_of(const Behavior& behavior, const EncodingScheme& scheme);

struct BehaviorWitness {
    int i, y, a, b;
};

struct MaxProbability {
    double p_star = 0;
    std::vector<BehaviorWitness> witnesses;
};

/// Largest entry and every index attaining it within 1e-12.
MaxProbability max_probability(const Behavior& behavior);

struct BehaviorViolation {
    std::string kind; // "normalization", "range", "no-signaling"
    int i, y, a, b;   // -1 where not applicable
    double magnitude;
};

/// Empty iff normalization (1e-12), range, and no-signaling (1e-10) hold.
std::vector<BehaviorViolation> validate(const Behavior& behavior);

/// CSV with header i,y,a,b,p (1-based indices, 17 significant digits).
std::string behavior_to_csv(const Behavior& behavior);
std::string behavior_to_json(const Behavior& behavior);

} // namespace bellrand
