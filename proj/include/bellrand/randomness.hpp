#pragma once

#include <string>
#include <vector>

#include "bellrand/behavior.hpp"

namespace bellrand {

struct PairEntropy {
    int i, y;
    double p_max;
    double r_bits;
};

struct RandomnessReport {
    int n = 2;
    int m = 1;
    double bell_value = 0;
    std::int64_t local_bound = 0;
    bool violated = false;
    /// True only when the violation is optimal; at sub-optimal violation the
    /// figures are not a device-independent guaranteed bound.
    bool certified = false;
    double p_star = 0;
    double r_min = 0;
    double r_max = 0;
    std::vector<PairEntropy> per_pair;
};

/// -log2(p). Throws DomainError for p <= 0.
double min_entropy(double p);

RandomnessReport certify(const Behavior& behavior, const EncodingScheme& scheme, int m);

/// 2 - log2(1 + 1/sqrt(n)): the certified randomness at the optimal violation.
double rmin_closed_form(int n);

/// Closed-form certified bits for n in 2..6 and m in 1..3, including the
/// single-copy n = 4, 5, 6 expressions and the n = 6, m = 2 value.
double table1_value(int n, int m);

std::string report_to_json(const RandomnessReport& report);
std::string report_to_csv(const RandomnessReport& report);

} // namespace bellrand
