#include "bellrand/behavior.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bellrand {

namespace {

inline std::size_t table_index(int n, int i, int y, int a, int b) {
    return ((static_cast<std::size_t>(i - 1) * n + (y - 1)) * 2 + a) * 2 + b;
}

inline double product_entry(double ma, double mb, double corr, int a, int b) {
    const double sa = a == 0 ? 1.0 : -1.0;
    const double sb = b == 0 ? 1.0 : -1.0;
    return 0.25 * (1.0 + sa * ma + sb * mb + sa * sb * corr);
}

} // namespace

double Behavior::entry(int i, int y, int a, int b) const {
    if (i < 1 || static_cast<std::size_t>(i) > settings_alice() || y < 1 || y > n ||
        a < 0 || a > 1 || b < 0 || b > 1)
        throw IndexError("behavior index out of range");
    if (has_table()) return table[table_index(n, i, y, a, b)];
    return product_entry(alice_marginals(i - 1), bob_marginals(y - 1),
                         correlators(i - 1, y - 1), a, b);
}

Behavior Behavior::from_table(int n, std::vector<double> entries) {
    const std::size_t na = std::size_t{1} << (n - 1);
    if (entries.size() != na * n * 4)
        throw DimensionMismatch("behavior table has wrong entry count");
    Behavior beh;
    beh.n = n;
    beh.table = std::move(entries);
    beh.correlators.resize(na, n);
    beh.alice_marginals.resize(na);
    beh.bob_marginals.resize(n);
    for (std::size_t i = 1; i <= na; ++i) {
        for (int y = 1; y <= n; ++y) {
            double corr = 0, ma = 0, mb = 0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const double p = beh.table[table_index(n, static_cast<int>(i), y, a, b)];
                    corr += (a == b ? 1.0 : -1.0) * p;
                    ma += (a == 0 ? 1.0 : -1.0) * p;
                    mb += (b == 0 ? 1.0 : -1.0) * p;
                }
            beh.correlators(i - 1, y - 1) = corr;
            if (y == 1) beh.alice_marginals(i - 1) = ma;
            if (i == 1) beh.bob_marginals(y - 1) = mb;
        }
    }
    return beh;
}

Behavior compute_behavior(const Realization& r) {
    const std::size_t na = r.scheme.settings_alice();
    Behavior beh;
    beh.n = r.n;
    beh.correlators.resize(na, r.n);
    beh.alice_marginals.resize(na);
    beh.bob_marginals.resize(r.n);

    if (r.is_maxent()) {
        const Observable id = Observable::from_pauli(PauliString::identity(r.copies));
        for (std::size_t i = 0; i < na; ++i)
            beh.alice_marginals(i) = maxent_expectation(r.alice[i], id);
        for (int y = 0; y < r.n; ++y)
            beh.bob_marginals(y) = maxent_expectation(id, r.bob[y]);
        for (std::size_t i = 0; i < na; ++i)
            for (int y = 0; y < r.n; ++y)
                beh.correlators(i, y) = maxent_expectation(r.alice[i], r.bob[y]);
        if (beh.n <= Behavior::kTableSettingsLimit) {
            beh.table.resize(na * r.n * 4);
            for (std::size_t i = 1; i <= na; ++i)
                for (int y = 1; y <= r.n; ++y)
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            beh.table[table_index(r.n, static_cast<int>(i), y, a, b)] =
                                product_entry(beh.alice_marginals(i - 1),
                                              beh.bob_marginals(y - 1),
                                              beh.correlators(i - 1, y - 1), a, b);
        }
        return beh;
    }

    if (r.global_dim() > kDenseDimLimit)
        throw TooLargeForDense("explicit-state behavior needs the dense path");
    const int d = r.local_dim();
    const MatrixXcd id = MatrixXcd::Identity(d, d);
    const Eigen::VectorXcd& psi = *r.state;
    std::vector<MatrixXcd> bob_dense;
    for (const Observable& b : r.bob) bob_dense.push_back(b.to_dense());

    std::vector<double> tab(na * r.n * 4);
    for (std::size_t i = 1; i <= na; ++i) {
        const MatrixXcd ad = r.alice[i - 1].to_dense();
        for (int y = 1; y <= r.n; ++y) {
            for (int a = 0; a < 2; ++a) {
                const MatrixXcd pa = 0.5 * (id + (a == 0 ? 1.0 : -1.0) * ad);
                for (int b = 0; b < 2; ++b) {
                    const MatrixXcd pb = 0.5 * (id + (b == 0 ? 1.0 : -1.0) * bob_dense[y - 1]);
                    double p = (psi.adjoint() * kron(pa, pb) * psi).value().real();
                    if (p < 0 && p >= -1e-12) p = 0; // rounding clamp
                    tab[table_index(r.n, static_cast<int>(i), y, a, b)] = p;
                }
            }
        }
    }
    Behavior dense = Behavior::from_table(r.n, std::move(tab));
    if (dense.n > Behavior::kTableSettingsLimit) dense.table.clear();
    return dense;
}

double bell_value_of(const Behavior& behavior, const EncodingScheme& scheme) {
    if (behavior.n != scheme.n ||
        behavior.settings_alice() != scheme.settings_alice())
        throw SchemeMismatch("behavior and encoding scheme disagree on n");
    double total = 0;
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i)
        for (int y = 1; y <= behavior.n; ++y)
            total += coefficient(scheme, static_cast<int>(i), y) *
                     behavior.correlators(i - 1, y - 1);
    return total;
}

MaxProbability max_probability(const Behavior& behavior) {
    MaxProbability result;
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i)
        for (int y = 1; y <= behavior.n; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    result.p_star = std::max(
                        result.p_star, behavior.entry(static_cast<int>(i), y, a, b));
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i)
        for (int y = 1; y <= behavior.n; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (behavior.entry(static_cast<int>(i), y, a, b) >=
                        result.p_star - 1e-12)
                        result.witnesses.push_back({static_cast<int>(i), y, a, b});
    return result;
}

std::vector<BehaviorViolation> validate(const Behavior& behavior) {
    constexpr double kNormTol = 1e-12;
    constexpr double kRangeTol = 1e-12;
    constexpr double kSignalTol = 1e-10;
    std::vector<BehaviorViolation> violations;
    const std::size_t na = behavior.settings_alice();

    for (std::size_t i = 1; i <= na; ++i) {
        for (int y = 1; y <= behavior.n; ++y) {
            double sum = 0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const double p = behavior.entry(static_cast<int>(i), y, a, b);
                    sum += p;
                    if (p < -kRangeTol || p > 1 + kRangeTol)
                        violations.push_back({"range", static_cast<int>(i), y, a, b,
                                              p < 0 ? -p : p - 1});
                }
            if (std::abs(sum - 1) > kNormTol)
                violations.push_back(
                    {"normalization", static_cast<int>(i), y, -1, -1, std::abs(sum - 1)});
        }
    }

    // No-signaling: Alice's marginal must not depend on y, Bob's not on i.
    for (std::size_t i = 1; i <= na; ++i)
        for (int a = 0; a < 2; ++a) {
            const double ref = behavior.entry(static_cast<int>(i), 1, a, 0) +
                               behavior.entry(static_cast<int>(i), 1, a, 1);
            for (int y = 2; y <= behavior.n; ++y) {
                const double marg = behavior.entry(static_cast<int>(i), y, a, 0) +
                                    behavior.entry(static_cast<int>(i), y, a, 1);
                if (std::abs(marg - ref) > kSignalTol)
                    violations.push_back({"no-signaling", static_cast<int>(i), y, a, -1,
                                          std::abs(marg - ref)});
            }
        }
    for (int y = 1; y <= behavior.n; ++y)
        for (int b = 0; b < 2; ++b) {
            const double ref =
                behavior.entry(1, y, 0, b) + behavior.entry(1, y, 1, b);
            for (std::size_t i = 2; i <= na; ++i) {
                const double marg = behavior.entry(static_cast<int>(i), y, 0, b) +
                                    behavior.entry(static_cast<int>(i), y, 1, b);
                if (std::abs(marg - ref) > kSignalTol)
                    violations.push_back({"no-signaling", static_cast<int>(i), y, -1, b,
                                          std::abs(marg - ref)});
            }
        }
    return violations;
}

namespace {

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", p);
    return buf;
}

} // namespace

std::string behavior_to_csv(const Behavior& behavior) {
    std::ostringstream out;
    out << "i,y,a,b,p\n";
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i)
        for (int y = 1; y <= behavior.n; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    out << i << ',' << y << ',' << a << ',' << b << ','
                        << format_probability(behavior.entry(static_cast<int>(i), y, a, b))
                        << '\n';
    return out.str();
}

std::string behavior_to_json(const Behavior& behavior) {
    std::ostringstream out;
    out << "{\"n\":" << behavior.n << ",\"entries\":[";
    bool first = true;
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i)
        for (int y = 1; y <= behavior.n; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (!first) out << ',';
                    first = false;
                    out << "{\"i\":" << i << ",\"y\":" << y << ",\"a\":" << a
                        << ",\"b\":" << b << ",\"p\":"
                        << format_probability(behavior.entry(static_cast<int>(i), y, a, b))
                        << '}';
                }
    out << "]}";
    return out.str();
}

} // namespace bellrand
