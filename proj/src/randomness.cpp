#include "bellrand/randomness.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace bellrand {

double min_entropy(double p) {
    if (p <= 0) throw DomainError("min-entropy needs a strictly positive probability");
    return -std::log2(p);
}

RandomnessReport certify(const Behavior& behavior, const EncodingScheme& scheme, int m) {
    RandomnessReport report;
    report.n = behavior.n;
    report.m = m;
    report.bell_value = bell_value_of(behavior, scheme);
    report.local_bound = local_bound_closed(behavior.n);
    report.violated = report.bell_value > static_cast<double>(report.local_bound);

    double r_min = 2.0, r_max = 0.0, p_star = 0.0;
    report.per_pair.reserve(behavior.settings_alice() * behavior.n);
    for (std::size_t i = 1; i <= behavior.settings_alice(); ++i) {
        for (int y = 1; y <= behavior.n; ++y) {
            double p_max = 0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    p_max = std::max(p_max, behavior.entry(static_cast<int>(i), y, a, b));
            const double bits = min_entropy(p_max);
            report.per_pair.push_back({static_cast<int>(i), y, p_max, bits});
            r_min = std::min(r_min, bits);
            r_max = std::max(r_max, bits);
            p_star = std::max(p_star, p_max);
        }
    }
    report.p_star = p_star;
    report.r_min = r_min;
    report.r_max = r_max;

    const double optimal = std::exp2(behavior.n - 1) * std::sqrt(static_cast<double>(behavior.n));
    report.certified = report.violated && std::abs(report.bell_value - optimal) <= 1e-6;
    return report;
}

double rmin_closed_form(int n) {
    if (n < 2) throw InvalidSettingCount("n must be >= 2");
    return 2.0 - std::log2(1.0 + 1.0 / std::sqrt(static_cast<double>(n)));
}

double table1_value(int n, int m) {
    if (n < 2 || n > 6 || m < 1 || m > 3) throw IndexError("table cell out of range");
    const int copies_needed = n / 2;
    if (m >= copies_needed) return rmin_closed_form(n); // optimal violation reached
    if (n == 4) return -std::log2((3.0 + std::sqrt(6.0)) / 12.0);
    if (n == 5) return 2.0 - std::log2(1.0 + (std::sqrt(2.0) + 1.0) /
                                                 std::sqrt(2.0 * std::sqrt(2.0) + 5.0));
    // n == 6
    if (m == 1) return 2.0 - std::log2(1.0 + 3.0 / std::sqrt(10.0));
    return 2.0 - std::log2(1.0 + 1.0 / std::sqrt(2.0));
}

namespace {

nlohmann::ordered_json report_json(const RandomnessReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["bell_value"] = report.bell_value;
    j["local_bound"] = report.local_bound;
    j["violated"] = report.violated;
    j["certified"] = report.certified;
    j["p_star"] = report.p_star;
    j["r_min_bits"] = report.r_min;
    j["r_max_bits"] = report.r_max;
    j["per_pair"] = nlohmann::ordered_json::array();
    for (const PairEntropy& pair : report.per_pair)
        j["per_pair"].push_back({{"i", pair.i}, {"y", pair.y}, {"p_max", pair.p_max},
                                 {"r_bits", pair.r_bits}});
    return j;
}

std::string format17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string report_to_json(const RandomnessReport& report) {
    return report_json(report).dump(2) + "\n";
}

std::string report_to_csv(const RandomnessReport& report) {
    std::ostringstream out;
    out << "n,m,bell_value,local_bound,violated,certified,p_star,r_min_bits,r_max_bits\n";
    out << report.n << ',' << report.m << ',' << format17(report.bell_value) << ','
        << report.local_bound << ',' << (report.violated ? 1 : 0) << ','
        << (report.certified ? 1 : 0) << ',' << format17(report.p_star) << ','
        << format17(report.r_min) << ',' << format17(report.r_max) << '\n';
    out << "i,y,p_max,r_bits\n";
    for (const PairEntropy& pair : report.per_pair)
        out << pair.i << ',' << pair.y << ',' << format17(pair.p_max) << ','
            << format17(pair.r_bits) << '\n';
    return out.str();
}

} // namespace bellrand
