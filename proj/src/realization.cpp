#include "bellrand/realization.hpp"

#include <bit>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

namespace bellrand {

Observable Observable::from_pauli(const PauliString& p) {
    Observable o;
    o.qubits = p.qubits;
    o.terms = {{1.0, p}};
    return o;
}

Observable Observable::padded(int total_qubits) const {
    Observable o;
    o.qubits = total_qubits;
    o.terms.reserve(terms.size());
    for (const auto& [c, p] : terms) o.terms.emplace_back(c, p.padded(total_qubits));
    return o;
}

MatrixXcd Observable::to_dense() const {
    const int dim = 1 << qubits;
    MatrixXcd m = MatrixXcd::Zero(dim, dim);
    for (const auto& [c, p] : terms) m += c * bellrand::to_dense(p);
    return m;
}

double Observable::identity_coefficient() const {
    double total = 0;
    for (const auto& [c, p] : terms)
        if (p.is_identity_up_to_phase()) total += c * p.real_phase();
    return total;
}

namespace {

using TermMap = std::map<std::pair<std::uint64_t, std::uint64_t>, Complex>;

void accumulate(TermMap& acc, double coeff, const PauliString& p) {
    acc[{p.xmask, p.zmask}] += coeff * p.phase();
}

Observable collect(const TermMap& acc, int qubits, double drop_tol = 0.0) {
    Observable out;
    out.qubits = qubits;
    for (const auto& [key, value] : acc) {
        if (std::abs(value.imag()) > 1e-12)
            throw UnsupportedPhase("observable combination has an imaginary coefficient");
        if (std::abs(value.real()) <= drop_tol) continue;
        out.terms.emplace_back(value.real(), PauliString{qubits, key.first, key.second, 0});
    }
    return out;
}

} // namespace

Observable simplify(const Observable& o) {
    TermMap acc;
    for (const auto& [c, p] : o.terms) accumulate(acc, c, p);
    return collect(acc, o.qubits, 1e-15);
}

Observable square(const Observable& o) {
    TermMap acc;
    for (const auto& [c1, p1] : o.terms)
        for (const auto& [c2, p2] : o.terms)
            accumulate(acc, c1 * c2, multiply(p1, p2));
    return collect(acc, o.qubits);
}

bool is_dichotomic(const Observable& o, double tol) {
    for (const auto& [c, p] : square(o).terms) {
        const double expected = p.is_identity_up_to_phase() ? 1.0 : 0.0;
        if (std::abs(c * p.real_phase() - expected) > tol) return false;
    }
    return true;
}

bool observables_anticommute(const Observable& a, const Observable& b, double tol) {
    if (a.qubits != b.qubits)
        throw DimensionMismatch("observables act on different qubit counts");
    TermMap acc;
    for (const auto& [ca, pa] : a.terms)
        for (const auto& [cb, pb] : b.terms) {
            accumulate(acc, ca * cb, multiply(pa, pb));
            accumulate(acc, ca * cb, multiply(pb, pa));
        }
    for (const auto& [key, value] : acc)
        if (std::abs(value) > tol) return false;
    return true;
}

double maxent_expectation(const Observable& a, const Observable& b) {
    if (a.qubits != b.qubits)
        throw DimensionMismatch("observables act on different qubit counts");
    double total = 0;
    for (const auto& [ca, pa] : a.terms)
        for (const auto& [cb, pb] : b.terms)
            total += ca * cb * maxent_expectation(pa, pb);
    return total;
}

std::vector<PauliString> canonical_bob_observables(int n) {
    if (n < 2) throw InvalidSettingCount("n must be >= 2");
    const int m = n / 2;
    std::vector<PauliString> family;
    for (int k = 1; k <= m; ++k) {
        PauliString px = PauliString::sigma_x(m, k);
        PauliString py = PauliString::sigma_y(m, k);
        for (int j = 1; j < k; ++j) {
            px = multiply(PauliString::sigma_z(m, j), px);
            py = multiply(PauliString::sigma_z(m, j), py);
        }
        family.push_back(px);
        family.push_back(py);
    }
    if (n % 2 == 1) {
        PauliString pz = PauliString::sigma_z(m, 1);
        for (int j = 2; j <= m; ++j) pz = multiply(PauliString::sigma_z(m, j), pz);
        family.push_back(pz);
    }
    family.resize(n);
    return family;
}

Observable alice_observable(const EncodingScheme& scheme,
                            const std::vector<Observable>& bob, int i) {
    const int n = scheme.n;
    if (static_cast<int>(bob.size()) != n)
        throw DimensionMismatch("expected one Bob observable per setting");
    for (std::size_t a = 0; a < bob.size(); ++a)
        for (std::size_t b = a + 1; b < bob.size(); ++b)
            if (!observables_anticommute(bob[a], bob[b]))
                throw NotAnticommuting("Bob observables must pairwise anticommute");

    Observable out;
    out.qubits = bob.front().qubits;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int y = 1; y <= n; ++y) {
        const double sign = coefficient(scheme, i, y);
        for (const auto& [c, p] : bob[y - 1].terms)
            out.terms.emplace_back(sign * norm * c * transpose_sign(p), p);
    }
    return simplify(out);
}

Realization canonical_realization(int n) {
    Realization r;
    r.n = n;
    r.scheme = build_scheme(n);
    r.copies = std::max(1, n / 2);
    for (const PauliString& p : canonical_bob_observables(n))
        r.bob.push_back(Observable::from_pauli(p));
    const std::size_t na = r.scheme.settings_alice();
    r.alice.reserve(na);
    for (std::size_t i = 1; i <= na; ++i)
        r.alice.push_back(alice_observable(r.scheme, r.bob, static_cast<int>(i)));
    return r;
}

Realization single_copy_realization_n4() {
    Realization r;
    r.n = 4;
    r.copies = 1;
    r.scheme = build_scheme(4);
    r.bob = {Observable::from_pauli(PauliString::sigma_x(1, 1)),
             Observable::from_pauli(PauliString::sigma_y(1, 1)),
             Observable::from_pauli(PauliString::sigma_z(1, 1)),
             Observable::from_pauli(PauliString::sigma_z(1, 1))};
    for (int i = 1; i <= 8; ++i) {
        const int c3 = coefficient(r.scheme, i, 3);
        const int c4 = coefficient(r.scheme, i, 4);
        const double norm_sq = c3 == c4 ? 6.0 : 2.0; // the printed N_i
        Observable a;
        a.qubits = 1;
        for (int y = 1; y <= 4; ++y) {
            const auto& [c, p] = r.bob[y - 1].terms.front();
            a.terms.emplace_back(coefficient(r.scheme, i, y) * c * transpose_sign(p) /
                                     std::sqrt(norm_sq),
                                 p);
        }
        r.alice.push_back(simplify(a));
    }
    return r;
}

Realization duplicated_realization(int n) {
    if (n < 4 || n % 2 != 0)
        throw InvalidSettingCount("the duplicated construction needs even n >= 4");
    Realization r;
    r.n = n;
    r.copies = n / 2 - 1;
    r.scheme = build_scheme(n);
    std::vector<PauliString> family = canonical_bob_observables(n - 1);
    family.push_back(family.back());
    for (const PauliString& p : family) r.bob.push_back(Observable::from_pauli(p));
    const std::size_t na = r.scheme.settings_alice();
    r.alice.reserve(na);
    for (std::size_t i = 1; i <= na; ++i) {
        Observable sum;
        sum.qubits = r.copies;
        for (int y = 1; y <= n; ++y) {
            const double sign = coefficient(r.scheme, static_cast<int>(i), y);
            for (const auto& [c, p] : r.bob[y - 1].terms)
                sum.terms.emplace_back(sign * c * transpose_sign(p), p);
        }
        sum = simplify(sum);
        const double norm = std::sqrt(square(sum).identity_coefficient());
        for (auto& [c, p] : sum.terms) c /= norm;
        r.alice.push_back(sum);
    }
    return r;
}

Realization padded_realization(int n, int m) {
    const int required = std::max(1, n / 2);
    if (m < required)
        throw InsufficientCopies("n = " + std::to_string(n) + " needs at least " +
                                 std::to_string(required) + " copies");
    Realization r = canonical_realization(n);
    r.copies = m;
    for (Observable& o : r.alice) o = o.padded(m);
    for (Observable& o : r.bob) o = o.padded(m);
    return r;
}

namespace {

Observable bob_signed_sum(const Realization& r, int i) {
    Observable c;
    c.qubits = r.copies;
    for (int y = 1; y <= r.n; ++y) {
        const double sign = coefficient(r.scheme, i, y);
        for (const auto& [w, p] : r.bob[y - 1].terms) c.terms.emplace_back(sign * w, p);
    }
    return simplify(c);
}

void check_dense_guard(const Realization& r) {
    if (r.global_dim() > kDenseDimLimit)
        throw TooLargeForDense("global dimension exceeds the dense guard");
}

} // namespace

double omega(const Realization& r, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > r.alice.size())
        throw IndexError("Alice setting index out of range");
    const Observable c = bob_signed_sum(r, i);
    if (r.is_maxent()) {
        // ||(I (x) C)|Phi>||^2 = tr(C^2)/d, the identity coefficient of C^2.
        return std::sqrt(std::max(0.0, square(c).identity_coefficient()));
    }
    check_dense_guard(r);
    const MatrixXcd cd = c.to_dense();
    const MatrixXcd op = kron(MatrixXcd::Identity(r.local_dim(), r.local_dim()), cd);
    return (op * (*r.state)).norm();
}

double correlator(const Realization& r, int i, int y) {
    if (i < 1 || static_cast<std::size_t>(i) > r.alice.size() || y < 1 || y > r.n)
        throw IndexError("setting index out of range");
    const Observable& a = r.alice[i - 1];
    const Observable& b = r.bob[y - 1];
    if (r.is_maxent()) return maxent_expectation(a, b);
    check_dense_guard(r);
    const MatrixXcd op = kron(a.to_dense(), b.to_dense());
    return ((*r.state).adjoint() * op * (*r.state)).value().real();
}

double bell_value(const Realization& r) {
    double total = 0;
    if (r.is_maxent()) {
        // Kahan summation: the symbolic path sums n * 2^(n-1) correlators, so
        // naive accumulation loses ~n*2^n ulps at large n.
        double compensation = 0;
        for (std::size_t i = 1; i <= r.alice.size(); ++i)
            for (int y = 1; y <= r.n; ++y) {
                const double term = coefficient(r.scheme, static_cast<int>(i), y) *
                                        maxent_expectation(r.alice[i - 1], r.bob[y - 1]) -
                                    compensation;
                const double next = total + term;
                compensation = (next - total) - term;
                total = next;
            }
        return total;
    }
    check_dense_guard(r);
    std::vector<MatrixXcd> bob_dense;
    for (const Observable& b : r.bob) bob_dense.push_back(b.to_dense());
    for (std::size_t i = 1; i <= r.alice.size(); ++i) {
        const MatrixXcd ad = r.alice[i - 1].to_dense();
        for (int y = 1; y <= r.n; ++y) {
            const MatrixXcd op = kron(ad, bob_dense[y - 1]);
            total += coefficient(r.scheme, static_cast<int>(i), y) *
                     ((*r.state).adjoint() * op * (*r.state)).value().real();
        }
    }
    return total;
}

SosCertificate sos_certificate(const Realization& r) {
    SosCertificate cert;
    for (std::size_t i = 1; i <= r.alice.size(); ++i) cert.beta += omega(r, static_cast<int>(i));
    cert.gap = cert.beta - bell_value(r);
    if (r.global_dim() > kDenseDimLimit) return cert;

    const int d = r.local_dim();
    std::vector<MatrixXcd> alice_dense;
    for (const Observable& a : r.alice) alice_dense.push_back(a.to_dense());
    MatrixXcd bell_op = MatrixXcd::Zero(r.global_dim(), r.global_dim());
    for (int y = 1; y <= r.n; ++y) {
        MatrixXcd weighted = MatrixXcd::Zero(d, d);
        for (std::size_t i = 1; i <= r.alice.size(); ++i)
            weighted += static_cast<double>(coefficient(r.scheme, static_cast<int>(i), y)) *
                        alice_dense[i - 1];
        bell_op += kron(weighted, r.bob[y - 1].to_dense());
    }
    const MatrixXcd gamma =
        cert.beta * MatrixXcd::Identity(r.global_dim(), r.global_dim()) - bell_op;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(gamma, Eigen::EigenvaluesOnly);
    cert.min_eigenvalue = solver.eigenvalues().minCoeff();
    return cert;
}

int max_anticommuting_set_size_pauli(int qubits) {
    if (qubits < 1 || qubits > 3)
        throw TooLargeForDense("exhaustive anticommuting search guarded to 3 qubits");
    std::vector<PauliString> strings;
    const std::uint64_t count = std::uint64_t{1} << (2 * qubits);
    for (std::uint64_t code = 1; code < count; ++code)
        strings.push_back(PauliString{qubits, code & ((1u << qubits) - 1), code >> qubits, 0});

    const std::size_t v = strings.size();
    std::vector<std::uint64_t> adj(v, 0);
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b)
            if (a != b && anticommutes(strings[a], strings[b])) adj[a] |= std::uint64_t{1} << b;

    int best = 0;
    auto grow = [&](auto&& self, std::uint64_t candidates, int size) -> void {
        best = std::max(best, size);
        while (candidates) {
            if (size + std::popcount(candidates) <= best) return;
            const int next = std::countr_zero(candidates);
            candidates &= candidates - 1;
            self(self, candidates & adj[next], size + 1);
        }
    };
    grow(grow, ~std::uint64_t{0} >> (64 - v), 0);
    return best;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

Eigen::VectorXcd maxent_state_vector(int local_dim) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(local_dim * local_dim);
    const double amp = 1.0 / std::sqrt(static_cast<double>(local_dim));
    for (int j = 0; j < local_dim; ++j) psi(j * local_dim + j) = amp;
    return psi;
}

} // namespace bellrand
