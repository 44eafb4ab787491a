#include "bellrand/pauli.hpp"

#include <bit>

namespace bellrand {

namespace {

// Site codes: I=0, X=1, Y=2, Z=3.
inline int site_code(std::uint64_t x, std::uint64_t z, int k) {
    const int xb = static_cast<int>((x >> k) & 1u);
    const int zb = static_cast<int>((z >> k) & 1u);
    return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
}

// Exponent t of i in sigma_a sigma_b = i^t sigma_{a*b}: +1 on the cycle
// X->Y->Z->X, 3 on the reverse cycle, 0 otherwise.
inline int product_phase_exp(int a, int b) {
    if (a == 0 || b == 0 || a == b) return 0;
    const bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    return cyclic ? 1 : 3;
}

} // namespace

PauliString multiply(const PauliString& p, const PauliString& q) {
    if (p.qubits != q.qubits)
        throw DimensionMismatch("Pauli strings act on different qubit counts");
    int exp = p.phase_exp + q.phase_exp;
    for (int k = 0; k < p.qubits; ++k) {
        exp += product_phase_exp(site_code(p.xmask, p.zmask, k),
                                 site_code(q.xmask, q.zmask, k));
    }
    return PauliString{p.qubits, p.xmask ^ q.xmask, p.zmask ^ q.zmask,
                       static_cast<std::uint8_t>(exp & 3)};
}

bool anticommutes(const PauliString& p, const PauliString& q) {
    if (p.qubits != q.qubits)
        throw DimensionMismatch("Pauli strings act on different qubit counts");
    const int parity = (std::popcount(p.xmask & q.zmask) ^ std::popcount(p.zmask & q.xmask)) & 1;
    return parity != 0;
}

int transpose_sign(const PauliString& p) {
    if (!p.phase_is_real()) throw UnsupportedPhase("transpose sign needs a real phase");
    return (std::popcount(p.xmask & p.zmask) & 1) ? -1 : +1;
}

MatrixXcd to_dense(const PauliString& p) {
    if (p.qubits > kDenseQubitLimit)
        throw TooLargeForDense("dense Pauli realization guarded to " +
                               std::to_string(kDenseQubitLimit) + " qubits");
    static const Complex i{0, 1};
    MatrixXcd site[4] = {MatrixXcd::Identity(2, 2), MatrixXcd(2, 2), MatrixXcd(2, 2), MatrixXcd(2, 2)};
    site[1] << 0, 1, 1, 0;
    site[2] << 0, -i, i, 0;
    site[3] << 1, 0, 0, -1;

    MatrixXcd result = MatrixXcd::Constant(1, 1, p.phase());
    for (int k = 0; k < p.qubits; ++k) {
        const MatrixXcd& factor = site[site_code(p.xmask, p.zmask, k)];
        MatrixXcd next(result.rows() * 2, result.cols() * 2);
        for (Eigen::Index r = 0; r < result.rows(); ++r)
            for (Eigen::Index c = 0; c < result.cols(); ++c)
                next.block(2 * r, 2 * c, 2, 2) = result(r, c) * factor;
        result.swap(next);
    }
    return result;
}

double maxent_expectation(const PauliString& p, const PauliString& q) {
    if (p.qubits != q.qubits)
        throw DimensionMismatch("Pauli strings act on different qubit counts");
    const double sp = p.real_phase();
    const double sq = q.real_phase();
    if (!p.same_letters(q)) return 0.0;
    return transpose_sign(p) * sp * sq;
}

} // namespace bellrand
