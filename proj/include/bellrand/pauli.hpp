#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "bellrand/errors.hpp"

namespace bellrand {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;

/// Phase-tracked tensor product of single-qubit Pauli operators in symplectic
/// form. The operator is i^phase_exp * prod_k sigma(x_k, z_k) where the
/// canonical site operators are I=(0,0), X=(1,0), Y=(1,1), Z=(0,1), each
/// Hermitian, so a canonical string always squares to the identity.
///
/// Qubit k (1-based) lives at bit k-1 of the masks and is the k-th tensor
/// factor from the left in the dense realization.
struct PauliString {
    int qubits = 1;
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    std::uint8_t phase_exp = 0; // power of i, 0..3

    static PauliString identity(int qubits) { return PauliString{qubits, 0, 0, 0}; }
    static PauliString sigma_x(int qubits, int k) { return PauliString{qubits, bit(k), 0, 0}; }
    static PauliString sigma_y(int qubits, int k) { return PauliString{qubits, bit(k), bit(k), 0}; }
    static PauliString sigma_z(int qubits, int k) { return PauliString{qubits, 0, bit(k), 0}; }

    Complex phase() const {
        static constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[phase_exp & 3];
    }
    bool phase_is_real() const { return (phase_exp & 1) == 0; }
    double real_phase() const {
        if (!phase_is_real()) throw UnsupportedPhase("phase is imaginary");
        return phase_exp == 0 ? 1.0 : -1.0;
    }

    bool is_identity_up_to_phase() const { return xmask == 0 && zmask == 0; }
    bool same_letters(const PauliString& o) const {
        return xmask == o.xmask && zmask == o.zmask;
    }

    PauliString with_phase_exp(std::uint8_t p) const {
        return PauliString{qubits, xmask, zmask, static_cast<std::uint8_t>(p & 3)};
    }
    PauliString negated() const { return with_phase_exp(phase_exp + 2); }

    /// Extend with identity factors on extra trailing qubits.
    PauliString padded(int total_qubits) const {
        if (total_qubits < qubits) throw InsufficientCopies("cannot shrink a Pauli string");
        return PauliString{total_qubits, xmask, zmask, phase_exp};
    }

    bool operator==(const PauliString&) const = default;

private:
    static std::uint64_t bit(int k) { return std::uint64_t{1} << (k - 1); }
};

PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff PQ = -QP: parity of the symplectic form <P.x,Q.z> ^ <P.z,Q.x>.
bool anticommutes(const PauliString& p, const PauliString& q);

/// Sign s with P^T = s * P; equals (-1)^{number of sigma_y factors}.
/// Requires a real phase.
int transpose_sign(const PauliString& p);

inline constexpr int kDenseQubitLimit = 12;

/// Dense matrix of dimension 2^qubits. Guarded to kDenseQubitLimit qubits.
MatrixXcd to_dense(const PauliString& p);

/// <Phi_d| P (x) Q |Phi_d> with |Phi_d> = sum_j |jj>/sqrt(d), d = 2^qubits.
/// Equals tr(P^T Q)/d: zero unless P and Q carry the same letters, otherwise
/// transpose_sign(P) times the product of the (real) phases.
double maxent_expectation(const PauliString& p, const PauliString& q);

} // namespace bellrand
