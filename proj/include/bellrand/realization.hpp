#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "bellrand/encoding.hpp"
#include "bellrand/pauli.hpp"

namespace bellrand {

/// Self-adjoint operator as a real combination of real-phase Pauli strings.
struct Observable {
    int qubits = 1;
    std::vector<std::pair<double, PauliString>> terms;

    static Observable from_pauli(const PauliString& p);

    Observable padded(int total_qubits) const;
    MatrixXcd to_dense() const;

    /// Coefficient of the identity string, i.e. trace/dim.
    double identity_coefficient() const;
};

/// Combine like terms; phases are folded into the coefficients.
Observable simplify(const Observable& o);
Observable square(const Observable& o);
bool is_dichotomic(const Observable& o, double tol = 1e-12);
bool observables_anticommute(const Observable& a, const Observable& b, double tol = 1e-12);

/// <Phi_d| A (x) B |Phi_d> evaluated term by term.
double maxent_expectation(const Observable& a, const Observable& b);

inline constexpr int kDenseDimLimit = 4096;

/// Shared state plus both parties' dichotomic observables at a declared copy
/// count. A missing state vector means the maximally entangled state
/// |Phi_d> = sum_j |jj>/sqrt(d) on the A|B cut, d = 2^copies.
struct Realization {
    int n = 2;
    int copies = 1;
    EncodingScheme scheme;
    std::optional<Eigen::VectorXcd> state; // dimension local_dim()^2 when set
    std::vector<Observable> alice;
    std::vector<Observable> bob;

    bool is_maxent() const { return !state.has_value(); }
    int local_dim() const { return 1 << copies; }
    int global_dim() const { return local_dim() * local_dim(); }
};

/// Jordan-Wigner style family of n pairwise anticommuting strings on
/// m = floor(n/2) qubits: Z^{k-1} X and Z^{k-1} Y for k = 1..m, plus Z^m
/// when n is odd.
std::vector<PauliString> canonical_bob_observables(int n);

/// A_{n,i} = (1/sqrt(n)) sum_y (-1)^{x^i_y} B_y, with each term multiplied by
/// its transpose sign so correlators on |Phi_d> come out with a + sign.
Observable alice_observable(const EncodingScheme& scheme,
                            const std::vector<Observable>& bob, int i);

/// The SOS-optimal realization: |Phi_d> on m = floor(n/2) copies, canonical
/// Bob observables, steered Alice observables.
Realization canonical_realization(int n);

/// The dimension-two n=4 construction with B_3 = B_4 = sigma_z and the
/// printed normalizations N_i in {2, 6}; realizes the value 4(sqrt2+sqrt6).
Realization single_copy_realization_n4();

/// The one-copy-short construction for even n >= 4 on m = n/2 - 1 copies:
/// Bob reuses his last observable for the extra setting (B_n = B_{n-1}), so
/// only the duplicated pair fails to anticommute, and Alice's observables are
/// the per-setting sums renormalized by sqrt(N_i). For n = 4 this is exactly
/// single_copy_realization_n4.
Realization duplicated_realization(int n);

/// Same observables tensored with identities on m - floor(n/2) extra copies;
/// the Bell value is unchanged.
Realization padded_realization(int n, int m);

/// || sum_y (-1)^{x^i_y} B_y |psi> || on the realization's state.
double omega(const Realization& r, int i);

/// sum_{i,y} (-1)^{x^i_y} <A_i (x) B_y>, symbolic on |Phi_d>, dense otherwise.
double bell_value(const Realization& r);

/// <A_i (x) B_y> for one setting pair.
double correlator(const Realization& r, int i, int y);

struct SosCertificate {
    double beta = 0;
    double gap = 0;
    std::optional<double> min_eigenvalue; // absent above the dense guard
};

/// beta = sum_i omega_i; gap = beta - Bell value; min eigenvalue of the dense
/// gamma = beta*I - B operator when the global dimension admits it.
SosCertificate sos_certificate(const Realization& r);

/// Size of the largest pairwise-anticommuting set of Pauli strings on the
/// given qubit count, found exhaustively. Guarded to 3 qubits.
int max_anticommuting_set_size_pauli(int qubits);

// Dense helpers shared with the see-saw optimizer.
MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);
Eigen::VectorXcd maxent_state_vector(int local_dim);

} // namespace bellrand
