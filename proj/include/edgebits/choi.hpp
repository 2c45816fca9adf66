#pragma once

#include <array>
#include <optional>
#include <string>

#include "edgebits/model.hpp"
#include "edgebits/mps.hpp"

namespace edgebits {

struct ChannelSpec {
    double p_z = 0.0;  // even-site Z dephasing strength, 0 <= p_z <= 1/2

    void validate() const;
};

struct FixedPointLabels {
    int alpha = 0;
    int beta = 0;
    std::optional<std::array<double, 4>> mixture;  // weights p_{alpha beta}, index 2a+b

    void validate() const;
};

// Rung-merged (d=4) vectorized density matrix.  The tensor part is kept at
// unit 2-norm; all physical quantities are ratios, so no absolute scale is
// stored beyond the purity bookkeeping.
struct ChoiState {
    MatrixProductState state;
    bool normalized = true;
    double log_purity_prenorm = 0.0;  // log <<rho|rho>> recorded by the last channel
    std::string provenance;

    int length() const { return state.length(); }
};

struct SymmetryPredicates {
    bool strong_s = false;
    bool weak_w = false;
    double strong_overlap = 0.0;
    double weak_overlap = 0.0;
};

constexpr double kDefaultChoiCutoff = 1e-12;
constexpr int kDefaultChoiMaxBond = 4096;

// |rho_0>> = |psi*>|psi> as a rung MPS; bond dimension chi^2 at most,
// compressed at the given cutoff.
ChoiState choi_double(const MatrixProductState& psi, double cutoff = kDefaultChoiCutoff,
                      int max_bond = kDefaultChoiMaxBond);

// diag(1, 1-2p, 1-2p, 1) in the rung basis.
Eigen::Matrix4d dephasing_gate(double p_z);
// Equivalent imaginary-time form c * exp(tau Z(x)Z), tau = arctanh(p/(1-p));
// diverges at p_z = 1/2 and exists as a cross-check only.
Eigen::Matrix4d dephasing_gate_exponential(double p_z);

ChoiState apply_channel(const ChoiState& rho, const ChannelSpec& spec,
                        double cutoff = kDefaultChoiCutoff, int max_bond = kDefaultChoiMaxBond);

// Product of unnormalized |t> = (1,0,0,1) rungs; contracted only in ratios.
MatrixProductState identity_boundary(int length);

// Tr[rho O] for the encoded trace-normalized rho; O acts on the upper copy.
double trace_expectation(const ChoiState& rho, const PauliString& op_upper);

// Tr[rho^2] of the trace-normalized operator.
double purity(const ChoiState& rho);

// Exact bond-dimension-2 fixed-point ASPT state, sector (alpha, beta), or the
// weighted Choi superposition when mixture weights are given.
ChoiState fixed_point_state(int length, const FixedPointLabels& labels);

SymmetryPredicates symmetry_predicates(const ChoiState& rho, double tol = 1e-8);

// Overlap of the state with its bra/ket-swapped image; 1 for Hermitian rho.
double hermiticity_swap_overlap(const ChoiState& rho);

// Applies op to a copy of the state without renormalizing.
MatrixProductState apply_to_copy(const ChoiState& rho, const LadderOperator& op);

}  // namespace edgebits
