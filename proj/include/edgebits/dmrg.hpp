#pragma once

#include <cstdint>

#include "edgebits/model.hpp"
#include "edgebits/mps.hpp"

namespace edgebits {

struct DmrgParams {
    int max_bond = 128;
    double cutoff = 1e-10;
    int max_sweeps = 30;
    double energy_tol = 1e-10;
    int lanczos_dim = 20;
    double lanczos_tol = 1e-12;
    std::uint64_t seed = 7;

    void validate() const;
};

struct DmrgResult {
    MatrixProductState state;
    double energy = 0.0;
    bool converged = false;
    int sweeps = 0;
    double truncation_weight = 0.0;
    int max_bond_used = 1;
};

// Two-site DMRG ground-state search with an iterative local eigensolver.
DmrgResult dmrg_ground_state(const HamiltonianMpo& mpo, const DmrgParams& params);

// Deterministic initial guess: |0> on even sites, |+>-like on odd sites,
// plus a seeded jitter to break symmetry.
MatrixProductState dmrg_initial_state(int length, std::uint64_t seed);

// Exact J_xx = 0 ground state under Bell-pair pinning: the open-boundary
// cluster state projected onto Z_0 Z_{L-1} = +1.  Used as the warm start when
// the Hamiltonian carries a chain-spanning edge term, whose tiny energy gain
// local two-site updates cannot reach from a product guess.
MatrixProductState bell_edge_initial_state(int length);

}  // namespace edgebits
