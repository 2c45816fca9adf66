#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "edgebits/pauli.hpp"

namespace edgebits {

enum class PinningKind { None, PolarizedZ, BellPair };

struct Pinning {
    PinningKind kind = PinningKind::None;
    double epsilon = 1e-3;

    static Pinning none() { return {PinningKind::None, 0.0}; }
    static Pinning polarized_z(double eps = 1e-3) { return {PinningKind::PolarizedZ, eps}; }
    static Pinning bell_pair(double eps = 1e-3) { return {PinningKind::BellPair, eps}; }

    std::string name() const;
};

Pinning pinning_from_name(const std::string& name, double eps);

// Immutable experiment parameters for one chain.  L is odd; boundaries open.
struct ChainConfig {
    int length = 5;
    double j_xx = 0.0;
    Pinning pinning = Pinning::none();

    void validate() const;
};

struct HamiltonianTerm {
    double coefficient;
    PauliString op;
};

// Per-site MPO tensor: ops[wl * right_dim + wr] is the d x d operator block,
// a zero-size matrix where the automaton has no transition.
struct MpoSite {
    int left_dim = 0;
    int right_dim = 0;
    int phys_dim = 2;
    std::vector<Eigen::MatrixXd> ops;

    const Eigen::MatrixXd& at(int wl, int wr) const { return ops[static_cast<std::size_t>(wl * right_dim + wr)]; }
    Eigen::MatrixXd& at(int wl, int wr) { return ops[static_cast<std::size_t>(wl * right_dim + wr)]; }
};

struct HamiltonianMpo {
    std::vector<MpoSite> sites;
    std::vector<HamiltonianTerm> terms;  // term manifest, audit source of truth

    int length() const { return static_cast<int>(sites.size()); }
    int max_bond() const;
    Eigen::MatrixXd to_dense() const;  // contracts all physical legs, L <= dense limit
    std::string manifest_text() const;  // one term per line: coefficient, site:axis pairs
};

std::vector<HamiltonianTerm> hamiltonian_terms(const ChainConfig& config);

HamiltonianMpo build_hamiltonian(const ChainConfig& config);

// Generic exact compiler: bond basis at each cut is {vacuum, done} plus one
// state per term straddling the cut.
HamiltonianMpo mpo_from_terms(std::vector<HamiltonianTerm> terms, int length);

// W = prod_{j even} X_j, S = prod_{j odd} X_j
std::pair<PauliString, PauliString> symmetry_generators(int length);

// Edge operators used throughout (sites fixed to 0,1 and L-2,L-1).
PauliString edge_xz_left(int length);    // X_0 Z_1
PauliString edge_zx_right(int length);   // Z_{L-2} X_{L-1}
PauliString edge_z_left(int length);     // Z_0
PauliString edge_z_right(int length);    // Z_{L-1}

}  // namespace edgebits
