#pragma once

#include <vector>

#include <Eigen/Dense>

#include "edgebits/model.hpp"

namespace edgebits {
namespace oracle {

// Dense exact-diagonalization reference for the whole pipeline, working in
// the undoubled density-matrix representation; structurally independent of
// the MPS code paths.  Basis convention: site 0 is the least significant bit.

constexpr int kEntanglementLimit = 9;   // 4^9 vectorization by default
constexpr int kEntanglementLimitLarge = 11;

struct GroundState {
    Eigen::VectorXd vector;
    double energy = 0.0;
};

Eigen::MatrixXd dense_hamiltonian(const ChainConfig& config);

// Minimum-eigenvalue eigenvector with the first nonzero amplitude real
// positive.
GroundState dense_ground_state(const ChainConfig& config);

// Sequential application of (1-p) rho + p Z_j rho Z_j over even j.
Eigen::MatrixXd dense_apply_channel(const Eigen::MatrixXd& rho, double p_z);

struct DenseObservables {
    double m_feo = 0.0;
    double m_wfo = 0.0;
    double m_sfo = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
    double s_ab = 0.0;
    double osmi = 0.0;
    double n_a = 0.0;
    double n_b = 0.0;
    double n_ab = 0.0;
    double mutual_negativity = 0.0;
    double purity = 0.0;
    double weak_fidelity = 0.0;
    double strong_fidelity = 0.0;
    std::vector<double> z_profile;
    std::vector<double> z_profile_flipped;
};

DenseObservables dense_observables(const Eigen::MatrixXd& rho, bool allow_large = false);

// Vectorized (Choi) form of rho, unit 2-norm, rung digit 2u+l with u the
// column bit and l the row bit of rho; rung 0 least significant.
Eigen::VectorXd choi_vector(const Eigen::MatrixXd& rho);

// Reduced density matrix of the listed rungs of a unit vector on L rungs.
Eigen::MatrixXd rdm_rungs(const Eigen::VectorXd& v, int length, const std::vector<int>& keep);

// ln of the trace norm of the partial transpose of |v><v| over the listed
// rungs, computed in the operator's reduced support.
double negativity_partial_transpose(const Eigen::VectorXd& v, int length,
                                    const std::vector<int>& keep);

}  // namespace oracle
}  // namespace edgebits
