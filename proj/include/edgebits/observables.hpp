#pragma once

#include <optional>

#include "edgebits/choi.hpp"

namespace edgebits {

struct OrderParameterRecord {
    double m_feo = 0.0;
    double m_wfo = 0.0;
    double m_sfo = 0.0;
};

struct FractionalizationRecord {
    double weak_fidelity = 0.0;
    double strong_fidelity = 0.0;
};

struct EdgeCorrelationRecord {
    double s_a = 0.0;
    double s_b = 0.0;
    double s_ab = 0.0;
    double osmi = 0.0;
    double n_a = 0.0;
    double n_b = 0.0;
    double n_ab = 0.0;
    double mutual_negativity = 0.0;
};

struct ZProfile {
    std::vector<double> values;  // <Z_j>, j = 0..L-1
};

enum class EdgeSubsystem { A, B, AB };

// <<rho|(X0 Z1)_u (x) (X0 Z1)_l|rho>> / <<rho|rho>>
double m_feo(const ChoiState& rho);
// <<rho|W*_u (x) W_l|rho>> / <<rho|rho>>
double m_wfo(const ChoiState& rho);
// <<rho|[(X0 Z1)(Z_{L-2} X_{L-1})]_u W*_u (x) I_l|rho>> / <<rho|rho>>
double m_sfo(const ChoiState& rho);

OrderParameterRecord order_parameters(const ChoiState& rho);

// Fidelities between the symmetry-applied state and its edge-operator image;
// both 1 at the fixed point, drift measures edge-operator dressing.
FractionalizationRecord fractionalization_check(const ChoiState& rho);

ZProfile z_profile(const ChoiState& rho, bool flip);

// Von Neumann entropy (natural log) of the selected edge-rung subsystem of
// the normalized Choi vector.
double osee(const ChoiState& rho, EdgeSubsystem subsystem);
double osmi(const ChoiState& rho);

// Pure-global-state negativity ln((sum_i sqrt(lambda_i))^2) from the
// subsystem's reduced-matrix eigenvalues.
double negativity(const ChoiState& rho, EdgeSubsystem subsystem);
double mutual_negativity(const ChoiState& rho);

EdgeCorrelationRecord edge_correlations(const ChoiState& rho);

// (alpha, beta) from sign(<Z_0>), sign(<Z_{L-1}>); nullopt inside the 0.1
// dead-band.
std::optional<std::pair<int, int>> label_sector(const ChoiState& rho);

double von_neumann_entropy(const Eigen::MatrixXd& rho);

}  // namespace edgebits
