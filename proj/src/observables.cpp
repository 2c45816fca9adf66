#include "edgebits/observables.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace edgebits {

using Eigen::MatrixXd;

namespace {

double bracket(const ChoiState& rho, const LadderOperator& op) {
    MatrixProductState applied = apply_to_copy(rho, op);
    // <<rho|rho>> = 1 for the unit-norm tensor part
    return MatrixProductState::overlap(rho.state, applied);
}

double fidelity(const MatrixProductState& a, const MatrixProductState& b) {
    double na = std::sqrt(std::abs(MatrixProductState::overlap(a, a)));
    double nb = std::sqrt(std::abs(MatrixProductState::overlap(b, b)));
    if (!(na > 0) || !(nb > 0)) throw std::runtime_error("zero state in fidelity");
    return std::abs(MatrixProductState::overlap(a, b)) / (na * nb);
}

}  // namespace

double m_feo(const ChoiState& rho) {
    const int L = rho.length();
    PauliString xz = edge_xz_left(L);
    return bracket(rho, LadderOperator(xz, xz));
}

double m_wfo(const ChoiState& rho) {
    auto [w, s] = symmetry_generators(rho.length());
    (void)s;
    return bracket(rho, LadderOperator(w, w));
}

double m_sfo(const ChoiState& rho) {
    const int L = rho.length();
    auto [w, s] = symmetry_generators(L);
    (void)s;
    PauliString upper = edge_xz_left(L).multiply(edge_zx_right(L)).multiply(w);
    return bracket(rho, LadderOperator(upper, PauliString::identity(L)));
}

OrderParameterRecord order_parameters(const ChoiState& rho) {
    return {m_feo(rho), m_wfo(rho), m_sfo(rho)};
}

FractionalizationRecord fractionalization_check(const ChoiState& rho) {
    const int L = rho.length();
    auto [w, s] = symmetry_generators(L);
    FractionalizationRecord rec;
    {
        PauliString edges = edge_xz_left(L).multiply(edge_zx_right(L));
        MatrixProductState lhs = apply_to_copy(rho, LadderOperator(w, w));
        MatrixProductState rhs = apply_to_copy(rho, LadderOperator(edges, edges));
        rec.weak_fidelity = fidelity(lhs, rhs);
    }
    {
        // right Z edge operator lives on site L-1 (the paper's two notations
        // disagree; only this choice anticommutes with Z_{L-2}X_{L-1})
        PauliString edges = edge_z_left(L).multiply(edge_z_right(L));
        MatrixProductState lhs = apply_to_copy(rho, LadderOperator(s, PauliString::identity(L)));
        MatrixProductState rhs =
            apply_to_copy(rho, LadderOperator(edges, PauliString::identity(L)));
        rec.strong_fidelity = fidelity(lhs, rhs);
    }
    return rec;
}

ZProfile z_profile(const ChoiState& rho, bool flip) {
    const int L = rho.length();
    ChoiState target = rho;
    if (flip) {
        auto [w, s] = symmetry_generators(L);
        (void)s;
        target.state.apply_ladder_operator(LadderOperator(w, w));
    }
    ZProfile profile;
    profile.values.reserve(static_cast<std::size_t>(L));
    for (int j = 0; j < L; ++j)
        profile.values.push_back(
            trace_expectation(target, PauliString::single(L, j, PauliAxis::Z)));
    return profile;
}

double von_neumann_entropy(const MatrixXd& rho) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (rho + rho.transpose()));
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam < -1e-10)
            throw std::runtime_error("reduced density matrix has a negative eigenvalue");
        if (lam > 1e-14) s -= lam * std::log(lam);
    }
    return s;
}

namespace {

MatrixXd edge_rdm(const ChoiState& rho, EdgeSubsystem subsystem) {
    MatrixProductState copy = rho.state;
    const int L = copy.length();
    switch (subsystem) {
        case EdgeSubsystem::A: return copy.rdm_site(0);
        case EdgeSubsystem::B: return copy.rdm_site(L - 1);
        case EdgeSubsystem::AB: return copy.rdm_two_sites(0, L - 1);
    }
    throw std::logic_error("bad subsystem");
}

}  // namespace

double osee(const ChoiState& rho, EdgeSubsystem subsystem) {
    return von_neumann_entropy(edge_rdm(rho, subsystem));
}

double osmi(const ChoiState& rho) {
    return osee(rho, EdgeSubsystem::A) + osee(rho, EdgeSubsystem::B) -
           osee(rho, EdgeSubsystem::AB);
}

double negativity(const ChoiState& rho, EdgeSubsystem subsystem) {
    MatrixXd rdm = edge_rdm(rho, subsystem);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (rdm + rdm.transpose()));
    // Eigenvalues at the contraction noise floor (~1e-16 relative) are exact
    // zeros of the reduced state; without the filter the square root inflates
    // them to ~1e-8 contributions.
    const double floor = es.eigenvalues().cwiseAbs().maxCoeff() * 1e-13;
    double sum_sqrt = 0.0, sum = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam <= floor) continue;
        sum += lam;
        sum_sqrt += std::sqrt(lam);
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::runtime_error("subsystem eigenvalues do not sum to 1");
    return std::log(sum_sqrt * sum_sqrt);
}

double mutual_negativity(const ChoiState& rho) {
    return negativity(rho, EdgeSubsystem::A) + negativity(rho, EdgeSubsystem::B) -
           negativity(rho, EdgeSubsystem::AB);
}

EdgeCorrelationRecord edge_correlations(const ChoiState& rho) {
    EdgeCorrelationRecord rec;
    rec.s_a = osee(rho, EdgeSubsystem::A);
    rec.s_b = osee(rho, EdgeSubsystem::B);
    rec.s_ab = osee(rho, EdgeSubsystem::AB);
    rec.osmi = rec.s_a + rec.s_b - rec.s_ab;
    rec.n_a = negativity(rho, EdgeSubsystem::A);
    rec.n_b = negativity(rho, EdgeSubsystem::B);
    rec.n_ab = negativity(rho, EdgeSubsystem::AB);
    rec.mutual_negativity = rec.n_a + rec.n_b - rec.n_ab;
    return rec;
}

std::optional<std::pair<int, int>> label_sector(const ChoiState& rho) {
    const int L = rho.length();
    double z0 = trace_expectation(rho, edge_z_left(L));
    double zl = trace_expectation(rho, edge_z_right(L));
    if (std::abs(z0) < 0.1 || std::abs(zl) < 0.1) return std::nullopt;
    return std::make_pair(z0 > 0 ? 0 : 1, zl > 0 ? 0 : 1);
}

}  // namespace edgebits
