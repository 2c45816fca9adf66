#include "edgebits/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace edgebits {
namespace oracle {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

int length_from_dim(Eigen::Index dim) {
    int L = 0;
    Eigen::Index d = 1;
    while (d < dim) {
        d *= 2;
        ++L;
    }
    if (d != dim) throw std::invalid_argument("matrix dimension is not a power of two");
    return L;
}

double entropy_of(const MatrixXd& rho) {
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (rho + rho.transpose()));
    double s = 0.0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double lam = es.eigenvalues()(i);
        if (lam > 1e-14) s -= lam * std::log(lam);
    }
    return s;
}

double frobenius_fidelity(const MatrixXd& a, const MatrixXd& b) {
    double na = a.norm(), nb = b.norm();
    if (!(na > 0) || !(nb > 0)) throw std::runtime_error("zero operator in fidelity");
    return std::abs((a.array() * b.array()).sum()) / (na * nb);
}

}  // namespace

MatrixXd dense_hamiltonian(const ChainConfig& config) {
    if (config.length > kDenseSiteLimit)
        throw std::invalid_argument("dense Hamiltonian: L above dense limit");
    auto terms = hamiltonian_terms(config);
    const Eigen::Index dim = Eigen::Index(1) << config.length;
    MatrixXd h = MatrixXd::Zero(dim, dim);
    for (const auto& t : terms) h += t.coefficient * t.op.to_dense_real();
    return h;
}

GroundState dense_ground_state(const ChainConfig& config) {
    MatrixXd h = dense_hamiltonian(config);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(h);
    GroundState gs;
    gs.energy = es.eigenvalues()(0);
    gs.vector = es.eigenvectors().col(0);
    for (Eigen::Index i = 0; i < gs.vector.size(); ++i) {
        if (std::abs(gs.vector(i)) > 1e-12) {
            if (gs.vector(i) < 0) gs.vector = -gs.vector;
            break;
        }
    }
    return gs;
}

MatrixXd dense_apply_channel(const MatrixXd& rho, double p_z) {
    if (p_z < 0.0 || p_z > 0.5) throw std::invalid_argument("p_z must lie in [0, 1/2]");
    const int L = length_from_dim(rho.rows());
    MatrixXd out = rho;
    for (int j = 0; j < L; j += 2) {
        MatrixXd z = PauliString::single(L, j, PauliAxis::Z).to_dense_real();
        out = (1.0 - p_z) * out + p_z * (z * out * z);
    }
    return out;
}

VectorXd choi_vector(const MatrixXd& rho) {
    const int L = length_from_dim(rho.rows());
    const Eigen::Index dim = rho.rows();
    VectorXd v(dim * dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        for (Eigen::Index row = 0; row < dim; ++row) {
            // rung digit 2u+l, u = column bit, l = row bit, rung 0 least significant
            std::size_t idx = 0;
            for (int s = 0; s < L; ++s) {
                std::size_t digit =
                    2 * ((static_cast<std::size_t>(col) >> s) & 1) +
                    ((static_cast<std::size_t>(row) >> s) & 1);
                idx += digit << (2 * s);
            }
            v(static_cast<Eigen::Index>(idx)) = rho(row, col);
        }
    }
    v.normalize();
    return v;
}

MatrixXd rdm_rungs(const VectorXd& v, int length, const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    const Eigen::Index dim_keep = Eigen::Index(1) << (2 * k);
    const Eigen::Index dim_rest = v.size() >> (2 * k);
    std::vector<bool> kept(static_cast<std::size_t>(length), false);
    for (int s : keep) kept[static_cast<std::size_t>(s)] = true;

    MatrixXd m(dim_keep, dim_rest);
    for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        // first listed site is the most significant keep digit
        Eigen::Index ki = 0, ri = 0;
        for (int t = 0; t < k; ++t) {
            Eigen::Index digit = (idx >> (2 * keep[static_cast<std::size_t>(t)])) & 3;
            ki += digit << (2 * (k - 1 - t));
        }
        int rpos = 0;
        for (int s = 0; s < length; ++s) {
            if (kept[static_cast<std::size_t>(s)]) continue;
            ri += ((idx >> (2 * s)) & 3) << (2 * rpos);
            ++rpos;
        }
        m(ki, ri) = v(idx);
    }
    return m * m.transpose();
}

double negativity_partial_transpose(const VectorXd& v, int length, const std::vector<int>& keep) {
    const int k = static_cast<int>(keep.size());
    const Eigen::Index dim_keep = Eigen::Index(1) << (2 * k);
    const Eigen::Index dim_rest = v.size() >> (2 * k);
    std::vector<bool> kept(static_cast<std::size_t>(length), false);
    for (int s : keep) kept[static_cast<std::size_t>(s)] = true;

    MatrixXd m(dim_keep, dim_rest);
    for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
        Eigen::Index ki = 0, ri = 0;
        for (int t = 0; t < k; ++t) {
            Eigen::Index digit = (idx >> (2 * keep[static_cast<std::size_t>(t)])) & 3;
            ki += digit << (2 * (k - 1 - t));
        }
        int rpos = 0;
        for (int s = 0; s < length; ++s) {
            if (kept[static_cast<std::size_t>(s)]) continue;
            ri += ((idx >> (2 * s)) & 3) << (2 * rpos);
            ++rpos;
        }
        m(ki, ri) = v(idx);
    }

    // The partial transpose of |v><v| is supported on span{|a>} x span{|m_a>};
    // its matrix in that support is N((a1,c),(a2,c')) = C(a2,c) C(a1,c') with
    // C = U S from the thin SVD of the reshaped vector.
    Eigen::BDCSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
    const VectorXd& s = svd.singularValues();
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > 1e-14 * s(0)) ++r;
    if (r == 0) throw std::runtime_error("zero vector in negativity");
    MatrixXd c = svd.matrixU().leftCols(r) * s.head(r).asDiagonal();
    const Eigen::Index n = dim_keep * r;
    MatrixXd pt(n, n);
    for (Eigen::Index a1 = 0; a1 < dim_keep; ++a1)
        for (int c1 = 0; c1 < r; ++c1)
            for (Eigen::Index a2 = 0; a2 < dim_keep; ++a2)
                for (int c2 = 0; c2 < r; ++c2)
                    pt(a1 * r + c1, a2 * r + c2) = c(a2, c1) * c(a1, c2);
    Eigen::BDCSVD<MatrixXd> ptsvd(pt);
    return std::log(ptsvd.singularValues().sum());
}

DenseObservables dense_observables(const MatrixXd& rho_in, bool allow_large) {
    const int L = length_from_dim(rho_in.rows());
    MatrixXd rho = rho_in / rho_in.trace();

    DenseObservables obs;
    double purity = (rho * rho).trace();
    obs.purity = purity;

    MatrixXd xz_left = edge_xz_left(L).to_dense_real();
    MatrixXd zx_right = edge_zx_right(L).to_dense_real();
    auto [wstr, sstr] = symmetry_generators(L);
    MatrixXd w = wstr.to_dense_real();
    MatrixXd s = sstr.to_dense_real();

    obs.m_feo = (xz_left * rho * xz_left * rho).trace() / purity;
    obs.m_wfo = (w * rho * w * rho).trace() / purity;
    // [(X0 Z1)(Z_{L-2} X_{L-1})]_u W_u (x) I_l corresponds to rho -> rho A^T
    MatrixXd a = xz_left * zx_right * w;
    obs.m_sfo = (rho * rho * a.transpose()).trace() / purity;

    obs.weak_fidelity = frobenius_fidelity(w * rho * w, (xz_left * zx_right) * rho *
                                                            (xz_left * zx_right));
    MatrixXd zz = edge_z_left(L).to_dense_real() * edge_z_right(L).to_dense_real();
    obs.strong_fidelity = frobenius_fidelity(rho * s, rho * zz);

    obs.z_profile.resize(static_cast<std::size_t>(L));
    obs.z_profile_flipped.resize(static_cast<std::size_t>(L));
    MatrixXd rho_flip = w * rho * w;
    for (int j = 0; j < L; ++j) {
        MatrixXd zj = PauliString::single(L, j, PauliAxis::Z).to_dense_real();
        obs.z_profile[static_cast<std::size_t>(j)] = (rho * zj).trace();
        obs.z_profile_flipped[static_cast<std::size_t>(j)] = (rho_flip * zj).trace();
    }

    const int limit = allow_large ? kEntanglementLimitLarge : kEntanglementLimit;
    if (L > limit)
        throw std::invalid_argument("dense OSEE/negativity refused above the memory guard");

    VectorXd v = choi_vector(rho);
    obs.s_a = entropy_of(rdm_rungs(v, L, {0}));
    obs.s_b = entropy_of(rdm_rungs(v, L, {L - 1}));
    obs.s_ab = entropy_of(rdm_rungs(v, L, {0, L - 1}));
    obs.osmi = obs.s_a + obs.s_b - obs.s_ab;
    obs.n_a = negativity_partial_transpose(v, L, {0});
    obs.n_b = negativity_partial_transpose(v, L, {L - 1});
    obs.n_ab = negativity_partial_transpose(v, L, {0, L - 1});
    obs.mutual_negativity = obs.n_a + obs.n_b - obs.n_ab;
    return obs;
}

}  // namespace oracle
}  // namespace edgebits
