#include "edgebits/dmrg.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace edgebits {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void DmrgParams::validate() const {
    if (max_bond < 1) throw std::invalid_argument("max_bond must be >= 1");
    if (cutoff <= 0) throw std::invalid_argument("cutoff must be positive");
    if (energy_tol <= 0) throw std::invalid_argument("energy_tol must be positive");
    if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
    if (lanczos_dim < 2) throw std::invalid_argument("lanczos subspace too small");
    if (lanczos_tol <= 0) throw std::invalid_argument("lanczos_tol must be positive");
}

MatrixProductState dmrg_initial_state(int length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<VectorXd> locals;
    locals.reserve(static_cast<std::size_t>(length));
    for (int j = 0; j < length; ++j) {
        VectorXd v(2);
        if (j % 2 == 0)
            v << 1.0, 0.0;
        else
            v << 1.0, 1.0;
        v(0) += jitter(rng);
        v(1) += jitter(rng);
        v.normalize();
        locals.push_back(v);
    }
    return MatrixProductState::product_state(locals);
}

MatrixProductState bell_edge_initial_state(int length) {
    // Open-boundary cluster state, amplitudes 2^{-L/2} (-1)^{sum_j s_j s_{j+1}},
    // as a bond-dimension-2 MPS whose bond index carries the previous spin.
    MatrixProductState cluster = MatrixProductState::product_state(
        std::vector<VectorXd>(static_cast<std::size_t>(length), Eigen::Vector2d(1.0, 1.0)));
    for (int j = 0; j < length; ++j) {
        SiteTensor& t = cluster.site_mut(j);
        t.dl = (j == 0) ? 1 : 2;
        t.d = 2;
        t.dr = (j == length - 1) ? 1 : 2;
        t.m = Eigen::MatrixXd::Zero(t.dl * 2, t.dr);
        for (int a = 0; a < t.dl; ++a)
            for (int s = 0; s < 2; ++s) {
                double v = (a == 1 && s == 1) ? -1.0 : 1.0;
                t.m(a * 2 + s, (j == length - 1) ? 0 : s) = v;
            }
    }
    cluster.canonicalize(0);
    cluster.set_log_norm(0.0);

    // Project onto Z_0 Z_{L-1} = +1; the edge-X stabilizers of the cluster
    // state already fix the second pinning term.
    MatrixProductState flipped = cluster;
    Eigen::Matrix2d z;
    z << 1.0, 0.0, 0.0, -1.0;
    flipped.apply_site_gate(0, z);
    flipped.apply_site_gate(length - 1, z);
    const double c = 1.0 / std::sqrt(2.0);
    MatrixProductState psi = MatrixProductState::add(cluster, c, flipped, c);
    psi.compress(1e-14, 8);
    psi.set_log_norm(0.0);
    return psi;
}

namespace {

using Env = std::vector<MatrixXd>;  // one block per MPO bond state

Env left_env_update(const Env& env, const SiteTensor& a, const MpoSite& w) {
    Env out(static_cast<std::size_t>(w.right_dim));
    for (int wr = 0; wr < w.right_dim; ++wr)
        out[static_cast<std::size_t>(wr)] = MatrixXd::Zero(a.dr, a.dr);
    for (int wl = 0; wl < w.left_dim; ++wl) {
        const MatrixXd& e = env[static_cast<std::size_t>(wl)];
        if (e.size() == 0) continue;
        // cache e * A_pk
        std::vector<MatrixXd> ea(static_cast<std::size_t>(a.d));
        for (int pk = 0; pk < a.d; ++pk) ea[static_cast<std::size_t>(pk)] = e * a.slice(pk);
        for (int wr = 0; wr < w.right_dim; ++wr) {
            const MatrixXd& blk = w.at(wl, wr);
            if (blk.size() == 0) continue;
            for (int pb = 0; pb < a.d; ++pb)
                for (int pk = 0; pk < a.d; ++pk) {
                    double c = blk(pb, pk);
                    if (c == 0.0) continue;
                    out[static_cast<std::size_t>(wr)].noalias() +=
                        c * (a.slice(pb).transpose() * ea[static_cast<std::size_t>(pk)]);
                }
        }
    }
    return out;
}

Env right_env_update(const Env& env, const SiteTensor& a, const MpoSite& w) {
    Env out(static_cast<std::size_t>(w.left_dim));
    for (int wl = 0; wl < w.left_dim; ++wl)
        out[static_cast<std::size_t>(wl)] = MatrixXd::Zero(a.dl, a.dl);
    for (int wr = 0; wr < w.right_dim; ++wr) {
        const MatrixXd& e = env[static_cast<std::size_t>(wr)];
        if (e.size() == 0) continue;
        std::vector<MatrixXd> ae(static_cast<std::size_t>(a.d));
        for (int pk = 0; pk < a.d; ++pk)
            ae[static_cast<std::size_t>(pk)] = e * a.slice(pk).transpose();
        for (int wl = 0; wl < w.left_dim; ++wl) {
            const MatrixXd& blk = w.at(wl, wr);
            if (blk.size() == 0) continue;
            for (int pb = 0; pb < a.d; ++pb)
                for (int pk = 0; pk < a.d; ++pk) {
                    double c = blk(pb, pk);
                    if (c == 0.0) continue;
                    out[static_cast<std::size_t>(wl)].noalias() +=
                        c * (a.slice(pb) * ae[static_cast<std::size_t>(pk)]);
                }
        }
    }
    return out;
}

// Effective two-site Hamiltonian; theta stored as (Dl) x (d*d*Dr) with column
// index ((p1*d)+p2)*Dr + r.
struct TwoSiteProblem {
    const Env* lenv;
    const Env* renv;
    const MpoSite* w1;
    const MpoSite* w2;
    int dl, d, dr;

    Eigen::Index dim() const {
        return static_cast<Eigen::Index>(dl) * d * d * dr;
    }

    VectorXd apply(const VectorXd& x) const {
        Eigen::Map<const MatrixXd> theta(x.data(), dl, static_cast<Eigen::Index>(d) * d * dr);
        const int wm_dim = w1->right_dim;
        const int wr_dim = w2->right_dim;
        std::vector<MatrixXd> y(static_cast<std::size_t>(wm_dim));
        for (int wl = 0; wl < w1->left_dim; ++wl) {
            const MatrixXd& e = (*lenv)[static_cast<std::size_t>(wl)];
            if (e.size() == 0) continue;
            MatrixXd x1 = e * theta;
            for (int wm = 0; wm < wm_dim; ++wm) {
                const MatrixXd& blk = w1->at(wl, wm);
                if (blk.size() == 0) continue;
                auto& acc = y[static_cast<std::size_t>(wm)];
                if (acc.size() == 0) acc = MatrixXd::Zero(dl, static_cast<Eigen::Index>(d) * d * dr);
                for (int pb = 0; pb < d; ++pb)
                    for (int pk = 0; pk < d; ++pk) {
                        double c = blk(pb, pk);
                        if (c == 0.0) continue;
                        for (int p2 = 0; p2 < d; ++p2)
                            acc.middleCols(static_cast<Eigen::Index>(pb * d + p2) * dr, dr)
                                .noalias() +=
                                c * x1.middleCols(static_cast<Eigen::Index>(pk * d + p2) * dr, dr);
                    }
            }
        }
        std::vector<MatrixXd> z(static_cast<std::size_t>(wr_dim));
        for (int wm = 0; wm < wm_dim; ++wm) {
            const MatrixXd& src = y[static_cast<std::size_t>(wm)];
            if (src.size() == 0) continue;
            for (int wr = 0; wr < wr_dim; ++wr) {
                const MatrixXd& blk = w2->at(wm, wr);
                if (blk.size() == 0) continue;
                auto& acc = z[static_cast<std::size_t>(wr)];
                if (acc.size() == 0) acc = MatrixXd::Zero(dl, static_cast<Eigen::Index>(d) * d * dr);
                for (int pb = 0; pb < d; ++pb)
                    for (int pk = 0; pk < d; ++pk) {
                        double c = blk(pb, pk);
                        if (c == 0.0) continue;
                        for (int p1 = 0; p1 < d; ++p1)
                            acc.middleCols(static_cast<Eigen::Index>(p1 * d + pb) * dr, dr)
                                .noalias() +=
                                c * src.middleCols(static_cast<Eigen::Index>(p1 * d + pk) * dr, dr);
                    }
            }
        }
        VectorXd out = VectorXd::Zero(x.size());
        Eigen::Map<MatrixXd> res(out.data(), dl, static_cast<Eigen::Index>(d) * d * dr);
        for (int wr = 0; wr < wr_dim; ++wr) {
            const MatrixXd& src = z[static_cast<std::size_t>(wr)];
            if (src.size() == 0) continue;
            const MatrixXd& e = (*renv)[static_cast<std::size_t>(wr)];
            for (int pp = 0; pp < d * d; ++pp)
                res.middleCols(static_cast<Eigen::Index>(pp) * dr, dr).noalias() +=
                    src.middleCols(static_cast<Eigen::Index>(pp) * dr, dr) * e.transpose();
        }
        return out;
    }
};

// Lowest eigenpair; dense solve for small problems, restarted Lanczos with
// full reorthogonalization otherwise.
double lowest_eigenpair(const TwoSiteProblem& problem, VectorXd& v, int krylov_dim, double tol) {
    const Eigen::Index n = problem.dim();
    if (n <= 128) {
        MatrixXd h(n, n);
        VectorXd e = VectorXd::Zero(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            e(j) = 1.0;
            h.col(j) = problem.apply(e);
            e(j) = 0.0;
        }
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (h + h.transpose()));
        v = es.eigenvectors().col(0);
        return es.eigenvalues()(0);
    }

    double nrm = v.norm();
    if (!(nrm > 0)) throw std::runtime_error("zero start vector in eigensolver");
    v /= nrm;
    double lambda = 0.0;
    for (int restart = 0; restart < 60; ++restart) {
        const int m = static_cast<int>(std::min<Eigen::Index>(krylov_dim, n));
        MatrixXd basis(n, m);
        VectorXd alpha(m), beta(m);
        basis.col(0) = v;
        int built = 0;
        for (int j = 0; j < m; ++j) {
            VectorXd w = problem.apply(basis.col(j));
            alpha(j) = basis.col(j).dot(w);
            w -= alpha(j) * basis.col(j);
            if (j > 0) w -= beta(j - 1) * basis.col(j - 1);
            // full reorthogonalization
            for (int k = 0; k <= j; ++k) w -= basis.col(k).dot(w) * basis.col(k);
            built = j + 1;
            if (j + 1 == m) break;
            beta(j) = w.norm();
            if (beta(j) < 1e-14) break;
            basis.col(j + 1) = w / beta(j);
        }
        MatrixXd t = MatrixXd::Zero(built, built);
        for (int j = 0; j < built; ++j) {
            t(j, j) = alpha(j);
            if (j + 1 < built) {
                t(j, j + 1) = beta(j);
                t(j + 1, j) = beta(j);
            }
        }
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(t);
        lambda = es.eigenvalues()(0);
        v = basis.leftCols(built) * es.eigenvectors().col(0);
        v.normalize();
        VectorXd resid = problem.apply(v) - lambda * v;
        if (resid.norm() < tol * std::max(1.0, std::abs(lambda))) break;
    }
    return lambda;
}

}  // namespace

DmrgResult dmrg_ground_state(const HamiltonianMpo& mpo, const DmrgParams& params) {
    params.validate();
    const int L = mpo.length();
    DmrgResult result;
    bool spanning_edge_term = false;
    for (const auto& term : mpo.terms)
        spanning_edge_term |= term.op.factor(0) != PauliAxis::I &&
                              term.op.factor(L - 1) != PauliAxis::I;
    MatrixProductState psi =
        spanning_edge_term ? bell_edge_initial_state(L) : dmrg_initial_state(L, params.seed);
    psi.set_log_norm(0.0);

    std::vector<Env> lenv(static_cast<std::size_t>(L + 1));
    std::vector<Env> renv(static_cast<std::size_t>(L + 1));
    lenv[0] = Env{MatrixXd::Ones(1, 1)};
    renv[static_cast<std::size_t>(L)] = Env{MatrixXd::Ones(1, 1)};
    for (int j = L - 1; j >= 2; --j)
        renv[static_cast<std::size_t>(j)] = right_env_update(
            renv[static_cast<std::size_t>(j + 1)], psi.site(j), mpo.sites[static_cast<std::size_t>(j)]);

    double energy = 0.0;
    double prev_energy = std::numeric_limits<double>::quiet_NaN();

    auto optimize_bond = [&](int i, bool moving_right) {
        const SiteTensor& a = psi.site(i);
        const SiteTensor& b = psi.site(i + 1);
        const int dl = a.dl, d = a.d, dr = b.dr;
        TwoSiteProblem problem{&lenv[static_cast<std::size_t>(i)],
                               &renv[static_cast<std::size_t>(i + 2)],
                               &mpo.sites[static_cast<std::size_t>(i)],
                               &mpo.sites[static_cast<std::size_t>(i + 1)],
                               dl, d, dr};
        // initial guess from the current tensors
        VectorXd theta(problem.dim());
        Eigen::Map<MatrixXd> tm(theta.data(), dl, static_cast<Eigen::Index>(d) * d * dr);
        for (int p1 = 0; p1 < d; ++p1)
            for (int p2 = 0; p2 < d; ++p2)
                tm.middleCols(static_cast<Eigen::Index>(p1 * d + p2) * dr, dr) =
                    a.slice(p1) * b.slice(p2);
        double theta_norm = theta.norm();
        if (theta_norm > 0) theta /= theta_norm;
        energy = lowest_eigenpair(problem, theta, params.lanczos_dim, params.lanczos_tol);

        // split: reshape to (dl*d) x (d*dr)
        MatrixXd merged(dl * d, static_cast<Eigen::Index>(d) * dr);
        Eigen::Map<const MatrixXd> tmc(theta.data(), dl, static_cast<Eigen::Index>(d) * d * dr);
        for (int l = 0; l < dl; ++l)
            for (int p1 = 0; p1 < d; ++p1)
                merged.row(l * d + p1) =
                    tmc.block(l, static_cast<Eigen::Index>(p1) * d * dr, 1,
                              static_cast<Eigen::Index>(d) * dr);
        Eigen::BDCSVD<MatrixXd> svd(merged, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const VectorXd& s = svd.singularValues();
        double total = s.squaredNorm();
        int keep = 0;
        for (int k = 0; k < s.size(); ++k)
            if (s(k) > params.cutoff * std::sqrt(total) && k < params.max_bond) ++keep;
        if (keep == 0) keep = 1;
        result.truncation_weight += (total - s.head(keep).squaredNorm()) / total;
        result.max_bond_used = std::max(result.max_bond_used, keep);
        VectorXd sk = s.head(keep) / s.head(keep).norm();

        SiteTensor& am = psi.site_mut(i);
        SiteTensor& bm = psi.site_mut(i + 1);
        if (moving_right) {
            am.m = svd.matrixU().leftCols(keep);
            am.dr = keep;
            MatrixXd right = sk.asDiagonal() * MatrixXd(svd.matrixV().leftCols(keep).transpose());
            bm.m = from_right_layout(right, keep, d, dr);
            bm.dl = keep;
            lenv[static_cast<std::size_t>(i + 1)] = left_env_update(
                lenv[static_cast<std::size_t>(i)], psi.site(i), mpo.sites[static_cast<std::size_t>(i)]);
        } else {
            bm.m = from_right_layout(svd.matrixV().leftCols(keep).transpose(), keep, d, dr);
            bm.dl = keep;
            am.m = svd.matrixU().leftCols(keep) * sk.asDiagonal();
            am.dr = keep;
            renv[static_cast<std::size_t>(i + 1)] = right_env_update(
                renv[static_cast<std::size_t>(i + 2)], psi.site(i + 1),
                mpo.sites[static_cast<std::size_t>(i + 1)]);
        }
    };

    for (int sweep = 1; sweep <= params.max_sweeps; ++sweep) {
        for (int i = 0; i < L - 1; ++i) optimize_bond(i, true);
        for (int i = L - 2; i >= 0; --i) optimize_bond(i, false);
        result.sweeps = sweep;
        if (std::isfinite(prev_energy) && std::abs(prev_energy - energy) < params.energy_tol) {
            result.converged = true;
            break;
        }
        prev_energy = energy;
    }

    psi.canonicalize(0);
    psi.set_log_norm(0.0);  // ground state reported normalized
    result.state = std::move(psi);
    result.energy = energy;
    return result;
}

}  // namespace edgebits
