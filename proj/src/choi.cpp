#include "edgebits/choi.hpp"

#include <cmath>
#include <stdexcept>

namespace edgebits {

using Eigen::Matrix4d;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void ChannelSpec::validate() const {
    if (p_z < 0.0 || p_z > 0.5)
        throw std::invalid_argument("p_z must lie in [0, 1/2]");
}

void FixedPointLabels::validate() const {
    if (alpha != 0 && alpha != 1) throw std::invalid_argument("alpha must be 0 or 1");
    if (beta != 0 && beta != 1) throw std::invalid_argument("beta must be 0 or 1");
    if (mixture) {
        double sum = 0.0;
        for (double w : *mixture) {
            if (w < 0) throw std::invalid_argument("mixture weights must be nonnegative");
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("mixture weights must sum to 1");
    }
}

ChoiState choi_double(const MatrixProductState& psi, double cutoff, int max_bond) {
    if (psi.phys_dim() != 2)
        throw std::invalid_argument("choi_double expects a d=2 chain state");
    const int L = psi.length();
    ChoiState rho;
    MatrixProductState& out = rho.state;
    // Build the rung tensors as upper (x) lower; all states in scope are real,
    // so the conjugated upper copy equals the chain tensor.  The doubled bond
    // is the square of the chain bond, so the product is never materialized in
    // full: the chain copy is first capped at sqrt(max_bond), then the doubled
    // tensors are built site by site in a left-to-right zip-up, truncating as
    // soon as each one exists.  The right-canonical chain makes the doubled
    // environment orthonormal, so the local truncations are globally sound.
    MatrixProductState base = psi;
    const int pure_cap =
        std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(max_bond)))));
    base.compress(cutoff, pure_cap);  // canonical, center 0, unit tensor norm

    std::vector<Eigen::VectorXd> dummy(static_cast<std::size_t>(L), Eigen::VectorXd::Ones(4));
    out = MatrixProductState::product_state(dummy);
    MatrixXd carry = MatrixXd::Ones(1, 1);  // rank x (dl*dl), maps kept to exact bond
    for (int j = 0; j < L; ++j) {
        const SiteTensor& t = base.site(j);
        const int dl = t.dl, dr = t.dr;
        const Eigen::Index rank = carry.rows();
        // reorder the carry so the lower-layer bond index is a row index
        MatrixXd ct(rank * dl, dl);  // ((row, al), au)
        for (Eigen::Index row = 0; row < rank; ++row)
            for (int au = 0; au < dl; ++au)
                for (int al = 0; al < dl; ++al) ct(row * dl + al, au) = carry(row, au * dl + al);
        MatrixXd m = MatrixXd::Zero(rank * 4, static_cast<Eigen::Index>(dr) * dr);
        for (int u = 0; u < 2; ++u) {
            MatrixXd xu = ct * t.slice(u);  // ((row, al), bu)
            for (int l = 0; l < 2; ++l) {
                auto sl = t.slice(l);
                for (Eigen::Index row = 0; row < rank; ++row) {
                    MatrixXd blk = xu.middleRows(row * dl, dl).transpose() * sl;  // (bu, bl)
                    m.row(row * 4 + 2 * u + l) =
                        Eigen::Map<const Eigen::RowVectorXd>(blk.data(), blk.size());
                }
            }
        }
        // blk.data() is column-major (bu fastest); undo that in the column index
        MatrixXd mr(m.rows(), m.cols());
        for (int bu = 0; bu < dr; ++bu)
            for (int bl = 0; bl < dr; ++bl) mr.col(bu * dr + bl) = m.col(bl * dr + bu);
        Eigen::BDCSVD<MatrixXd> svd(mr, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& s = svd.singularValues();
        const double snorm = s.norm();
        int keep = 0;
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (s(k) > cutoff * snorm && k < max_bond) ++keep;
        if (keep == 0) keep = 1;
        SiteTensor& site = out.site_mut(j);
        site.d = 4;
        site.dl = static_cast<int>(rank);
        site.dr = keep;
        site.m = svd.matrixU().leftCols(keep);
        carry = s.head(keep).asDiagonal() * MatrixXd(svd.matrixV().leftCols(keep).transpose());
        carry /= snorm;  // keep the running scale tame; absolute norm is not used
    }
    // fold the final 1 x 1 carry (the residual norm) away and restore the
    // canonical bookkeeping
    out.site_mut(L - 1).m *= carry(0, 0) < 0.0 ? -1.0 : 1.0;
    out.canonicalize(0);
    out.set_log_norm(0.0);  // purity of a pure double is 1
    rho.normalized = true;
    rho.log_purity_prenorm = 0.0;
    rho.provenance = "choi_double";
    return rho;
}

Matrix4d dephasing_gate(double p_z) {
    ChannelSpec{p_z}.validate();
    Matrix4d g = Matrix4d::Zero();
    g(0, 0) = 1.0;
    g(1, 1) = 1.0 - 2.0 * p_z;
    g(2, 2) = 1.0 - 2.0 * p_z;
    g(3, 3) = 1.0;
    return g;
}

Matrix4d dephasing_gate_exponential(double p_z) {
    ChannelSpec{p_z}.validate();
    if (p_z >= 0.5)
        throw std::invalid_argument("exponential form diverges at p_z = 1/2");
    double tau = std::atanh(p_z / (1.0 - p_z));
    double c = (1.0 - p_z) / std::cosh(tau);
    Matrix4d g = Matrix4d::Zero();
    // Z(x)Z is diag(1,-1,-1,1) in the rung basis
    g(0, 0) = c * std::exp(tau);
    g(1, 1) = c * std::exp(-tau);
    g(2, 2) = c * std::exp(-tau);
    g(3, 3) = c * std::exp(tau);
    return g;
}

ChoiState apply_channel(const ChoiState& rho, const ChannelSpec& spec, double cutoff,
                        int max_bond) {
    spec.validate();
    if (rho.state.phys_dim() != 4)
        throw std::invalid_argument("apply_channel expects a rung (d=4) state");
    ChoiState out = rho;
    if (spec.p_z == 0.0) return out;
    Matrix4d g = dephasing_gate(spec.p_z);
    for (int j = 0; j < out.length(); j += 2) out.state.apply_site_gate(j, g);
    out.state.set_log_norm(0.0);
    out.state.compress(cutoff, max_bond);
    out.log_purity_prenorm = 2.0 * out.state.log_norm();
    out.state.set_log_norm(0.0);
    out.normalized = true;
    out.provenance = rho.provenance + " -> dephase(p_z=" + std::to_string(spec.p_z) + ")";
    return out;
}

MatrixProductState identity_boundary(int length) {
    VectorXd t(4);
    t << 1.0, 0.0, 0.0, 1.0;
    std::vector<VectorXd> locals(static_cast<std::size_t>(length), t);
    return MatrixProductState::product_state(locals);
}

MatrixProductState apply_to_copy(const ChoiState& rho, const LadderOperator& op) {
    MatrixProductState copy = rho.state;
    copy.apply_ladder_operator(op);
    return copy;
}

double trace_expectation(const ChoiState& rho, const PauliString& op_upper) {
    if (op_upper.length() != rho.length())
        throw std::invalid_argument("operator length mismatch");
    MatrixProductState one = identity_boundary(rho.length());
    LadderOperator op(op_upper, PauliString::identity(rho.length()));
    MatrixProductState applied = apply_to_copy(rho, op);
    double denom = MatrixProductState::overlap(one, rho.state);
    if (denom == 0.0) throw std::runtime_error("state has zero trace");
    return MatrixProductState::overlap(one, applied) / denom;
}

double purity(const ChoiState& rho) {
    MatrixProductState one = identity_boundary(rho.length());
    double t = MatrixProductState::overlap(one, rho.state);
    // unit 2-norm tensor part: Tr[rho^2]/Tr[rho]^2 = 1/t^2
    return 1.0 / (t * t);
}

ChoiState fixed_point_state(int length, const FixedPointLabels& labels) {
    if (length % 2 == 0) throw std::invalid_argument("length must be odd");
    labels.validate();

    auto build_sector = [length](int alpha, int beta) {
        MatrixProductState psi;
        std::vector<VectorXd> dummy(static_cast<std::size_t>(length), VectorXd::Ones(4));
        psi = MatrixProductState::product_state(dummy);
        psi.set_log_norm(0.0);
        for (int j = 0; j < length; ++j) {
            SiteTensor& s = psi.site_mut(j);
            s.d = 4;
            const bool first = (j == 0);
            const bool last = (j == length - 1);
            s.dl = first ? 1 : 2;
            s.dr = last ? 1 : 2;
            s.m = MatrixXd::Zero(s.dl * 4, s.dr);
            if (j % 2 == 0) {
                // even site: classical z bit tied to the virtual spin;
                // rung component (0,0) for bit 0, (1,1) for bit 1
                for (int v = 0; v < 2; ++v) {
                    int r = (v == 0) ? 0 : 3;
                    int vl = first ? 0 : v;
                    int vr = last ? 0 : v;
                    if (first && v != alpha) continue;
                    if (last && v != beta) continue;
                    s.m(vl * 4 + r, vr) = 1.0;
                }
            } else {
                // odd site: |x><x| in the z basis; x=-1 flips the virtual spin
                for (int r = 0; r < 4; ++r) {
                    int u = r >> 1, l = r & 1;
                    double sgn = ((u + l) % 2 == 0) ? 1.0 : -1.0;
                    for (int vl = 0; vl < 2; ++vl)
                        for (int vr = 0; vr < 2; ++vr) {
                            double val = 0.5 * ((vl == vr ? 1.0 : 0.0) + sgn * (vl == vr ? 0.0 : 1.0));
                            s.m(vl * 4 + r, vr) = val;
                        }
                }
            }
        }
        psi.canonicalize(0);
        return psi;
    };

    ChoiState rho;
    if (!labels.mixture) {
        rho.state = build_sector(labels.alpha, labels.beta);
        rho.provenance = "fixed_point(" + std::to_string(labels.alpha) + "," +
                         std::to_string(labels.beta) + ")";
    } else {
        const auto& w = *labels.mixture;
        MatrixProductState one = identity_boundary(length);
        MatrixProductState acc;
        bool have = false;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double wab = w[static_cast<std::size_t>(2 * a + b)];
                if (wab == 0.0) continue;
                MatrixProductState sector = build_sector(a, b);
                double trace = MatrixProductState::overlap(one, sector);
                double coeff = wab / trace;  // mixture weights act on unit-trace sectors
                if (!have) {
                    acc = MatrixProductState::add(sector, coeff, sector, 0.0);
                    have = true;
                } else {
                    acc = MatrixProductState::add(acc, 1.0, sector, coeff);
                }
            }
        if (!have) throw std::invalid_argument("mixture has no support");
        acc.compress(1e-12, kDefaultChoiMaxBond);
        acc.set_log_norm(0.0);
        rho.state = std::move(acc);
        rho.provenance = "fixed_point_mixture";
    }
    rho.state.set_log_norm(0.0);
    rho.normalized = true;
    rho.log_purity_prenorm = 0.0;
    return rho;
}

SymmetryPredicates symmetry_predicates(const ChoiState& rho, double tol) {
    const int L = rho.length();
    auto [w, s] = symmetry_generators(L);
    SymmetryPredicates out;
    {
        LadderOperator strong(s, PauliString::identity(L));
        MatrixProductState applied = apply_to_copy(rho, strong);
        double nrm = std::sqrt(std::abs(MatrixProductState::overlap(applied, applied)));
        out.strong_overlap =
            nrm > 0 ? std::abs(MatrixProductState::overlap(rho.state, applied)) / nrm : 0.0;
        out.strong_s = std::abs(out.strong_overlap - 1.0) <= tol;
    }
    {
        LadderOperator weak(w, w);
        MatrixProductState applied = apply_to_copy(rho, weak);
        out.weak_overlap = MatrixProductState::overlap(rho.state, applied);
        out.weak_w = std::abs(std::abs(out.weak_overlap) - 1.0) <= tol;
    }
    return out;
}

double hermiticity_swap_overlap(const ChoiState& rho) {
    MatrixProductState copy = rho.state;
    Matrix4d swap = Matrix4d::Zero();
    swap(0, 0) = 1.0;
    swap(1, 2) = 1.0;
    swap(2, 1) = 1.0;
    swap(3, 3) = 1.0;
    for (int j = 0; j < rho.length(); ++j) copy.apply_site_gate(j, swap);
    return MatrixProductState::overlap(rho.state, copy);
}

}  // namespace edgebits
