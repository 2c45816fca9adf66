#include "edgebits/mps.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace edgebits {

using Eigen::MatrixXd;
using Eigen::VectorXd;

Eigen::Map<const MatrixXd, 0, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>>
SiteTensor::slice(int p) const {
    return {m.data() + p, static_cast<Eigen::Index>(dl), static_cast<Eigen::Index>(dr),
            Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>(static_cast<Eigen::Index>(dl) * d, d)};
}

MatrixXd to_right_layout(const MatrixXd& m, int dl, int d, int dr) {
    MatrixXd rm(dl, d * dr);
    for (int p = 0; p < d; ++p)
        for (int l = 0; l < dl; ++l)
            rm.block(l, p * dr, 1, dr) = m.row(l * d + p);
    return rm;
}

MatrixXd from_right_layout(const MatrixXd& rm, int dl, int d, int dr) {
    MatrixXd m(dl * d, dr);
    for (int p = 0; p < d; ++p)
        for (int l = 0; l < dl; ++l)
            m.row(l * d + p) = rm.block(l, p * dr, 1, dr);
    return m;
}

MatrixProductState MatrixProductState::product_state(const std::vector<VectorXd>& locals) {
    if (locals.empty()) throw std::invalid_argument("empty product state");
    MatrixProductState psi;
    psi.sites_.reserve(locals.size());
    const int d = static_cast<int>(locals[0].size());
    for (const auto& v : locals) {
        if (v.size() != d) throw std::invalid_argument("inconsistent local dimensions");
        SiteTensor t;
        t.dl = 1;
        t.d = d;
        t.dr = 1;
        t.m = v;
        psi.sites_.push_back(std::move(t));
    }
    psi.canonicalize(0);
    return psi;
}

int MatrixProductState::max_bond() const {
    int m = 1;
    for (const auto& s : sites_) m = std::max(m, s.dr);
    return m;
}

SiteTensor& MatrixProductState::site_mut(int i) {
    center_ = -1;
    return sites_[static_cast<std::size_t>(i)];
}

void MatrixProductState::left_orthogonalize_step(int i) {
    SiteTensor& cur = sites_[static_cast<std::size_t>(i)];
    SiteTensor& next = sites_[static_cast<std::size_t>(i + 1)];
    const int k = std::min(cur.dl * cur.d, cur.dr);
    Eigen::HouseholderQR<MatrixXd> qr(cur.m);
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(cur.dl * cur.d, k);
    MatrixXd r = qr.matrixQR().topRows(k).template triangularView<Eigen::Upper>();
    cur.m = std::move(q);
    cur.dr = k;
    MatrixXd next_right = r * to_right_layout(next.m, next.dl, next.d, next.dr);
    next.dl = k;
    next.m = from_right_layout(next_right, next.dl, next.d, next.dr);
}

void MatrixProductState::right_orthogonalize_step(int i) {
    SiteTensor& cur = sites_[static_cast<std::size_t>(i)];
    SiteTensor& prev = sites_[static_cast<std::size_t>(i - 1)];
    const int k = std::min(cur.dl, cur.d * cur.dr);
    MatrixXd a_right = to_right_layout(cur.m, cur.dl, cur.d, cur.dr);
    Eigen::HouseholderQR<MatrixXd> qr(a_right.transpose());
    MatrixXd qt = qr.householderQ() * MatrixXd::Identity(cur.d * cur.dr, k);
    MatrixXd rt = qr.matrixQR().topRows(k).template triangularView<Eigen::Upper>();
    cur.m = from_right_layout(qt.transpose(), k, cur.d, cur.dr);
    cur.dl = k;
    prev.m = prev.m * rt.transpose();
    prev.dr = k;
}

void MatrixProductState::canonicalize(int center) {
    const int L = length();
    if (center < 0 || center >= L) throw std::out_of_range("canonical center out of range");
    for (int i = 0; i < center; ++i) left_orthogonalize_step(i);
    for (int i = L - 1; i > center; --i) right_orthogonalize_step(i);
    SiteTensor& c = sites_[static_cast<std::size_t>(center)];
    double nrm = c.m.norm();
    if (!(nrm > 0)) throw std::runtime_error("cannot canonicalize a zero state");
    c.m /= nrm;
    log_norm_ += std::log(nrm);
    center_ = center;
}

void MatrixProductState::move_center_to(int site) {
    if (center_ < 0) {
        canonicalize(site);
        return;
    }
    while (center_ < site) {
        left_orthogonalize_step(center_);
        ++center_;
    }
    while (center_ > site) {
        right_orthogonalize_step(center_);
        --center_;
    }
    SiteTensor& c = sites_[static_cast<std::size_t>(center_)];
    double nrm = c.m.norm();
    if (!(nrm > 0)) throw std::runtime_error("zero norm while moving center");
    c.m /= nrm;
    log_norm_ += std::log(nrm);
}

void MatrixProductState::apply_site_gate(int site, const MatrixXd& gate) {
    SiteTensor& t = sites_[static_cast<std::size_t>(site)];
    if (gate.rows() != t.d || gate.cols() != t.d)
        throw std::invalid_argument("gate dimension does not match physical dimension");
    MatrixXd out = MatrixXd::Zero(t.dl * t.d, t.dr);
    for (int pb = 0; pb < t.d; ++pb) {
        for (int pk = 0; pk < t.d; ++pk) {
            double g = gate(pb, pk);
            if (g == 0.0) continue;
            for (int l = 0; l < t.dl; ++l) out.row(l * t.d + pb) += g * t.m.row(l * t.d + pk);
        }
    }
    t.m = std::move(out);
    center_ = -1;
}

void MatrixProductState::apply_ladder_operator(const LadderOperator& op) {
    if (op.length() != length()) throw std::invalid_argument("ladder operator length mismatch");
    if (phys_dim() != 4) throw std::invalid_argument("ladder operator needs a rung (d=4) state");
    auto gates = op.rung_gates();
    for (int j = 0; j < length(); ++j) apply_site_gate(j, gates[static_cast<std::size_t>(j)]);
}

TruncationReport MatrixProductState::compress(double cutoff, int max_bond) {
    const int L = length();
    TruncationReport report;
    for (int i = 0; i < L - 1; ++i) left_orthogonalize_step(i);
    for (int i = L - 1; i > 0; --i) {
        SiteTensor& cur = sites_[static_cast<std::size_t>(i)];
        MatrixXd a_right = to_right_layout(cur.m, cur.dl, cur.d, cur.dr);
        Eigen::BDCSVD<MatrixXd> svd(a_right, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const VectorXd& s = svd.singularValues();
        double total = s.squaredNorm();
        if (!(total > 0)) throw std::runtime_error("zero state in compress");
        double snorm = std::sqrt(total);
        int keep = 0;
        for (int k = 0; k < s.size(); ++k)
            if (s(k) > cutoff * snorm && k < max_bond) ++keep;
        if (keep == 0) keep = 1;
        double kept = s.head(keep).squaredNorm();
        report.discarded_weight += (total - kept) / total;
        cur.m = from_right_layout(svd.matrixV().leftCols(keep).transpose(), keep, cur.d, cur.dr);
        cur.dl = keep;
        SiteTensor& prev = sites_[static_cast<std::size_t>(i - 1)];
        prev.m = prev.m * (svd.matrixU().leftCols(keep) * s.head(keep).asDiagonal());
        prev.dr = keep;
    }
    SiteTensor& first = sites_[0];
    double nrm = first.m.norm();
    if (!(nrm > 0)) throw std::runtime_error("zero state after compress");
    first.m /= nrm;
    log_norm_ += std::log(nrm);
    center_ = 0;
    report.max_bond = this->max_bond();
    return report;
}

SchmidtSpectrum MatrixProductState::schmidt_spectrum_at(int bond) {
    if (bond < 0 || bond >= length() - 1) throw std::out_of_range("bond out of range");
    move_center_to(bond);
    const SiteTensor& c = sites_[static_cast<std::size_t>(bond)];
    Eigen::BDCSVD<MatrixXd> svd(c.m);
    VectorXd s = svd.singularValues();
    double total = s.squaredNorm();
    SchmidtSpectrum spec;
    spec.bond = bond;
    for (int k = 0; k < s.size(); ++k) {
        double w = s(k) * s(k) / total;
        if (w > 0) spec.weights.push_back(w);
    }
    return spec;
}

MatrixXd MatrixProductState::rdm_site(int site) {
    move_center_to(site);
    const SiteTensor& c = sites_[static_cast<std::size_t>(site)];
    MatrixXd rho(c.d, c.d);
    for (int p = 0; p < c.d; ++p)
        for (int q = 0; q < c.d; ++q)
            rho(p, q) = c.slice(p).cwiseProduct(c.slice(q)).sum();
    return rho;
}

MatrixXd MatrixProductState::rdm_two_sites(int left_site, int right_site) {
    if (left_site >= right_site) throw std::invalid_argument("need left_site < right_site");
    if (left_site < 0 || right_site >= length()) throw std::out_of_range("site out of range");
    move_center_to(left_site);
    const SiteTensor& a = sites_[static_cast<std::size_t>(left_site)];
    const int d = a.d;
    std::vector<MatrixXd> env(static_cast<std::size_t>(d * d));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            env[static_cast<std::size_t>(p * d + q)] = a.slice(p).transpose() * a.slice(q);
    for (int k = left_site + 1; k < right_site; ++k) {
        const SiteTensor& t = sites_[static_cast<std::size_t>(k)];
        for (auto& e : env) {
            MatrixXd out = MatrixXd::Zero(t.dr, t.dr);
            for (int p = 0; p < t.d; ++p) out.noalias() += t.slice(p).transpose() * e * t.slice(p);
            e = std::move(out);
        }
    }
    const SiteTensor& b = sites_[static_cast<std::size_t>(right_site)];
    MatrixXd rho(d * d, d * d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
            const MatrixXd& e = env[static_cast<std::size_t>(p * d + q)];
            for (int pj = 0; pj < d; ++pj)
                for (int qj = 0; qj < d; ++qj)
                    rho(p * d + pj, q * d + qj) =
                        (b.slice(pj).transpose() * e * b.slice(qj)).trace();
        }
    return rho;
}

MatrixProductState MatrixProductState::add(const MatrixProductState& a, double c_a,
                                           const MatrixProductState& b, double c_b) {
    if (a.length() != b.length() || a.phys_dim() != b.phys_dim())
        throw std::invalid_argument("cannot add states of different shape");
    const int L = a.length();
    const int d = a.phys_dim();
    double lmax = std::max(a.log_norm_, b.log_norm_);
    double wa = c_a * std::exp(a.log_norm_ - lmax);
    double wb = c_b * std::exp(b.log_norm_ - lmax);

    MatrixProductState out;
    out.log_norm_ = lmax;
    out.sites_.resize(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
        const SiteTensor& ta = a.sites_[static_cast<std::size_t>(i)];
        const SiteTensor& tb = b.sites_[static_cast<std::size_t>(i)];
        SiteTensor t;
        t.d = d;
        t.dl = (i == 0) ? 1 : ta.dl + tb.dl;
        t.dr = (i == L - 1) ? 1 : ta.dr + tb.dr;
        t.m = MatrixXd::Zero(t.dl * d, t.dr);
        double fa = (i == 0) ? wa : 1.0;
        double fb = (i == 0) ? wb : 1.0;
        for (int p = 0; p < d; ++p) {
            for (int l = 0; l < ta.dl; ++l)
                for (int r = 0; r < ta.dr; ++r)
                    t.m(l * d + p, r) = fa * ta.m(l * d + p, r);
            int lo = (i == 0) ? 0 : ta.dl;
            int ro = (i == L - 1) ? 0 : ta.dr;
            for (int l = 0; l < tb.dl; ++l)
                for (int r = 0; r < tb.dr; ++r)
                    t.m((lo + l) * d + p, ro + r) += fb * tb.m(l * d + p, r);
        }
        out.sites_[static_cast<std::size_t>(i)] = std::move(t);
    }
    out.center_ = -1;
    return out;
}

VectorXd MatrixProductState::to_dense_vector() const {
    // site 0 is the least significant digit, matching PauliString::to_dense
    const int d = phys_dim();
    MatrixXd cur = MatrixXd::Ones(1, 1);
    for (const auto& t : sites_) {
        MatrixXd right = to_right_layout(t.m, t.dl, t.d, t.dr);
        MatrixXd next(cur.rows() * d, t.dr);
        for (int p = 0; p < d; ++p) {
            MatrixXd blk = cur * right.middleCols(p * t.dr, t.dr);
            next.middleRows(static_cast<Eigen::Index>(p) * cur.rows(), cur.rows()) = blk;
        }
        cur = std::move(next);
    }
    return std::exp(log_norm_) * VectorXd(cur.col(0));
}

double MatrixProductState::overlap_normalized(const MatrixProductState& a,
                                              const MatrixProductState& b) {
    if (a.length() != b.length() || a.phys_dim() != b.phys_dim())
        throw std::invalid_argument("overlap shape mismatch");
    MatrixXd e = MatrixXd::Ones(1, 1);
    for (int i = 0; i < a.length(); ++i) {
        const SiteTensor& ta = a.sites_[static_cast<std::size_t>(i)];
        const SiteTensor& tb = b.sites_[static_cast<std::size_t>(i)];
        MatrixXd out = MatrixXd::Zero(ta.dr, tb.dr);
        for (int p = 0; p < ta.d; ++p)
            out.noalias() += ta.slice(p).transpose() * (e * tb.slice(p));
        e = std::move(out);
    }
    return e(0, 0);
}

double MatrixProductState::overlap(const MatrixProductState& a, const MatrixProductState& b) {
    return overlap_normalized(a, b) * std::exp(a.log_norm_ + b.log_norm_);
}

}  // namespace edgebits
