#pragma once

#include <vector>

#include <Eigen/Dense>

#include "edgebits/pauli.hpp"

namespace edgebits {

// Rank-3 site tensor stored as a (dl*d) x dr matrix, row index l*d + p.
struct SiteTensor {
    int dl = 1;
    int d = 2;
    int dr = 1;
    Eigen::MatrixXd m;

    // Physical slice: (dl x dr) matrix for fixed p, a view into m.
    Eigen::Map<const Eigen::MatrixXd, 0, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>>
    slice(int p) const;
};

struct SchmidtSpectrum {
    int bond = 0;                  // between sites bond and bond+1
    std::vector<double> weights;   // descending, sum 1
};

struct TruncationReport {
    double discarded_weight = 0.0;
    int max_bond = 0;
};

// Open-boundary tensor train with canonical-center bookkeeping and log-norm
// tracking.  The tensor part is kept at unit 2-norm once canonicalized; the
// represented vector is exp(log_norm) times it.
class MatrixProductState {
public:
    MatrixProductState() = default;
    static MatrixProductState product_state(const std::vector<Eigen::VectorXd>& locals);

    int length() const { return static_cast<int>(sites_.size()); }
    int phys_dim() const { return sites_.empty() ? 0 : sites_[0].d; }
    int bond_dim(int bond) const { return sites_[static_cast<std::size_t>(bond)].dr; }
    int max_bond() const;
    double log_norm() const { return log_norm_; }
    void set_log_norm(double v) { log_norm_ = v; }
    void add_log_norm(double v) { log_norm_ += v; }
    int center() const { return center_; }
    bool is_canonical() const { return center_ >= 0; }

    const SiteTensor& site(int i) const { return sites_[static_cast<std::size_t>(i)]; }
    SiteTensor& site_mut(int i);  // invalidates the canonical center

    // Orthonormalizes all tensors around the given center and folds the norm
    // into log_norm.
    void canonicalize(int center = 0);
    void move_center_to(int site);

    // Exact single-site gate application; bond dimensions unchanged.
    void apply_site_gate(int site, const Eigen::MatrixXd& gate);
    void apply_ladder_operator(const LadderOperator& op);

    // SVD sweep compression; re-canonicalizes with center 0.
    TruncationReport compress(double cutoff, int max_bond);

    SchmidtSpectrum schmidt_spectrum_at(int bond);

    Eigen::MatrixXd rdm_site(int site);
    // Reduced density matrix of two (possibly distant) sites, d^2 x d^2 with
    // row index p_left * d + p_right.
    Eigen::MatrixXd rdm_two_sites(int left_site, int right_site);

    // c_a * a + c_b * b as a direct sum (bond dimensions add); compress after.
    static MatrixProductState add(const MatrixProductState& a, double c_a,
                                  const MatrixProductState& b, double c_b);

    Eigen::VectorXd to_dense_vector() const;  // includes exp(log_norm); small L only

    // Contraction of the raw tensors times exp of both log-norms.
    static double overlap(const MatrixProductState& a, const MatrixProductState& b);
    // Tensor-part contraction only (both states treated as unit-norm).
    static double overlap_normalized(const MatrixProductState& a, const MatrixProductState& b);

private:
    void left_orthogonalize_step(int site);
    void right_orthogonalize_step(int site);

    std::vector<SiteTensor> sites_;
    int center_ = -1;
    double log_norm_ = 0.0;
};

// Layout helpers between the stored (dl*d, dr) matrix and the (dl, d*dr)
// right-facing matrix with column index p*dr + r.
Eigen::MatrixXd to_right_layout(const Eigen::MatrixXd& m, int dl, int d, int dr);
Eigen::MatrixXd from_right_layout(const Eigen::MatrixXd& rm, int dl, int d, int dr);

}  // namespace edgebits
