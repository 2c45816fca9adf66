#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace edgebits {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

// Phase is stored exactly as i^k, k in {0,1,2,3}; never floating point.
struct Phase {
    std::uint8_t k = 0;

    std::complex<double> value() const;
    bool is_real() const { return (k % 2) == 0; }
    double real_sign() const;  // +1 or -1, throws if imaginary
    Phase operator*(Phase o) const { return Phase{static_cast<std::uint8_t>((k + o.k) % 4)}; }
    bool operator==(Phase o) const { return k == o.k; }
};

// Signed product of single-site Pauli factors on a chain.
class PauliString {
public:
    explicit PauliString(int length);
    static PauliString identity(int length);
    static PauliString single(int length, int site, PauliAxis axis);
    static PauliString from_factors(std::vector<std::pair<int, PauliAxis>> factors, int length);

    int length() const { return static_cast<int>(factors_.size()); }
    PauliAxis factor(int site) const { return factors_[static_cast<std::size_t>(site)]; }
    void set_factor(int site, PauliAxis a) { factors_[static_cast<std::size_t>(site)] = a; }
    Phase phase() const { return phase_; }
    void set_phase(Phase p) { phase_ = p; }

    PauliString multiply(const PauliString& other) const;
    bool commutes_with(const PauliString& other) const;
    bool anticommutes_with(const PauliString& other) const;
    bool is_identity() const;
    bool has_y() const;

    // True when the dense matrix is purely real.
    bool is_real_matrix() const;

    // Per-site real 2x2 factors with the global sign folded into site 0.
    // Throws when the matrix is not real.
    std::vector<Eigen::Matrix2d> real_site_matrices() const;

    Eigen::MatrixXcd to_dense() const;
    Eigen::MatrixXd to_dense_real() const;

    std::string to_string() const;

    bool operator==(const PauliString& other) const;

private:
    std::vector<PauliAxis> factors_;
    Phase phase_;
};

// Doubled-space operator: upper factor acts on the bra copy, lower on the ket
// copy of each rung.  All operators in scope are real, so the conjugation of
// the upper factor is the identity; construction rejects imaginary content.
struct LadderOperator {
    PauliString upper;
    PauliString lower;

    LadderOperator(PauliString up, PauliString low);
    int length() const { return upper.length(); }

    // Per-rung 4x4 gates (upper x lower in the |u,l> -> 2u+l basis), total
    // sign folded into rung 0.
    std::vector<Eigen::Matrix4d> rung_gates() const;
};

constexpr int kDenseSiteLimit = 13;

// upper (x) lower in the rung basis |u,l| with index 2u+l.
Eigen::Matrix4d rung_gate(PauliAxis upper, PauliAxis lower);

Eigen::Matrix2cd axis_matrix(PauliAxis a);

}  // namespace edgebits
