#include "edgebits/pauli.hpp"

#include <array>
#include <stdexcept>

namespace edgebits {

namespace {

// product table: (a,b) -> (axis, phase exponent k with a*b = i^k * axis)
struct SiteProduct {
    PauliAxis axis;
    std::uint8_t k;
};

SiteProduct site_product(PauliAxis a, PauliAxis b) {
    if (a == PauliAxis::I) return {b, 0};
    if (b == PauliAxis::I) return {a, 0};
    if (a == b) return {PauliAxis::I, 0};
    // cyclic: XY=iZ, YZ=iX, ZX=iY; reversed order picks up -i
    auto ia = static_cast<int>(a);
    auto ib = static_cast<int>(b);
    // axes 1,2,3; the third axis is the one not equal to a or b
    int ic = 6 - ia - ib;
    bool cyclic = (ib - ia + 3) % 3 == 1;  // X->Y, Y->Z, Z->X
    return {static_cast<PauliAxis>(ic), static_cast<std::uint8_t>(cyclic ? 1 : 3)};
}

}  // namespace

char axis_char(PauliAxis a) {
    switch (a) {
        case PauliAxis::I: return 'I';
        case PauliAxis::X: return 'X';
        case PauliAxis::Y: return 'Y';
        case PauliAxis::Z: return 'Z';
    }
    throw std::logic_error("bad axis");
}

PauliAxis axis_from_char(char c) {
    switch (c) {
        case 'I': return PauliAxis::I;
        case 'X': return PauliAxis::X;
        case 'Y': return PauliAxis::Y;
        case 'Z': return PauliAxis::Z;
        default: throw std::invalid_argument(std::string("unknown Pauli axis: ") + c);
    }
}

std::complex<double> Phase::value() const {
    static const std::array<std::complex<double>, 4> vals = {
        std::complex<double>(1, 0), std::complex<double>(0, 1),
        std::complex<double>(-1, 0), std::complex<double>(0, -1)};
    return vals[k % 4];
}

double Phase::real_sign() const {
    if (!is_real()) throw std::logic_error("phase is imaginary");
    return k == 0 ? 1.0 : -1.0;
}

PauliString::PauliString(int length) : factors_(), phase_{0} {
    if (length <= 0) throw std::invalid_argument("PauliString length must be positive");
    factors_.assign(static_cast<std::size_t>(length), PauliAxis::I);
}

PauliString PauliString::identity(int length) { return PauliString(length); }

PauliString PauliString::single(int length, int site, PauliAxis axis) {
    PauliString p(length);
    if (site < 0 || site >= length) throw std::out_of_range("site out of range");
    p.set_factor(site, axis);
    return p;
}

PauliString PauliString::from_factors(std::vector<std::pair<int, PauliAxis>> factors, int length) {
    PauliString p(length);
    for (auto [site, axis] : factors) {
        if (site < 0 || site >= length) throw std::out_of_range("site out of range");
        if (p.factor(site) != PauliAxis::I)
            throw std::invalid_argument("duplicate site in factor list; use multiply instead");
        p.set_factor(site, axis);
    }
    return p;
}

PauliString PauliString::multiply(const PauliString& other) const {
    if (length() != other.length())
        throw std::invalid_argument("PauliString length mismatch in multiply");
    PauliString out(length());
    std::uint8_t k = static_cast<std::uint8_t>((phase_.k + other.phase_.k) % 4);
    for (int j = 0; j < length(); ++j) {
        auto sp = site_product(factor(j), other.factor(j));
        out.set_factor(j, sp.axis);
        k = static_cast<std::uint8_t>((k + sp.k) % 4);
    }
    out.set_phase(Phase{k});
    return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (length() != other.length())
        throw std::invalid_argument("PauliString length mismatch in commutes_with");
    int anti = 0;
    for (int j = 0; j < length(); ++j) {
        PauliAxis a = factor(j), b = other.factor(j);
        if (a != PauliAxis::I && b != PauliAxis::I && a != b) ++anti;
    }
    return anti % 2 == 0;
}

bool PauliString::anticommutes_with(const PauliString& other) const {
    return !commutes_with(other);
}

bool PauliString::is_identity() const {
    for (auto f : factors_)
        if (f != PauliAxis::I) return false;
    return phase_.k == 0;
}

bool PauliString::has_y() const {
    for (auto f : factors_)
        if (f == PauliAxis::Y) return true;
    return false;
}

bool PauliString::is_real_matrix() const {
    int n_y = 0;
    for (auto f : factors_)
        if (f == PauliAxis::Y) ++n_y;
    return (n_y + phase_.k) % 2 == 0;
}

std::vector<Eigen::Matrix2d> PauliString::real_site_matrices() const {
    if (!is_real_matrix())
        throw std::logic_error("PauliString " + to_string() + " is not a real matrix");
    std::vector<Eigen::Matrix2d> mats;
    mats.reserve(static_cast<std::size_t>(length()));
    // Each Y contributes a factor i to its real skeleton [[0,-1],[1,0]] = -iY.
    int k = phase_.k;
    for (auto f : factors_) {
        Eigen::Matrix2d m;
        switch (f) {
            case PauliAxis::I: m << 1, 0, 0, 1; break;
            case PauliAxis::X: m << 0, 1, 1, 0; break;
            case PauliAxis::Y: m << 0, -1, 1, 0; k = (k + 1) % 4; break;  // Y = i * skeleton
            case PauliAxis::Z: m << 1, 0, 0, -1; break;
        }
        mats.push_back(m);
    }
    double sign = Phase{static_cast<std::uint8_t>(k % 4)}.real_sign();
    mats[0] *= sign;
    return mats;
}

Eigen::Matrix2cd axis_matrix(PauliAxis a) {
    Eigen::Matrix2cd m;
    const std::complex<double> i(0, 1);
    switch (a) {
        case PauliAxis::I: m << 1, 0, 0, 1; break;
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, -i, i, 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Eigen::MatrixXcd PauliString::to_dense() const {
    if (length() > kDenseSiteLimit)
        throw std::invalid_argument("to_dense: length exceeds dense limit");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1) * phase_.value();
    for (auto f : factors_) {
        Eigen::Matrix2cd m = axis_matrix(f);
        Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) =
                    m(r, c) * out;
        out = std::move(next);
    }
    return out;
}

Eigen::MatrixXd PauliString::to_dense_real() const {
    Eigen::MatrixXcd m = to_dense();
    if (m.imag().cwiseAbs().maxCoeff() > 0)
        throw std::logic_error("PauliString " + to_string() + " has imaginary dense entries");
    return m.real();
}

std::string PauliString::to_string() const {
    static const char* phases[4] = {"+", "+i", "-", "-i"};
    std::string s = phases[phase_.k];
    bool any = false;
    for (int j = 0; j < length(); ++j) {
        if (factor(j) != PauliAxis::I) {
            s += axis_char(factor(j));
            s += std::to_string(j);
            any = true;
        }
    }
    if (!any) s += "1";
    return s;
}

bool PauliString::operator==(const PauliString& other) const {
    return factors_ == other.factors_ && phase_ == other.phase_;
}

LadderOperator::LadderOperator(PauliString up, PauliString low)
    : upper(std::move(up)), lower(std::move(low)) {
    if (upper.length() != lower.length())
        throw std::invalid_argument("LadderOperator upper/lower length mismatch");
    if (!upper.is_real_matrix() || !lower.is_real_matrix())
        throw std::invalid_argument("LadderOperator factors must be real matrices");
}

std::vector<Eigen::Matrix4d> LadderOperator::rung_gates() const {
    auto up = upper.real_site_matrices();
    auto low = lower.real_site_matrices();
    std::vector<Eigen::Matrix4d> gates;
    gates.reserve(up.size());
    for (std::size_t j = 0; j < up.size(); ++j) {
        Eigen::Matrix4d g;
        for (int u = 0; u < 2; ++u)
            for (int l = 0; l < 2; ++l)
                for (int u2 = 0; u2 < 2; ++u2)
                    for (int l2 = 0; l2 < 2; ++l2)
                        g(2 * u + l, 2 * u2 + l2) = up[j](u, u2) * low[j](l, l2);
        gates.push_back(g);
    }
    return gates;
}

Eigen::Matrix4d rung_gate(PauliAxis upper, PauliAxis lower) {
    Eigen::Matrix2cd u = axis_matrix(upper);
    Eigen::Matrix2cd l = axis_matrix(lower);
    Eigen::Matrix4cd g;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2)
                    g(2 * a + b, 2 * a2 + b2) = u(a, a2) * l(b, b2);
    if (g.imag().cwiseAbs().maxCoeff() > 0)
        throw std::invalid_argument("rung_gate: upper x lower is not a real matrix");
    return g.real();
}

}  // namespace edgebits
