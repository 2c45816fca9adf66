#include <doctest.h>

#include <random>

#include "edgebits/pauli.hpp"

using namespace edgebits;

namespace {

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("single-site multiplication tracks phases exactly") {
    auto x = PauliString::single(1, 0, PauliAxis::X);
    auto y = PauliString::single(1, 0, PauliAxis::Y);
    auto z = PauliString::single(1, 0, PauliAxis::Z);

    // X Z = -i Y
    auto xz = x.multiply(z);
    CHECK(xz.factor(0) == PauliAxis::Y);
    CHECK(xz.phase().k == 3);

    // X Y = i Z
    auto xy = x.multiply(y);
    CHECK(xy.factor(0) == PauliAxis::Z);
    CHECK(xy.phase().k == 1);

    // involutions
    for (const auto& p : {x, y, z}) {
        auto sq = p.multiply(p);
        CHECK(sq.is_identity());
        CHECK(sq.phase().k == 0);
    }
}

TEST_CASE("edge operators anticommute as required") {
    const int L = 5;
    auto z0 = PauliString::single(L, 0, PauliAxis::Z);
    auto x0z1 = PauliString::from_factors({{0, PauliAxis::X}, {1, PauliAxis::Z}}, L);

    auto ab = z0.multiply(x0z1);
    auto ba = x0z1.multiply(z0);
    CHECK(ab.phase().k != ba.phase().k);
    CHECK(((ab.phase() * Phase{2}) == ba.phase()));
    CHECK(z0.anticommutes_with(x0z1));
    CHECK_FALSE(z0.commutes_with(x0z1));

    auto zl = PauliString::single(L, L - 1, PauliAxis::Z);
    auto zxr = PauliString::from_factors({{L - 2, PauliAxis::Z}, {L - 1, PauliAxis::X}}, L);
    CHECK(zl.anticommutes_with(zxr));
}

TEST_CASE("spin flip W squares to the identity") {
    const int L = 7;
    auto w = PauliString::from_factors(
        {{0, PauliAxis::X}, {2, PauliAxis::X}, {4, PauliAxis::X}, {6, PauliAxis::X}}, L);
    auto ww = w.multiply(w);
    CHECK(ww.is_identity());
    CHECK(ww.phase().k == 0);
}

TEST_CASE("commute and anticommute are exclusive and symmetric") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> axis(0, 3);
    const int L = 6;
    for (int trial = 0; trial < 200; ++trial) {
        PauliString a(L), b(L);
        for (int s = 0; s < L; ++s) {
            a.set_factor(s, static_cast<PauliAxis>(axis(rng)));
            b.set_factor(s, static_cast<PauliAxis>(axis(rng)));
        }
        CHECK(a.commutes_with(b) != a.anticommutes_with(b));
        CHECK(a.commutes_with(b) == b.commutes_with(a));
    }
}

TEST_CASE("to_dense basics") {
    CHECK(PauliString::identity(2).to_dense().isApprox(Eigen::MatrixXcd::Identity(4, 4)));

    auto z = PauliString::single(1, 0, PauliAxis::Z).to_dense();
    CHECK(z(0, 0) == std::complex<double>(1, 0));
    CHECK(z(1, 1) == std::complex<double>(-1, 0));
    CHECK(std::abs(z(0, 1)) == 0.0);
}

TEST_CASE("W dense matrix for L=3 is X(x)I(x)X, unitary and involutory") {
    auto w = PauliString::from_factors({{0, PauliAxis::X}, {2, PauliAxis::X}}, 3);
    Eigen::MatrixXcd m = w.to_dense();
    Eigen::MatrixXcd x = axis_matrix(PauliAxis::X);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
    // site 0 is the least significant bit, so it sits innermost in the kron
    Eigen::MatrixXcd expect = kron(kron(x, id), x);
    CHECK((m - expect).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((m * m.adjoint() - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((m * m - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("to_dense respects the dense-site limit") {
    CHECK_THROWS(PauliString::identity(kDenseSiteLimit + 1).to_dense());
}

TEST_CASE("rung gates in the 2u+l basis") {
    CHECK(rung_gate(PauliAxis::I, PauliAxis::I).isApprox(Eigen::Matrix4d::Identity()));

    Eigen::Matrix4d zz = rung_gate(PauliAxis::Z, PauliAxis::Z);
    Eigen::Vector4d diag(1, -1, -1, 1);
    CHECK(zz.isApprox(Eigen::Matrix4d(diag.asDiagonal())));

    // (X, I) swaps u while fixing l: kron(X, I) with u the high bit
    Eigen::Matrix4d xi = rung_gate(PauliAxis::X, PauliAxis::I);
    Eigen::MatrixXcd expect = kron(axis_matrix(PauliAxis::X), Eigen::MatrixXcd::Identity(2, 2));
    CHECK((xi.cast<std::complex<double>>() - expect).cwiseAbs().maxCoeff() < 1e-15);

    // Y (x) Y is real even though a lone Y is not
    CHECK(rung_gate(PauliAxis::Y, PauliAxis::Y).allFinite());
    CHECK_THROWS(rung_gate(PauliAxis::Y, PauliAxis::I));
}

TEST_CASE("realness scan of every doubled-space observable ingredient") {
    const int L = 7;
    std::vector<PauliString> ops;
    PauliString w(L), s(L);
    for (int j = 0; j < L; j += 2) w.set_factor(j, PauliAxis::X);
    for (int j = 1; j < L; j += 2) s.set_factor(j, PauliAxis::X);
    ops.push_back(w);
    ops.push_back(s);
    for (int j = 0; j < L; ++j) ops.push_back(PauliString::single(L, j, PauliAxis::Z));
    ops.push_back(PauliString::from_factors({{0, PauliAxis::X}, {1, PauliAxis::Z}}, L));
    ops.push_back(PauliString::from_factors({{L - 2, PauliAxis::Z}, {L - 1, PauliAxis::X}}, L));
    for (const auto& op : ops) {
        CHECK(op.is_real_matrix());
        CHECK_NOTHROW(op.real_site_matrices());
        CHECK_NOTHROW(LadderOperator(op, op));
        CHECK_NOTHROW(LadderOperator(op, PauliString::identity(L)));
    }
}

TEST_CASE("ladder operator gates reproduce the dense doubled matrix") {
    const int L = 2;
    auto xz = PauliString::from_factors({{0, PauliAxis::X}, {1, PauliAxis::Z}}, L);
    LadderOperator op(xz, xz);
    auto gates = op.rung_gates();
    REQUIRE(gates.size() == 2);
    // rung 0 least significant: full operator = kron(g1, g0)
    Eigen::MatrixXd k(16, 16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) k.block(4 * i, 4 * j, 4, 4) = gates[1](i, j) * gates[0];
    Eigen::MatrixXcd dense_u = xz.to_dense();
    // compare action on basis vectors against independent index math
    for (int col = 0; col < 16; ++col) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(16);
        v(col) = 1.0;
        Eigen::VectorXd out = k * v;
        // decode col into (u, l) bit pairs, rung 0 least significant
        int u = ((col >> 1) & 1) | (((col >> 3) & 1) << 1);
        int l = (col & 1) | (((col >> 2) & 1) << 1);
        for (int row = 0; row < 16; ++row) {
            int ru = ((row >> 1) & 1) | (((row >> 3) & 1) << 1);
            int rl = (row & 1) | (((row >> 2) & 1) << 1);
            std::complex<double> want = dense_u(ru, u) * dense_u(rl, l);
            CHECK(std::abs(out(row) - want.real()) < 1e-14);
            CHECK(std::abs(want.imag()) < 1e-14);
        }
    }
}

TEST_SUITE_END();
