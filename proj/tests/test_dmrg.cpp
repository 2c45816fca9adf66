#include <doctest.h>

#include <Eigen/Eigenvalues>

#include "edgebits/dmrg.hpp"
#include "edgebits/oracle.hpp"

using namespace edgebits;

namespace {

double expectation(const MatrixProductState& psi, const PauliString& op) {
    MatrixProductState copy = psi;
    auto mats = op.real_site_matrices();
    for (int s = 0; s < psi.length(); ++s) copy.apply_site_gate(s, mats[static_cast<std::size_t>(s)]);
    return MatrixProductState::overlap(psi, copy) / MatrixProductState::overlap(psi, psi);
}

}  // namespace

TEST_SUITE_BEGIN("dmrg");

TEST_CASE("stabilizer point ground energy") {
    ChainConfig config{5, 0.0, Pinning::none()};
    DmrgResult res = dmrg_ground_state(build_hamiltonian(config), DmrgParams{});
    CHECK(res.converged);
    CHECK(res.energy == doctest::Approx(-3.0).epsilon(1e-10));
}

TEST_CASE("energies match dense diagonalization across the coupling grid") {
    for (int L : {5, 7, 9}) {
        for (double j : {0.0, 0.4, 0.8, 1.5}) {
            ChainConfig config{L, j, Pinning::polarized_z()};
            double dense = oracle::dense_ground_state(config).energy;
            DmrgResult res = dmrg_ground_state(build_hamiltonian(config), DmrgParams{});
            CHECK(std::abs(res.energy - dense) < 1e-8);
        }
    }
}

TEST_CASE("pinned edge polarization at L=23") {
    ChainConfig config{23, 0.0, Pinning::polarized_z(1e-3)};
    DmrgResult res = dmrg_ground_state(build_hamiltonian(config), DmrgParams{});
    CHECK(res.converged);
    CHECK(expectation(res.state, edge_z_left(23)) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(expectation(res.state, edge_z_right(23)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("determinism under a fixed seed") {
    ChainConfig config{7, 0.8, Pinning::polarized_z()};
    HamiltonianMpo mpo = build_hamiltonian(config);
    DmrgResult a = dmrg_ground_state(mpo, DmrgParams{});
    DmrgResult b = dmrg_ground_state(mpo, DmrgParams{});
    CHECK(a.energy == b.energy);  // bitwise
    CHECK(MatrixProductState::overlap(a.state, b.state) ==
          MatrixProductState::overlap(b.state, a.state));
    CHECK(std::abs(MatrixProductState::overlap(a.state, b.state)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("canonical form and ground-state vector against dense solver") {
    ChainConfig config{7, 0.4, Pinning::polarized_z()};
    DmrgResult res = dmrg_ground_state(build_hamiltonian(config), DmrgParams{});
    oracle::GroundState gs = oracle::dense_ground_state(config);
    Eigen::VectorXd v = res.state.to_dense_vector();
    v.normalize();
    CHECK(std::abs(std::abs(v.dot(gs.vector)) - 1.0) < 1e-8);
    CHECK(MatrixProductState::overlap_normalized(res.state, res.state) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("params validation") {
    DmrgParams bad;
    bad.cutoff = -1.0;
    CHECK_THROWS(bad.validate());
    bad = DmrgParams{};
    bad.max_bond = 0;
    CHECK_THROWS(bad.validate());
}

TEST_SUITE_END();
