#include <doctest.h>

#include <cmath>

#include "edgebits/dmrg.hpp"
#include "edgebits/observables.hpp"
#include "edgebits/oracle.hpp"

using namespace edgebits;

namespace {

const double kLn2 = std::log(2.0);

ChoiState pipeline(int L, double j, double p, Pinning pinning) {
    ChainConfig config{L, j, pinning};
    DmrgResult res = dmrg_ground_state(build_hamiltonian(config), DmrgParams{});
    return apply_channel(choi_double(res.state), {p});
}

Eigen::MatrixXd dense_rho(int L, double j, double p, Pinning pinning) {
    oracle::GroundState gs = oracle::dense_ground_state({L, j, pinning});
    return oracle::dense_apply_channel(gs.vector * gs.vector.transpose(), p);
}

}  // namespace

TEST_SUITE_BEGIN("observables");

TEST_CASE("fixed-point fractionalization identities are exact") {
    for (int L : {5, 9}) {
        for (int alpha : {0, 1}) {
            for (int beta : {0, 1}) {
                ChoiState rho = fixed_point_state(L, {alpha, beta, std::nullopt});
                FractionalizationRecord rec = fractionalization_check(rho);
                CHECK(rec.weak_fidelity == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(rec.strong_fidelity == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("order parameters at the fixed point") {
    ChoiState rho = fixed_point_state(9, {0, 0, std::nullopt});
    OrderParameterRecord rec = order_parameters(rho);
    CHECK(std::abs(rec.m_feo) < 1e-12);
    CHECK(std::abs(rec.m_wfo) < 1e-12);  // pinned sector: W(x)W flips it
    CHECK(std::abs(rec.m_sfo) < 1e-12);  // decohered: strong fractionalization gone
}

TEST_CASE("order parameters on the pure SPT") {
    ChoiState rho = pipeline(5, 0.0, 0.0, Pinning::polarized_z());
    OrderParameterRecord rec = order_parameters(rho);
    CHECK(std::abs(rec.m_feo) < 1e-8);
    CHECK(std::abs(rec.m_wfo) < 1e-8);
    CHECK(rec.m_sfo == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("order parameters match the dense trace formulas") {
    for (double p : {0.0, 0.3}) {
        ChoiState rho = pipeline(7, 0.4, p, Pinning::polarized_z());
        oracle::DenseObservables ref =
            oracle::dense_observables(dense_rho(7, 0.4, p, Pinning::polarized_z()));
        OrderParameterRecord rec = order_parameters(rho);
        CHECK(std::abs(rec.m_feo - ref.m_feo) < 1e-9);
        CHECK(std::abs(rec.m_wfo - ref.m_wfo) < 1e-9);
        CHECK(std::abs(rec.m_sfo - ref.m_sfo) < 1e-9);
    }
}

TEST_CASE("fractionalization fidelities match the dense oracle") {
    ChoiState rho = pipeline(7, 0.8, 0.5, Pinning::polarized_z());
    oracle::DenseObservables ref =
        oracle::dense_observables(dense_rho(7, 0.8, 0.5, Pinning::polarized_z()));
    FractionalizationRecord rec = fractionalization_check(rho);
    CHECK(std::abs(rec.weak_fidelity - ref.weak_fidelity) < 1e-8);
    CHECK(std::abs(rec.strong_fidelity - ref.strong_fidelity) < 1e-8);
    CHECK(rec.weak_fidelity < 1.0 - 1e-4);  // dressing away from the fixed point
}

TEST_CASE("z profile and the bit flip") {
    ChoiState rho = pipeline(7, 0.0, 0.5, Pinning::polarized_z());
    ZProfile plain = z_profile(rho, false);
    ZProfile flipped = z_profile(rho, true);
    CHECK(plain.values[0] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(plain.values[6] == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(flipped.values[0] == doctest::Approx(-1.0).epsilon(1e-8));
    CHECK(flipped.values[6] == doctest::Approx(-1.0).epsilon(1e-8));
    for (int j = 1; j < 6; ++j) {
        CHECK(std::abs(plain.values[static_cast<std::size_t>(j)]) < 1e-8);
    }

    // dense comparison with bulk leakage at J_xx = 0.8
    ChoiState leaky = pipeline(7, 0.8, 0.5, Pinning::polarized_z());
    oracle::DenseObservables ref =
        oracle::dense_observables(dense_rho(7, 0.8, 0.5, Pinning::polarized_z()));
    ZProfile lp = z_profile(leaky, false);
    ZProfile lf = z_profile(leaky, true);
    for (int j = 0; j < 7; ++j) {
        CHECK(std::abs(lp.values[static_cast<std::size_t>(j)] -
                       ref.z_profile[static_cast<std::size_t>(j)]) < 1e-8);
        CHECK(std::abs(lf.values[static_cast<std::size_t>(j)] -
                       ref.z_profile_flipped[static_cast<std::size_t>(j)]) < 1e-8);
    }
}

TEST_CASE("OSEE endpoints with Bell-pair pinning") {
    ChoiState pure = pipeline(7, 0.0, 0.0, Pinning::bell_pair());
    CHECK(osee(pure, EdgeSubsystem::A) == doctest::Approx(2 * kLn2).epsilon(1e-6));
    CHECK(osee(pure, EdgeSubsystem::B) == doctest::Approx(2 * kLn2).epsilon(1e-6));
    CHECK(osee(pure, EdgeSubsystem::AB) == doctest::Approx(2 * kLn2).epsilon(1e-6));
    CHECK(osmi(pure) == doctest::Approx(2 * kLn2).epsilon(1e-6));
    CHECK(mutual_negativity(pure) == doctest::Approx(2 * kLn2).epsilon(1e-6));

    ChoiState mixed = pipeline(7, 0.0, 0.5, Pinning::bell_pair());
    CHECK(osee(mixed, EdgeSubsystem::A) == doctest::Approx(kLn2).epsilon(1e-6));
    CHECK(osmi(mixed) == doctest::Approx(kLn2).epsilon(1e-6));
    CHECK(mutual_negativity(mixed) == doctest::Approx(kLn2).epsilon(1e-6));
}

TEST_CASE("fixed-point mixture reproduces the ln2 plateau") {
    ChoiState mix = fixed_point_state(7, {0, 0, std::array<double, 4>{0.5, 0.0, 0.0, 0.5}});
    CHECK(osee(mix, EdgeSubsystem::A) == doctest::Approx(kLn2).epsilon(1e-8));
    CHECK(osee(mix, EdgeSubsystem::B) == doctest::Approx(kLn2).epsilon(1e-8));
    CHECK(osee(mix, EdgeSubsystem::AB) == doctest::Approx(kLn2).epsilon(1e-8));
    CHECK(mutual_negativity(mix) == doctest::Approx(kLn2).epsilon(1e-8));
}

TEST_CASE("edge correlations match the dense vectorized computation") {
    for (double p : {0.1, 0.3}) {
        ChoiState rho = pipeline(7, 0.4, p, Pinning::bell_pair());
        oracle::DenseObservables ref =
            oracle::dense_observables(dense_rho(7, 0.4, p, Pinning::bell_pair()));
        EdgeCorrelationRecord rec = edge_correlations(rho);
        CHECK(std::abs(rec.s_a - ref.s_a) < 1e-9);
        CHECK(std::abs(rec.s_b - ref.s_b) < 1e-9);
        CHECK(std::abs(rec.s_ab - ref.s_ab) < 1e-9);
        CHECK(std::abs(rec.osmi - ref.osmi) < 1e-9);
        CHECK(std::abs(rec.n_a - ref.n_a) < 1e-8);
        CHECK(std::abs(rec.n_b - ref.n_b) < 1e-8);
        CHECK(std::abs(rec.n_ab - ref.n_ab) < 1e-8);
        CHECK(std::abs(rec.mutual_negativity - ref.mutual_negativity) < 1e-8);
        // invariants
        CHECK(rec.s_ab <= rec.s_a + rec.s_b + 1e-9);
        CHECK(rec.osmi >= -1e-9);
    }
}

TEST_CASE("sector labeling") {
    ChoiState pinned = pipeline(5, 0.0, 0.5, Pinning::polarized_z());
    auto sector = label_sector(pinned);
    REQUIRE(sector.has_value());
    CHECK(sector->first == 0);
    CHECK(sector->second == 0);

    ChoiState mix = fixed_point_state(5, {0, 0, std::array<double, 4>{0.5, 0.0, 0.0, 0.5}});
    CHECK_FALSE(label_sector(mix).has_value());
}

TEST_CASE("entropy guards") {
    Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
    bad(0, 0) = -0.5;
    CHECK_THROWS(von_neumann_entropy(bad));
    Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(2, 2) * 0.5;
    CHECK(von_neumann_entropy(rho) == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_SUITE_END();
