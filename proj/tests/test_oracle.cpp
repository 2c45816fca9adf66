#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "edgebits/oracle.hpp"

using namespace edgebits;

namespace {

const double kLn2 = std::log(2.0);

struct GoldenBlock {
    std::string header;
    std::map<std::string, double> values;
};

std::vector<GoldenBlock> load_golden(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(bool(in), "missing golden file: " << path);
    std::vector<GoldenBlock> blocks;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '[') {
            blocks.push_back({line, {}});
        } else {
            auto eq = line.find('=');
            REQUIRE(eq != std::string::npos);
            REQUIRE_FALSE(blocks.empty());
            blocks.back().values[line.substr(0, eq)] = std::stod(line.substr(eq + 1));
        }
    }
    return blocks;
}

struct PointKey {
    int L;
    double j, p;
    Pinning pinning;
};

PointKey parse_header(const std::string& header) {
    PointKey key{0, 0, 0, Pinning::none()};
    std::string inner = header.substr(1, header.size() - 2);
    std::stringstream ss(inner);
    std::string tok;
    std::string pin_name = "none";
    while (ss >> tok) {
        auto eq = tok.find('=');
        std::string k = tok.substr(0, eq), v = tok.substr(eq + 1);
        if (k == "L") key.L = std::stoi(v);
        else if (k == "j_xx") key.j = std::stod(v);
        else if (k == "p_z") key.p = std::stod(v);
        else if (k == "pinning") pin_name = v;
    }
    key.pinning = pinning_from_name(pin_name, 1e-3);
    return key;
}

Eigen::MatrixXd point_rho(const PointKey& key) {
    oracle::GroundState gs = oracle::dense_ground_state({key.L, key.j, key.pinning});
    return oracle::dense_apply_channel(gs.vector * gs.vector.transpose(), key.p);
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("stabilizer ground energy and degeneracy") {
    CHECK(oracle::dense_ground_state({5, 0.0, Pinning::none()}).energy ==
          doctest::Approx(-3.0).epsilon(1e-12));
    Eigen::MatrixXd h = oracle::dense_hamiltonian({5, 0.0, Pinning::none()});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    for (int k = 1; k < 4; ++k)
        CHECK(std::abs(es.eigenvalues()(k) - es.eigenvalues()(0)) < 1e-12);
}

TEST_CASE("channel basics") {
    oracle::GroundState gs = oracle::dense_ground_state({5, 0.4, Pinning::polarized_z()});
    Eigen::MatrixXd rho = gs.vector * gs.vector.transpose();

    Eigen::MatrixXd same = oracle::dense_apply_channel(rho, 0.0);
    CHECK((same - rho).cwiseAbs().maxCoeff() < 1e-15);

    // trace preservation
    Eigen::MatrixXd out = oracle::dense_apply_channel(rho, 0.3);
    CHECK(out.trace() == doctest::Approx(1.0).epsilon(1e-13));

    // idempotence at p = 1/2
    Eigen::MatrixXd half = oracle::dense_apply_channel(rho, 0.5);
    Eigen::MatrixXd twice = oracle::dense_apply_channel(half, 0.5);
    CHECK((half - twice).cwiseAbs().maxCoeff() < 1e-13);

    // composition law 1-2r = (1-2p)(1-2q)
    double p = 0.2, q = 0.3, r = 0.5 * (1 - (1 - 2 * p) * (1 - 2 * q));
    Eigen::MatrixXd ab = oracle::dense_apply_channel(oracle::dense_apply_channel(rho, p), q);
    Eigen::MatrixXd c = oracle::dense_apply_channel(rho, r);
    CHECK((ab - c).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("choi vector round structure") {
    oracle::GroundState gs = oracle::dense_ground_state({5, 0.4, Pinning::polarized_z()});
    Eigen::MatrixXd rho = gs.vector * gs.vector.transpose();
    Eigen::VectorXd v = oracle::choi_vector(rho);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // pure state: single-rung RDM entropy == entropy of the doubled cut
    Eigen::MatrixXd rdm = oracle::rdm_rungs(v, 5, {0});
    CHECK(rdm.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((rdm - rdm.transpose()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("negativity identities on known states") {
    // Bell-edge pure double at J_xx=0: OSMI and mutual negativity are 2 ln 2
    oracle::GroundState gs = oracle::dense_ground_state({5, 0.0, Pinning::bell_pair()});
    Eigen::MatrixXd rho = gs.vector * gs.vector.transpose();
    oracle::DenseObservables pure = oracle::dense_observables(rho);
    CHECK(pure.osmi == doctest::Approx(2 * kLn2).epsilon(1e-9));
    CHECK(pure.mutual_negativity == doctest::Approx(2 * kLn2).epsilon(1e-9));

    // decohered: ln 2 plateau
    oracle::DenseObservables mixed =
        oracle::dense_observables(oracle::dense_apply_channel(rho, 0.5));
    CHECK(mixed.osmi == doctest::Approx(kLn2).epsilon(1e-9));
    CHECK(mixed.mutual_negativity == doctest::Approx(kLn2).epsilon(1e-9));
}

TEST_CASE("pure-state negativity equals the Schmidt formula") {
    oracle::GroundState gs = oracle::dense_ground_state({7, 0.8, Pinning::polarized_z()});
    Eigen::MatrixXd rho =
        oracle::dense_apply_channel(gs.vector * gs.vector.transpose(), 0.25);
    Eigen::VectorXd v = oracle::choi_vector(rho);
    for (const std::vector<int>& keep :
         {std::vector<int>{0}, std::vector<int>{6}, std::vector<int>{0, 6}}) {
        Eigen::MatrixXd rdm = oracle::rdm_rungs(v, 7, keep);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rdm);
        double sum_sqrt = 0.0;
        for (int i = 0; i < es.eigenvalues().size(); ++i)
            sum_sqrt += std::sqrt(std::max(0.0, es.eigenvalues()(i)));
        double expect = std::log(sum_sqrt * sum_sqrt);
        CHECK(oracle::negativity_partial_transpose(v, 7, keep) ==
              doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("memory guard") {
    Eigen::MatrixXd rho = Eigen::MatrixXd::Identity(1 << 11, 1 << 11);
    rho /= rho.trace();
    CHECK_THROWS(oracle::dense_observables(rho));  // L=11 needs allow_large
}

TEST_CASE("golden records regress the oracle") {
    auto blocks = load_golden(std::string(EDGEBITS_SOURCE_DIR) + "/tests/data/golden.txt");
    REQUIRE(blocks.size() >= 4);
    for (const auto& block : blocks) {
        PointKey key = parse_header(block.header);
        oracle::GroundState gs = oracle::dense_ground_state({key.L, key.j, key.pinning});
        oracle::DenseObservables obs = oracle::dense_observables(point_rho(key));
        CHECK(gs.energy == doctest::Approx(block.values.at("energy")).epsilon(1e-12));
        auto check = [&](const char* name, double v) {
            CHECK_MESSAGE(std::abs(v - block.values.at(name)) < 1e-10,
                          block.header << " " << name);
        };
        check("m_feo", obs.m_feo);
        check("m_wfo", obs.m_wfo);
        check("m_sfo", obs.m_sfo);
        check("osmi", obs.osmi);
        check("mutual_negativity", obs.mutual_negativity);
        check("purity", obs.purity);
        check("weak_fidelity", obs.weak_fidelity);
        check("strong_fidelity", obs.strong_fidelity);
        for (int s = 0; s < key.L; ++s)
            check(("z_" + std::to_string(s)).c_str(),
                  obs.z_profile[static_cast<std::size_t>(s)]);
    }
}

TEST_SUITE_END();
