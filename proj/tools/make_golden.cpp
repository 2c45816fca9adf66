// Regenerates the committed dense-oracle golden records (tests/data/golden.txt).
#include <cstdio>
#include <fstream>
#include <iostream>

#include "edgebits/oracle.hpp"

using namespace edgebits;

namespace {

void emit(std::ostream& out, int L, double j, double p, const Pinning& pinning) {
    oracle::GroundState gs = oracle::dense_ground_state({L, j, pinning});
    Eigen::MatrixXd rho = oracle::dense_apply_channel(gs.vector * gs.vector.transpose(), p);
    oracle::DenseObservables obs = oracle::dense_observables(rho);
    char buf[64];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%.15g", v);
        out << key << "=" << buf << "\n";
    };
    out << "[L=" << L << " j_xx=" << j << " p_z=" << p << " pinning=" << pinning.name()
        << "]\n";
    put("energy", gs.energy);
    put("m_feo", obs.m_feo);
    put("m_wfo", obs.m_wfo);
    put("m_sfo", obs.m_sfo);
    put("s_a", obs.s_a);
    put("s_b", obs.s_b);
    put("s_ab", obs.s_ab);
    put("osmi", obs.osmi);
    put("n_a", obs.n_a);
    put("n_b", obs.n_b);
    put("n_ab", obs.n_ab);
    put("mutual_negativity", obs.mutual_negativity);
    put("purity", obs.purity);
    put("weak_fidelity", obs.weak_fidelity);
    put("strong_fidelity", obs.strong_fidelity);
    for (int s = 0; s < L; ++s)
        put(("z_" + std::to_string(s)).c_str(), obs.z_profile[static_cast<std::size_t>(s)]);
    out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const char* path = argc > 1 ? argv[1] : "tests/data/golden.txt";
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << "\n";
        return 1;
    }
    out << "# dense-oracle golden records; regenerate with the make_golden tool\n\n";
    emit(out, 7, 0.4, 0.25, Pinning::polarized_z());
    emit(out, 7, 0.0, 0.5, Pinning::polarized_z());
    emit(out, 5, 0.8, 0.1, Pinning::polarized_z());
    emit(out, 7, 0.4, 0.25, Pinning::bell_pair());
    std::cout << "wrote " << path << "\n";
    return 0;
}
