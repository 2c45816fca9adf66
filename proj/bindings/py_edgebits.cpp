#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "edgebits/choi.hpp"
#include "edgebits/dmrg.hpp"
#include "edgebits/observables.hpp"
#include "edgebits/serialize.hpp"
#include "edgebits/sweep.hpp"

namespace py = pybind11;
using namespace edgebits;

namespace {

Pinning make_pinning(const std::string& name, double epsilon) {
    return pinning_from_name(name, epsilon);
}

py::dict order_dict(const OrderParameterRecord& r) {
    py::dict d;
    d["m_feo"] = r.m_feo;
    d["m_wfo"] = r.m_wfo;
    d["m_sfo"] = r.m_sfo;
    return d;
}

py::dict edge_dict(const EdgeCorrelationRecord& r) {
    py::dict d;
    d["s_A"] = r.s_a;
    d["s_B"] = r.s_b;
    d["s_AB"] = r.s_ab;
    d["osmi"] = r.osmi;
    d["n_A"] = r.n_a;
    d["n_B"] = r.n_b;
    d["n_AB"] = r.n_ab;
    d["mutual_negativity"] = r.mutual_negativity;
    return d;
}

}  // namespace

PYBIND11_MODULE(_edgebits, m) {
    m.doc() = "Edge bits of decohered cluster states: MPS pipeline and diagnostics";

    py::class_<MatrixProductState>(m, "MatrixProductState")
        .def_property_readonly("length", &MatrixProductState::length)
        .def_property_readonly("max_bond", &MatrixProductState::max_bond);

    py::class_<ChoiState>(m, "ChoiState")
        .def_property_readonly("length", &ChoiState::length)
        .def_readonly("provenance", &ChoiState::provenance)
        .def_property_readonly("max_bond",
                               [](const ChoiState& c) { return c.state.max_bond(); });

    m.def(
        "ground_state",
        [](int length, double j_xx, const std::string& pinning, double epsilon, int max_bond,
           double cutoff, std::uint64_t seed) {
            ChainConfig config{length, j_xx, make_pinning(pinning, epsilon)};
            DmrgParams params;
            params.max_bond = max_bond;
            params.cutoff = cutoff;
            params.seed = seed;
            DmrgResult res = dmrg_ground_state(build_hamiltonian(config), params);
            return py::make_tuple(res.state, res.energy, res.converged);
        },
        py::arg("length"), py::arg("j_xx") = 0.0, py::arg("pinning") = "none",
        py::arg("epsilon") = 1e-3, py::arg("max_bond") = 128, py::arg("cutoff") = 1e-10,
        py::arg("seed") = 7,
        "DMRG ground state of the extended cluster chain; returns (mps, energy, converged)");

    m.def(
        "choi_double",
        [](const MatrixProductState& psi, double cutoff, int max_bond) {
            return choi_double(psi, cutoff, max_bond);
        },
        py::arg("psi"), py::arg("cutoff") = kDefaultChoiCutoff,
        py::arg("max_bond") = kDefaultChoiMaxBond, "Vectorize |psi><psi| into a rung MPS");
    m.def(
        "apply_channel",
        [](const ChoiState& rho, double p_z, double cutoff, int max_bond) {
            return apply_channel(rho, ChannelSpec{p_z}, cutoff, max_bond);
        },
        py::arg("rho"), py::arg("p_z"), py::arg("cutoff") = kDefaultChoiCutoff,
        py::arg("max_bond") = kDefaultChoiMaxBond, "Even-site Z dephasing channel");
    m.def(
        "fixed_point_state",
        [](int length, int alpha, int beta, std::optional<std::array<double, 4>> mixture) {
            return fixed_point_state(length, FixedPointLabels{alpha, beta, mixture});
        },
        py::arg("length"), py::arg("alpha") = 0, py::arg("beta") = 0,
        py::arg("mixture") = py::none(), "Exact bond-dimension-2 fixed-point state");

    m.def("order_parameters", [](const ChoiState& rho) { return order_dict(order_parameters(rho)); });
    m.def("edge_correlations",
          [](const ChoiState& rho) { return edge_dict(edge_correlations(rho)); });
    m.def("fractionalization_check", [](const ChoiState& rho) {
        FractionalizationRecord r = fractionalization_check(rho);
        return py::make_tuple(r.weak_fidelity, r.strong_fidelity);
    });
    m.def(
        "z_profile",
        [](const ChoiState& rho, bool flip) { return z_profile(rho, flip).values; },
        py::arg("rho"), py::arg("flip") = false);
    m.def("purity", [](const ChoiState& rho) { return purity(rho); });
    m.def("osmi", [](const ChoiState& rho) { return osmi(rho); });
    m.def("mutual_negativity", [](const ChoiState& rho) { return mutual_negativity(rho); });
    m.def("overlap", [](const ChoiState& a, const ChoiState& b) {
        return MatrixProductState::overlap(a.state, b.state);
    });

    m.def("save_choi", &save_choi, py::arg("rho"), py::arg("path"));
    m.def("load_choi", &load_choi, py::arg("path"));

    m.def(
        "run_crosscheck",
        [](const std::vector<int>& lengths, bool allow_large) {
            CrosscheckReport r = run_crosscheck(lengths, allow_large);
            return py::make_tuple(r.passed, r.max_deviation);
        },
        py::arg("lengths"), py::arg("allow_large") = false,
        "Dense-oracle equivalence check; returns (passed, max_deviation)");
    m.def(
        "run_sweep_to_csv",
        [](const std::string& config_path, const std::string& csv_path) {
            SweepConfig config = SweepConfig::parse_file(config_path);
            SweepResult result = run_sweep(config);
            write_sweep_csv(result, csv_path);
            return result.records.size();
        },
        py::arg("config_path"), py::arg("csv_path"));
}
