#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "edgebits/choi.hpp"
#include "edgebits/observables.hpp"
#include "edgebits/sweep.hpp"

namespace fs = std::filesystem;
using namespace edgebits;

int main(int argc, char** argv) {
    CLI::App app{"edgebits: decohered cluster-model edge-bit simulation toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    int workers = 0;
    bool plot = false;
    bool allow_large = false;

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep and write CSV/plots");
    sweep_cmd->add_option("--config", config_path, "sweep config file")->required();
    sweep_cmd->add_option("--out", out_dir, "output directory");
    sweep_cmd->add_option("--workers", workers, "worker thread count override");
    sweep_cmd->add_flag("--plot", plot, "also write SVG plots");

    auto* profile_cmd = app.add_subcommand("profile", "Z_j profile with and without bit flip");
    int p_length = 23;
    double p_jxx = 0.0, p_pz = 0.5, p_eps = 1e-3;
    profile_cmd->add_option("--length", p_length, "chain length (odd)")->required();
    profile_cmd->add_option("--j-xx", p_jxx, "XX coupling");
    profile_cmd->add_option("--p-z", p_pz, "dephasing strength");
    profile_cmd->add_option("--epsilon", p_eps, "pinning field strength");
    profile_cmd->add_option("--out", out_dir, "output directory");
    profile_cmd->add_flag("--plot", plot, "also write an SVG plot");

    auto* cross_cmd = app.add_subcommand("crosscheck", "compare MPS pipeline to the dense oracle");
    std::vector<int> cross_lengths = {5, 7};
    cross_cmd->add_option("--lengths", cross_lengths, "chain lengths to check");
    cross_cmd->add_flag("--allow-large-oracle", allow_large,
                        "permit the dense oracle up to L=11");
    cross_cmd->add_option("--out", out_dir, "output directory (report file)");

    auto* fp_cmd = app.add_subcommand("fixed-point", "dump fixed-point state diagnostics");
    int fp_length = 11, fp_alpha = 0, fp_beta = 0;
    bool fp_mixture = false;
    fp_cmd->add_option("--length", fp_length, "chain length (odd)");
    fp_cmd->add_option("--alpha", fp_alpha, "left edge bit")->check(CLI::Range(0, 1));
    fp_cmd->add_option("--beta", fp_beta, "right edge bit")->check(CLI::Range(0, 1));
    fp_cmd->add_flag("--mixture", fp_mixture, "equal mixture of (0,0) and (1,1) sectors");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep_cmd) {
            SweepConfig config = SweepConfig::parse_file(config_path);
            if (workers > 0) config.workers = workers;
            fs::create_directories(out_dir);
            SweepResult result = run_sweep(config);
            write_sweep_csv(result, out_dir + "/sweep.csv");
            if (plot) write_sweep_plots(result, out_dir);
            std::cout << "wrote " << out_dir << "/sweep.csv (" << result.records.size()
                      << " rows)\n";
        } else if (*profile_cmd) {
            fs::create_directories(out_dir);
            ProfileResult result =
                run_profile(p_length, p_jxx, p_pz, Pinning::polarized_z(p_eps), DmrgParams{});
            write_profile_csv(result, out_dir + "/profile.csv");
            if (plot) write_profile_plot(result, out_dir + "/profile.svg");
            std::cout << "wrote " << out_dir << "/profile.csv\n";
        } else if (*cross_cmd) {
            CrosscheckReport report = run_crosscheck(cross_lengths, allow_large);
            fs::create_directories(out_dir);
            std::ofstream rep(out_dir + "/crosscheck.csv");
            write_crosscheck_report(report, rep);
            write_crosscheck_report(report, std::cout);
            return report.passed ? 0 : 1;
        } else if (*fp_cmd) {
            FixedPointLabels labels{fp_alpha, fp_beta, std::nullopt};
            if (fp_mixture) labels.mixture = std::array<double, 4>{0.5, 0.0, 0.0, 0.5};
            ChoiState rho = fixed_point_state(fp_length, labels);
            std::cout << "L=" << fp_length << " alpha=" << fp_alpha << " beta=" << fp_beta
                      << (fp_mixture ? " (equal 00/11 mixture)" : "") << "\n";
            std::cout << "Tr[rho Z_0]      = " << trace_expectation(rho, edge_z_left(fp_length))
                      << "\n";
            std::cout << "Tr[rho Z_{L-1}]  = " << trace_expectation(rho, edge_z_right(fp_length))
                      << "\n";
            OrderParameterRecord op = order_parameters(rho);
            std::cout << "m_feo = " << op.m_feo << "  m_wfo = " << op.m_wfo
                      << "  m_sfo = " << op.m_sfo << "\n";
            FractionalizationRecord fr = fractionalization_check(rho);
            std::cout << "weak_fidelity = " << fr.weak_fidelity
                      << "  strong_fidelity = " << fr.strong_fidelity << "\n";
            EdgeCorrelationRecord ec = edge_correlations(rho);
            std::cout << "OSMI = " << ec.osmi << "  (ln2 = " << std::log(2.0) << ")\n";
            std::cout << "mutual negativity = " << ec.mutual_negativity << "\n";
            SymmetryPredicates sp = symmetry_predicates(rho);
            std::cout << "strong S: " << (sp.strong_s ? "yes" : "no")
                      << "  weak W: " << (sp.weak_w ? "yes" : "no") << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
