#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "edgebits/dmrg.hpp"
#include "edgebits/model.hpp"
#include "edgebits/observables.hpp"

namespace edgebits {

inline constexpr const char* kCsvSchemaVersion = "1";

struct SweepConfig {
    std::vector<int> lengths;
    std::vector<double> j_xx_values;
    std::vector<double> p_z_values;
    Pinning pinning;
    DmrgParams dmrg;
    double choi_cutoff = 1e-12;
    int choi_max_bond = 4096;
    int workers = 1;
    bool with_edge_correlations = true;
    bool with_fractionalization = true;
    double critical_window_low = 0.95;
    double critical_window_high = 1.05;

    void validate() const;

    // Flat key=value text; '#' comments; comma-separated lists; unknown keys
    // rejected.
    static SweepConfig parse(std::istream& in);
    static SweepConfig parse_file(const std::string& path);
};

struct SweepRecord {
    int length = 0;
    double j_xx = 0.0;
    double p_z = 0.0;
    std::string pinning;
    int alpha = -1;  // -1 when the sector is unlabeled
    int beta = -1;
    OrderParameterRecord order;
    EdgeCorrelationRecord edge;
    double purity = 0.0;
    double weak_fidelity = 0.0;
    double strong_fidelity = 0.0;
    int max_bond = 0;
    double truncation_weight = 0.0;
    double wall_time = 0.0;
    std::vector<std::string> flags;  // critical-window, unlabeled-sector, ...
};

struct SweepResult {
    std::vector<SweepRecord> records;  // lexicographic in (L, J_xx, p_z)
};

SweepResult run_sweep(const SweepConfig& config);

// Deterministic CSV: schema-version header comment, 12 significant digits;
// the timestamp comment is the only run-dependent line.
void write_sweep_csv(const SweepResult& result, const std::string& path);

struct ProfileResult {
    int length = 0;
    double j_xx = 0.0;
    double p_z = 0.0;
    std::vector<double> z;          // <Z_j>
    std::vector<double> z_flipped;  // after W_u (x) W_l
};

ProfileResult run_profile(int length, double j_xx, double p_z, const Pinning& pinning,
                          const DmrgParams& dmrg);
void write_profile_csv(const ProfileResult& result, const std::string& path);

struct CrosscheckRow {
    int length = 0;
    double j_xx = 0.0;
    double p_z = 0.0;
    std::string observable;
    double deviation = 0.0;
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;
    double max_deviation = 0.0;
    double tolerance = 1e-8;
    bool passed = false;
};

// Compares the MPS pipeline against the dense oracle over the standard grid
// p_z in {0, 0.1, 0.25, 0.5} x J_xx in {0, 0.4, 0.8, 1.5}.  gate_perturbation
// injects a deliberate error into the channel gate (fault-injection check of
// the report's sensitivity).
CrosscheckReport run_crosscheck(const std::vector<int>& lengths, bool allow_large = false,
                                double gate_perturbation = 0.0);
void write_crosscheck_report(const CrosscheckReport& report, std::ostream& out);

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

// Self-contained SVG polyline chart with optional horizontal reference lines.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series,
                    const std::vector<double>& reference_lines = {});

// Figure-style plots from a sweep result (largest L): order parameters vs
// J_xx, m_sfo vs p_z, OSMI vs p_z with 2ln2 / ln2 reference lines.
void write_sweep_plots(const SweepResult& result, const std::string& out_dir);
void write_profile_plot(const ProfileResult& result, const std::string& path);

}  // namespace edgebits
