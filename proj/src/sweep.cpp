#include "edgebits/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "edgebits/choi.hpp"
#include "edgebits/oracle.hpp"

namespace edgebits {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw std::invalid_argument("bad boolean: " + s);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Fixed-size pool over independent grid points; results land in
// pre-allocated slots so scheduling cannot reorder anything.
void parallel_for(int n, int workers, const std::function<void(int)>& body) {
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& t : pool) t.join();
}

struct GroundDouble {
    ChoiState rho;
    double truncation_weight = 0.0;
    bool converged = true;
};

GroundDouble prepare_ground_double(const ChainConfig& config, const DmrgParams& dmrg,
                                   double choi_cutoff, int choi_max_bond) {
    DmrgResult res = dmrg_ground_state(build_hamiltonian(config), dmrg);
    GroundDouble gd;
    gd.rho = choi_double(res.state, choi_cutoff, choi_max_bond);
    gd.rho.provenance = "dmrg L=" + std::to_string(config.length) +
                        " j_xx=" + fmt(config.j_xx) + " pinning=" + config.pinning.name();
    gd.truncation_weight = res.truncation_weight;
    gd.converged = res.converged;
    return gd;
}

}  // namespace

void SweepConfig::validate() const {
    if (lengths.empty() || j_xx_values.empty() || p_z_values.empty())
        throw std::invalid_argument("sweep grid lists must be nonempty");
    for (int L : lengths) ChainConfig{L, 0.0, pinning}.validate();
    for (double p : p_z_values)
        if (p < 0.0 || p > 0.5) throw std::invalid_argument("p_z values must lie in [0, 1/2]");
    for (double j : j_xx_values)
        if (j < 0.0) throw std::invalid_argument("j_xx values must be nonnegative");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    dmrg.validate();
}

SweepConfig SweepConfig::parse(std::istream& in) {
    SweepConfig cfg;
    double epsilon = 1e-3;
    std::string pinning_name = "none";
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "lengths") {
            cfg.lengths.clear();
            for (const auto& s : split(value, ',')) cfg.lengths.push_back(parse_int(s));
        } else if (key == "j_xx") {
            cfg.j_xx_values.clear();
            for (const auto& s : split(value, ',')) cfg.j_xx_values.push_back(parse_double(s));
        } else if (key == "p_z") {
            cfg.p_z_values.clear();
            for (const auto& s : split(value, ',')) cfg.p_z_values.push_back(parse_double(s));
        } else if (key == "pinning") {
            pinning_name = value;
        } else if (key == "epsilon") {
            epsilon = parse_double(value);
        } else if (key == "max_bond") {
            cfg.dmrg.max_bond = parse_int(value);
        } else if (key == "cutoff") {
            cfg.dmrg.cutoff = parse_double(value);
        } else if (key == "max_sweeps") {
            cfg.dmrg.max_sweeps = parse_int(value);
        } else if (key == "energy_tol") {
            cfg.dmrg.energy_tol = parse_double(value);
        } else if (key == "lanczos_dim") {
            cfg.dmrg.lanczos_dim = parse_int(value);
        } else if (key == "lanczos_tol") {
            cfg.dmrg.lanczos_tol = parse_double(value);
        } else if (key == "seed") {
            cfg.dmrg.seed = static_cast<std::uint64_t>(std::stoull(value));
        } else if (key == "choi_cutoff") {
            cfg.choi_cutoff = parse_double(value);
        } else if (key == "choi_max_bond") {
            cfg.choi_max_bond = parse_int(value);
        } else if (key == "workers") {
            cfg.workers = parse_int(value);
        } else if (key == "edge_correlations") {
            cfg.with_edge_correlations = parse_bool(value);
        } else if (key == "fractionalization") {
            cfg.with_fractionalization = parse_bool(value);
        } else if (key == "critical_window_low") {
            cfg.critical_window_low = parse_double(value);
        } else if (key == "critical_window_high") {
            cfg.critical_window_high = parse_double(value);
        } else {
            throw std::invalid_argument("unknown config key: " + key);
        }
    }
    cfg.pinning = pinning_from_name(pinning_name, epsilon);
    cfg.validate();
    return cfg;
}

SweepConfig SweepConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    return parse(in);
}

SweepResult run_sweep(const SweepConfig& config) {
    config.validate();

    std::vector<int> lengths = config.lengths;
    std::vector<double> js = config.j_xx_values;
    std::vector<double> ps = config.p_z_values;
    std::sort(lengths.begin(), lengths.end());
    std::sort(js.begin(), js.end());
    std::sort(ps.begin(), ps.end());

    // Phase 1: one ground-state double per (L, J_xx), shared across p_z.
    struct Key {
        int L;
        double j;
        bool operator<(const Key& o) const { return L != o.L ? L < o.L : j < o.j; }
    };
    std::vector<Key> keys;
    for (int L : lengths)
        for (double j : js) keys.push_back({L, j});
    std::map<Key, GroundDouble> cache;
    std::vector<GroundDouble> prepared(keys.size());
    std::vector<std::string> prepare_errors(keys.size());
    parallel_for(static_cast<int>(keys.size()), config.workers, [&](int i) {
        try {
            prepared[static_cast<std::size_t>(i)] =
                prepare_ground_double({keys[static_cast<std::size_t>(i)].L,
                                       keys[static_cast<std::size_t>(i)].j, config.pinning},
                                      config.dmrg, config.choi_cutoff, config.choi_max_bond);
        } catch (const std::exception& e) {
            prepare_errors[static_cast<std::size_t>(i)] = e.what();
        }
    });
    for (std::size_t i = 0; i < keys.size(); ++i) cache[keys[i]] = std::move(prepared[i]);

    struct Point {
        int L;
        double j;
        double p;
    };
    std::vector<Point> grid;
    std::vector<std::string> grid_errors;
    for (int L : lengths)
        for (double j : js)
            for (double p : ps) grid.push_back({L, j, p});
    std::map<Key, std::string> prep_error_by_key;
    for (std::size_t i = 0; i < keys.size(); ++i)
        if (!prepare_errors[i].empty()) prep_error_by_key[keys[i]] = prepare_errors[i];

    SweepResult result;
    result.records.resize(grid.size());
    parallel_for(static_cast<int>(grid.size()), config.workers, [&](int i) {
        const Point& pt = grid[static_cast<std::size_t>(i)];
        SweepRecord& rec = result.records[static_cast<std::size_t>(i)];
        rec.length = pt.L;
        rec.j_xx = pt.j;
        rec.p_z = pt.p;
        rec.pinning = config.pinning.name();
        if (pt.j >= config.critical_window_low && pt.j <= config.critical_window_high)
            rec.flags.push_back("critical-window");
        auto t0 = std::chrono::steady_clock::now();
        try {
            auto prep_err = prep_error_by_key.find({pt.L, pt.j});
            if (prep_err != prep_error_by_key.end())
                throw std::runtime_error("ground state: " + prep_err->second);
            const GroundDouble& gd = cache.at({pt.L, pt.j});
            if (!gd.converged) rec.flags.push_back("non-converged");
            rec.truncation_weight = gd.truncation_weight;

            ChoiState rho = apply_channel(gd.rho, {pt.p}, config.choi_cutoff,
                                          config.choi_max_bond);
            rec.max_bond = rho.state.max_bond();
            rec.order = order_parameters(rho);
            rec.purity = purity(rho);
            if (config.with_edge_correlations) rec.edge = edge_correlations(rho);
            if (config.with_fractionalization) {
                FractionalizationRecord fr = fractionalization_check(rho);
                rec.weak_fidelity = fr.weak_fidelity;
                rec.strong_fidelity = fr.strong_fidelity;
            }
            auto sector = label_sector(rho);
            if (sector) {
                rec.alpha = sector->first;
                rec.beta = sector->second;
            } else {
                rec.flags.push_back("unlabeled-sector");
            }
        } catch (const std::exception& e) {
            std::string msg = e.what();
            std::replace(msg.begin(), msg.end(), ',', ' ');
            std::replace(msg.begin(), msg.end(), '\n', ' ');
            rec.flags.push_back("failed:" + msg);
        }
        rec.wall_time =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    });
    return result;
}

void write_sweep_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    std::time_t now = std::time(nullptr);
    char stamp[64];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# schema_version=" << kCsvSchemaVersion << " generated=" << stamp << "\n";
    out << "L,J_xx,p_z,pinning,alpha,beta,m_feo,m_wfo,m_sfo,osmi,s_A,s_B,s_AB,"
           "mutual_negativity,purity,weak_fidelity,strong_fidelity,max_bond,"
           "truncation_weight,flags\n";
    for (const auto& r : result.records) {
        out << r.length << ',' << fmt(r.j_xx) << ',' << fmt(r.p_z) << ',' << r.pinning << ',';
        if (r.alpha >= 0) out << r.alpha;
        out << ',';
        if (r.beta >= 0) out << r.beta;
        out << ',' << fmt(r.order.m_feo) << ',' << fmt(r.order.m_wfo) << ','
            << fmt(r.order.m_sfo) << ',' << fmt(r.edge.osmi) << ',' << fmt(r.edge.s_a) << ','
            << fmt(r.edge.s_b) << ',' << fmt(r.edge.s_ab) << ','
            << fmt(r.edge.mutual_negativity) << ',' << fmt(r.purity) << ','
            << fmt(r.weak_fidelity) << ',' << fmt(r.strong_fidelity) << ',' << r.max_bond
            << ',' << fmt(r.truncation_weight) << ',';
        for (std::size_t i = 0; i < r.flags.size(); ++i)
            out << (i ? ";" : "") << r.flags[i];
        out << "\n";
    }
    // Wall times vary run to run, so they live in trailing comments to keep
    // the body byte-identical across reruns.
    for (const auto& r : result.records)
        out << "# wall_time L=" << r.length << " J_xx=" << fmt(r.j_xx)
            << " p_z=" << fmt(r.p_z) << " seconds=" << fmt(r.wall_time) << "\n";
}

ProfileResult run_profile(int length, double j_xx, double p_z, const Pinning& pinning,
                          const DmrgParams& dmrg) {
    ChainConfig config{length, j_xx, pinning};
    config.validate();
    GroundDouble gd = prepare_ground_double(config, dmrg, kDefaultChoiCutoff,
                                            kDefaultChoiMaxBond);
    ChoiState rho = apply_channel(gd.rho, {p_z});
    ProfileResult result;
    result.length = length;
    result.j_xx = j_xx;
    result.p_z = p_z;
    result.z = z_profile(rho, false).values;
    result.z_flipped = z_profile(rho, true).values;
    return result;
}

void write_profile_csv(const ProfileResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "# schema_version=" << kCsvSchemaVersion << " L=" << result.length
        << " J_xx=" << fmt(result.j_xx) << " p_z=" << fmt(result.p_z) << "\n";
    out << "site,z,z_flipped\n";
    for (std::size_t j = 0; j < result.z.size(); ++j)
        out << j << ',' << fmt(result.z[j]) << ',' << fmt(result.z_flipped[j]) << "\n";
}

CrosscheckReport run_crosscheck(const std::vector<int>& lengths, bool allow_large,
                                double gate_perturbation) {
    const std::vector<double> ps = {0.0, 0.1, 0.25, 0.5};
    const std::vector<double> js = {0.0, 0.4, 0.8, 1.5};
    const Pinning pinning = Pinning::polarized_z();
    CrosscheckReport report;

    for (int L : lengths) {
        for (double j : js) {
            ChainConfig config{L, j, pinning};
            // tighter than the defaults: the comparison budget is 1e-8
            DmrgParams params;
            params.energy_tol = 1e-12;
            params.max_sweeps = 60;
            DmrgResult dm = dmrg_ground_state(build_hamiltonian(config), params);
            ChoiState base = choi_double(dm.state);
            oracle::GroundState gs = oracle::dense_ground_state(config);
            Eigen::MatrixXd rho0 = gs.vector * gs.vector.transpose();

            for (double p : ps) {
                ChoiState rho = apply_channel(base, {p});
                if (gate_perturbation != 0.0 && p > 0.0) {
                    // fault injection: nudge one diagonal gate entry
                    Eigen::MatrixXd bad = Eigen::Matrix4d::Identity();
                    bad(1, 1) += gate_perturbation;
                    rho.state.apply_site_gate(0, bad);
                    rho.state.canonicalize(0);
                    rho.state.set_log_norm(0.0);
                }
                Eigen::MatrixXd rho_dense = oracle::dense_apply_channel(rho0, p);
                oracle::DenseObservables ref = oracle::dense_observables(rho_dense, allow_large);

                OrderParameterRecord op = order_parameters(rho);
                EdgeCorrelationRecord ec = edge_correlations(rho);
                FractionalizationRecord fr = fractionalization_check(rho);
                ZProfile zp = z_profile(rho, false);
                ZProfile zpf = z_profile(rho, true);

                auto push = [&](const std::string& name, double mps, double dense) {
                    report.rows.push_back({L, j, p, name, std::abs(mps - dense)});
                };
                push("m_feo", op.m_feo, ref.m_feo);
                push("m_wfo", op.m_wfo, ref.m_wfo);
                push("m_sfo", op.m_sfo, ref.m_sfo);
                push("s_A", ec.s_a, ref.s_a);
                push("s_B", ec.s_b, ref.s_b);
                push("s_AB", ec.s_ab, ref.s_ab);
                push("osmi", ec.osmi, ref.osmi);
                push("n_A", ec.n_a, ref.n_a);
                push("n_B", ec.n_b, ref.n_b);
                push("n_AB", ec.n_ab, ref.n_ab);
                push("mutual_negativity", ec.mutual_negativity, ref.mutual_negativity);
                push("purity", purity(rho), ref.purity);
                push("weak_fidelity", fr.weak_fidelity, ref.weak_fidelity);
                double zdev = 0.0, zfdev = 0.0;
                for (int s = 0; s < L; ++s) {
                    zdev = std::max(zdev, std::abs(zp.values[static_cast<std::size_t>(s)] -
                                                   ref.z_profile[static_cast<std::size_t>(s)]));
                    zfdev = std::max(
                        zfdev, std::abs(zpf.values[static_cast<std::size_t>(s)] -
                                        ref.z_profile_flipped[static_cast<std::size_t>(s)]));
                }
                report.rows.push_back({L, j, p, "z_profile", zdev});
                report.rows.push_back({L, j, p, "z_profile_flipped", zfdev});
            }
        }
    }
    for (const auto& r : report.rows) report.max_deviation = std::max(report.max_deviation, r.deviation);
    report.passed = report.max_deviation <= report.tolerance;
    return report;
}

void write_crosscheck_report(const CrosscheckReport& report, std::ostream& out) {
    std::map<std::string, double> per_obs;
    for (const auto& r : report.rows)
        per_obs[r.observable] = std::max(per_obs[r.observable], r.deviation);
    out << "observable,max_deviation\n";
    for (const auto& [name, dev] : per_obs) out << name << ',' << fmt(dev) << "\n";
    out << "overall," << fmt(report.max_deviation) << "\n";
    out << (report.passed ? "PASS" : "FAIL") << " tolerance=" << fmt(report.tolerance) << "\n";
}

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series,
                    const std::vector<double>& reference_lines) {
    const double width = 640, height = 480;
    const double ml = 70, mr = 150, mt = 50, mb = 60;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    for (double r : reference_lines) {
        ymin = std::min(ymin, r);
        ymax = std::max(ymax, r);
    }
    if (!(xmin <= xmax)) { xmin = 0; xmax = 1; }
    if (!(ymin <= ymax)) { ymin = 0; ymax = 1; }
    if (xmax - xmin < 1e-12) { xmin -= 0.5; xmax += 0.5; }
    if (ymax - ymin < 1e-12) { ymin -= 0.5; ymax += 0.5; }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"25\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        double x = xmin + (xmax - xmin) * i / 5.0;
        double y = ymin + (ymax - ymin) * i / 5.0;
        out << "<line x1=\"" << px(x) << "\" y1=\"" << height - mb << "\" x2=\"" << px(x)
            << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(x) << "\" y=\"" << height - mb + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(std::round(x * 1e6) / 1e6) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << ml
            << "\" y2=\"" << py(y) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(y) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt(std::round(y * 1e6) / 1e6) << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 15
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    out << "<text x=\"20\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
        << "transform=\"rotate(-90 20 " << (mt + height - mb) / 2 << ")\">" << y_label
        << "</text>\n";
    for (double r : reference_lines)
        out << "<line x1=\"" << ml << "\" y1=\"" << py(r) << "\" x2=\"" << width - mr
            << "\" y2=\"" << py(r) << "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";
    int ci = 0;
    for (const auto& s : series) {
        const char* color = kPalette[ci % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) out << px(x) << "," << py(y) << " ";
        out << "\"/>\n";
        for (const auto& [x, y] : s.points)
            out << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"2.5\" fill=\""
                << color << "\"/>\n";
        out << "<text x=\"" << width - mr + 10 << "\" y=\"" << mt + 16 * ci + 10
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
            << s.name << "</text>\n";
        ++ci;
    }
    out << "</svg>\n";
}

void write_sweep_plots(const SweepResult& result, const std::string& out_dir) {
    if (result.records.empty()) return;
    int L = 0;
    for (const auto& r : result.records) L = std::max(L, r.length);

    auto collect = [&](auto key_of, auto x_of, auto y_of, const std::string& prefix) {
        std::map<double, PlotSeries> by_key;
        for (const auto& r : result.records) {
            if (r.length != L) continue;
            double key = key_of(r);
            auto& s = by_key[key];
            if (s.name.empty()) s.name = prefix + fmt(key);
            s.points.emplace_back(x_of(r), y_of(r));
        }
        std::vector<PlotSeries> out;
        for (auto& [k, s] : by_key) {
            std::sort(s.points.begin(), s.points.end());
            out.push_back(std::move(s));
        }
        return out;
    };
    auto by_p = [](const SweepRecord& r) { return r.p_z; };
    auto by_j = [](const SweepRecord& r) { return r.j_xx; };

    write_svg_plot(out_dir + "/m_feo_vs_jxx.svg", "m_feo vs J_xx (L=" + std::to_string(L) + ")",
                   "J_xx", "m_feo",
                   collect(by_p, by_j, [](const SweepRecord& r) { return r.order.m_feo; },
                           "p_z="));
    write_svg_plot(out_dir + "/m_wfo_vs_jxx.svg", "m_wfo vs J_xx (L=" + std::to_string(L) + ")",
                   "J_xx", "m_wfo",
                   collect(by_p, by_j, [](const SweepRecord& r) { return r.order.m_wfo; },
                           "p_z="));
    write_svg_plot(out_dir + "/m_sfo_vs_pz.svg", "m_sfo vs p_z (L=" + std::to_string(L) + ")",
                   "p_z", "m_sfo",
                   collect(by_j, by_p, [](const SweepRecord& r) { return r.order.m_sfo; },
                           "J_xx="));
    write_svg_plot(out_dir + "/osmi_vs_pz.svg", "OSMI vs p_z (L=" + std::to_string(L) + ")",
                   "p_z", "OSMI",
                   collect(by_j, by_p, [](const SweepRecord& r) { return r.edge.osmi; },
                           "J_xx="),
                   {2.0 * std::log(2.0), std::log(2.0)});
}

void write_profile_plot(const ProfileResult& result, const std::string& path) {
    PlotSeries plain{"Z_j", {}}, flipped{"Z_j flipped", {}};
    for (std::size_t j = 0; j < result.z.size(); ++j) {
        plain.points.emplace_back(static_cast<double>(j), result.z[j]);
        flipped.points.emplace_back(static_cast<double>(j), result.z_flipped[j]);
    }
    write_svg_plot(path,
                   "Z profile (L=" + std::to_string(result.length) +
                       ", J_xx=" + fmt(result.j_xx) + ", p_z=" + fmt(result.p_z) + ")",
                   "site j", "Z_j", {plain, flipped});
}

}  // namespace edgebits
