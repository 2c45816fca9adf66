#include "edgebits/model.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace edgebits {

std::string Pinning::name() const {
    switch (kind) {
        case PinningKind::None: return "none";
        case PinningKind::PolarizedZ: return "polarized_z";
        case PinningKind::BellPair: return "bell_pair";
    }
    throw std::logic_error("bad pinning kind");
}

Pinning pinning_from_name(const std::string& name, double eps) {
    if (name == "none") return Pinning::none();
    if (name == "polarized_z") return Pinning::polarized_z(eps);
    if (name == "bell_pair") return Pinning::bell_pair(eps);
    throw std::invalid_argument("unknown pinning kind: " + name);
}

void ChainConfig::validate() const {
    if (length < 5) throw std::invalid_argument("chain length must be >= 5");
    if (length % 2 == 0) throw std::invalid_argument("chain length must be odd");
    if (j_xx < 0) throw std::invalid_argument("J_xx must be >= 0");
    if (pinning.kind != PinningKind::None && pinning.epsilon <= 0)
        throw std::invalid_argument("pinning epsilon must be positive");
}

std::vector<HamiltonianTerm> hamiltonian_terms(const ChainConfig& config) {
    config.validate();
    const int L = config.length;
    std::vector<HamiltonianTerm> terms;
    for (int j = 0; j <= L - 3; ++j) {
        terms.push_back({-1.0, PauliString::from_factors(
                                   {{j, PauliAxis::Z}, {j + 1, PauliAxis::X}, {j + 2, PauliAxis::Z}}, L)});
    }
    if (config.j_xx != 0.0) {
        for (int j = 0; j <= L - 2; ++j) {
            terms.push_back({config.j_xx, PauliString::from_factors(
                                              {{j, PauliAxis::X}, {j + 1, PauliAxis::X}}, L)});
        }
    }
    const double eps = config.pinning.epsilon;
    switch (config.pinning.kind) {
        case PinningKind::None:
            break;
        case PinningKind::PolarizedZ:
            terms.push_back({-eps, PauliString::single(L, 0, PauliAxis::Z)});
            terms.push_back({-eps, PauliString::single(L, L - 1, PauliAxis::Z)});
            break;
        case PinningKind::BellPair:
            terms.push_back({-eps, PauliString::from_factors(
                                       {{0, PauliAxis::Z}, {L - 1, PauliAxis::Z}}, L)});
            terms.push_back({-eps, PauliString::from_factors(
                                       {{0, PauliAxis::X}, {1, PauliAxis::Z},
                                        {L - 2, PauliAxis::Z}, {L - 1, PauliAxis::X}}, L)});
            break;
    }
    return terms;
}

namespace {

struct TermSpan {
    int first = -1;
    int last = -1;
};

TermSpan active_span(const PauliString& p) {
    TermSpan s;
    for (int j = 0; j < p.length(); ++j) {
        if (p.factor(j) != PauliAxis::I) {
            if (s.first < 0) s.first = j;
            s.last = j;
        }
    }
    return s;
}

// Real per-site factors with the sign folded into the first active site.
std::vector<Eigen::Matrix2d> signed_factors(const PauliString& p, int first_active) {
    auto mats = p.real_site_matrices();
    if (first_active > 0) {
        double sign = mats[0](0, 0);  // site 0 is identity times the folded sign
        mats[0] = Eigen::Matrix2d::Identity();
        mats[static_cast<std::size_t>(first_active)] *= sign;
    }
    return mats;
}

void add_block(Eigen::MatrixXd& dst, const Eigen::MatrixXd& src) {
    if (dst.size() == 0)
        dst = src;
    else
        dst += src;
}

}  // namespace

HamiltonianMpo mpo_from_terms(std::vector<HamiltonianTerm> terms, int length) {
    if (terms.empty()) throw std::invalid_argument("term list is empty");
    struct Compiled {
        double coeff;
        TermSpan span;
        std::vector<Eigen::Matrix2d> mats;
    };
    std::vector<Compiled> compiled;
    for (const auto& t : terms) {
        if (t.op.length() != length) throw std::invalid_argument("term length mismatch");
        TermSpan span = active_span(t.op);
        if (span.first < 0) throw std::invalid_argument("constant (identity) terms not supported");
        compiled.push_back({t.coefficient, span, signed_factors(t.op, span.first)});
    }

    // Bond basis at cut b (left of site b): index 0 = vacuum, 1 = done,
    // 2+.. one slot per straddling term, in term order.
    auto straddling = [&](int b) {
        std::vector<int> idx;
        for (int t = 0; t < static_cast<int>(compiled.size()); ++t)
            if (compiled[static_cast<std::size_t>(t)].span.first < b &&
                compiled[static_cast<std::size_t>(t)].span.last >= b)
                idx.push_back(t);
        return idx;
    };

    HamiltonianMpo mpo;
    mpo.terms = std::move(terms);
    mpo.sites.resize(static_cast<std::size_t>(length));

    for (int j = 0; j < length; ++j) {
        auto left = straddling(j);
        auto right = straddling(j + 1);
        const bool first = (j == 0);
        const bool last = (j == length - 1);
        int ldim = first ? 1 : 2 + static_cast<int>(left.size());
        int rdim = last ? 1 : 2 + static_cast<int>(right.size());

        auto left_slot = [&](int term) {
            auto it = std::find(left.begin(), left.end(), term);
            return 2 + static_cast<int>(it - left.begin());
        };
        auto right_slot = [&](int term) {
            auto it = std::find(right.begin(), right.end(), term);
            return 2 + static_cast<int>(it - right.begin());
        };
        // Row/column index helpers collapsing the boundary bonds.
        auto row = [&](int state) { return first ? 0 : state; };
        auto col = [&](int state) { return last ? 0 : state; };

        MpoSite site;
        site.left_dim = ldim;
        site.right_dim = rdim;
        site.phys_dim = 2;
        site.ops.assign(static_cast<std::size_t>(ldim * rdim), Eigen::MatrixXd());

        const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
        if (!first && !last) {
            add_block(site.at(row(0), col(0)), id);  // vac -> vac
            add_block(site.at(row(1), col(1)), id);  // done -> done
        } else if (first && !last) {
            // vac row only; no done -> done from the boundary
            add_block(site.at(0, col(0)), id);
        } else if (!first && last) {
            add_block(site.at(row(1), 0), id);  // done -> done into the right boundary
        }

        for (int t = 0; t < static_cast<int>(compiled.size()); ++t) {
            const auto& c = compiled[static_cast<std::size_t>(t)];
            if (j < c.span.first || j > c.span.last) continue;
            Eigen::MatrixXd f = c.mats[static_cast<std::size_t>(j)];
            bool starts = (j == c.span.first);
            bool ends = (j == c.span.last);
            if (starts) f *= c.coeff;
            int r = starts ? row(0) : row(left_slot(t));
            int cidx = ends ? col(1) : col(right_slot(t));
            if (last) cidx = 0;
            add_block(site.at(r, cidx), f);
        }
        mpo.sites[static_cast<std::size_t>(j)] = std::move(site);
    }
    return mpo;
}

HamiltonianMpo build_hamiltonian(const ChainConfig& config) {
    auto terms = hamiltonian_terms(config);
    return mpo_from_terms(std::move(terms), config.length);
}

int HamiltonianMpo::max_bond() const {
    int m = 0;
    for (const auto& s : sites) m = std::max(m, s.right_dim);
    return m;
}

Eigen::MatrixXd HamiltonianMpo::to_dense() const {
    if (length() > kDenseSiteLimit)
        throw std::invalid_argument("MPO to_dense: length exceeds dense limit");
    std::vector<Eigen::MatrixXd> cur(1, Eigen::MatrixXd::Identity(1, 1));
    for (const auto& site : sites) {
        std::vector<Eigen::MatrixXd> next(static_cast<std::size_t>(site.right_dim));
        for (int wr = 0; wr < site.right_dim; ++wr) {
            for (int wl = 0; wl < site.left_dim; ++wl) {
                const auto& blk = site.at(wl, wr);
                if (blk.size() == 0 || cur[static_cast<std::size_t>(wl)].size() == 0) continue;
                const auto& c = cur[static_cast<std::size_t>(wl)];
                Eigen::MatrixXd kron(c.rows() * 2, c.cols() * 2);
                for (int r = 0; r < 2; ++r)
                    for (int cc = 0; cc < 2; ++cc)
                        kron.block(c.rows() * r, c.cols() * cc, c.rows(), c.cols()) =
                            c * blk(r, cc);
                add_block(next[static_cast<std::size_t>(wr)], kron);
            }
        }
        cur = std::move(next);
    }
    if (cur.size() != 1 || cur[0].size() == 0)
        throw std::logic_error("MPO contraction did not close");
    return cur[0];
}

std::string HamiltonianMpo::manifest_text() const {
    std::ostringstream os;
    os.precision(12);
    for (const auto& t : terms) {
        os << t.coefficient;
        for (int j = 0; j < t.op.length(); ++j)
            if (t.op.factor(j) != PauliAxis::I)
                os << ' ' << j << ':' << axis_char(t.op.factor(j));
        os << '\n';
    }
    return os.str();
}

std::pair<PauliString, PauliString> symmetry_generators(int length) {
    if (length % 2 == 0) throw std::invalid_argument("length must be odd");
    PauliString w(length), s(length);
    for (int j = 0; j < length; ++j) {
        if (j % 2 == 0)
            w.set_factor(j, PauliAxis::X);
        else
            s.set_factor(j, PauliAxis::X);
    }
    return {w, s};
}

PauliString edge_xz_left(int length) {
    return PauliString::from_factors({{0, PauliAxis::X}, {1, PauliAxis::Z}}, length);
}

PauliString edge_zx_right(int length) {
    return PauliString::from_factors({{length - 2, PauliAxis::Z}, {length - 1, PauliAxis::X}}, length);
}

PauliString edge_z_left(int length) { return PauliString::single(length, 0, PauliAxis::Z); }

PauliString edge_z_right(int length) { return PauliString::single(length, length - 1, PauliAxis::Z); }

}  // namespace edgebits
