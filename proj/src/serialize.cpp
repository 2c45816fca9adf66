#include "edgebits/serialize.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace edgebits {

namespace {

constexpr std::uint32_t kMpsMagic = 0x4542'4d50;   // "EBMP"
constexpr std::uint32_t kChoiMagic = 0x4542'4348;  // "EBCH"
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    T value{};
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw std::runtime_error("truncated snapshot file");
    return value;
}

void put_string(std::ostream& out, const std::string& s) {
    put<std::uint64_t>(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
    auto n = get<std::uint64_t>(in);
    std::string s(n, '\0');
    in.read(s.data(), static_cast<std::streamsize>(n));
    if (!in) throw std::runtime_error("truncated snapshot file");
    return s;
}

void write_mps(std::ostream& out, const MatrixProductState& state) {
    put(out, kMpsMagic);
    put(out, kVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(state.length()));
    put<std::int32_t>(out, state.center());
    put(out, state.log_norm());
    for (int i = 0; i < state.length(); ++i) {
        const SiteTensor& t = state.site(i);
        put<std::uint32_t>(out, static_cast<std::uint32_t>(t.dl));
        put<std::uint32_t>(out, static_cast<std::uint32_t>(t.d));
        put<std::uint32_t>(out, static_cast<std::uint32_t>(t.dr));
        for (Eigen::Index r = 0; r < t.m.rows(); ++r)
            for (Eigen::Index c = 0; c < t.m.cols(); ++c) put(out, t.m(r, c));
    }
}

MatrixProductState read_mps(std::istream& in) {
    if (get<std::uint32_t>(in) != kMpsMagic)
        throw std::runtime_error("not an MPS snapshot");
    if (get<std::uint32_t>(in) != kVersion)
        throw std::runtime_error("unsupported MPS snapshot version");
    const auto length = get<std::uint32_t>(in);
    const auto center = get<std::int32_t>(in);
    const double log_norm = get<double>(in);
    if (length == 0) throw std::runtime_error("empty MPS snapshot");

    std::vector<SiteTensor> tensors(length);
    for (auto& t : tensors) {
        t.dl = static_cast<int>(get<std::uint32_t>(in));
        t.d = static_cast<int>(get<std::uint32_t>(in));
        t.dr = static_cast<int>(get<std::uint32_t>(in));
        if (t.dl < 1 || t.d < 1 || t.dr < 1)
            throw std::runtime_error("corrupt MPS snapshot shape");
        t.m.resize(static_cast<Eigen::Index>(t.dl) * t.d, t.dr);
        for (Eigen::Index r = 0; r < t.m.rows(); ++r)
            for (Eigen::Index c = 0; c < t.m.cols(); ++c) t.m(r, c) = get<double>(in);
    }

    std::vector<Eigen::VectorXd> locals(length, Eigen::VectorXd::Ones(tensors[0].d));
    MatrixProductState state = MatrixProductState::product_state(locals);
    for (std::uint32_t i = 0; i < length; ++i) state.site_mut(static_cast<int>(i)) = tensors[i];
    state.set_log_norm(log_norm);
    if (center >= 0) state.canonicalize(center);
    return state;
}

}  // namespace

void save_mps(const MatrixProductState& state, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_mps(out, state);
    if (!out) throw std::runtime_error("write failure on " + path);
}

MatrixProductState load_mps(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_mps(in);
}

void save_choi(const ChoiState& rho, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    put(out, kChoiMagic);
    put(out, kVersion);
    put_string(out, rho.provenance);
    put<std::uint8_t>(out, rho.normalized ? 1 : 0);
    put(out, rho.log_purity_prenorm);
    write_mps(out, rho.state);
    if (!out) throw std::runtime_error("write failure on " + path);
}

ChoiState load_choi(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (get<std::uint32_t>(in) != kChoiMagic)
        throw std::runtime_error("not a ChoiState snapshot");
    if (get<std::uint32_t>(in) != kVersion)
        throw std::runtime_error("unsupported ChoiState snapshot version");
    ChoiState rho;
    rho.provenance = get_string(in);
    rho.normalized = get<std::uint8_t>(in) != 0;
    rho.log_purity_prenorm = get<double>(in);
    rho.state = read_mps(in);
    return rho;
}

}  // namespace edgebits
