#include "recon/source.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "recon/rng.hpp"

namespace recon {
namespace {

constexpr char kMagic[4] = {'R', 'B', 'A', 'T'};

template <typename T>
void write_le(std::ofstream& out, T v) {
    // host is little-endian on every supported target; format is
    // little-endian by definition
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_le(std::ifstream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}

} // namespace

ModulationBatch generate_batch(std::size_t n, double snr, std::uint64_t seed) {
    if (n == 0) throw std::domain_error("batch size must be positive");
    if (!(snr > 0.0)) throw std::domain_error("snr must be positive");
    ModulationBatch batch;
    batch.a.resize(n);
    batch.b.resize(n);
    batch.snr = snr;
    batch.seed = seed;
    const double sigma = 1.0 / std::sqrt(snr);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        const int a = rng.next_sign();
        batch.a[i] = static_cast<std::int8_t>(a);
        batch.b[i] = a + sigma * rng.next_gaussian();
    }
    return batch;
}

HdPairs reduce_hd(const ModulationBatch& batch) {
    const std::size_t n = batch.size();
    HdPairs out;
    out.x.resize(n);
    out.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.x[i] = batch.b[i] >= 0.0 ? 0 : 1; // b == 0 maps to X = 0
        out.y[i] = batch.a[i] == 1 ? 0 : 1;
    }
    return out;
}

SdTriple reduce_sd(const ModulationBatch& batch) {
    const std::size_t n = batch.size();
    SdTriple out;
    out.x.resize(n);
    out.side_info.resize(n);
    out.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double b = batch.b[i];
        out.x[i] = b >= 0.0 ? 1 : -1; // b == 0 maps to +1
        out.side_info[i] = std::fabs(b);
        out.y[i] = out.side_info[i] * batch.a[i];
    }
    return out;
}

void save_batch(const ModulationBatch& batch, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out.write(kMagic, 4);
    write_le<std::uint64_t>(out, batch.size());
    write_le<double>(out, batch.snr);
    write_le<std::uint64_t>(out, batch.seed);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        write_le<std::int8_t>(out, batch.a[i]);
        write_le<double>(out, batch.b[i]);
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

ModulationBatch load_batch(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not a batch file: " + path.string());
    ModulationBatch batch;
    const auto n = read_le<std::uint64_t>(in);
    batch.snr = read_le<double>(in);
    batch.seed = read_le<std::uint64_t>(in);
    batch.a.resize(n);
    batch.b.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        batch.a[i] = read_le<std::int8_t>(in);
        batch.b[i] = read_le<double>(in);
    }
    if (!in) throw std::runtime_error("truncated batch file: " + path.string());
    return batch;
}

} // namespace recon
