#ifndef RECON_SOURCE_HPP
#define RECON_SOURCE_HPP

#include <cstdint>
#include <filesystem>
#include <vector>

#include "recon/types.hpp"

namespace recon {

/// One batch of QPSK quadrature components: Alice's symbols a in {-1,+1}
/// and Bob's noisy outcomes b = a + z, z ~ N(0, 1/snr). n counts quadrature
/// components (two per optical pulse), not pulses.
struct ModulationBatch {
    std::vector<std::int8_t> a;
    std::vector<double> b;
    double snr = 0.0;
    std::uint64_t seed = 0;

    std::size_t size() const { return a.size(); }
};

/// Hard-decision reduction: bits on both sides of the induced BSC.
struct HdPairs {
    Bits x; // Bob:   0 if b >= 0, else 1
    Bits y; // Alice: 0 if a == +1, else 1
};

/// Soft-decision reduction. x_i * side_info_i == b_i and y_i == side_info_i * a_i.
struct SdTriple {
    std::vector<std::int8_t> x; // Bob: sign of b (b == 0 maps to +1)
    std::vector<double> side_info; // |b|, publicly disclosed
    std::vector<double> y; // Alice: |b| * a
};

/// Deterministic given (n, snr, seed); a uniform on {-1,+1}, b = a + z.
ModulationBatch generate_batch(std::size_t n, double snr, std::uint64_t seed);

HdPairs reduce_hd(const ModulationBatch& batch);
SdTriple reduce_sd(const ModulationBatch& batch);

/// Flat little-endian binary file: "RBAT" magic, u64 n, f64 snr, u64 seed,
/// then n records of (i8 a, f64 b).
void save_batch(const ModulationBatch& batch, const std::filesystem::path& path);
ModulationBatch load_batch(const std::filesystem::path& path);

} // namespace recon

#endif
