#ifndef RECON_RNG_HPP
#define RECON_RNG_HPP

#include <cstdint>

namespace recon {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the idx-th substream of a master seed:
/// splitmix64(splitmix64(seed) + idx). Used to shard deterministic
/// generation (e.g. one batch per Monte-Carlo frame).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t idx);

/// Inverse of the standard normal CDF. Acklam's rational approximation
/// refined with one Halley step through erfc; accurate to ~1e-15.
double inverse_normal_cdf(double u);

/// Counter-based generator: output(i) = splitmix64(key + i * golden).
/// Streams keyed by (seed, stream) are independent; the same (seed, stream)
/// always reproduces the same sequence, on any platform. Gaussian variates
/// come from the inverse CDF so stream positions stay aligned.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();
    /// Uniform on the open interval (0, 1).
    double next_unit();
    /// Standard normal.
    double next_gaussian();
    /// Uniform on {-1, +1}.
    int next_sign();

private:
    std::uint64_t key_;
    std::uint64_t ctr_ = 0;
};

} // namespace recon

#endif
