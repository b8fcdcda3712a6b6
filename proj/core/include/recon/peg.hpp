#ifndef RECON_PEG_HPP
#define RECON_PEG_HPP

#include <cstdint>
#include <vector>

#include "recon/code.hpp"

namespace recon {

/// Progressive-edge-growth construction: edges are placed one variable node
/// at a time; each edge goes to a check at maximal graph distance from the
/// variable (lowest current degree among candidates, index as final tie
/// break, small seeded shuffle of check indices for diversity). Deterministic
/// given (var_degrees, n_checks, seed).
ParityCheckMatrix peg_construct(const std::vector<int>& var_degrees, int n_checks,
                                std::uint64_t seed);

/// The (7,4) Hamming code, 3 checks.
ParityCheckMatrix hamming74();

/// Seeded (3,6)-regular rate-1/2 PEG code, n = 4096.
ParityCheckMatrix fixture_rate_half_4096();

/// Seeded irregular rate-1/10 PEG code, n = 10000.
ParityCheckMatrix fixture_rate_tenth_10000();

} // namespace recon

#endif
