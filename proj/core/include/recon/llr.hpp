#ifndef RECON_LLR_HPP
#define RECON_LLR_HPP

#include <vector>

#include "recon/types.hpp"

namespace recon {

/// LLR of a BSC(p) observation: (1 - 2 y_i) * ln((1-p)/p). Requires 0 < p < 1/2.
LlrVector llr_bsc(const Bits& y, double p);

/// LLR of a BI-AWGN observation with noise variance 1/s: 2 * s * y_i.
LlrVector llr_biawgn(const std::vector<double>& y, double s);

/// Collapse an extended-code LLR vector (layout: copy j of block i at index
/// i*m + j) onto the n representatives:
///   combined_i = llr_{i,0} + sum_{j>=1} (-1)^{alignment_{i,j}} llr_{i,j}.
LlrVector combine_repetition_llr(const LlrVector& llr_ext, const Bits& alignment,
                                 unsigned m);

/// Majority vote of {y_{i,0}} u {y_{i,j} ^ alignment_{i,j}} per block.
/// Ties at even m are resolved as a decision error (complement of the
/// first-copy value), mirroring the analytic p_m formula.
Bits majority_combine(const Bits& y_ext, const Bits& alignment, unsigned m);

} // namespace recon

#endif
