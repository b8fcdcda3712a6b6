#ifndef RECON_DECODER_HPP
#define RECON_DECODER_HPP

#include <vector>

#include "recon/code.hpp"
#include "recon/types.hpp"

namespace recon {

struct DecodeResult {
    Bits estimate;
    bool converged = false; // estimate's syndrome equals the target
    int iterations = 0;
};

/// Sum-product coset decoder, flooding schedule, tanh domain with messages
/// clipped at +-30. A check whose target syndrome bit is 1 has its sign
/// constraint flipped. Stops as soon as the hard decision satisfies the
/// target syndrome. Deterministic. Reusable across frames for a fixed code.
class BpDecoder {
public:
    explicit BpDecoder(const ParityCheckMatrix& h);

    DecodeResult decode(const LlrVector& llr, const Bits& target_syndrome,
                        int max_iter = 200);

    int n_cols() const { return n_; }
    int n_rows() const { return r_; }

private:
    int n_ = 0;
    int r_ = 0;
    // CSR over checks: edge e couples check row_of_[e] with column col_of_[e].
    std::vector<int> row_ptr_;
    std::vector<int> col_of_;
    // CSC over variables: indices into the edge arrays.
    std::vector<int> var_ptr_;
    std::vector<int> var_edges_;
    // workspaces
    std::vector<double> c2v_, v2c_, posterior_;
    Bits hard_, synd_;
};

/// One-shot convenience wrapper around BpDecoder.
DecodeResult bp_decode_coset(const ParityCheckMatrix& h, const LlrVector& llr,
                             const Bits& target_syndrome, int max_iter = 200);

/// Exhaustive maximum-likelihood coset decoding: argmax over {x : Hx = s} of
/// sum_i (1 - 2 x_i) llr_i, ties broken toward the lexicographically smallest
/// word. Requires n_cols <= 24.
Bits ml_decode_coset_bruteforce(const ParityCheckMatrix& h, const LlrVector& llr,
                                const Bits& target_syndrome);

} // namespace recon

#endif
