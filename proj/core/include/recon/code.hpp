#ifndef RECON_CODE_HPP
#define RECON_CODE_HPP

#include <vector>

#include "recon/types.hpp"

namespace recon {

/// Sparse binary parity-check matrix. rows[c] is the sorted list of variable
/// indices incident to check c; no duplicates, every row nonempty.
struct ParityCheckMatrix {
    int n_cols = 0;
    std::vector<std::vector<int>> rows;

    int n_rows() const { return static_cast<int>(rows.size()); }
    /// 1 - r/n, assuming full row rank.
    double design_rate() const;
    /// GF(2) row rank, by packed-word elimination.
    int rank() const;
    /// 1 - rank/n; differs from design_rate() when rows are dependent.
    double effective_rate() const;

    void validate() const; // throws std::invalid_argument on malformed structure
};

/// H * x over GF(2); x.size() must equal n_cols.
Bits syndrome(const ParityCheckMatrix& h, const Bits& x);

/// A base code with each bit repeated m times. Extended column layout:
/// copy j of block i lives at column i*m + j (copies contiguous, j = 0 is
/// the representative). Alignment bit (i, j), j = 1..m-1, has index
/// i*(m-1) + (j-1).
struct RepetitionScheme {
    ParityCheckMatrix base;
    unsigned m = 1;
};

/// Parity-check matrix of the extended code: (m-1)*n equality checks
/// x_{i,j} + x_{i,0} = 0, followed by the base checks on the
/// representatives. m = 1 returns the base unchanged.
ParityCheckMatrix extend_repetition(const RepetitionScheme& scheme);

} // namespace recon

#endif
