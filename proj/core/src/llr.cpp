#include "recon/llr.hpp"

#include <cmath>
#include <stdexcept>

namespace recon {

LlrVector llr_bsc(const Bits& y, double p) {
    if (!(p > 0.0 && p < 0.5))
        throw std::domain_error("llr_bsc requires p in (0, 1/2)");
    const double mag = std::log((1.0 - p) / p);
    LlrVector out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        out[i] = (1.0 - 2.0 * y[i]) * mag;
    return out;
}

LlrVector llr_biawgn(const std::vector<double>& y, double s) {
    if (!(s > 0.0)) throw std::domain_error("llr_biawgn requires s > 0");
    LlrVector out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = 2.0 * s * y[i];
    return out;
}

LlrVector combine_repetition_llr(const LlrVector& llr_ext, const Bits& alignment,
                                 unsigned m) {
    if (m == 0) throw std::domain_error("m must be >= 1");
    if (llr_ext.size() % m != 0)
        throw std::invalid_argument("extended LLR length not a multiple of m");
    const std::size_t n = llr_ext.size() / m;
    if (alignment.size() != (m - 1) * n)
        throw std::invalid_argument("alignment length mismatch");
    LlrVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = llr_ext[i * m];
        for (unsigned j = 1; j < m; ++j) {
            const double sign = alignment[i * (m - 1) + (j - 1)] ? -1.0 : 1.0;
            acc += sign * llr_ext[i * m + j];
        }
        out[i] = acc;
    }
    return out;
}

Bits majority_combine(const Bits& y_ext, const Bits& alignment, unsigned m) {
    if (m == 0) throw std::domain_error("m must be >= 1");
    if (y_ext.size() % m != 0)
        throw std::invalid_argument("extended word length not a multiple of m");
    const std::size_t n = y_ext.size() / m;
    if (alignment.size() != (m - 1) * n)
        throw std::invalid_argument("alignment length mismatch");
    Bits out(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned ones = y_ext[i * m];
        for (unsigned j = 1; j < m; ++j)
            ones += y_ext[i * m + j] ^ alignment[i * (m - 1) + (j - 1)];
        if (2 * ones > m) {
            out[i] = 1;
        } else if (2 * ones < m) {
            out[i] = 0;
        } else {
            // even-m tie: decision error by convention, matching the p_m sum
            out[i] = 1 ^ y_ext[i * m];
        }
    }
    return out;
}

} // namespace recon
