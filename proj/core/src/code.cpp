#include "recon/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace recon {

double ParityCheckMatrix::design_rate() const {
    return 1.0 - static_cast<double>(n_rows()) / n_cols;
}

int ParityCheckMatrix::rank() const {
    const int words = (n_cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> dense(n_rows(),
                                                  std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < n_rows(); ++i)
        for (int j : rows[i]) dense[i][j / 64] ^= 1ULL << (j % 64);

    int rank = 0;
    for (int col = 0; col < n_cols && rank < n_rows(); ++col) {
        const int w = col / 64;
        const std::uint64_t mask = 1ULL << (col % 64);
        int pivot = -1;
        for (int i = rank; i < n_rows(); ++i) {
            if (dense[i][w] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(dense[rank], dense[pivot]);
        for (int i = rank + 1; i < n_rows(); ++i) {
            if (dense[i][w] & mask) {
                for (int k = w; k < words; ++k) dense[i][k] ^= dense[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

double ParityCheckMatrix::effective_rate() const {
    return 1.0 - static_cast<double>(rank()) / n_cols;
}

void ParityCheckMatrix::validate() const {
    if (n_cols <= 0) throw std::invalid_argument("parity-check matrix has no columns");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.empty())
            throw std::invalid_argument("empty check row " + std::to_string(i));
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (row[k] < 0 || row[k] >= n_cols)
                throw std::invalid_argument("column index out of range in row " +
                                            std::to_string(i));
            if (k > 0 && row[k] <= row[k - 1])
                throw std::invalid_argument("unsorted or duplicate index in row " +
                                            std::to_string(i));
        }
    }
}

Bits syndrome(const ParityCheckMatrix& h, const Bits& x) {
    if (static_cast<int>(x.size()) != h.n_cols)
        throw std::invalid_argument("syndrome: word length does not match code");
    Bits s(h.n_rows(), 0);
    for (int i = 0; i < h.n_rows(); ++i) {
        std::uint8_t acc = 0;
        for (int j : h.rows[i]) acc ^= x[j];
        s[i] = acc;
    }
    return s;
}

ParityCheckMatrix extend_repetition(const RepetitionScheme& scheme) {
    const unsigned m = scheme.m;
    if (m == 0) throw std::domain_error("repetition factor must be >= 1");
    const ParityCheckMatrix& base = scheme.base;
    if (m == 1) return base;

    const int n = base.n_cols;
    ParityCheckMatrix ext;
    ext.n_cols = static_cast<int>(m) * n;
    ext.rows.reserve(static_cast<std::size_t>(m - 1) * n + base.rows.size());
    // equality checks: copy j of block i against the representative
    for (int i = 0; i < n; ++i)
        for (unsigned j = 1; j < m; ++j)
            ext.rows.push_back({i * static_cast<int>(m),
                                i * static_cast<int>(m) + static_cast<int>(j)});
    // base checks on the representatives
    for (const auto& row : base.rows) {
        std::vector<int> mapped;
        mapped.reserve(row.size());
        for (int j : row) mapped.push_back(j * static_cast<int>(m));
        ext.rows.push_back(std::move(mapped));
    }
    return ext;
}

} // namespace recon
