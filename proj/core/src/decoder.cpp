#include "recon/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recon {
namespace {

constexpr double kMsgClip = 30.0;

double clip(double v) { return std::clamp(v, -kMsgClip, kMsgClip); }

} // namespace

BpDecoder::BpDecoder(const ParityCheckMatrix& h) : n_(h.n_cols), r_(h.n_rows()) {
    h.validate();
    row_ptr_.reserve(r_ + 1);
    row_ptr_.push_back(0);
    for (const auto& row : h.rows) {
        col_of_.insert(col_of_.end(), row.begin(), row.end());
        row_ptr_.push_back(static_cast<int>(col_of_.size()));
    }
    const int n_edges = static_cast<int>(col_of_.size());
    std::vector<int> deg(n_, 0);
    for (int c : col_of_) ++deg[c];
    var_ptr_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) var_ptr_[v + 1] = var_ptr_[v] + deg[v];
    var_edges_.resize(n_edges);
    std::vector<int> fill(var_ptr_.begin(), var_ptr_.end() - 1);
    for (int e = 0; e < n_edges; ++e) var_edges_[fill[col_of_[e]]++] = e;

    c2v_.assign(n_edges, 0.0);
    v2c_.assign(n_edges, 0.0);
    posterior_.assign(n_, 0.0);
    hard_.assign(n_, 0);
    synd_.assign(r_, 0);
}

DecodeResult BpDecoder::decode(const LlrVector& llr, const Bits& target_syndrome,
                               int max_iter) {
    if (static_cast<int>(llr.size()) != n_)
        throw std::invalid_argument("bp_decode_coset: LLR length mismatch");
    if (static_cast<int>(target_syndrome.size()) != r_)
        throw std::invalid_argument("bp_decode_coset: syndrome length mismatch");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

    auto syndrome_matches = [&]() {
        for (int i = 0; i < r_; ++i) {
            std::uint8_t acc = 0;
            for (int e = row_ptr_[i]; e < row_ptr_[i + 1]; ++e) acc ^= hard_[col_of_[e]];
            if (acc != target_syndrome[i]) return false;
        }
        return true;
    };

    for (int v = 0; v < n_; ++v) hard_[v] = llr[v] < 0.0 ? 1 : 0;
    if (syndrome_matches()) return {hard_, true, 0};

    const int n_edges = static_cast<int>(col_of_.size());
    for (int e = 0; e < n_edges; ++e) v2c_[e] = clip(llr[col_of_[e]]);

    std::size_t max_deg = 0;
    for (int i = 0; i < r_; ++i)
        max_deg = std::max<std::size_t>(max_deg, row_ptr_[i + 1] - row_ptr_[i]);
    std::vector<double> fwd(max_deg), bwd(max_deg);

    for (int iter = 1; iter <= max_iter; ++iter) {
        // check pass: extrinsic tanh products, sign flipped by the syndrome bit
        for (int i = 0; i < r_; ++i) {
            const int lo = row_ptr_[i];
            const int deg = row_ptr_[i + 1] - lo;
            const double flip = target_syndrome[i] ? -1.0 : 1.0;
            for (int k = 0; k < deg; ++k) fwd[k] = std::tanh(0.5 * v2c_[lo + k]);
            double acc = 1.0;
            for (int k = deg - 1; k >= 0; --k) {
                bwd[k] = acc;
                acc *= fwd[k];
            }
            acc = 1.0;
            for (int k = 0; k < deg; ++k) {
                const double prod = acc * bwd[k];
                acc *= fwd[k];
                c2v_[lo + k] = clip(2.0 * std::atanh(flip * prod));
            }
        }
        // variable pass
        for (int v = 0; v < n_; ++v) {
            double sum = llr[v];
            for (int k = var_ptr_[v]; k < var_ptr_[v + 1]; ++k) sum += c2v_[var_edges_[k]];
            posterior_[v] = sum;
            hard_[v] = sum < 0.0 ? 1 : 0;
            for (int k = var_ptr_[v]; k < var_ptr_[v + 1]; ++k) {
                const int e = var_edges_[k];
                v2c_[e] = clip(sum - c2v_[e]);
            }
        }
        if (syndrome_matches()) return {hard_, true, iter};
    }
    return {hard_, false, max_iter};
}

DecodeResult bp_decode_coset(const ParityCheckMatrix& h, const LlrVector& llr,
                             const Bits& target_syndrome, int max_iter) {
    BpDecoder dec(h);
    return dec.decode(llr, target_syndrome, max_iter);
}

Bits ml_decode_coset_bruteforce(const ParityCheckMatrix& h, const LlrVector& llr,
                                const Bits& target_syndrome) {
    const int n = h.n_cols;
    if (n > 24)
        throw std::length_error("ml_decode_coset_bruteforce: block length exceeds 24");
    if (static_cast<int>(llr.size()) != n)
        throw std::invalid_argument("LLR length mismatch");
    if (static_cast<int>(target_syndrome.size()) != h.n_rows())
        throw std::invalid_argument("syndrome length mismatch");

    const int r = h.n_rows();
    std::vector<std::uint32_t> row_mask(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j : h.rows[i]) row_mask[i] |= 1u << j;
    std::uint32_t target = 0;
    for (int i = 0; i < r; ++i)
        if (target_syndrome[i]) target |= 1u << i;

    auto lex_less = [n](std::uint32_t a, std::uint32_t b) {
        for (int j = 0; j < n; ++j) {
            const std::uint32_t ba = (a >> j) & 1u, bb = (b >> j) & 1u;
            if (ba != bb) return ba < bb;
        }
        return false;
    };

    bool found = false;
    double best_score = 0.0;
    std::uint32_t best = 0;
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
        std::uint32_t s = 0;
        for (int i = 0; i < r; ++i)
            s |= static_cast<std::uint32_t>(__builtin_popcount(x & row_mask[i]) & 1) << i;
        if (s != target) continue;
        double score = 0.0;
        for (int j = 0; j < n; ++j) score += ((x >> j) & 1u) ? -llr[j] : llr[j];
        if (!found || score > best_score ||
            (score == best_score && lex_less(x, best))) {
            found = true;
            best_score = score;
            best = x;
        }
    }
    if (!found)
        throw std::invalid_argument("target syndrome not in the row space image");
    Bits out(n);
    for (int j = 0; j < n; ++j) out[j] = (best >> j) & 1u;
    return out;
}

} // namespace recon
