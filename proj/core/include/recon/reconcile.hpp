#ifndef RECON_RECONCILE_HPP
#define RECON_RECONCILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recon/code.hpp"
#include "recon/decoder.hpp"
#include "recon/source.hpp"
#include "recon/types.hpp"

namespace recon {

enum class Strategy { Hd, Sd };

std::string to_string(Strategy s);

struct SessionConfig {
    Strategy strategy = Strategy::Sd;
    ParityCheckMatrix code;
    std::string code_id;
    unsigned m = 1;
    double snr = 0.0;
    long n_frames = 0;
    int max_iter = 200;
    std::uint64_t seed = 0;
};

/// Bob's public reverse-reconciliation disclosure. disclosed_bits() is
/// r + (m-1)*n = total length - k, the leakage of one frame. The SD
/// side-information reals are metered separately and never counted here.
struct BobMessage {
    Bits base_syndrome;            // length r
    Bits alignment;                // length (m-1)*n
    std::optional<std::vector<double>> side_info; // |b| values, SD only

    std::size_t disclosed_bits() const {
        return base_syndrome.size() + alignment.size();
    }
};

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

/// 95% by default (z = 1.959964).
WilsonInterval wilson_interval(long errors, long trials, double z = 1.959964);

struct TrialStats {
    long frames = 0;
    long frame_errors = 0;
    double fer = 0.0;
    WilsonInterval fer_ci;
    double leak_bits_per_symbol = 0.0;
    double achieved_rate = 0.0; // k / (n*m)
    double beta_achieved = 0.0; // achieved_rate / capacity at snr
    double side_info_reals_per_symbol = 0.0; // SD: 1.0, HD: 0.0
    // echo of the config
    Strategy strategy = Strategy::Sd;
    double snr = 0.0;
    unsigned m = 1;
    std::string code_id;
    std::uint64_t seed = 0;

    std::string to_json() const;
};

/// Bob's disclosure for the repetition-extended word x (bits, layout as in
/// extend_repetition): alignment_{i,j} = x_{i,0} ^ x_{i,j}, base syndrome on
/// the representatives.
BobMessage bob_prepare(const Bits& x, const ParityCheckMatrix& code, unsigned m,
                       std::optional<std::vector<double>> side_info = {});

/// Alice's side of the protocol. alice_symbols are her +-1 values a, length
/// m * n. SD uses the |b| side information from the message; HD majority-
/// combines her hard bits. Returns the full-length (m*n) estimate of Bob's X.
DecodeResult alice_decode(const std::vector<std::int8_t>& alice_symbols,
                          const BobMessage& message, const SessionConfig& config);

/// n_total - k; throws if k > n_total.
std::size_t leakage(std::size_t n_total, std::size_t k);

/// Monte-Carlo FER campaign over config.n_frames frames (early stop once 100
/// frame errors are seen). A frame is an error when the decoder fails to
/// converge or any estimated bit differs from Bob's X. Frame f uses the RNG
/// stream (seed, f), so results are reproducible and independent of frame
/// execution order.
TrialStats run_trials(const SessionConfig& config);

} // namespace recon

#endif
