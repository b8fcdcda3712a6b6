#include "recon/reconcile.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "recon/channel.hpp"
#include "recon/llr.hpp"
#include "recon/rng.hpp"

namespace recon {
namespace {

constexpr long kTargetFrameErrors = 100; // early-stop threshold

Bits signs_to_bits(const std::vector<std::int8_t>& signs) {
    Bits out(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) out[i] = signs[i] == 1 ? 0 : 1;
    return out;
}

Bits expand_estimate(const Bits& representatives, const Bits& alignment, unsigned m) {
    const std::size_t n = representatives.size();
    Bits full(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        full[i * m] = representatives[i];
        for (unsigned j = 1; j < m; ++j)
            full[i * m + j] = representatives[i] ^ alignment[i * (m - 1) + (j - 1)];
    }
    return full;
}

DecodeResult decode_with(BpDecoder& decoder,
                         const std::vector<std::int8_t>& alice_symbols,
                         const BobMessage& message, const SessionConfig& config) {
    const unsigned m = config.m;
    const std::size_t n = static_cast<std::size_t>(config.code.n_cols);
    if (alice_symbols.size() != n * m)
        throw std::invalid_argument("alice_decode: symbol count mismatch");
    if (message.alignment.size() != (m - 1) * n)
        throw std::invalid_argument("alice_decode: alignment length mismatch");

    LlrVector combined;
    if (config.strategy == Strategy::Sd) {
        if (!message.side_info || message.side_info->size() != n * m)
            throw std::invalid_argument("alice_decode: SD requires |b| side info");
        std::vector<double> y(n * m);
        for (std::size_t i = 0; i < n * m; ++i)
            y[i] = (*message.side_info)[i] * alice_symbols[i];
        combined = combine_repetition_llr(llr_biawgn(y, config.snr),
                                          message.alignment, m);
    } else {
        Bits y(n * m);
        for (std::size_t i = 0; i < n * m; ++i) y[i] = alice_symbols[i] == 1 ? 0 : 1;
        const Bits voted = majority_combine(y, message.alignment, m);
        const double p_m =
            repeated_crossover(crossover_from_snr(config.snr), m);
        combined = llr_bsc(voted, p_m);
    }
    DecodeResult base =
        decoder.decode(combined, message.base_syndrome, config.max_iter);
    base.estimate = expand_estimate(base.estimate, message.alignment, m);
    return base;
}

} // namespace

std::string to_string(Strategy s) { return s == Strategy::Hd ? "hd" : "sd"; }

WilsonInterval wilson_interval(long errors, long trials, double z) {
    if (trials <= 0) throw std::domain_error("wilson_interval: no trials");
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(errors) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::string TrialStats::to_json() const {
    nlohmann::ordered_json j;
    j["frames"] = frames;
    j["frame_errors"] = frame_errors;
    j["fer"] = fer;
    j["fer_ci_low"] = fer_ci.low;
    j["fer_ci_high"] = fer_ci.high;
    j["leak_bits_per_symbol"] = leak_bits_per_symbol;
    j["rate"] = achieved_rate;
    j["beta"] = beta_achieved;
    j["strategy"] = recon::to_string(strategy);
    j["snr"] = snr;
    j["m"] = m;
    j["code_id"] = code_id;
    j["seed"] = seed;
    j["side_info_reals_per_symbol"] = side_info_reals_per_symbol;
    return j.dump(2);
}

BobMessage bob_prepare(const Bits& x, const ParityCheckMatrix& code, unsigned m,
                       std::optional<std::vector<double>> side_info) {
    if (m == 0) throw std::domain_error("repetition factor must be >= 1");
    const std::size_t n = static_cast<std::size_t>(code.n_cols);
    if (x.size() != n * m)
        throw std::invalid_argument("bob_prepare: word length must be m * n");
    BobMessage msg;
    msg.alignment.resize((m - 1) * n);
    Bits representatives(n);
    for (std::size_t i = 0; i < n; ++i) {
        representatives[i] = x[i * m];
        for (unsigned j = 1; j < m; ++j)
            msg.alignment[i * (m - 1) + (j - 1)] = x[i * m] ^ x[i * m + j];
    }
    msg.base_syndrome = syndrome(code, representatives);
    msg.side_info = std::move(side_info);
    return msg;
}

DecodeResult alice_decode(const std::vector<std::int8_t>& alice_symbols,
                          const BobMessage& message, const SessionConfig& config) {
    BpDecoder decoder(config.code);
    return decode_with(decoder, alice_symbols, message, config);
}

std::size_t leakage(std::size_t n_total, std::size_t k) {
    if (k > n_total) throw std::domain_error("leakage: k exceeds n_total");
    return n_total - k;
}

TrialStats run_trials(const SessionConfig& config) {
    if (config.n_frames < 1) throw std::domain_error("run_trials: n_frames must be >= 1");
    if (config.m == 0) throw std::domain_error("run_trials: m must be >= 1");
    if (!(config.snr > 0.0)) throw std::domain_error("run_trials: snr must be positive");
    config.code.validate();

    const std::size_t n = static_cast<std::size_t>(config.code.n_cols);
    const std::size_t nm = n * config.m;
    const std::size_t k = n - static_cast<std::size_t>(config.code.n_rows());
    const std::size_t disclosed_expected = leakage(nm, k);

    BpDecoder decoder(config.code);
    long frames = 0, errors = 0;
    for (long f = 0; f < config.n_frames && errors < kTargetFrameErrors; ++f) {
        const ModulationBatch batch =
            generate_batch(nm, config.snr, derive_seed(config.seed, f));
        BobMessage msg;
        Bits bob_x;
        if (config.strategy == Strategy::Sd) {
            SdTriple trip = reduce_sd(batch);
            bob_x = signs_to_bits(trip.x);
            msg = bob_prepare(bob_x, config.code, config.m,
                              std::move(trip.side_info));
        } else {
            HdPairs pairs = reduce_hd(batch);
            bob_x = std::move(pairs.x);
            msg = bob_prepare(bob_x, config.code, config.m);
        }
        if (msg.disclosed_bits() != disclosed_expected)
            throw std::logic_error("leakage bookkeeping violated");
        const DecodeResult res = decode_with(decoder, batch.a, msg, config);
        ++frames;
        if (!res.converged || res.estimate != bob_x) ++errors;
    }

    TrialStats stats;
    stats.frames = frames;
    stats.frame_errors = errors;
    stats.fer = static_cast<double>(errors) / frames;
    stats.fer_ci = wilson_interval(errors, frames);
    stats.leak_bits_per_symbol = static_cast<double>(disclosed_expected) / nm;
    stats.achieved_rate = static_cast<double>(k) / nm;
    const double capacity = config.strategy == Strategy::Sd
                                ? biawgn_capacity(config.snr)
                                : bsc_capacity(crossover_from_snr(config.snr));
    stats.beta_achieved = stats.achieved_rate / capacity;
    stats.side_info_reals_per_symbol =
        config.strategy == Strategy::Sd ? 1.0 : 0.0;
    stats.strategy = config.strategy;
    stats.snr = config.snr;
    stats.m = config.m;
    stats.code_id = config.code_id;
    stats.seed = config.seed;
    return stats;
}

} // namespace recon
