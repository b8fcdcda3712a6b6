#ifndef RECON_CHANNEL_HPP
#define RECON_CHANNEL_HPP

namespace recon {

/// Parameters of one physical link seen as a binary channel.
/// noise_variance * snr == 1 always holds for instances built via from_snr.
struct ChannelParams {
    double snr = 0.0;            // signal-to-noise ratio s > 0
    double crossover = 0.0;      // BSC parameter p in [0, 1/2]
    double noise_variance = 0.0; // per-quadrature Gaussian variance, 1/s

    static ChannelParams from_snr(double s);
};

/// Optical link budget: transmittance T and coherent-state amplitude alpha
/// (shot-noise units).
struct LinkBudget {
    double transmittance = 0.0; // T in [0, 1]
    double amplitude = 0.0;     // alpha >= 0
};

/// h(p) = -p log2 p - (1-p) log2(1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

/// 1 - h(p).
double bsc_capacity(double p);

/// (1/2) log2(1 + s).
double awgn_capacity(double s);

/// Capacity of the binary-input AWGN channel with noise variance 1/s,
/// computed as the differential entropy of the +-1 Gaussian mixture plus
/// (1/2) log2(s / 2*pi*e). Adaptive Gauss-Kronrod quadrature, absolute
/// tolerance 1e-10; throws std::runtime_error if it fails to converge.
double biawgn_capacity(double s);

/// Crossover probability of the BSC induced by sign-discretizing a
/// unit-mean Gaussian observation: p(s) = (1 - erf(sqrt(s/2))) / 2.
double crossover_from_snr(double s);

/// Small-s approximation 1/2 - sqrt(s / 2*pi).
double crossover_approx(double s);

/// Crossover of the BSC obtained by majority-combining m independent
/// BSC(p) outputs: p_m = sum_{l=0}^{floor(m/2)} C(m,l) p^(m-l) (1-p)^l.
/// Ties at even m count fully as errors. Evaluated in log space with
/// compensated summation; stable up to m = 1e6.
double repeated_crossover(double p, unsigned m);

/// s = T * alpha^2 / 2.
double snr_from_link(const LinkBudget& budget);

} // namespace recon

#endif
