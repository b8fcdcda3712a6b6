#include "recon/channel.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace recon {
namespace {

// 15-point Gauss-Kronrod pair on [-1, 1]: nodes and weights (Kronrod), plus
// the embedded 7-point Gauss weights for the error estimate.
constexpr double kGkNode[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01};
constexpr double kKronrodW[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02};
constexpr double kGaussW[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01};

struct GkEstimate {
    double integral;
    double error;
};

template <typename F>
GkEstimate gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    const double fc = f(c);
    double kron = kKronrodW[0] * fc;
    double gauss = kGaussW[0] * fc;
    for (int i = 1; i < 8; ++i) {
        const double dx = hw * kGkNode[i];
        const double fsum = f(c - dx) + f(c + dx);
        kron += kKronrodW[i] * fsum;
        if (i % 2 == 0) gauss += kGaussW[i / 2] * fsum;
    }
    kron *= hw;
    gauss *= hw;
    return {kron, std::fabs(kron - gauss)};
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double abs_tol, int depth) {
    GkEstimate e = gk15(f, a, b);
    if (e.error <= abs_tol || b - a < 1e-14 * (std::fabs(a) + std::fabs(b))) {
        if (depth == 0 && e.error > abs_tol) {
            char msg[160];
            std::snprintf(msg, sizeof msg,
                          "quadrature failed to converge on [%g, %g]: "
                          "error estimate %g exceeds tolerance %g",
                          a, b, e.error, abs_tol);
            throw std::runtime_error(msg);
        }
        return e.integral;
    }
    if (depth == 0) {
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "quadrature recursion limit reached on [%g, %g], "
                      "error estimate %g",
                      a, b, e.error);
        throw std::runtime_error(msg);
    }
    const double c = 0.5 * (a + b);
    return adaptive_gk(f, a, c, 0.5 * abs_tol, depth - 1) +
           adaptive_gk(f, c, b, 0.5 * abs_tol, depth - 1);
}

constexpr double kLog2e = 1.4426950408889634073599246810019;

} // namespace

ChannelParams ChannelParams::from_snr(double s) {
    if (!(s > 0.0)) throw std::domain_error("snr must be positive");
    return {s, crossover_from_snr(s), 1.0 / s};
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("p must be in [0, 1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -(p * std::log2(p) + (1.0 - p) * std::log2(1.0 - p));
}

double bsc_capacity(double p) { return 1.0 - binary_entropy(p); }

double awgn_capacity(double s) {
    if (!(s >= 0.0)) throw std::domain_error("snr must be nonnegative");
    return 0.5 * std::log2(1.0 + s);
}

double biawgn_capacity(double s) {
    if (!(s > 0.0)) throw std::domain_error("snr must be positive");
    // phi_s(x) = sqrt(s/8pi) (exp(-s(x+1)^2/2) + exp(-s(x-1)^2/2)), symmetric.
    const double norm = std::sqrt(s / (8.0 * M_PI));
    auto integrand = [s, norm](double x) {
        // evaluated via the larger exponent to avoid underflow of both terms
        const double e1 = -0.5 * s * (x + 1.0) * (x + 1.0);
        const double e2 = -0.5 * s * (x - 1.0) * (x - 1.0);
        const double emax = std::max(e1, e2);
        const double sum = std::exp(e1 - emax) + std::exp(e2 - emax);
        const double phi = norm * std::exp(emax) * sum;
        if (phi <= 0.0) return 0.0;
        const double log2phi = (std::log(norm) + emax + std::log(sum)) * kLog2e;
        return -phi * log2phi;
    };
    const double hi = 1.0 + 12.0 / std::sqrt(s);
    const double h_y =
        2.0 * adaptive_gk(integrand, 0.0, hi, 0.5e-10, 48); // symmetric in x
    return h_y + 0.5 * std::log2(s / (2.0 * M_PI * M_E));
}

double crossover_from_snr(double s) {
    if (!(s > 0.0)) throw std::domain_error("snr must be positive");
    return 0.5 * std::erfc(std::sqrt(0.5 * s));
}

double crossover_approx(double s) {
    if (!(s > 0.0)) throw std::domain_error("snr must be positive");
    return 0.5 - std::sqrt(s / (2.0 * M_PI));
}

double repeated_crossover(double p, unsigned m) {
    if (m == 0) throw std::domain_error("m must be >= 1");
    if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("p must be in [0, 1/2]");
    if (p == 0.0) return 0.0;
    if (m == 1) return p;
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    // sum_{l=0}^{floor(m/2)} C(m,l) p^(m-l) (1-p)^l, terms in log space,
    // Kahan-summed from the smallest terms up.
    double sum = 0.0, comp = 0.0;
    for (unsigned l = 0; l <= m / 2; ++l) {
        const double logc = std::lgamma(m + 1.0) - std::lgamma(l + 1.0) -
                            std::lgamma(m - l + 1.0);
        const double term = std::exp(logc + (m - l) * lp + l * lq);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // the ties-as-errors summation can legitimately exceed 1/2 at even m;
    // only guard against rounding past the trivial upper bound
    return std::min(sum, 1.0);
}

double snr_from_link(const LinkBudget& budget) {
    if (!(budget.transmittance >= 0.0 && budget.transmittance <= 1.0))
        throw std::domain_error("transmittance must be in [0, 1]");
    if (!(budget.amplitude >= 0.0))
        throw std::domain_error("amplitude must be nonnegative");
    return 0.5 * budget.transmittance * budget.amplitude * budget.amplitude;
}

} // namespace recon
