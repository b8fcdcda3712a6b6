#ifndef RECON_ANALYTICS_HPP
#define RECON_ANALYTICS_HPP

#include <optional>
#include <string>
#include <vector>

namespace recon {

struct EfficiencyReport {
    double capacity = 0.0;
    double rate = 0.0;
    double beta = 0.0;      // rate / capacity
    double delta_rec = 0.0; // capacity - rate
    std::string context;    // e.g. "BSC(p)" or "BIAWGN(s)"
};

EfficiencyReport efficiency(double rate, double capacity, std::string context = {});

/// Efficiency loss of m-fold repetition on a BSC(p):
/// beta(p)/beta(p_m) = (1/m) * (1 - h(p_m)) / (1 - h(p)).
double repetition_efficiency_ratio(double p, unsigned m);

/// (rate/m) / C_biawgn(s/m): efficiency of the m-fold repetition of a
/// rate-`rate` code used at SNR s/m.
double sd_repetition_efficiency(double rate, double s, unsigned m);

struct RatioCurve {
    unsigned m = 1;
    std::vector<std::pair<double, double>> points; // (p, ratio)
};

inline const std::vector<unsigned> kDefaultCurveMs = {3, 5, 7, 9, 11, 101, 1001};

/// One efficiency-loss curve per m, sampled on grid_points uniform p values
/// over [p_min, p_max].
std::vector<RatioCurve> figure1_data(
    const std::vector<unsigned>& m_list = kDefaultCurveMs, int grid_points = 200,
    double p_min = 0.01, double p_max = 0.49);

/// CSV with header "m,p,ratio", 12 significant digits.
std::string figure1_csv(const std::vector<RatioCurve>& curves);

struct KeyRatePenalty {
    double delta_rec = 0.0;
    std::optional<double> key_rate; // k_ideal - delta_rec, when k_ideal given
};

KeyRatePenalty key_rate_penalty(double capacity, double rate,
                                std::optional<double> k_ideal = {});

/// One reference-value check: |computed - expected| <= tol, or
/// computed >= expected for lower-bound rows (tol < 0 marks those).
struct ReportRow {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tol = 0.0; // negative: lower-bound row, pass iff computed >= expected
    bool pass = false;
};

/// Recomputes the headline numeric claims and flags each against its
/// reference value. tolerance_scale shrinks every tolerance (testing hook).
std::vector<ReportRow> paper_report(double tolerance_scale = 1.0);

std::string report_table(const std::vector<ReportRow>& rows);
std::string report_json(const std::vector<ReportRow>& rows);

} // namespace recon

#endif
