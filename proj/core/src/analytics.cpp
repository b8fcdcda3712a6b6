#include "recon/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "recon/channel.hpp"

namespace recon {

EfficiencyReport efficiency(double rate, double capacity, std::string context) {
    if (!(capacity > 0.0)) throw std::domain_error("efficiency: capacity must be positive");
    if (!(rate >= 0.0)) throw std::domain_error("efficiency: rate must be nonnegative");
    EfficiencyReport rep;
    rep.capacity = capacity;
    rep.rate = rate;
    rep.beta = rate / capacity;
    rep.delta_rec = capacity - rate;
    rep.context = std::move(context);
    return rep;
}

double repetition_efficiency_ratio(double p, unsigned m) {
    if (!(p > 0.0 && p < 0.5))
        throw std::domain_error("repetition_efficiency_ratio: p must be in (0, 1/2)");
    if (m == 0) throw std::domain_error("m must be >= 1");
    // At small even m near p = 1/2 the ties-as-errors crossover exceeds 1/2;
    // the scheme's decision rule is then wrong more often than right, so its
    // usable capacity is zero. Clamp rather than credit h(p_m)'s rebound.
    const double p_m = std::min(repeated_crossover(p, m), 0.5);
    return bsc_capacity(p_m) / (m * bsc_capacity(p));
}

double sd_repetition_efficiency(double rate, double s, unsigned m) {
    if (!(rate > 0.0)) throw std::domain_error("rate must be positive");
    if (m == 0) throw std::domain_error("m must be >= 1");
    return (rate / m) / biawgn_capacity(s / m);
}

std::vector<RatioCurve> figure1_data(const std::vector<unsigned>& m_list,
                                     int grid_points, double p_min, double p_max) {
    if (m_list.empty()) throw std::domain_error("figure1_data: empty m list");
    if (grid_points < 2 || !(p_min > 0.0) || !(p_max < 0.5) || !(p_min < p_max))
        throw std::domain_error("figure1_data: degenerate grid");
    std::vector<RatioCurve> curves;
    curves.reserve(m_list.size());
    for (unsigned m : m_list) {
        RatioCurve curve;
        curve.m = m;
        curve.points.reserve(grid_points);
        for (int i = 0; i < grid_points; ++i) {
            const double p =
                p_min + (p_max - p_min) * i / static_cast<double>(grid_points - 1);
            curve.points.emplace_back(p, repetition_efficiency_ratio(p, m));
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

std::string figure1_csv(const std::vector<RatioCurve>& curves) {
    std::ostringstream out;
    out << "m,p,ratio\n";
    char buf[64];
    for (const auto& curve : curves) {
        for (const auto& [p, ratio] : curve.points) {
            std::snprintf(buf, sizeof buf, "%u,%.12g,%.12g\n", curve.m, p, ratio);
            out << buf;
        }
    }
    return out.str();
}

KeyRatePenalty key_rate_penalty(double capacity, double rate,
                                std::optional<double> k_ideal) {
    const EfficiencyReport rep = efficiency(rate, capacity);
    KeyRatePenalty penalty;
    penalty.delta_rec = rep.delta_rec;
    if (k_ideal) penalty.key_rate = *k_ideal - rep.delta_rec;
    return penalty;
}

std::vector<ReportRow> paper_report(double tolerance_scale) {
    if (!(tolerance_scale > 0.0))
        throw std::domain_error("tolerance_scale must be positive");
    std::vector<ReportRow> rows;
    auto abs_row = [&](std::string name, double computed, double expected, double tol) {
        tol *= tolerance_scale;
        rows.push_back({std::move(name), computed, expected, tol,
                        std::fabs(computed - expected) <= tol});
    };
    auto bound_row = [&](std::string name, double computed, double bound) {
        rows.push_back({std::move(name), computed, bound, -1.0, computed >= bound});
    };

    abs_row("p(0.001)", crossover_from_snr(0.001), 0.487, 1e-3);
    abs_row("s(T=0.01, alpha=0.4)", snr_from_link({0.01, 0.4}), 8e-4, 1e-12);
    abs_row("beta(0.17)", 0.1 / biawgn_capacity(0.17), 0.88, 1e-2);
    abs_row("p_m(0.48, 1000)", repeated_crossover(0.48, 1000), 0.10, 1e-2);
    abs_row("ratio(0.48, 1000)", repetition_efficiency_ratio(0.48, 1000), 0.45, 2e-2);
    abs_row("ratio(0.48, 440)", repetition_efficiency_ratio(0.48, 440), 0.55, 2e-2);
    double min_eff = 1.0;
    for (unsigned m = 1; m <= 1000; ++m)
        min_eff = std::min(min_eff, sd_repetition_efficiency(0.1, 0.17, m));
    bound_row("min_m sd_eff(0.1, 0.17, m<=1000)", min_eff, 0.8);
    return rows;
}

std::string report_table(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    char buf[256];
    out << "quantity                             computed      reference    tolerance  status\n";
    for (const auto& row : rows) {
        if (row.tol >= 0.0)
            std::snprintf(buf, sizeof buf, "%-34s %12.6g %12.6g  +-%-9.3g %s\n",
                          row.name.c_str(), row.computed, row.expected, row.tol,
                          row.pass ? "pass" : "FAIL");
        else
            std::snprintf(buf, sizeof buf, "%-34s %12.6g %12.6g  >=bound     %s\n",
                          row.name.c_str(), row.computed, row.expected,
                          row.pass ? "pass" : "FAIL");
        out << buf;
    }
    return out.str();
}

std::string report_json(const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json j;
        j["name"] = row.name;
        j["computed"] = row.computed;
        j["reference"] = row.expected;
        j["kind"] = row.tol >= 0.0 ? "abs" : "lower_bound";
        if (row.tol >= 0.0) j["tolerance"] = row.tol;
        j["pass"] = row.pass;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

} // namespace recon
