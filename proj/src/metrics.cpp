#include "mdms/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mdms {
namespace {

struct Moments {
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    m.n = xs.size();
    if (m.n == 0) return m;
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(m.n);
    if (m.n > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - m.mean) * (x - m.mean);
        m.sd = std::sqrt(ss / static_cast<double>(m.n - 1));
    }
    return m;
}

}  // namespace

Summary aggregate(std::span<const RunRecord> records) {
    if (records.empty())
        throw std::invalid_argument("aggregate: no records");
    std::vector<double> nc;
    std::vector<double> ts;
    nc.reserve(records.size());
    std::size_t censored = 0;
    for (const auto& r : records) {
        nc.push_back(static_cast<double>(r.t_nc));
        if (r.censored)
            ++censored;
        else if (r.t_s)
            ts.push_back(*r.t_s);
    }
    Summary s;
    s.runs = records.size();
    s.censored = censored;
    const Moments mnc = moments(nc);
    s.mean_t_nc = mnc.mean;
    s.sd_t_nc = mnc.sd;
    if (!ts.empty()) {
        const Moments mts = moments(ts);
        s.t_s_defined = true;
        s.mean_t_s = mts.mean;
        s.sd_t_s = mts.sd;
    }
    return s;
}

double aise(double mean_candidate, double mean_baseline) {
    if (!(mean_baseline > 0.0))
        throw std::domain_error("aise: baseline mean must be positive");
    return (mean_candidate - mean_baseline) / mean_baseline * 100.0;
}

double aise_alt(double mean_candidate, double mean_baseline) {
    if (!(mean_candidate > 0.0))
        throw std::domain_error("aise_alt: candidate mean must be positive");
    return (mean_candidate - mean_baseline) / mean_candidate * 100.0;
}

double aisc(double mean_ts_baseline, double mean_ts_candidate) {
    if (!(mean_ts_baseline > 0.0))
        throw std::domain_error("aisc: baseline mean must be positive");
    return (mean_ts_baseline - mean_ts_candidate) / mean_ts_baseline * 100.0;
}

double analytic_pcs(double t, double r_n, double v, double area) {
    if (t < 0.0) throw std::domain_error("analytic_pcs: t must be >= 0");
    if (!(r_n > 0.0) || !(v > 0.0) || !(area > 0.0))
        throw std::domain_error("analytic_pcs: parameters must be positive");
    return 1.0 - std::exp(-2.0 * r_n * v * t / area);
}

double analytic_pcm(double t, double t_d, double r_n, double v, double area,
                    double area_prev) {
    if (t_d < 0.0 || t < t_d)
        throw std::domain_error("analytic_pcm: need 0 <= t_d <= t");
    if (!(area_prev > 0.0))
        throw std::domain_error("analytic_pcm: disk area must be positive");
    const double at_detection = analytic_pcs(t_d, r_n, v, area);
    return 1.0 -
           (1.0 - at_detection) * std::exp(-2.0 * r_n * v * (t - t_d) / area_prev);
}

FiveNumber five_number(std::vector<double> values) {
    if (values.empty())
        throw std::invalid_argument("five_number: no values");
    std::sort(values.begin(), values.end());
    const auto quantile = [&](double q) {
        const double pos = q * static_cast<double>(values.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const double frac = pos - static_cast<double>(lo);
        if (lo + 1 >= values.size()) return values.back();
        return values[lo] + frac * (values[lo + 1] - values[lo]);
    };
    return FiveNumber{values.front(), quantile(0.25), quantile(0.5),
                      quantile(0.75), values.back()};
}

}  // namespace mdms
