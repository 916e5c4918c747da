#pragma once

#include "mdms/mission.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mdms {

/// Sample statistics over a batch of runs. Completion-time moments are
/// taken over uncensored runs only; `censored` reports how many were
/// dropped. `t_s_defined` is false when every run was censored or none
/// carried a completion time.
struct Summary {
    std::size_t runs = 0;
    double mean_t_nc = 0.0;
    double sd_t_nc = 0.0;
    std::size_t censored = 0;
    bool t_s_defined = false;
    double mean_t_s = 0.0;
    double sd_t_s = 0.0;
};

Summary aggregate(std::span<const RunRecord> records);

/// Percentage improvement in mean targets confirmed, positive when the
/// candidate beats the baseline: (cand - base) / base * 100.
double aise(double mean_candidate, double mean_baseline);

/// Alternate efficiency convention normalizing by the candidate instead:
/// (cand - base) / cand * 100. Reported alongside aise.
double aise_alt(double mean_candidate, double mean_baseline);

/// Percentage improvement in mean completion time, positive when the
/// candidate finishes sooner: (base - cand) / base * 100.
double aisc(double mean_ts_baseline, double mean_ts_candidate);

/// Probability that a single UAV doing idealized random search with a
/// confirmation sensor of radius r_n over area A has confirmed a given
/// target by time t: 1 - exp(-2 r_n V t / A).
double analytic_pcs(double t, double r_n, double v, double area);

/// Same probability for the multi-sensor searcher: detection at time t_d
/// shrinks the effective area to the localization disk of the previous
/// level, area_prev, from t_d onward.
double analytic_pcm(double t, double t_d, double r_n, double v, double area,
                    double area_prev);

/// (min, Q1, median, Q3, max) with linear interpolation between order
/// statistics; the box-plot statistic.
struct FiveNumber {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

FiveNumber five_number(std::vector<double> values);

}  // namespace mdms
