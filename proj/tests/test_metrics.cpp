#include "doctest.h"

#include "mdms/metrics.hpp"
#include "mdms/processes.hpp"
#include "mdms/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace mdms;

namespace {

RunRecord make_record(int t_nc, std::optional<double> t_s,
                      bool censored = false) {
    RunRecord r;
    r.t_nc = t_nc;
    r.t_s = t_s;
    r.censored = censored;
    return r;
}

}  // namespace

TEST_CASE("aggregate averages counts and completion times") {
    std::vector<RunRecord> recs{make_record(4, 4200.0), make_record(5, 3800.0)};
    const Summary s = aggregate(recs);
    CHECK(s.runs == 2);
    CHECK(s.mean_t_nc == doctest::Approx(4.5));
    CHECK(s.sd_t_nc == doctest::Approx(std::sqrt(0.5)));
    CHECK(s.censored == 0);
    REQUIRE(s.t_s_defined);
    CHECK(s.mean_t_s == doctest::Approx(4000.0));
    CHECK(s.sd_t_s == doctest::Approx(std::sqrt(2.0 * 200.0 * 200.0)));
}

TEST_CASE("censored runs are excluded from completion moments but counted") {
    std::vector<RunRecord> recs{make_record(4, 4000.0),
                                make_record(2, std::nullopt, true),
                                make_record(5, 5000.0)};
    const Summary s = aggregate(recs);
    CHECK(s.runs == 3);
    CHECK(s.censored == 1);
    CHECK(s.mean_t_nc == doctest::Approx(11.0 / 3.0));
    REQUIRE(s.t_s_defined);
    CHECK(s.mean_t_s == doctest::Approx(4500.0));
}

TEST_CASE("an all-censored batch leaves completion undefined") {
    std::vector<RunRecord> recs{make_record(1, std::nullopt, true),
                                make_record(0, std::nullopt, true)};
    const Summary s = aggregate(recs);
    CHECK(s.censored == 2);
    CHECK_FALSE(s.t_s_defined);
}

TEST_CASE("aggregate rejects an empty batch") {
    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("aggregate recovers the moments of a synthetic population") {
    RngStream rng(61, 0);
    std::vector<RunRecord> recs;
    recs.reserve(1000);
    for (int i = 0; i < 1000; ++i)
        recs.push_back(
            make_record(5, 4.658 + sample_gaussian(rng, 1.396)));
    const Summary s = aggregate(recs);
    CHECK(std::abs(s.mean_t_s - 4.658) < 0.15);
    CHECK(std::abs(s.sd_t_s - 1.396) < 0.15);
}

TEST_CASE("efficiency improvement uses the baseline as denominator") {
    CHECK(aise(4.658, 4.086) == doctest::Approx(13.999).epsilon(1e-3));
    CHECK(aise_alt(4.658, 4.086) == doctest::Approx(12.279).epsilon(1e-3));
    CHECK(aise(4.0, 4.0) == 0.0);
    CHECK(aise(3.5, 4.0) < 0.0);
    CHECK_THROWS_AS(aise(4.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(aise_alt(0.0, 4.0), std::domain_error);
}

TEST_CASE("completion improvement is positive when the candidate is faster") {
    CHECK(aisc(7879.0, 4001.0) == doctest::Approx(49.2).epsilon(1e-3));
    CHECK(aisc(4000.0, 4000.0) == 0.0);
    CHECK(aisc(4000.0, 5000.0) < 0.0);
    CHECK_THROWS_AS(aisc(0.0, 4000.0), std::domain_error);
}

TEST_CASE("the single-sensor coverage law matches its closed form") {
    // 2 r v t / A = 2 * 400 * 20 * 1000 / 4e8 = 0.04.
    CHECK(analytic_pcs(1000.0, 400.0, 20.0, 4e8) ==
          doctest::Approx(1.0 - std::exp(-0.04)));
    CHECK(analytic_pcs(1000.0, 400.0, 20.0, 4e8) ==
          doctest::Approx(0.0392).epsilon(1e-2));
    CHECK(analytic_pcs(0.0, 400.0, 20.0, 4e8) == 0.0);
    CHECK(analytic_pcs(1e12, 400.0, 20.0, 4e8) == doctest::Approx(1.0));

    // Monotone in t.
    double prev = -1.0;
    for (double t = 0.0; t <= 5000.0; t += 250.0) {
        const double p = analytic_pcs(t, 400.0, 20.0, 4e8);
        CHECK(p > prev);
        prev = p;
    }
    CHECK_THROWS_AS(analytic_pcs(-1.0, 400.0, 20.0, 4e8), std::domain_error);
    CHECK_THROWS_AS(analytic_pcs(1.0, 0.0, 20.0, 4e8), std::domain_error);
}

TEST_CASE("the multi-sensor law joins continuously and then dominates") {
    const double r = 400.0, v = 20.0, area = 4e8;
    const double area_prev = std::numbers::pi * 2000.0 * 2000.0;

    // At the detection instant both laws agree.
    for (double t_d : {100.0, 1000.0, 3000.0})
        CHECK(analytic_pcm(t_d, t_d, r, v, area, area_prev) ==
              doctest::Approx(analytic_pcs(t_d, r, v, area)));

    // Equal areas collapse the two laws entirely.
    CHECK(analytic_pcm(2000.0, 500.0, r, v, area, area) ==
          doctest::Approx(analytic_pcs(2000.0, r, v, area)));

    // After detection the shrunken search area can only help.
    int violations = 0;
    for (int i = 1; i <= 100; ++i) {
        const double t = 50.0 * i;
        for (int j = 1; j <= 100; ++j) {
            const double t_d = t * j / 100.0;
            const double pcm = analytic_pcm(t, t_d, r, v, area, area_prev);
            const double pcs = analytic_pcs(t, r, v, area);
            if (pcm < pcs) ++violations;
            if (pcm > 1.0 || pcm < 0.0) ++violations;
        }
    }
    CHECK(violations == 0);

    CHECK_THROWS_AS(analytic_pcm(100.0, 200.0, r, v, area, area_prev),
                    std::domain_error);
    CHECK_THROWS_AS(analytic_pcm(100.0, 50.0, r, v, area, 0.0),
                    std::domain_error);
}

TEST_CASE("five-number summaries interpolate between order statistics") {
    const FiveNumber a = five_number({3.0, 1.0, 5.0, 2.0, 4.0});
    CHECK(a.min == 1.0);
    CHECK(a.q1 == 2.0);
    CHECK(a.median == 3.0);
    CHECK(a.q3 == 4.0);
    CHECK(a.max == 5.0);

    const FiveNumber b = five_number({1.0, 2.0, 3.0, 4.0});
    CHECK(b.q1 == doctest::Approx(1.75));
    CHECK(b.median == doctest::Approx(2.5));
    CHECK(b.q3 == doctest::Approx(3.25));

    const FiveNumber c = five_number({7.0});
    CHECK(c.min == 7.0);
    CHECK(c.q1 == 7.0);
    CHECK(c.median == 7.0);
    CHECK(c.q3 == 7.0);
    CHECK(c.max == 7.0);

    CHECK_THROWS_AS(five_number({}), std::invalid_argument);
}
