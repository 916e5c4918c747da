#include "doctest.h"

#include "mdms/scenarios.hpp"
#include "mdms/sensing.hpp"

#include <stdexcept>
#include <vector>

using namespace mdms;

namespace {

const Region kRegion{20000.0, 20000.0};

World single_target_world(const Vec2& pos, TargetKind kind = TargetKind::Fixed) {
    std::vector<TargetSpec> targets{{0, kind, pos}};
    return World(kRegion, std::move(targets));
}

}  // namespace

TEST_CASE("detection is strict at the radius boundary") {
    World in = single_target_world({1999.0, 0.0});
    CHECK(detect_any(in, 0.0, {0.0, 0.0}, 2000.0));

    World at = single_target_world({2000.0, 0.0});
    CHECK_FALSE(detect_any(at, 0.0, {0.0, 0.0}, 2000.0));
}

TEST_CASE("detection is monotone in radius") {
    World world = single_target_world({1500.0, 0.0});
    CHECK_FALSE(detect_any(world, 0.0, {0.0, 0.0}, 1400.0));
    CHECK(detect_any(world, 0.0, {0.0, 0.0}, 1600.0));
    CHECK(detect_any(world, 0.0, {0.0, 0.0}, 2000.0));
    CHECK(detect_any(world, 0.0, {0.0, 0.0}, 10000.0));
}

TEST_CASE("false targets fire the detector but never confirm") {
    World world = single_target_world({100.0, 0.0}, TargetKind::False);
    CHECK(detect_any(world, 0.0, {0.0, 0.0}, 2000.0));
    CHECK_FALSE(nearest_confirmable(world, 0.0, {0.0, 0.0}, 400.0).has_value());
    CHECK(signal_strength(world, 0.0, {0.0, 0.0}) > 0.0);
}

TEST_CASE("confirmation is strict at the radius and picks the nearest target") {
    std::vector<TargetSpec> targets{
        {0, TargetKind::Fixed, {1300.0, 1000.0}},   // 300 m out
        {1, TargetKind::Fixed, {1100.0, 1000.0}}};  // 100 m out
    World world(kRegion, std::move(targets));
    const Vec2 pos{1000.0, 1000.0};

    CHECK(nearest_confirmable(world, 0.0, pos, 400.0) == 1);
    CHECK_FALSE(nearest_confirmable(world, 0.0, pos, 100.0).has_value());
    CHECK(nearest_confirmable(world, 0.0, pos, 101.0) == 1);
}

TEST_CASE("equidistant targets break ties to the lowest id") {
    std::vector<TargetSpec> targets{
        {0, TargetKind::Fixed, {1100.0, 1000.0}},
        {1, TargetKind::Fixed, {900.0, 1000.0}}};
    World world(kRegion, std::move(targets));
    CHECK(nearest_confirmable(world, 0.0, {1000.0, 1000.0}, 400.0) == 0);
}

TEST_CASE("confirmation skips false, pending and already-confirmed targets") {
    std::vector<TargetSpec> targets{
        {0, TargetKind::False, {1050.0, 1000.0}},
        {1, TargetKind::PopUp, {1100.0, 1000.0}, 500.0},
        {2, TargetKind::Fixed, {1200.0, 1000.0}}};
    World world(kRegion, std::move(targets));
    const Vec2 pos{1000.0, 1000.0};

    // Before the pop-up appears only the fixed target qualifies, even
    // though the false target is nearer.
    CHECK(nearest_confirmable(world, 0.0, pos, 400.0) == 2);
    // After it appears the pop-up is the nearest confirmable.
    CHECK(nearest_confirmable(world, 500.0, pos, 400.0) == 1);

    world.try_confirm(1, 0, 500.0);
    world.try_confirm(2, 0, 501.0);
    CHECK_FALSE(nearest_confirmable(world, 502.0, pos, 400.0).has_value());
    // The false target still trips detection.
    CHECK(detect_any(world, 502.0, pos, 400.0));
}

TEST_CASE("signal strength is inverse distance and silent worlds read zero") {
    World world = single_target_world({1009.0, 1000.0});
    CHECK(signal_strength(world, 0.0, {1000.0, 1000.0}) ==
          doctest::Approx(0.1));  // d = 9
    CHECK(signal_strength(world, 0.0, {1009.0, 1000.0}) == doctest::Approx(1.0));

    // Nearer reads are strictly stronger.
    const double near = signal_strength(world, 0.0, {1005.0, 1000.0});
    const double far = signal_strength(world, 0.0, {1200.0, 1000.0});
    CHECK(near > far);

    world.try_confirm(0, 0, 0.0);
    CHECK(signal_strength(world, 1.0, {1009.0, 1000.0}) == 0.0);
}

TEST_CASE("a sensor view reads, records and counts") {
    World world = single_target_world({100.0, 0.0});
    SensorView view(world, 5.0, 3, {0.0, 0.0});

    CHECK(view.detect(2000.0));
    CHECK(view.detect_queries() == 1);
    CHECK(view.confirm_queries() == 0);

    const auto outcome = view.try_confirm(400.0);
    REQUIRE(outcome.has_value());
    CHECK(outcome->target_id == 0);
    CHECK(outcome->target_position == Vec2{100.0, 0.0});
    CHECK(view.confirm_queries() == 1);
    CHECK(world.ledger().size() == 1);
    CHECK(world.ledger().back().uav_id == 3);
    CHECK(world.ledger().back().time == 5.0);

    // The target is spent; further confirm reads miss but still count.
    CHECK_FALSE(view.try_confirm(400.0).has_value());
    CHECK(view.confirm_queries() == 2);

    CHECK(view.signal() == 0.0);
    CHECK(view.signal_queries() == 1);
}

TEST_CASE("sensor suites demand ordered levels and shrinking radii") {
    SensorSuite good{{{1, SensorRole::Detection, 2000.0},
                      {2, SensorRole::Confirmation, 400.0}}};
    CHECK_NOTHROW(good.validate());
    CHECK(good.levels() == 2);
    CHECK(good.confirmation_radius() == 400.0);
    CHECK(good.at_level(1).radius == 2000.0);
    CHECK_THROWS_AS(good.at_level(3), std::out_of_range);

    SensorSuite growing{{{1, SensorRole::Detection, 400.0},
                         {2, SensorRole::Confirmation, 2000.0}}};
    CHECK_THROWS_AS(growing.validate(), std::invalid_argument);

    SensorSuite misroled{{{1, SensorRole::Confirmation, 2000.0},
                          {2, SensorRole::Confirmation, 400.0}}};
    CHECK_THROWS_AS(misroled.validate(), std::invalid_argument);

    SensorSuite empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
}
