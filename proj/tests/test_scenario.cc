#include "vasnet/scenario.h"

#include "doctest.h"

using namespace vasnet;

namespace
{

std::string
culprit(const std::string& text)
{
    try
    {
        validate(parse_scenario(text));
    }
    catch (const ConfigInvalid& e)
    {
        return e.key();
    }
    return "";
}

} // namespace

TEST_CASE("parse keys, comments and whitespace")
{
    const auto c = parse_scenario("# header\n"
                                  "  sleep.p_min = 0.1   # trailing\n"
                                  "\n"
                                  "layout.rss_spacing=200\n"
                                  "layout.rss_both_sides = false\n"
                                  "bs.positions = 0:0, 2500:1, 5000:0\n"
                                  "vehicles.preplaced = 100:30:1:ABC123, 200:35:0\n"
                                  "app.accidents = 12.5:any, 30:2\n"
                                  "app.thefts = 40:1:ABC123\n"
                                  "sim.seed = 18446744073709551615\n");
    CHECK(c.sleep.p_min == 0.1);
    CHECK(c.layout.rss_spacing == 200);
    CHECK_FALSE(c.layout.rss_both_sides);
    REQUIRE(c.bs_positions.size() == 3);
    CHECK(c.bs_positions[1] == Position{2500, 1});
    REQUIRE(c.vehicles.preplaced.size() == 2);
    CHECK(c.vehicles.preplaced[0].plate == "ABC123");
    CHECK(c.vehicles.preplaced[1].lane == 0);
    REQUIRE(c.app.accidents.size() == 2);
    CHECK_FALSE(c.app.accidents[0].vehicle.has_value());
    CHECK(c.app.accidents[1].vehicle == 2u);
    REQUIRE(c.app.thefts.size() == 1);
    CHECK(c.app.thefts[0].plate == "ABC123");
    CHECK(c.seed == 18446744073709551615ull);
}

TEST_CASE("unknown keys and bad values name the key")
{
    CHECK(culprit("sleep.pmin = 0.1\n") == "sleep.pmin");
    CHECK(culprit("link.range = far\n") == "link.range");
    CHECK(culprit("link.loss_probability = 1\n") == "link.loss_probability");
    CHECK(culprit("sleep.p_min = 0.9\nsleep.p_max = 0.5\n") == "sleep.p_min");
    CHECK(culprit("sim.duration = 0\n") == "sim.duration");
    CHECK(culprit("layout.length = 100\n") == "layout.rss_spacing");
    CHECK(culprit("app.thefts = 1:7:X\n") == "app.thefts");
    CHECK(culprit("no equals sign\n").rfind("line", 0) == 0);
    CHECK(culprit("sim.seed = 5\n").empty());
}

TEST_CASE("format and parse round-trip")
{
    ScenarioConfig c;
    c.sleep.p_min = 0.1234567890123;
    c.bs_positions = {{0, 0}, {1234.5, -2}};
    c.vehicles.preplaced = {{10, 31.5, 1, "P1"}, {20, 29, 0, ""}};
    c.app.accidents = {{1.5, std::nullopt}, {2, 3u}};
    c.app.thefts = {{3, 1, "P1"}};
    c.seed = 987654321987654321ull;
    const std::string text = format_scenario(c);
    CHECK(format_scenario(parse_scenario(text)) == text);
    CHECK(parse_scenario(text).sleep.p_min == c.sleep.p_min);
    CHECK(format_scenario(parse_scenario(format_scenario(ScenarioConfig{}))) == format_scenario(ScenarioConfig{}));
}

TEST_CASE("every key appears in the normalized form")
{
    const std::string text = format_scenario(ScenarioConfig{});
    for (const auto& k : scenario_keys())
    {
        CHECK(text.find(k + " = ") != std::string::npos);
    }
}

TEST_CASE("overrides are last-write-wins")
{
    ScenarioConfig c = parse_scenario("sleep.p_min = 0.2\n");
    apply_override(c, "sleep.p_min=0.3");
    apply_override(c, "sleep.p_min=0.4");
    CHECK(c.sleep.p_min == 0.4);
    CHECK(format_scenario(c).find("sleep.p_min = 0.4\n") != std::string::npos);
    CHECK_THROWS_AS(apply_override(c, "sleep.p_min"), ConfigInvalid);
    try
    {
        apply_override(c, "bogus.key=1");
        FAIL("expected ConfigInvalid");
    }
    catch (const ConfigInvalid& e)
    {
        CHECK(e.key() == "bogus.key");
    }
}

TEST_CASE("shipped scenarios validate")
{
    for (const char* name : {"reference.scn", "single_vehicle.scn"})
    {
        const auto c = load_scenario(std::string(VASNET_SOURCE_DIR) + "/scenarios/" + name);
        CHECK_NOTHROW(validate(c));
    }
    CHECK_THROWS_AS(load_scenario("/nonexistent/file.scn"), ScenarioIoError);
}

TEST_CASE("defaults describe the reference highway")
{
    const ScenarioConfig c;
    CHECK(c.layout.length == 5000);
    CHECK(c.layout.rss_spacing == 250);
    CHECK(c.layout.rss_both_sides);
    CHECK(c.link.default_range == 1000);
    CHECK(c.bs_positions == std::vector<Position>{{0, 0}, {5000, 0}});
    CHECK(c.initial_energy == 2.0);
    CHECK(c.arrivals.rate == 0.05);
    CHECK(c.arrivals.speed_min == 25);
    CHECK(c.arrivals.speed_max == 40);
    CHECK(c.vehicles.authorized_speed == 33.3);
    CHECK(c.sample_interval == 10);
    CHECK_NOTHROW(validate(c));
}
