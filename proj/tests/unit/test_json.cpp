#include <doctest.h>

#include "bankit/error.hpp"
#include "bankit/generate.hpp"
#include "bankit/json.hpp"
#include "support.hpp"

using namespace bankit;
using bankit::test::cfg;

TEST_SUITE("json") {
  TEST_CASE("trajectories round trip") {
    Rng rng(61);
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + below(rng, 8);
      const Ban ban = random_monotone_ban(n, rng);
      const Trajectory t = random_trajectory(ban, random_configuration(n, rng), 15, rng);
      const json j = json::parse(to_json(t).dump());
      CHECK(trajectory_from_json(j) == t);
    }
  }

  TEST_CASE("ids are 1-based and configurations are bitstrings") {
    const Trajectory t{cfg("10110"), test::moves({1, 3})};
    const json j = to_json(t);
    CHECK(j["x0"] == "10110");
    CHECK(j["moves"] == json::array({1, 3}));
    CHECK(j["configs"].back() == "00010");
    CHECK(to_json(test::ids({2, 5})) == json::array({2, 5}));
  }

  TEST_CASE("out of range moves are rejected") {
    CHECK_THROWS_AS((void)trajectory_from_json(json{{"x0", "01"}, {"moves", {3}}}), Error);
    CHECK_THROWS_AS((void)trajectory_from_json(json{{"x0", "01"}, {"moves", {0}}}), Error);
  }

  TEST_CASE("carrier table json matches the table") {
    const Ban ban = parse_ban(test::kExample2);
    const CarrierTable table = carrier_tables(ban, {cfg("1100"), test::moves({3, 4})});
    const json j = to_json(table);
    CHECK(j["steps"] == 2);
    CHECK(j["originals"][0]["carriers"][2] == json::array({1, 3, 4}));
    CHECK(j["originals"][2]["lost_at"] == 1);
    CHECK(j["originals"][0]["lost_at"].is_null());
  }
}
