#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "nhqw/config_io.hpp"
#include "test_util.hpp"

using namespace nhqw;
using nhqw_test::kPi;

namespace {

const char* kRecord = R"({
  "theta1_left_pi": -0.0625, "theta2_left_pi": 0.75,
  "theta1_right_pi": 0.5625, "theta2_right_pi": 0.45,
  "gamma": 0.2746, "n_left": 9, "n_right": 10, "boundary": "open"
})";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("walk config record parsing") {
  const WalkConfig c = walk_config_from_json(kRecord);
  CHECK(c.left.theta1 == doctest::Approx(-0.0625 * kPi));
  CHECK(c.left.theta2 == doctest::Approx(0.75 * kPi));
  CHECK(c.right.theta1 == doctest::Approx(0.5625 * kPi));
  CHECK(c.right.theta2 == doctest::Approx(0.45 * kPi));
  CHECK(c.gamma == 0.2746);
  CHECK(c.n_left == 9);
  CHECK(c.n_right == 10);
  CHECK(c.boundary == Boundary::Open);

  SUBCASE("round trip") {
    const WalkConfig back = walk_config_from_json(walk_config_to_json(c));
    CHECK(back.left.theta1 == doctest::Approx(c.left.theta1).epsilon(1e-15));
    CHECK(back.right.theta2 == doctest::Approx(c.right.theta2).epsilon(1e-15));
    CHECK(back.gamma == c.gamma);
    CHECK(back.n_left == c.n_left);
    CHECK(back.boundary == c.boundary);
  }

  SUBCASE("malformed input") {
    CHECK_THROWS_AS(walk_config_from_json("not json"), ConfigError);
    CHECK_THROWS_AS(walk_config_from_json("[1,2]"), ConfigError);
    CHECK_THROWS_AS(walk_config_from_json(R"({"gamma": 0.1})"), ConfigError);
    std::string bad = kRecord;
    bad.replace(bad.find("\"open\""), 6, "\"hard\"");
    CHECK_THROWS_AS(walk_config_from_json(bad), ConfigError);
  }
}

TEST_CASE("presets cover the bundled figure configs") {
  const auto names = preset_names();
  CHECK(names.size() == 6);
  for (const char* name :
       {"fig2a", "fig2e", "fig3e", "figS2", "figS3", "figS4"}) {
    CHECK(has_preset(name));
    CHECK_NOTHROW(preset_config(name));
  }
  CHECK(!has_preset("fig9z"));
  CHECK_THROWS_AS(preset_config("fig9z"), ConfigError);

  CHECK(preset_config("figS4").gamma == 0.1373);
  CHECK(preset_config("figS2").right.theta2 == doctest::Approx(-0.44 * kPi));
  // fig2e is sized for a 7-step domain-wall run.
  CHECK(preset_config("fig2e").n_left == 9);
  CHECK(preset_config("fig2e").n_right == 10);

  SUBCASE("the JSON files shipped in configs/ stay in sync") {
    for (const std::string& name : names) {
      const std::string text =
          read_file(std::string(NHQW_SOURCE_DIR) + "/configs/" + name +
                    ".json");
      const WalkConfig from_file = walk_config_from_json(text);
      const WalkConfig from_table = preset_config(name);
      CHECK(from_file.left.theta1 ==
            doctest::Approx(from_table.left.theta1).epsilon(1e-15));
      CHECK(from_file.left.theta2 ==
            doctest::Approx(from_table.left.theta2).epsilon(1e-15));
      CHECK(from_file.right.theta1 ==
            doctest::Approx(from_table.right.theta1).epsilon(1e-15));
      CHECK(from_file.right.theta2 ==
            doctest::Approx(from_table.right.theta2).epsilon(1e-15));
      CHECK(from_file.gamma == from_table.gamma);
      CHECK(from_file.n_left == from_table.n_left);
      CHECK(from_file.n_right == from_table.n_right);
      CHECK(from_file.boundary == from_table.boundary);
    }
  }
}
