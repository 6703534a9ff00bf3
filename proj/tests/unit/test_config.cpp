#include <doctest.h>

#include "sparsefac/config.hpp"
#include "sparsefac/errors.hpp"

using namespace sparsefac;

TEST_SUITE("config") {
  TEST_CASE("defaults") {
    Config c;
    CHECK(c.max_delta == 3);
    CHECK(c.iso_degree_cap == 0);
    CHECK(c.jobs == 1);
  }

  TEST_CASE("key value parsing") {
    Config c = parse_config("# limits\n[engine]\nsu_cap = 10\n  jobs=4  \nverbose = true\ncd_oracle_limit = 8 # trailing\n");
    CHECK(c.su_cap == 10);
    CHECK(c.jobs == 4);
    CHECK(c.verbose);
    CHECK(c.cd_oracle_limit == 8);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config("nonsense = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_config("jobs\n"), ParseError);
    CHECK_THROWS_AS(parse_config("jobs = -2\n"), ParseError);
    CHECK_THROWS_AS(load_config("/nonexistent/sparsefac.conf"), ParseError);
  }
}
