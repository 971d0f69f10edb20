#include <doctest.h>

#include "stralg/fixtures.hpp"

TEST_CASE("every pinned example passes") {
  for (const auto& r : stralg::run_fixtures()) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}
