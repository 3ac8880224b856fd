#include <doctest.h>

#include "properties.hpp"

namespace {

void check_all(const std::vector<properties::Instance>& instances) {
  for (const auto& [name, check] : properties::all_checks()) {
    auto outcome = check(instances);
    CAPTURE(name);
    CHECK(outcome.cases > 0);
    for (const auto& f : outcome.failures) FAIL_CHECK(f);
  }
}

}  // namespace

TEST_CASE("properties hold on every multigraph with at most 4 vertices and 6 edges") {
  auto instances = properties::exhaustive_instances();
  CHECK(instances.size() > 1000);
  check_all(instances);
}

TEST_CASE("properties hold on random graphs with up to 10 edges") {
  check_all(properties::random_instances(2024, 25));
}
