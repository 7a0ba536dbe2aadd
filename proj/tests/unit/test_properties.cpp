#include "doctest.h"
#include "properties.hpp"

using namespace testing::props;

namespace {

void expect(const Outcome& o) {
  INFO(o.name << ": " << o.first_failure);
  CHECK(o.cases >= 1000);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("base64") { expect(base64_round_trip()); }
  TEST_CASE("cosine") { expect(cosine_laws()); }
  TEST_CASE("argmax under scaling") { expect(argmax_scaling()); }
  TEST_CASE("merge") { expect(merge_laws()); }
  TEST_CASE("sentinel") { expect(sentinel_exclusivity()); }
  TEST_CASE("compare swap") { expect(compare_swap()); }
  TEST_CASE("f1 bracketing") { expect(f1_bracketing()); }
}
