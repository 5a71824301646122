#include "doctest.h"

#include "properties.hpp"

using namespace lotwise;

namespace {

void require_property(const props::Outcome& o) {
    INFO("cases=", o.cases, " failures=", o.failures, " worst=", o.worst, " first: ",
         o.first_failure);
    CHECK(o.cases >= 1000);
    CHECK(o.ok());
}

}  // namespace

TEST_CASE("property: unit cost forms agree") { require_property(props::equation_form_identity(11)); }
TEST_CASE("property: gain is affine in P") { require_property(props::gain_affine_in_probability(12)); }
TEST_CASE("property: X = 0 degenerates to pull") { require_property(props::zero_extra_degeneration(13)); }
TEST_CASE("property: slope sign law") { require_property(props::slope_sign_law(14)); }
TEST_CASE("property: capacity floor") { require_property(props::capacity_floor(15)); }
TEST_CASE("property: recommendation safety") { require_property(props::recommendation_safety(16)); }
TEST_CASE("property: derive/pull round trip") { require_property(props::derive_pull_round_trip(17)); }
TEST_CASE("property: break-even separates gain signs") { require_property(props::break_even_separation(18)); }
TEST_CASE("property: holding and loss are non-negative") { require_property(props::non_negativity(19)); }
