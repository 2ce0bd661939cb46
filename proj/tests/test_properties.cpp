#include "doctest.h"

#include "property_checks.hpp"

using namespace darboux::props;

namespace {

void expect(const Outcome& o) {
    CHECK(o.cases >= 200);
    CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("series ring laws") { expect(ring_laws()); }
TEST_CASE("pow additivity") { expect(pow_additivity()); }
TEST_CASE("composition associativity") { expect(composition_associativity()); }
TEST_CASE("norm multiplicativity") { expect(norm_multiplicativity()); }
TEST_CASE("truncation soundness") { expect(truncation_soundness()); }

TEST_CASE("a different seed also passes") {
    expect(ring_laws(11));
    expect(pow_additivity(12));
}
