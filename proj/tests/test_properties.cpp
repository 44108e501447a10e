#include "doctest.h"
#include "properties.hpp"

TEST_CASE("gf2 determinant equals integer determinant mod 2") { CHECK(props::det_parity_violations() == 0); }

TEST_CASE("equivalence keys: idempotent and orbit invariant") {
  CHECK(props::equivalence_key_violations(10000, 101) == 0);
}

TEST_CASE("star condition equals the maximal-minor gcd") { CHECK(props::star1_violations(10000, 202) == 0); }

TEST_CASE("extension verdict depends only on residues") {
  CHECK(props::residue_completeness_violations(10000, 303) == 0);
}

TEST_CASE("census totals equal the group order") { CHECK(props::census_total_violations(5) == 0); }
