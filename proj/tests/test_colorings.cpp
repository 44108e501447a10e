#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "unilift/colorings.hpp"
#include "unilift/complexes.hpp"

using namespace unilift;

namespace {

// Independent check: every unordered basis, gcd of maximal minors by Laplace.
std::uint64_t oracle_failures(const Coloring& c) {
  const int n = c.source_dim();
  std::uint64_t failures = 0;
  std::vector<std::uint32_t> pick;
  const std::uint32_t top = 1U << n;
  const auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      if (gf2_rank_masks(pick) != n) return;
      std::vector<std::vector<std::int64_t>> cols;
      for (std::uint32_t m : pick) {
        const auto img = c.image(m);
        cols.emplace_back(img.begin(), img.end());
      }
      if (oracle::maximal_minor_gcd(cols) != 1) ++failures;
      return;
    }
    for (std::uint32_t m = from; m < top; ++m) {
      pick.push_back(m);
      self(self, m + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return failures;
}

Gf2Vector random_nonzero(std::mt19937_64& rng, int n) {
  return make_gf2_vector(n, 1U + static_cast<std::uint32_t>(rng() % ((1U << n) - 1)));
}

}  // namespace

TEST_CASE("seven-row coloring for n = 5") {
  const Coloring c = claim5_coloring();
  CHECK(c.source_dim() == 5);
  CHECK(c.target_rank() == 7);
  CHECK(c.restricted_shape());
  CHECK(c.all_primitive());
  const VerificationReport r = verify_coloring(c);
  CHECK(r.pass());
  CHECK(r.total_checked == 83328);
  CHECK(r.failure_count == 0);
  CHECK(verify_coloring(c, 3).total_checked == 83328);
}

TEST_CASE("coset coloring passes for n = 2..5") {
  for (int n = 2; n <= 5; ++n) {
    const Coloring c = theorem2_coloring(n, make_gf2_vector(n, 1), make_gf2_vector(n, 2));
    CHECK(c.target_rank() == (1 << (n - 2)) + 1);
    const VerificationReport r = verify_coloring(c);
    CHECK(r.pass());
    CHECK(r.total_checked == basis_count(n));
  }
}

TEST_CASE("coset coloring agrees with the minor oracle at n = 3, 4") {
  std::mt19937_64 rng(29);
  for (int n = 3; n <= 4; ++n)
    for (int trial = 0; trial < 4; ++trial) {
      Gf2Vector x = random_nonzero(rng, n), y = random_nonzero(rng, n);
      while (y == x) y = random_nonzero(rng, n);
      const Coloring c = theorem2_coloring(n, x, y);
      CHECK(oracle_failures(c) == 0);
      CHECK(verify_coloring(c).pass());
    }
}

TEST_CASE("coset coloring is independent of the chosen pair") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Gf2Vector x = random_nonzero(rng, 5), y = random_nonzero(rng, 5);
    while (y == x) y = random_nonzero(rng, 5);
    CHECK(verify_coloring(theorem2_coloring(5, x, y)).pass());
  }
}

TEST_CASE("coset representatives") {
  const auto reps = theorem2_coset_representatives(4, make_gf2_vector(4, 1), make_gf2_vector(4, 2));
  CHECK(reps == std::vector<std::uint32_t>{4, 8, 12});
  CHECK(theorem2_coset_representatives(5, make_gf2_vector(5, 3), make_gf2_vector(5, 12)).size() == 7);
  CHECK_THROWS_AS(theorem2_coset_representatives(4, make_gf2_vector(4, 1), make_gf2_vector(4, 1)), PreconditionError);
  CHECK_THROWS_AS(theorem2_coset_representatives(4, make_gf2_vector(4, 0), make_gf2_vector(4, 1)), PreconditionError);
  CHECK_THROWS(theorem2_coset_representatives(4, make_gf2_vector(3, 1), make_gf2_vector(4, 2)));
}

TEST_CASE("printed 5 x 15 coloring") {
  const Coloring e = example2_coloring();
  CHECK(e.source_dim() == 4);
  CHECK(e.target_rank() == 5);
  const VerificationReport r = verify_coloring(e);
  CHECK(r.pass());
  CHECK(r.total_checked == 840);
  CHECK(oracle_failures(e) == 0);
  CHECK(e == theorem2_coloring(4, make_gf2_vector(4, 1), make_gf2_vector(4, 2)));
}

TEST_CASE("broken colorings are caught") {
  // zero extra rows: exactly the bases with |det| > 1 fail
  Coloring c = claim5_coloring();
  for (std::uint32_t m = 1; m < 32; ++m) {
    std::vector<std::int64_t> img(c.image(m).begin(), c.image(m).end());
    img[5] = 0;
    img[6] = 0;
    c.set_image(m, img);
  }
  const VerificationReport r = verify_coloring(c);
  CHECK_FALSE(r.pass());
  CHECK(r.failure_count == 2472);
  CHECK(r.failures.size() == 100);

  // the identity-shaped lift of Z_2^4 fails on the determinant-3 bases only
  Coloring plain(4, 4);
  for (std::uint32_t m = 1; m < 16; ++m) {
    std::vector<std::int64_t> v(4);
    for (int j = 0; j < 4; ++j) v[static_cast<std::size_t>(j)] = (m >> j) & 1U;
    plain.set_image(m, v);
  }
  const VerificationReport p = verify_coloring(plain);
  CHECK(p.failure_count == 5);
  CHECK(oracle_failures(plain) == 5);

  Coloring zero = example2_coloring();
  std::vector<std::int64_t> z(5, 0);
  z[0] = 2;
  zero.set_image(1, z);
  CHECK_FALSE(zero.all_primitive());
  CHECK(zero.non_primitive_vertices() == std::vector<std::uint32_t>{1});
  CHECK_FALSE(verify_coloring(zero).pass());
}

TEST_CASE("failure list is capped") {
  Coloring c(5, 5);
  for (std::uint32_t m = 1; m < 32; ++m) {
    std::vector<std::int64_t> v(5, 0);
    v[0] = 1;  // every image equal: every basis fails
    c.set_image(m, v);
  }
  const VerificationReport r = verify_coloring(c);
  CHECK(r.failure_count == 83328);
  CHECK(r.failures.size() == 100);
}

TEST_CASE("coloring text round trip") {
  const Coloring e = example2_coloring();
  const std::string text = coloring_text(e);
  CHECK(parse_coloring(text) == e);
  CHECK(text.rfind("4 5\n", 0) == 0);
  CHECK_THROWS_AS(parse_coloring("4 5\n1 0 0 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_coloring("x\n"), ParseError);
}

TEST_CASE("invariants of the real universal complex") {
  const InvariantsRecord r4 = universal_invariants(4);
  CHECK(r4.m == 15);
  CHECK(r4.gamma == 15);
  CHECK(r4.r_real == 4);
  CHECK(r4.s_real == 11);
  CHECK(r4.s_lower == 10);
  CHECK(r4.chain_holds());
  const InvariantsRecord r5 = universal_invariants(5);
  CHECK(r5.m == 31);
  CHECK(r5.s_real == 26);
  CHECK(r5.s_lower == 24);
  CHECK(r5.delta_upper == 2);
  CHECK(r5.chain_holds());
}
