#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "unilift/complexes.hpp"

using namespace unilift;

namespace {

// Facets of a random complex on m vertices: random subsets with containments
// dropped, then singletons for uncovered vertices.
SimplicialComplex random_complex(std::mt19937_64& rng, int m) {
  std::vector<std::uint32_t> sets;
  const int tries = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < tries; ++t) {
    std::uint32_t s = static_cast<std::uint32_t>(rng() % (1U << m));
    if (std::popcount(s) < 2 || std::popcount(s) > 4) continue;
    sets.push_back(s);
  }
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t s : sets) {
    bool dominated = false;
    for (std::uint32_t o : sets)
      if (o != s && (s & o) == s) dominated = true;
    if (!dominated && std::find(maximal.begin(), maximal.end(), s) == maximal.end()) maximal.push_back(s);
  }
  std::uint32_t covered = 0;
  for (std::uint32_t s : maximal) covered |= s;
  for (int v = 0; v < m; ++v)
    if (!((covered >> v) & 1U)) maximal.push_back(1U << v);
  std::vector<std::vector<int>> facets;
  for (std::uint32_t s : maximal) {
    std::vector<int> f;
    for (int v = 0; v < m; ++v)
      if ((s >> v) & 1U) f.push_back(v);
    facets.push_back(f);
  }
  return SimplicialComplex(m, facets);
}

int brute_chromatic(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  for (int c = 1; c <= m; ++c) {
    std::vector<int> col(static_cast<std::size_t>(m), 0);
    for (;;) {
      bool ok = true;
      for (const auto& f : k.facets())
        for (std::size_t i = 0; i < f.size() && ok; ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j)
            if (col[static_cast<std::size_t>(f[i])] == col[static_cast<std::size_t>(f[j])]) ok = false;
      if (ok) return c;
      int pos = 0;
      while (pos < m && ++col[static_cast<std::size_t>(pos)] == c) col[static_cast<std::size_t>(pos++)] = 0;
      if (pos == m) break;
    }
  }
  return m;
}

// Smallest r with a map to Z_2^r sending every facet to independent vectors.
int brute_real_rank(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  for (int r = k.max_facet_size(); r <= 4; ++r) {
    const std::uint32_t top = 1U << r;
    std::vector<std::uint32_t> img(static_cast<std::size_t>(m), 1);
    for (;;) {
      bool ok = true;
      for (const auto& f : k.facets()) {
        std::vector<std::uint32_t> ms;
        for (int v : f) ms.push_back(img[static_cast<std::size_t>(v)]);
        if (gf2_rank_masks(ms) != static_cast<int>(ms.size())) {
          ok = false;
          break;
        }
      }
      if (ok) return r;
      int pos = 0;
      while (pos < m && ++img[static_cast<std::size_t>(pos)] == top) img[static_cast<std::size_t>(pos++)] = 1;
      if (pos == m) break;
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("vertex table order") {
  const UniversalComplexModel m5 = universal_vertex_table(5);
  CHECK(m5.vertex_count() == 31);
  const char* table[31] = {"10000", "01000", "00100", "00010", "00001", "11000", "10100", "10010",
                           "10001", "01100", "01010", "01001", "00110", "00101", "00011", "11100",
                           "11010", "11001", "10110", "10101", "10011", "01110", "01101", "01011",
                           "00111", "11110", "11101", "11011", "10111", "01111", "11111"};
  for (int i = 0; i < 31; ++i) CHECK(to_bit_string(m5.vertex(i)) == table[i]);
  for (int i = 0; i < 31; ++i) CHECK(m5.index_of(m5.vertex(i).bits) == i);
  for (int i = 1; i < 31; ++i) CHECK(m5.vertex(i - 1).weight() <= m5.vertex(i).weight());
  CHECK_THROWS_AS(m5.index_of(0), RangeError);
  CHECK_THROWS_AS(universal_vertex_table(7), RangeError);
}

TEST_CASE("facet file parsing") {
  const SimplicialComplex sq = load_complex("# square\n1 2\n2 3\n\n3 4\n4 1  # closing edge\n");
  CHECK(sq.vertex_count() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.max_facet_size() == 2);
  CHECK(load_complex(facet_text(sq)).facets() == sq.facets());
  CHECK_THROWS_AS(load_complex("1 2\n2 x\n"), ParseError);
  CHECK_THROWS_AS(load_complex(""), ParseError);
  CHECK_THROWS_AS(load_complex("1 2 3\n2 3\n"), ParseError);
  CHECK_THROWS_AS(load_complex("1 0\n"), ParseError);
  try {
    load_complex("1 2\n\n2 y\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("complex validation") {
  CHECK_THROWS_AS(SimplicialComplex(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(SimplicialComplex(2, {{0, 1}, {0}}), PreconditionError);
  CHECK_THROWS(SimplicialComplex(2, {{0, 5}}));
  CHECK_THROWS_AS(SimplicialComplex(2, {{}}), PreconditionError);
}

TEST_CASE("square boundary invariants") {
  const SimplicialComplex sq = load_complex("1 2\n2 3\n3 4\n4 1\n");
  CHECK(chromatic_number(sq) == 2);
  CHECK(min_real_coloring_rank(sq, 8) == 2);
  const InvariantsRecord r = invariant_bounds(sq, 8);
  CHECK(r.gamma == 2);
  CHECK(r.r_real == 2);
  CHECK(r.s_real == 2);
  CHECK(r.s_lower == 2);
  CHECK(r.s_upper == 2);
  CHECK(r.exact());
  CHECK(r.chain_holds());
}

TEST_CASE("odd cycle and simplex boundary") {
  const SimplicialComplex pent = load_complex("1 2\n2 3\n3 4\n4 5\n5 1\n");
  CHECK(chromatic_number(pent) == 3);
  CHECK(min_real_coloring_rank(pent, 8) == 2);
  const SimplicialComplex tet = load_complex("1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
  CHECK(chromatic_number(tet) == 4);
  CHECK(min_real_coloring_rank(tet, 8) == 3);
  CHECK(min_real_coloring_rank(tet, 2) == std::nullopt);
  CHECK_THROWS_AS(invariant_bounds(tet, 2), PreconditionError);
}

TEST_CASE("chromatic number and real rank against brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 5);
    const SimplicialComplex k = random_complex(rng, m);
    CHECK(chromatic_number(k) == brute_chromatic(k));
    const int brute = brute_real_rank(k);
    if (brute > 0) CHECK(min_real_coloring_rank(k, 4) == brute);
    const InvariantsRecord r = invariant_bounds(k, 8);
    CHECK(r.chain_holds());
    CHECK(r.s_lower >= r.m - r.gamma);
  }
}

TEST_CASE("budgets and size limits") {
  std::vector<std::vector<int>> facets;
  for (int v = 0; v < 25; ++v) facets.push_back({v, (v + 1) % 25});
  const SimplicialComplex big(25, facets);
  CHECK_THROWS_AS(chromatic_number(big), RangeError);
  const SimplicialComplex k5 = load_complex("1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n");
  CHECK_THROWS_AS(chromatic_number(k5, 2), BudgetExceeded);
}

TEST_CASE("universal complex facets are the bases") {
  const SimplicialComplex u3 = universal_complex(3);
  CHECK(u3.vertex_count() == 7);
  CHECK(u3.facets().size() == 28);
  CHECK(chromatic_number(u3) == 7);
  CHECK(min_real_coloring_rank(u3, 8) == 3);
  const SimplicialComplex u4 = universal_complex(4);
  CHECK(u4.facets().size() == 840);
}
