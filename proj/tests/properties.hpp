#pragma once
// Randomised and exhaustive property checks; each returns the number of
// violations found.

#include <random>

#include "oracles.hpp"
#include "unilift/equivalence.hpp"
#include "unilift/liftsearch.hpp"
#include "unilift/zdet.hpp"

namespace props {

// gf2 determinant against the parity of the integer determinant, every 0/1
// matrix of order <= 4.
inline std::uint64_t det_parity_violations() {
  std::uint64_t bad = 0;
  for (int n = 1; n <= 4; ++n) {
    const std::uint32_t total = 1U << (n * n);
    for (std::uint32_t bits = 0; bits < total; ++bits) {
      unilift::BinaryMatrix m(n, n);
      for (int i = 0; i < n * n; ++i) m.set(i / n, i % n, (bits >> i) & 1U);
      const std::int64_t d = unilift::int_det(unilift::IntegerMatrix::from_binary(m));
      if (unilift::gf2_det(m) != static_cast<int>(((d % 2) + 2) % 2)) ++bad;
    }
  }
  return bad;
}

// canonical_key is idempotent and constant on orbits.
inline std::uint64_t equivalence_key_violations(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t bad = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto m = oracle::random_binary(rng, n);
    const auto key = unilift::canonical_key(m);
    if (unilift::canonical_key(key.matrix()) != key) ++bad;
    const auto rp = oracle::random_perm(rng, n);
    const auto cp = oracle::random_perm(rng, n);
    const auto moved = m.with_rows_permuted(rp).with_columns_permuted(cp);
    const auto key2 = unilift::canonical_key(moved);
    if (key2 != key || key2.abs_det != key.abs_det || key2.gf2_det != key.gf2_det) ++bad;
  }
  return bad;
}

inline std::vector<std::int64_t> random_row(std::mt19937_64& rng, int n, int span) {
  std::vector<std::int64_t> s(static_cast<std::size_t>(n));
  for (auto& x : s) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * span + 1)) - span;
  return s;
}

inline std::vector<std::vector<std::int64_t>> stacked_columns(const unilift::BinaryMatrix& a,
                                                               const std::vector<std::int64_t>& s) {
  std::vector<std::vector<std::int64_t>> cols;
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<std::int64_t> c;
    for (int i = 0; i < a.rows(); ++i) c.push_back(a.at(i, j));
    c.push_back(s[static_cast<std::size_t>(j)]);
    cols.push_back(c);
  }
  return cols;
}

// star1(A, s) against the gcd of all maximal minors of [A; s] by Laplace.
inline std::uint64_t star1_violations(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t bad = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto a = oracle::random_invertible(rng, n);
    const auto s = random_row(rng, n, 6);
    const bool expected = oracle::maximal_minor_gcd(stacked_columns(a, s)) == 1;
    if (unilift::star1(a, s) != expected) ++bad;
  }
  return bad;
}

// Shifting an extra row by p*w, for p a multiple of every prime dividing
// det A, never changes whether the lifted columns extend to a basis.
inline std::uint64_t residue_completeness_violations(int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t bad = 0;
  for (int t = 0; t < cases; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto a = oracle::random_invertible(rng, n);
    const auto s = random_row(rng, n, 8);
    const auto w = random_row(rng, n, 5);
    const std::int64_t det = unilift::int_det(unilift::IntegerMatrix::from_binary(a));
    std::vector<std::int64_t> shifts = unilift::prime_factors(det);
    shifts.push_back(unilift::residue_moduli(n, 1)[0]);
    const bool base = unilift::extends_to_unimodular(stacked_columns(a, s));
    for (std::int64_t p : shifts) {
      auto moved = s;
      for (std::size_t j = 0; j < moved.size(); ++j) moved[j] += p * w[j];
      if (unilift::extends_to_unimodular(stacked_columns(a, moved)) != base) ++bad;
    }
  }
  return bad;
}

// Census totals against prod (2^n - 2^i).
inline std::uint64_t census_total_violations(int max_n) {
  std::uint64_t bad = 0;
  for (int n = 2; n <= max_n; ++n)
    if (unilift::det_census(n).total_orbit_size() != oracle::gl_order(n)) ++bad;
  return bad;
}

}  // namespace props
