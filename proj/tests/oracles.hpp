#pragma once
// Slow, obviously-correct reference computations used to check the library.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "unilift/gf2.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

// Laplace expansion along the first row.
inline std::int64_t laplace_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[r][j]);
      minor.push_back(row);
    }
    const std::int64_t term = a[0][c] * laplace_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

inline Mat to_mat(const unilift::BinaryMatrix& b) {
  Mat m(static_cast<std::size_t>(b.rows()), std::vector<std::int64_t>(static_cast<std::size_t>(b.cols())));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b.at(i, j);
  return m;
}

// Gaussian elimination over Z_2 on rows stored as vectors of 0/1.
inline int gf2_rank(Mat a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && (a[p][c] & 1) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (int r = 0; r < rows; ++r)
      if (r != rank && (a[r][c] & 1))
        for (int j = 0; j < cols; ++j) a[r][j] ^= a[rank][j] & 1;
    ++rank;
  }
  return rank;
}

// gcd of all k x k minors of an m x k matrix given by columns.
inline std::int64_t maximal_minor_gcd(const std::vector<std::vector<std::int64_t>>& columns) {
  const std::size_t k = columns.size();
  const std::size_t m = columns.empty() ? 0 : columns[0].size();
  std::vector<int> pick(m, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
  std::sort(pick.begin(), pick.end());
  std::int64_t g = 0;
  do {
    Mat sq;
    for (std::size_t r = 0; r < m; ++r) {
      if (!pick[r]) continue;
      std::vector<std::int64_t> row;
      for (std::size_t c = 0; c < k; ++c) row.push_back(columns[c][r]);
      sq.push_back(row);
    }
    g = std::gcd(g, laplace_det(sq));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return g < 0 ? -g : g;
}

inline std::uint64_t row_major(const unilift::BinaryMatrix& b) {
  std::uint64_t bits = 0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) bits = (bits << 1) | (b.at(i, j) ? 1U : 0U);
  return bits;
}

// All row and column permutations; minimum of the row-major bit string.
inline std::uint64_t brute_canonical(const unilift::BinaryMatrix& b) {
  const int n = b.rows();
  std::vector<int> rp(static_cast<std::size_t>(n)), cp(static_cast<std::size_t>(n));
  std::iota(rp.begin(), rp.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    const auto r = b.with_rows_permuted(rp);
    std::iota(cp.begin(), cp.end(), 0);
    do {
      best = std::min(best, row_major(r.with_columns_permuted(cp)));
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return best;
}

inline std::size_t brute_orbit_size(const unilift::BinaryMatrix& b) {
  const int n = b.rows();
  std::set<std::uint64_t> seen;
  std::vector<int> rp(static_cast<std::size_t>(n)), cp(static_cast<std::size_t>(n));
  std::iota(rp.begin(), rp.end(), 0);
  do {
    const auto r = b.with_rows_permuted(rp);
    std::iota(cp.begin(), cp.end(), 0);
    do {
      seen.insert(row_major(r.with_columns_permuted(cp)));
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return seen.size();
}

// |GL(n, Z_2)| = prod_{i<n} (2^n - 2^i).
inline std::uint64_t gl_order(int n) {
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return p;
}

inline unilift::BinaryMatrix random_binary(std::mt19937_64& rng, int n) {
  unilift::BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, (rng() & 1U) != 0);
  return m;
}

inline unilift::BinaryMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    auto m = random_binary(rng, n);
    if (gf2_rank(to_mat(m)) == n) return m;
  }
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
