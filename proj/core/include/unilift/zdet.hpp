#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "unilift/gf2.hpp"

namespace unilift {

// Cap on the dimensions of an IntegerMatrix.
inline constexpr int kMaxIntDim = 12;

// Small dense exact-integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntegerMatrix identity(int n);
  static IntegerMatrix from_binary(const BinaryMatrix& b);
  // Matrix whose j-th column is columns[j]; all columns must share a length.
  static IntegerMatrix from_columns(std::span<const std::vector<std::int64_t>> columns);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  std::int64_t operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  std::vector<std::int64_t> row(int i) const;
  std::vector<std::int64_t> column(int j) const;
  void set_row(int i, std::span<const std::int64_t> values);

  // Appends rows below the current ones (cols must match).
  IntegerMatrix stacked(const IntegerMatrix& below) const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

// A binary base matrix A (invertible over Z_2) with k integer rows stacked
// under it; row t holds the values of the t-th extra coordinate on A's columns.
struct StackedLiftMatrix {
  BinaryMatrix base;
  std::vector<std::vector<std::int64_t>> extra_rows;

  StackedLiftMatrix(BinaryMatrix base_matrix, std::vector<std::vector<std::int64_t>> rows);
  IntegerMatrix matrix() const;
  // The columns of matrix(), i.e. the lifted images of A's columns.
  std::vector<std::vector<std::int64_t>> columns() const;
};

// Exact determinant by fraction-free (Bareiss) elimination. Throws ShapeError
// for non-square input and ArithmeticOverflow if a value leaves int64.
std::int64_t int_det(const IntegerMatrix& m);

// det of A with row j (0-based) replaced by s.
std::int64_t replaced_row_det(const BinaryMatrix& a, int j, std::span<const std::int64_t> s);

// gcd(|det A|, |det(A)_0|, ..., |det(A)_{n-1}|) == 1, where (A)_j has row j
// replaced by s. A must be invertible over Z_2.
bool star1(const BinaryMatrix& a, std::span<const std::int64_t> s);

// a * det A - sum_j coeffs[j] * det(A)_j, the expansion along an appended
// completion column (coeffs..., a) of the matrix [A; s].
std::int64_t cofactor_expansion_check(const BinaryMatrix& a, std::span<const std::int64_t> s, std::int64_t a_last,
                                      std::span<const std::int64_t> coeffs);

// True iff the k given vectors of Z^m extend to a basis of Z^m, i.e. the gcd
// of all k x k minors of the m x k matrix they form is 1. Enumerates minors
// with early exit. Requires k <= m <= 12.
bool extends_to_unimodular(std::span<const std::vector<std::int64_t>> vectors);
bool extends_to_unimodular(const IntegerMatrix& columns);

// Same predicate, decided differently: find one nonzero maximal minor d, then
// require full column rank modulo every prime dividing d. Accepts up to 32 rows
// and 12 columns. Used in the exhaustive verification loops.
bool extends_to_unimodular_by_primes(const IntegerMatrix& columns);

// Raw-buffer form of the above for hot loops: `a` is row-major rows x cols.
bool extends_to_unimodular_by_primes(const std::int64_t* a, int rows, int cols);

// Hadamard-type bound for |det| of an n x n matrix invertible over Z_2:
// d <= (n+1)^((n+1)/2) / 2^n, decided exactly as 4^n d^2 <= (n+1)^(n+1).
bool hadamard_bound_admits(int n, std::int64_t d);
// True when d meets the bound with equality.
bool hadamard_bound_attained(int n, std::int64_t d);
// Largest integer admitted by the bound above.
std::int64_t hadamard_floor(int n);

// max |det| over n x n binary matrices invertible over Z_2 (1 <= n <= 6).
// Visits each unordered column set once; stops early if the bound is met.
std::int64_t max_abs_det_invertible_binary(int n, int threads = 1);

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) noexcept;
// Distinct prime factors, ascending. p(0) and p(1) are empty.
std::vector<std::int64_t> prime_factors(std::int64_t value);

namespace detail {
// Bareiss determinant of an n x n row-major buffer, destroyed in the process.
// Overflow-checked; n <= 32.
std::int64_t det_in_place(std::int64_t* a, int n);
// Rank of a rows x cols matrix over Z_p.
int rank_mod_p(const std::int64_t* a, int rows, int cols, std::int64_t p);
}  // namespace detail

}  // namespace unilift
