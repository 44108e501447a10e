#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unilift/errors.hpp"

namespace unilift {

// Largest ambient dimension accepted by the bit-level routines.
inline constexpr int kMaxDim = 12;
// Largest dimension whose bases we are willing to enumerate.
inline constexpr int kMaxEnumDim = 6;

// A vector of Z_2^n stored as a bitmask: coordinate j (0-based) is bit j.
struct Gf2Vector {
  std::uint32_t bits = 0;
  int dim = 0;

  bool coord(int j) const noexcept { return ((bits >> j) & 1U) != 0; }
  int weight() const noexcept { return std::popcount(bits); }
  bool is_zero() const noexcept { return bits == 0; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend auto operator<=>(const Gf2Vector&, const Gf2Vector&) = default;
};

// Validating constructor; rejects dim outside [1, kMaxDim] and bits >= 2^dim.
Gf2Vector make_gf2_vector(int dim, std::uint32_t bits);

// Builds a vector from a 0/1 string read coordinate-first, e.g. "11000" is
// (1,1,0,0,0).
Gf2Vector parse_gf2_vector(const std::string& text);
std::string to_bit_string(const Gf2Vector& v);

// A dense binary matrix; row i is a bitmask over the columns (column j is bit j).
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int rows, int cols);
  // Rows given as 0/1 entries, e.g. {{1,1,0},{1,0,1},{0,1,1}}.
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BinaryMatrix identity(int n);
  // Matrix whose j-th column is columns[j].
  static BinaryMatrix from_columns(std::span<const std::uint32_t> columns, int dim);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool at(int i, int j) const noexcept { return ((row_bits_[i] >> j) & 1U) != 0; }
  void set(int i, int j, bool value);
  std::uint32_t row(int i) const noexcept { return row_bits_[i]; }
  std::uint32_t column(int j) const;
  std::span<const std::uint32_t> row_masks() const noexcept { return row_bits_; }

  BinaryMatrix transposed() const;
  BinaryMatrix with_rows_permuted(std::span<const int> perm) const;
  BinaryMatrix with_columns_permuted(std::span<const int> perm) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint32_t> row_bits_;
};

// An unordered basis of Z_2^n: n independent vectors sorted ascending by mask.
class Gf2Basis {
 public:
  Gf2Basis() = default;
  // Sorts and validates; throws PreconditionError unless members form a basis.
  Gf2Basis(int n, std::span<const std::uint32_t> members);

  int dim() const noexcept { return n_; }
  std::span<const std::uint32_t> masks() const noexcept { return {members_.data(), static_cast<std::size_t>(n_)}; }
  Gf2Vector operator[](int i) const noexcept { return {members_[i], n_}; }
  // Columns are the members in stored order.
  BinaryMatrix matrix() const { return BinaryMatrix::from_columns(masks(), n_); }

  friend bool operator==(const Gf2Basis& a, const Gf2Basis& b) noexcept {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }
  friend auto operator<=>(const Gf2Basis& a, const Gf2Basis& b) noexcept {
    return a.members_ <=> b.members_;
  }

 private:
  friend class BasisEnumerator;
  int n_ = 0;
  std::array<std::uint32_t, kMaxDim> members_{};
};

int gf2_rank(std::span<const Gf2Vector> vs);
// Mask-only variant used in hot loops; no dimension checks.
int gf2_rank_masks(std::span<const std::uint32_t> masks) noexcept;

// Determinant over Z_2. Throws ShapeError for non-square input.
int gf2_det(const BinaryMatrix& m);

// Number of unordered bases of Z_2^n: prod_{i<n}(2^n - 2^i) / n!.
boost::multiprecision::cpp_int basis_count(int n);
// Order of GL(n, Z_2).
boost::multiprecision::cpp_int gl_order(int n);

// Index i of the weight class V_i holding v, i.e. its number of ones.
int weight_class(const Gf2Vector& v);

namespace detail {

// Set of all vectors of Z_2^n (n <= 6) reachable as s ^ v for s in `span`,
// where `span` is a bitset over the 2^n vectors.
constexpr std::uint64_t translate_set(std::uint64_t span, std::uint32_t v) noexcept {
  constexpr std::array<std::uint64_t, 6> kLow = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (int b = 0; b < 6; ++b) {
    if ((v >> b) & 1U) {
      const int h = 1 << b;
      span = ((span & kLow[b]) << h) | ((span >> h) & kLow[b]);
    }
  }
  return span;
}

}  // namespace detail

// Streams the unordered bases of Z_2^n (2 <= n <= 6) in lexicographic order of
// the sorted mask tuple. Enumeration is a backtracking walk that tracks the
// span of the chosen prefix as a 2^n-bit set.
class BasisEnumerator {
 public:
  explicit BasisEnumerator(int n);

  int dim() const noexcept { return n_; }
  std::uint64_t count() const;

  // Masks that occur as the smallest member of at least one basis, ascending.
  // Sub-streams keyed by these partition the full stream.
  std::vector<std::uint32_t> first_members() const;

  template <class F>
  void for_each(F&& fn) const {
    const std::uint32_t top = (1U << n_) - 1U;
    for (std::uint32_t first = 1; first <= top; ++first) for_each_with_first(first, fn);
  }

  // Visits the bases whose smallest member is `first`, in stream order.
  template <class F>
  void for_each_with_first(std::uint32_t first, F&& fn) const {
    Gf2Basis basis;
    basis.n_ = n_;
    basis.members_[0] = first;
    // span of {first} = {0, first}
    const std::uint64_t span = 1ULL | (1ULL << first);
    extend(basis, 1, span, fn);
  }

 private:
  template <class F>
  void extend(Gf2Basis& basis, int depth, std::uint64_t span, F& fn) const {
    if (depth == n_) {
      fn(static_cast<const Gf2Basis&>(basis));
      return;
    }
    const std::uint32_t top = (1U << n_) - 1U;
    // Remaining slots must fit above the candidate.
    const std::uint32_t last = top - static_cast<std::uint32_t>(n_ - depth - 1);
    for (std::uint32_t c = basis.members_[depth - 1] + 1; c <= last; ++c) {
      if ((span >> c) & 1ULL) continue;
      basis.members_[depth] = c;
      extend(basis, depth + 1, span | detail::translate_set(span, c), fn);
    }
  }

  int n_;
};

}  // namespace unilift
