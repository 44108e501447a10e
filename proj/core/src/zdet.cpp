#include "unilift/zdet.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <array>
#include <atomic>
#include <numeric>

#include "unilift/parallel.hpp"

namespace unilift {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(i128 v) {
  if (v > kInt64Max || v < -kInt64Max) throw ArithmeticOverflow("integer determinant left the 64-bit range");
  return static_cast<std::int64_t>(v);
}

void check_dims(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > kMaxIntDim || cols > kMaxIntDim)
    throw RangeError("integer matrix dimensions must lie in [0, 12]");
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // p is prime and small; extended Euclid
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
  data_.assign(static_cast<std::size_t>(rows * cols), 0);
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  check_dims(rows_, cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged integer matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_binary(const BinaryMatrix& b) {
  IntegerMatrix m(b.rows(), b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m(i, j) = b.at(i, j) ? 1 : 0;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::span<const std::vector<std::int64_t>> columns) {
  const int k = static_cast<int>(columns.size());
  const int m = k == 0 ? 0 : static_cast<int>(columns.front().size());
  IntegerMatrix out(m, k);
  for (int j = 0; j < k; ++j) {
    if (static_cast<int>(columns[j].size()) != m) throw ShapeError("vectors of mixed length");
    for (int i = 0; i < m; ++i) out(i, j) = columns[j][i];
  }
  return out;
}

std::vector<std::int64_t> IntegerMatrix::row(int i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

std::vector<std::int64_t> IntegerMatrix::column(int j) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntegerMatrix::set_row(int i, std::span<const std::int64_t> values) {
  if (i < 0 || i >= rows_) throw RangeError("row index out of range");
  if (static_cast<int>(values.size()) != cols_) throw ShapeError("row length does not match column count");
  std::copy(values.begin(), values.end(), data_.begin() + i * cols_);
}

IntegerMatrix IntegerMatrix::stacked(const IntegerMatrix& below) const {
  if (below.cols_ != cols_) throw ShapeError("stacked: column counts differ");
  IntegerMatrix out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

StackedLiftMatrix::StackedLiftMatrix(BinaryMatrix base_matrix, std::vector<std::vector<std::int64_t>> rows)
    : base(std::move(base_matrix)), extra_rows(std::move(rows)) {
  if (!base.is_square()) throw ShapeError("lift base must be square");
  if (gf2_det(base) != 1) throw PreconditionError("lift base must be invertible over Z_2");
  if (base.rows() + static_cast<int>(extra_rows.size()) > kMaxIntDim) throw RangeError("n + k must not exceed 12");
  for (const auto& r : extra_rows)
    if (static_cast<int>(r.size()) != base.cols()) throw ShapeError("extra row length must equal n");
}

IntegerMatrix StackedLiftMatrix::matrix() const {
  IntegerMatrix m = IntegerMatrix::from_binary(base);
  IntegerMatrix extra(static_cast<int>(extra_rows.size()), base.cols());
  for (std::size_t t = 0; t < extra_rows.size(); ++t) extra.set_row(static_cast<int>(t), extra_rows[t]);
  return m.stacked(extra);
}

std::vector<std::vector<std::int64_t>> StackedLiftMatrix::columns() const {
  const IntegerMatrix m = matrix();
  std::vector<std::vector<std::int64_t>> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return cols;
}

namespace detail {

std::int64_t det_in_place(std::int64_t* a, int n) {
  if (n == 0) return 1;
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    const i128 pivot = a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const i128 lead = a[i * n + k];
      for (int j = k + 1; j < n; ++j) {
        const i128 v = (static_cast<i128>(a[i * n + j]) * pivot - lead * static_cast<i128>(a[k * n + j])) / prev;
        a[i * n + j] = narrow(v);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[n * n - 1];
}

int rank_mod_p(const std::int64_t* a, int rows, int cols, std::int64_t p) {
  std::array<std::int64_t, 32 * kMaxIntDim> buf{};
  for (int i = 0; i < rows * cols; ++i) buf[i] = ((a[i] % p) + p) % p;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = rank;
    while (piv < rows && buf[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (int j = c; j < cols; ++j) std::swap(buf[rank * cols + j], buf[piv * cols + j]);
    const std::int64_t inv = mod_inverse(buf[rank * cols + c], p);
    for (int j = c; j < cols; ++j) buf[rank * cols + j] = buf[rank * cols + j] * inv % p;
    for (int i = rank + 1; i < rows; ++i) {
      const std::int64_t f = buf[i * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) buf[i * cols + j] = ((buf[i * cols + j] - f * buf[rank * cols + j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

std::int64_t int_det(const IntegerMatrix& m) {
  if (!m.is_square()) throw ShapeError("int_det: matrix is not square");
  std::array<std::int64_t, kMaxIntDim * kMaxIntDim> buf{};
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) buf[i * n + j] = m(i, j);
  return detail::det_in_place(buf.data(), n);
}

std::int64_t replaced_row_det(const BinaryMatrix& a, int j, std::span<const std::int64_t> s) {
  if (!a.is_square()) throw ShapeError("replaced_row_det: matrix is not square");
  if (j < 0 || j >= a.rows()) throw RangeError("replaced_row_det: row index out of range");
  if (static_cast<int>(s.size()) != a.cols()) throw ShapeError("replaced_row_det: row length must equal n");
  IntegerMatrix m = IntegerMatrix::from_binary(a);
  m.set_row(j, s);
  return int_det(m);
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) noexcept {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool star1(const BinaryMatrix& a, std::span<const std::int64_t> s) {
  if (!a.is_square()) throw ShapeError("star1: matrix is not square");
  if (gf2_det(a) != 1) throw PreconditionError("star1: base matrix is singular over Z_2");
  std::int64_t g = int_det(IntegerMatrix::from_binary(a));
  for (int j = 0; j < a.rows() && g != 1; ++j) g = gcd_abs(g, replaced_row_det(a, j, s));
  return g == 1;
}

std::int64_t cofactor_expansion_check(const BinaryMatrix& a, std::span<const std::int64_t> s, std::int64_t a_last,
                                      std::span<const std::int64_t> coeffs) {
  if (!a.is_square()) throw ShapeError("cofactor_expansion_check: matrix is not square");
  if (gf2_det(a) != 1) throw PreconditionError("cofactor_expansion_check: base matrix is singular over Z_2");
  if (static_cast<int>(coeffs.size()) != a.rows()) throw ShapeError("coefficient vector length must equal n");
  i128 acc = static_cast<i128>(a_last) * int_det(IntegerMatrix::from_binary(a));
  for (int j = 0; j < a.rows(); ++j) acc -= static_cast<i128>(coeffs[j]) * replaced_row_det(a, j, s);
  return narrow(acc);
}

bool extends_to_unimodular(const IntegerMatrix& columns) {
  const int m = columns.rows();
  const int k = columns.cols();
  if (k > m) throw ShapeError("extends_to_unimodular: more vectors than coordinates");
  if (k == 0) return true;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  std::array<std::int64_t, kMaxIntDim * kMaxIntDim> buf{};
  std::int64_t g = 0;
  while (true) {
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) buf[r * k + c] = columns(pick[r], c);
    g = gcd_abs(g, detail::det_in_place(buf.data(), k));
    if (g == 1) return true;
    // next k-combination of [0, m)
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int r = i + 1; r < k; ++r) pick[r] = pick[r - 1] + 1;
  }
  return false;
}

bool extends_to_unimodular(std::span<const std::vector<std::int64_t>> vectors) {
  if (vectors.empty()) return true;
  return extends_to_unimodular(IntegerMatrix::from_columns(vectors));
}

std::vector<std::int64_t> prime_factors(std::int64_t value) {
  std::vector<std::int64_t> out;
  std::int64_t v = value < 0 ? -value : value;
  for (std::int64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool extends_to_unimodular_by_primes(const std::int64_t* a, int rows, int cols) {
  if (cols == 0) return true;
  if (cols > rows) return false;
  if (rows > 32 || cols > kMaxIntDim) throw RangeError("extends_to_unimodular_by_primes: at most 32 x 12");
  std::array<std::int64_t, 32 * kMaxIntDim> buf{};
  std::copy(a, a + rows * cols, buf.begin());
  // Bareiss with row pivoting over the rectangular matrix; the final pivot is
  // (up to sign) the maximal minor on the chosen pivot rows.
  i128 prev = 1;
  for (int k = 0; k < cols; ++k) {
    int p = k;
    while (p < rows && buf[p * cols + k] == 0) ++p;
    if (p == rows) return false;  // rank deficient: every maximal minor is 0
    if (p != k)
      for (int j = 0; j < cols; ++j) std::swap(buf[k * cols + j], buf[p * cols + j]);
    const i128 pivot = buf[k * cols + k];
    for (int i = k + 1; i < rows; ++i) {
      const i128 lead = buf[i * cols + k];
      for (int j = k + 1; j < cols; ++j) {
        const i128 v = (static_cast<i128>(buf[i * cols + j]) * pivot - lead * static_cast<i128>(buf[k * cols + j])) / prev;
        buf[i * cols + j] = narrow(v);
      }
      buf[i * cols + k] = 0;
    }
    prev = pivot;
  }
  const std::int64_t minor = narrow(prev);
  if (minor == 1 || minor == -1) return true;
  for (std::int64_t p : prime_factors(minor))
    if (detail::rank_mod_p(a, rows, cols, p) != cols) return false;
  return true;
}

bool extends_to_unimodular_by_primes(const IntegerMatrix& columns) {
  std::vector<std::int64_t> flat;
  flat.reserve(static_cast<std::size_t>(columns.rows() * columns.cols()));
  for (int i = 0; i < columns.rows(); ++i)
    for (int j = 0; j < columns.cols(); ++j) flat.push_back(columns(i, j));
  return extends_to_unimodular_by_primes(flat.data(), columns.rows(), columns.cols());
}

bool hadamard_bound_admits(int n, std::int64_t d) {
  using boost::multiprecision::cpp_int;
  if (n < 1 || n > kMaxDim) throw RangeError("hadamard_bound_admits: n must lie in [1, 12]");
  if (d < 1) throw PreconditionError("hadamard_bound_admits: d must be positive");
  const cpp_int lhs = (cpp_int(1) << (2 * n)) * cpp_int(d) * cpp_int(d);
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(n + 1), static_cast<unsigned>(n + 1));
  return lhs <= rhs;
}

bool hadamard_bound_attained(int n, std::int64_t d) {
  using boost::multiprecision::cpp_int;
  if (!hadamard_bound_admits(n, d)) return false;
  return (cpp_int(1) << (2 * n)) * cpp_int(d) * cpp_int(d) ==
         boost::multiprecision::pow(cpp_int(n + 1), static_cast<unsigned>(n + 1));
}

std::int64_t hadamard_floor(int n) {
  using boost::multiprecision::cpp_int;
  if (n < 1 || n > kMaxDim) throw RangeError("hadamard_floor: n must lie in [1, 12]");
  const cpp_int rhs = boost::multiprecision::pow(cpp_int(n + 1), static_cast<unsigned>(n + 1));
  const cpp_int q = rhs >> (2 * n);
  return boost::multiprecision::sqrt(q).convert_to<std::int64_t>();
}

std::int64_t max_abs_det_invertible_binary(int n, int threads) {
  if (n < 1 || n > kMaxEnumDim) throw RangeError("max_abs_det_invertible_binary: n must lie in [1, 6]");
  if (n == 1) return 1;
  const BasisEnumerator bases(n);
  const std::vector<std::uint32_t> firsts = bases.first_members();
  const std::int64_t ceiling = hadamard_floor(n);
  std::atomic<std::int64_t> best{1};
  detail::parallel_for_index(firsts.size(), threads, [&](std::size_t task, int) {
    if (best.load(std::memory_order_relaxed) >= ceiling) return;
    std::int64_t local = 1;
    std::array<std::int64_t, kMaxEnumDim * kMaxEnumDim> buf{};
    bases.for_each_with_first(firsts[task], [&](const Gf2Basis& b) {
      const auto cols = b.masks();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf[i * n + j] = (cols[j] >> i) & 1U;
      std::int64_t d = detail::det_in_place(buf.data(), n);
      if (d < 0) d = -d;
      local = std::max(local, d);
    });
    std::int64_t seen = best.load();
    while (local > seen && !best.compare_exchange_weak(seen, local)) {
    }
  });
  return best.load();
}

}  // namespace unilift
