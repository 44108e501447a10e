#include "unilift/gf2.hpp"

#include <algorithm>

namespace unilift {

Gf2Vector make_gf2_vector(int dim, std::uint32_t bits) {
  if (dim < 1 || dim > kMaxDim) throw RangeError("dimension must lie in [1, 12], got " + std::to_string(dim));
  if (bits >> dim) throw RangeError("vector mask exceeds 2^dim");
  return {bits, dim};
}

Gf2Vector parse_gf2_vector(const std::string& text) {
  const int dim = static_cast<int>(text.size());
  if (dim < 1 || dim > kMaxDim) throw RangeError("bit string length must lie in [1, 12]");
  std::uint32_t bits = 0;
  for (int j = 0; j < dim; ++j) {
    if (text[j] == '1') {
      bits |= 1U << j;
    } else if (text[j] != '0') {
      throw PreconditionError("bit string may only contain '0' and '1': " + text);
    }
  }
  return {bits, dim};
}

std::string to_bit_string(const Gf2Vector& v) {
  std::string s(static_cast<std::size_t>(v.dim), '0');
  for (int j = 0; j < v.dim; ++j)
    if (v.coord(j)) s[j] = '1';
  return s;
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0 || rows > 32 || cols > 32) throw RangeError("binary matrix dimensions out of range");
  row_bits_.assign(static_cast<std::size_t>(rows), 0U);
}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  if (rows_ > 32 || cols_ > 32) throw RangeError("binary matrix dimensions out of range");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged binary matrix literal");
    std::uint32_t bits = 0;
    int j = 0;
    for (int x : r) {
      if (x != 0 && x != 1) throw PreconditionError("binary matrix entries must be 0 or 1");
      if (x) bits |= 1U << j;
      ++j;
    }
    row_bits_.push_back(bits);
  }
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row_bits_[i] = 1U << i;
  return m;
}

BinaryMatrix BinaryMatrix::from_columns(std::span<const std::uint32_t> columns, int dim) {
  BinaryMatrix m(dim, static_cast<int>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < dim; ++i)
      if ((columns[j] >> i) & 1U) m.row_bits_[i] |= 1U << j;
  return m;
}

void BinaryMatrix::set(int i, int j, bool value) {
  if (value)
    row_bits_[i] |= 1U << j;
  else
    row_bits_[i] &= ~(1U << j);
}

std::uint32_t BinaryMatrix::column(int j) const {
  std::uint32_t c = 0;
  for (int i = 0; i < rows_; ++i)
    if (at(i, j)) c |= 1U << i;
  return c;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (int j = 0; j < cols_; ++j) t.row_bits_[j] = column(j);
  return t;
}

BinaryMatrix BinaryMatrix::with_rows_permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != rows_) throw ShapeError("row permutation has wrong length");
  BinaryMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) out.row_bits_[i] = row_bits_[perm[i]];
  return out;
}

BinaryMatrix BinaryMatrix::with_columns_permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != cols_) throw ShapeError("column permutation has wrong length");
  BinaryMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, perm[j])) out.row_bits_[i] |= 1U << j;
  return out;
}

Gf2Basis::Gf2Basis(int n, std::span<const std::uint32_t> members) : n_(n) {
  if (n < 1 || n > kMaxDim) throw RangeError("basis dimension must lie in [1, 12]");
  if (static_cast<int>(members.size()) != n) throw ShapeError("a basis of Z_2^n has exactly n members");
  std::copy(members.begin(), members.end(), members_.begin());
  std::sort(members_.begin(), members_.begin() + n);
  for (int i = 0; i < n; ++i)
    if (members_[i] == 0 || (members_[i] >> n) != 0) throw PreconditionError("basis member is zero or out of range");
  if (gf2_rank_masks(masks()) != n) throw PreconditionError("members are linearly dependent over Z_2");
}

int gf2_rank_masks(std::span<const std::uint32_t> masks) noexcept {
  // pivots[b] holds a reduced vector whose highest set bit is b
  std::array<std::uint32_t, 32> pivots{};
  int rank = 0;
  for (std::uint32_t v : masks) {
    while (v != 0) {
      const int b = 31 - std::countl_zero(v);
      if (pivots[b] == 0) {
        pivots[b] = v;
        ++rank;
        break;
      }
      v ^= pivots[b];
    }
  }
  return rank;
}

int gf2_rank(std::span<const Gf2Vector> vs) {
  if (vs.empty()) return 0;
  const int dim = vs.front().dim;
  if (dim > kMaxDim) throw RangeError("dimension exceeds 12");
  std::vector<std::uint32_t> masks;
  masks.reserve(vs.size());
  for (const auto& v : vs) {
    if (v.dim != dim) throw ShapeError("gf2_rank: vectors of mixed dimension");
    masks.push_back(v.bits);
  }
  return gf2_rank_masks(masks);
}

int gf2_det(const BinaryMatrix& m) {
  if (!m.is_square()) throw ShapeError("gf2_det: matrix is not square");
  return gf2_rank_masks(m.row_masks()) == m.rows() ? 1 : 0;
}

boost::multiprecision::cpp_int gl_order(int n) {
  if (n < 1 || n > kMaxDim) throw RangeError("gl_order: n must lie in [1, 12]");
  boost::multiprecision::cpp_int order = 1;
  const boost::multiprecision::cpp_int full = boost::multiprecision::cpp_int(1) << n;
  for (int i = 0; i < n; ++i) order *= full - (boost::multiprecision::cpp_int(1) << i);
  return order;
}

boost::multiprecision::cpp_int basis_count(int n) {
  boost::multiprecision::cpp_int count = gl_order(n);
  for (int i = 2; i <= n; ++i) count /= i;
  return count;
}

int weight_class(const Gf2Vector& v) {
  if (v.is_zero()) throw PreconditionError("weight_class: the zero vector is not a vertex");
  return v.weight();
}

BasisEnumerator::BasisEnumerator(int n) : n_(n) {
  if (n < 2 || n > kMaxEnumDim) throw RangeError("basis enumeration supports 2 <= n <= 6, got " + std::to_string(n));
}

std::uint64_t BasisEnumerator::count() const { return basis_count(n_).convert_to<std::uint64_t>(); }

std::vector<std::uint32_t> BasisEnumerator::first_members() const {
  // A basis with smallest member f exists iff the vectors above f span a
  // complement; checked directly since the candidate range is tiny.
  std::vector<std::uint32_t> out;
  const std::uint32_t top = (1U << n_) - 1U;
  for (std::uint32_t f = 1; f <= top; ++f) {
    std::vector<std::uint32_t> above{f};
    for (std::uint32_t c = f + 1; c <= top; ++c) above.push_back(c);
    if (gf2_rank_masks(above) == n_) out.push_back(f);
  }
  return out;
}

}  // namespace unilift
