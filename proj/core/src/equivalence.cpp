#include "unilift/equivalence.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "unilift/parallel.hpp"
#include "unilift/zdet.hpp"

namespace unilift {

namespace {

void check_canon_shape(const BinaryMatrix& m) {
  if (!m.is_square()) throw ShapeError("canonical_key: matrix is not square");
  if (m.rows() > kMaxCanonDim) throw RangeError("canonical_key: order must not exceed 6");
}

// Search state for the canonicalizer. Cells are column masks in position
// order; the permuted image of a row puts, inside each cell, the row's ones at
// the right end of the cell's block.
struct Canonicalizer {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonDim> rows{};
  std::array<std::uint32_t, kMaxCanonDim> best{};
  std::array<std::uint32_t, kMaxCanonDim> current{};
  bool have_best = false;

  static std::uint32_t image(std::uint32_t row, const std::uint32_t* cells, int cell_count, int n) {
    // bit (n-1-pos) of the result is the entry at position pos
    std::uint32_t out = 0;
    int pos = 0;
    for (int c = 0; c < cell_count; ++c) {
      const int size = std::popcount(cells[c]);
      const int ones = std::popcount(cells[c] & row);
      for (int q = size - ones; q < size; ++q) out |= 1U << (n - 1 - (pos + q));
      pos += size;
    }
    return out;
  }

  // `tied`: the placed prefix equals the incumbent's prefix. Otherwise it is
  // strictly smaller (or there is no incumbent) and the leaf replaces it.
  void search(int depth, std::uint32_t used, const std::uint32_t* cells, int cell_count, bool tied) {
    if (depth == n) {
      if (!have_best || !tied) {
        best = current;
        have_best = true;
      }
      return;
    }
    std::uint32_t min_image = ~0U;
    for (int r = 0; r < n; ++r)
      if (!((used >> r) & 1U)) min_image = std::min(min_image, image(rows[r], cells, cell_count, n));

    bool child_tied = tied && have_best;
    if (child_tied) {
      if (min_image > best[depth]) return;
      if (min_image < best[depth]) child_tied = false;
    }
    current[depth] = min_image;

    std::array<std::uint32_t, kMaxCanonDim> tried{};
    int tried_count = 0;
    for (int r = 0; r < n; ++r) {
      if ((used >> r) & 1U) continue;
      if (image(rows[r], cells, cell_count, n) != min_image) continue;
      // identical rows lead to identical subtrees
      if (std::find(tried.begin(), tried.begin() + tried_count, rows[r]) != tried.begin() + tried_count) continue;
      tried[tried_count++] = rows[r];

      std::array<std::uint32_t, kMaxCanonDim> refined{};
      int refined_count = 0;
      for (int c = 0; c < cell_count; ++c) {
        const std::uint32_t zeros = cells[c] & ~rows[r];
        const std::uint32_t ones = cells[c] & rows[r];
        if (zeros) refined[refined_count++] = zeros;
        if (ones) refined[refined_count++] = ones;
      }
      search(depth + 1, used | (1U << r), refined.data(), refined_count, child_tied);
      // the incumbent now shares this prefix
      child_tied = true;
    }
  }
};

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct PartialEntry {
  std::int64_t abs_det = 0;
  std::uint64_t column_sets = 0;
};

using PartialCensus = std::unordered_map<std::uint64_t, PartialEntry>;

ClassCensus finalize(int n, const PartialCensus& merged) {
  std::map<std::int64_t, std::vector<CensusClass>> by_det;
  const std::uint64_t fact = factorial(n);
  for (const auto& [canon, entry] : merged) {
    CensusClass cls;
    cls.key.n = n;
    cls.key.canon = canon;
    cls.key.abs_det = entry.abs_det;
    cls.key.gf2_det = static_cast<int>(entry.abs_det & 1);
    cls.column_sets = entry.column_sets;
    cls.orbit_size = entry.column_sets * fact;
    by_det[entry.abs_det].push_back(cls);
  }
  ClassCensus census;
  census.n = n;
  for (auto& [det, classes] : by_det) {
    std::sort(classes.begin(), classes.end(), [](const CensusClass& a, const CensusClass& b) { return a.key < b.key; });
    CensusBucket bucket;
    bucket.abs_det = det;
    bucket.classes = std::move(classes);
    std::set<std::uint64_t> closed;
    for (const auto& c : bucket.classes) {
      bucket.orbit_total += c.orbit_size;
      const std::uint64_t t = canonical_bits(c.key.matrix().transposed());
      closed.insert(std::min(c.key.canon, t));
    }
    bucket.transpose_closed_classes = closed.size();
    census.buckets.push_back(std::move(bucket));
  }
  return census;
}

PartialCensus to_partial(const ClassCensus& c) {
  PartialCensus p;
  for (const auto& b : c.buckets)
    for (const auto& cls : b.classes) p[cls.key.canon] = {b.abs_det, cls.column_sets};
  return p;
}

}  // namespace

std::uint64_t encode_row_major(const BinaryMatrix& m) {
  const int n = m.rows();
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) bits |= 1ULL << (n * m.cols() - 1 - (i * m.cols() + j));
  return bits;
}

BinaryMatrix decode_row_major(std::uint64_t bits, int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((bits >> (n * n - 1 - (i * n + j))) & 1ULL) m.set(i, j, true);
  return m;
}

BinaryMatrix EquivalenceKey::matrix() const { return decode_row_major(canon, n); }

std::string EquivalenceKey::bit_string() const {
  std::string s(static_cast<std::size_t>(n * n), '0');
  for (int p = 0; p < n * n; ++p)
    if ((canon >> (n * n - 1 - p)) & 1ULL) s[p] = '1';
  return s;
}

std::uint64_t canonical_bits(const BinaryMatrix& m) {
  check_canon_shape(m);
  const int n = m.rows();
  if (n == 0) return 0;
  Canonicalizer c;
  c.n = n;
  for (int i = 0; i < n; ++i) c.rows[i] = m.row(i);
  const std::uint32_t all = (1U << n) - 1U;
  c.search(0, 0, &all, 1, false);
  std::uint64_t bits = 0;
  for (int i = 0; i < n; ++i) bits = (bits << n) | c.best[i];
  return bits;
}

EquivalenceKey canonical_key(const BinaryMatrix& m) {
  EquivalenceKey key;
  key.n = m.rows();
  key.canon = canonical_bits(m);
  const std::int64_t d = int_det(IntegerMatrix::from_binary(m));
  key.abs_det = d < 0 ? -d : d;
  key.gf2_det = gf2_det(m);
  return key;
}

bool equivalent(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("equivalent: shape mismatch");
  return canonical_bits(a) == canonical_bits(b);
}

const CensusBucket* ClassCensus::bucket(std::int64_t abs_det) const {
  for (const auto& b : buckets)
    if (b.abs_det == abs_det) return &b;
  return nullptr;
}

std::uint64_t ClassCensus::total_orbit_size() const {
  std::uint64_t total = 0;
  for (const auto& b : buckets) total += b.orbit_total;
  return total;
}

std::size_t ClassCensus::class_count() const {
  std::size_t total = 0;
  for (const auto& b : buckets) total += b.classes.size();
  return total;
}

const CensusClass* ClassCensus::find(const BinaryMatrix& m) const {
  if (m.rows() != n || !m.is_square()) return nullptr;
  const std::uint64_t canon = canonical_bits(m);
  for (const auto& b : buckets) {
    auto it = std::lower_bound(b.classes.begin(), b.classes.end(), canon,
                               [](const CensusClass& c, std::uint64_t v) { return c.key.canon < v; });
    if (it != b.classes.end() && it->key.canon == canon) return &*it;
  }
  return nullptr;
}

ClassCensus det_census(int n, int threads, bool allow_order6) {
  if (n < 2 || n > kMaxCanonDim) throw RangeError("det_census: n must lie in [2, 6]");
  if (n == 6 && !allow_order6) throw RangeError("det_census: n = 6 requires the long-running flag");
  const BasisEnumerator bases(n);
  const std::vector<std::uint32_t> firsts = bases.first_members();
  std::vector<PartialCensus> partials(firsts.size());
  detail::parallel_for_index(firsts.size(), threads, [&](std::size_t task, int) {
    PartialCensus& local = partials[task];
    std::array<std::int64_t, kMaxCanonDim * kMaxCanonDim> buf{};
    bases.for_each_with_first(firsts[task], [&](const Gf2Basis& b) {
      const auto cols = b.masks();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) buf[i * n + j] = (cols[j] >> i) & 1U;
      std::int64_t d = detail::det_in_place(buf.data(), n);
      if (d < 0) d = -d;
      const std::uint64_t canon = canonical_bits(BinaryMatrix::from_columns(cols, n));
      auto& entry = local[canon];
      entry.abs_det = d;
      ++entry.column_sets;
    });
  });
  PartialCensus merged;
  for (const auto& p : partials)
    for (const auto& [canon, entry] : p) {
      auto& m = merged[canon];
      m.abs_det = entry.abs_det;
      m.column_sets += entry.column_sets;
    }
  return finalize(n, merged);
}

ClassCensus merge_census(const ClassCensus& a, const ClassCensus& b) {
  if (a.n != b.n) throw ShapeError("merge_census: orders differ");
  PartialCensus merged = to_partial(a);
  for (const auto& [canon, entry] : to_partial(b)) {
    auto& m = merged[canon];
    m.abs_det = entry.abs_det;
    m.column_sets += entry.column_sets;
  }
  return finalize(a.n, merged);
}

std::string census_text(const ClassCensus& census) {
  std::ostringstream out;
  for (const auto& b : census.buckets)
    for (const auto& c : b.classes)
      out << census.n << ' ' << b.abs_det << ' ' << c.orbit_size << ' ' << c.key.bit_string() << '\n';
  return out.str();
}

bool TableMatchReport::all_ok() const {
  return std::all_of(groups.begin(), groups.end(),
                     [](const ReferenceGroupVerdict& g) { return g.all_found && (!g.complete || g.bucket_exhausted); });
}

TableMatchReport match_paper_tables(const ClassCensus& census) {
  TableMatchReport report;
  for (const auto& group : reference_groups()) {
    if (group.n != census.n) continue;
    ReferenceGroupVerdict verdict;
    verdict.group = group.name;
    verdict.complete = group.complete;
    verdict.all_found = true;
    std::set<std::uint64_t> classes;
    const CensusBucket* bucket = census.bucket(group.abs_det);
    for (const auto& ref : group.members) {
      ReferenceMatch match;
      match.group = group.name;
      match.label = ref.label;
      match.expected_abs_det = group.abs_det;
      const std::int64_t d = int_det(IntegerMatrix::from_binary(ref.matrix));
      match.actual_abs_det = d < 0 ? -d : d;
      if (bucket != nullptr) {
        const std::uint64_t canon = canonical_bits(ref.matrix);
        for (const auto& c : bucket->classes) {
          if (c.key.canon == canon) {
            match.found = true;
            match.canon = c.key.bit_string();
            classes.insert(canon);
          }
        }
      }
      verdict.all_found = verdict.all_found && match.found;
      report.matches.push_back(std::move(match));
    }
    verdict.distinct_classes = classes.size();
    verdict.bucket_classes = bucket ? bucket->classes.size() : 0;
    verdict.bucket_exhausted = bucket != nullptr && verdict.all_found && classes.size() == bucket->classes.size();
    report.groups.push_back(verdict);
  }
  return report;
}

}  // namespace unilift
