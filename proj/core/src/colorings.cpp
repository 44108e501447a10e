#include "unilift/colorings.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <sstream>

#include "unilift/parallel.hpp"
#include "unilift/zdet.hpp"

namespace unilift {

Coloring::Coloring(int n, int r) : n_(n), r_(r) {
  if (n < 1 || n > kMaxEnumDim) throw RangeError("coloring: source dimension must lie in [1, 6]");
  if (r < 1 || r > 32) throw RangeError("coloring: target rank must lie in [1, 32]");
  images_.assign(static_cast<std::size_t>((1U << n) * static_cast<unsigned>(r)), 0);
}

Coloring Coloring::from_table_order(int n, int r, std::span<const std::vector<std::int64_t>> rows) {
  const UniversalComplexModel model = universal_vertex_table(n);
  if (static_cast<int>(rows.size()) != model.vertex_count()) throw ShapeError("coloring: expected 2^n - 1 images");
  Coloring c(n, r);
  for (int i = 0; i < model.vertex_count(); ++i) c.set_image(model.vertex(i).bits, rows[static_cast<std::size_t>(i)]);
  return c;
}

std::span<const std::int64_t> Coloring::image(std::uint32_t mask) const {
  return {images_.data() + static_cast<std::size_t>(mask) * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
}

void Coloring::set_image(std::uint32_t mask, std::span<const std::int64_t> values) {
  if (mask == 0 || mask >= (1U << n_)) throw RangeError("coloring: vertex mask out of range");
  if (static_cast<int>(values.size()) != r_) throw ShapeError("coloring: image length must equal r");
  std::copy(values.begin(), values.end(), images_.begin() + static_cast<std::ptrdiff_t>(mask) * r_);
}

bool Coloring::restricted_shape() const {
  if (r_ < n_) return false;
  for (std::uint32_t mask = 1; mask < (1U << n_); ++mask) {
    const auto img = image(mask);
    for (int j = 0; j < n_; ++j)
      if (img[static_cast<std::size_t>(j)] != static_cast<std::int64_t>((mask >> j) & 1U)) return false;
  }
  return true;
}

std::vector<std::uint32_t> Coloring::non_primitive_vertices() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (1U << n_); ++mask) {
    std::int64_t g = 0;
    for (std::int64_t x : image(mask)) g = gcd_abs(g, x);
    if (g != 1) out.push_back(mask);
  }
  return out;
}

bool Coloring::all_primitive() const { return non_primitive_vertices().empty(); }

Coloring claim5_coloring() {
  constexpr int n = 5;
  Coloring c(n, 7);
  constexpr std::array<std::int64_t, 6> first = {0, 0, 1, 1, 1, 2};   // by weight
  constexpr std::array<std::int64_t, 6> second = {0, 2, 0, 1, 0, 2};  // by weight
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::array<std::int64_t, 7> img{};
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
    const int w = std::popcount(mask);
    img[5] = first[static_cast<std::size_t>(w)];
    img[6] = second[static_cast<std::size_t>(w)];
    c.set_image(mask, img);
  }
  return c;
}

std::vector<std::uint32_t> theorem2_coset_representatives(int n, Gf2Vector x, Gf2Vector y) {
  if (n < 2 || n > kMaxEnumDim) throw RangeError("theorem2: n must lie in [2, 6]");
  if (x.dim != n || y.dim != n || (x.bits >> n) || (y.bits >> n)) throw ShapeError("theorem2: x and y must lie in Z_2^n");
  if (x.bits == 0 || y.bits == 0 || x.bits == y.bits)
    throw PreconditionError("theorem2: x and y must be distinct nonzero vectors");
  const std::uint32_t xs = x.bits, ys = y.bits, xy = xs ^ ys;
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (mask == xs || mask == ys || mask == xy) continue;
    const std::uint32_t rep = std::min({mask, mask ^ xs, mask ^ ys, mask ^ xy});
    if (rep == mask) reps.push_back(mask);
  }
  return reps;
}

Coloring theorem2_coloring(int n, Gf2Vector x, Gf2Vector y) {
  const std::vector<std::uint32_t> reps = theorem2_coset_representatives(n, x, y);
  const int r = (1 << (n - 2)) + 1;
  Coloring c(n, r);
  const std::uint32_t shifts[4] = {0, x.bits, y.bits, x.bits ^ y.bits};
  // images of 0, x, y, x+y restricted to the first two coordinates
  const std::int64_t head[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  std::vector<std::int64_t> img(static_cast<std::size_t>(r));
  for (int s = 1; s < 4; ++s) {
    std::fill(img.begin(), img.end(), 0);
    img[0] = head[s][0];
    img[1] = head[s][1];
    c.set_image(shifts[s], img);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (int s = 0; s < 4; ++s) {
      std::fill(img.begin(), img.end(), 0);
      img[0] = head[s][0];
      img[1] = head[s][1];
      img[2 + i] = 1;
      c.set_image(reps[i] ^ shifts[s], img);
    }
  }
  return c;
}

Coloring example2_coloring() {
  // Column k of `source` is a vertex of K_1^4; the same column of `target` is its image.
  static constexpr int kSource[4][15] = {
      {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
      {0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
      {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1},
      {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1},
  };
  static constexpr int kTarget[5][15] = {
      {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
      {0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
      {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1},
  };
  Coloring c(4, 5);
  for (int k = 0; k < 15; ++k) {
    std::uint32_t mask = 0;
    for (int i = 0; i < 4; ++i)
      if (kSource[i][k]) mask |= 1U << i;
    std::array<std::int64_t, 5> img{};
    for (int i = 0; i < 5; ++i) img[static_cast<std::size_t>(i)] = kTarget[i][k];
    c.set_image(mask, img);
  }
  return c;
}

VerificationReport verify_coloring(const Coloring& c, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const int n = c.source_dim();
  const int r = c.target_rank();
  if (n < 2 || n > kMaxEnumDim) throw RangeError("verify_coloring: n must lie in [2, 6]");
  VerificationReport report;
  report.n = n;
  report.r = r;
  const BasisEnumerator bases(n);
  report.expected_total = bases.count();
  report.non_primitive = c.non_primitive_vertices();
  if (!report.non_primitive.empty()) {
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  struct Partial {
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<Gf2Basis> failures;
  };
  const std::vector<std::uint32_t> firsts = bases.first_members();
  std::vector<Partial> partials(firsts.size());
  detail::parallel_for_index(firsts.size(), threads, [&](std::size_t task, int) {
    Partial& part = partials[task];
    std::array<std::int64_t, 32 * kMaxEnumDim> buf{};
    bases.for_each_with_first(firsts[task], [&](const Gf2Basis& b) {
      ++part.checked;
      const auto cols = b.masks();
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        for (int d = a + 1; d < n && ok; ++d) {
          const auto ia = c.image(cols[static_cast<std::size_t>(a)]);
          const auto id = c.image(cols[static_cast<std::size_t>(d)]);
          if (std::equal(ia.begin(), ia.end(), id.begin())) ok = false;
        }
      if (ok) {
        for (int j = 0; j < n; ++j) {
          const auto img = c.image(cols[static_cast<std::size_t>(j)]);
          for (int i = 0; i < r; ++i) buf[static_cast<std::size_t>(i * n + j)] = img[static_cast<std::size_t>(i)];
        }
        ok = extends_to_unimodular_by_primes(buf.data(), r, n);
      }
      if (!ok) {
        ++part.failed;
        if (part.failures.size() < kMaxReportedFailures) part.failures.push_back(b);
      }
    });
  });
  for (auto& part : partials) {
    report.total_checked += part.checked;
    report.failure_count += part.failed;
    for (auto& f : part.failures)
      if (report.failures.size() < kMaxReportedFailures) report.failures.push_back(f);
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string coloring_text(const Coloring& c) {
  const UniversalComplexModel model = universal_vertex_table(c.source_dim());
  std::ostringstream out;
  out << c.source_dim() << ' ' << c.target_rank() << '\n';
  for (const auto& v : model.vertices) {
    const auto img = c.image(v.bits);
    for (std::size_t i = 0; i < img.size(); ++i) out << (i ? " " : "") << img[i];
    out << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text) {
  std::vector<std::vector<std::int64_t>> lines;
  std::vector<int> line_numbers;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::vector<std::int64_t> values;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || tok.empty()) throw ParseError(line_no, "expected an integer, got '" + tok + "'");
      values.push_back(v);
    }
    if (!values.empty()) {
      lines.push_back(std::move(values));
      line_numbers.push_back(line_no);
    }
  }
  if (lines.empty()) throw ParseError(line_no, "empty coloring file");
  if (lines.front().size() != 2) throw ParseError(line_numbers.front(), "header must be 'n r'");
  const auto n = lines.front()[0];
  const auto r = lines.front()[1];
  if (n < 2 || n > kMaxEnumDim) throw ParseError(line_numbers.front(), "n must lie in [2, 6]");
  if (r < 1 || r > 32) throw ParseError(line_numbers.front(), "r must lie in [1, 32]");
  const std::size_t expected = (std::size_t{1} << n) - 1;
  if (lines.size() - 1 != expected)
    throw ParseError(line_no, "expected " + std::to_string(expected) + " image lines, found " + std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (static_cast<std::int64_t>(lines[i].size()) != r)
      throw ParseError(line_numbers[i], "image must have exactly r = " + std::to_string(r) + " entries");
  return Coloring::from_table_order(static_cast<int>(n), static_cast<int>(r),
                                    std::span<const std::vector<std::int64_t>>(lines).subspan(1));
}

InvariantsRecord universal_invariants(int n, int threads) {
  if (n < 2 || n > kMaxEnumDim) throw RangeError("universal_invariants: n must lie in [2, 6]");
  const int m = (1 << n) - 1;
  std::optional<int> best;
  std::string source;
  const Coloring thm2 = theorem2_coloring(n, make_gf2_vector(n, 1), make_gf2_vector(n, 2));
  if (verify_coloring(thm2, threads).pass()) {
    best = thm2.target_rank();
    source = "coset-coloring(e1,e2)";
  }
  if (n == 5) {
    const Coloring c5 = claim5_coloring();
    if (verify_coloring(c5, threads).pass() && (!best || c5.target_rank() < *best)) {
      best = c5.target_rank();
      source = "weight-class-coloring";
    }
  }
  InvariantsRecord rec = make_invariants(m, n, m, n, best, source);
  if (!rec.chain_holds()) throw InternalConsistencyError("invariant bound chain violated");
  return rec;
}

}  // namespace unilift
