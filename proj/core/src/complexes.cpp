#include "unilift/complexes.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace unilift {

namespace {

// Reads the mask as a coordinate-first tuple and returns it as a number with
// coordinate 0 most significant.
std::uint32_t reversed(std::uint32_t mask, int n) {
  std::uint32_t out = 0;
  for (int j = 0; j < n; ++j)
    if ((mask >> j) & 1U) out |= 1U << (n - 1 - j);
  return out;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

int UniversalComplexModel::index_of(std::uint32_t mask) const {
  if (mask == 0 || mask >= index_by_mask.size()) throw RangeError("vertex mask out of range");
  return index_by_mask[mask];
}

UniversalComplexModel universal_vertex_table(int n) {
  if (n < 2 || n > kMaxEnumDim) throw RangeError("universal_vertex_table: n must lie in [2, 6]");
  UniversalComplexModel model;
  model.n = n;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) model.vertices.push_back({mask, n});
  std::sort(model.vertices.begin(), model.vertices.end(), [n](const Gf2Vector& a, const Gf2Vector& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return reversed(a.bits, n) > reversed(b.bits, n);
  });
  model.index_by_mask.assign(1U << n, -1);
  for (int i = 0; i < model.vertex_count(); ++i) model.index_by_mask[model.vertices[i].bits] = i;
  return model;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : m_(vertex_count), facets_(std::move(facets)) {
  if (facets_.empty() || m_ <= 0) throw PreconditionError("simplicial complex is empty");
  std::vector<bool> covered(static_cast<std::size_t>(m_), false);
  for (auto& f : facets_) {
    if (f.empty()) throw PreconditionError("empty facet");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw PreconditionError("facet repeats a vertex");
    for (int v : f) {
      if (v < 0 || v >= m_) throw RangeError("facet vertex out of range");
      covered[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t a = 0; a < facets_.size(); ++a)
    for (std::size_t b = 0; b < facets_.size(); ++b)
      if (a != b && facets_[a].size() <= facets_[b].size() && is_subset(facets_[a], facets_[b]))
        throw PreconditionError("facet " + std::to_string(a + 1) + " is contained in facet " + std::to_string(b + 1));
  for (int v = 0; v < m_; ++v)
    if (!covered[static_cast<std::size_t>(v)]) throw PreconditionError("vertex " + std::to_string(v + 1) + " lies in no facet");
}

int SimplicialComplex::max_facet_size() const noexcept {
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.size());
  return static_cast<int>(best);
}

std::vector<std::uint64_t> SimplicialComplex::adjacency() const {
  if (m_ > 64) throw RangeError("adjacency: at most 64 vertices");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(m_), 0);
  for (const auto& f : facets_)
    for (int a : f)
      for (int b : f)
        if (a != b) adj[static_cast<std::size_t>(a)] |= 1ULL << b;
  return adj;
}

SimplicialComplex load_complex(std::string_view text) {
  std::vector<std::vector<int>> facets;
  std::vector<int> facet_lines;
  int max_index = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> facet;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      int value = 0;
      const auto token = line.substr(i, j - i);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line_no, "expected a vertex index, got '" + std::string(token) + "'");
      if (value < 1) throw ParseError(line_no, "vertex indices are 1-based");
      facet.push_back(value - 1);
      max_index = std::max(max_index, value);
      i = j;
    }
    if (!facet.empty()) {
      std::vector<int> sorted = facet;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(line_no, "facet repeats a vertex");
      facets.push_back(std::move(facet));
      facet_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (facets.empty()) throw ParseError(line_no, "no facets found");
  for (auto& f : facets) std::sort(f.begin(), f.end());
  for (std::size_t a = 0; a < facets.size(); ++a)
    for (std::size_t b = 0; b < facets.size(); ++b)
      if (a != b && facets[a].size() <= facets[b].size() && is_subset(facets[a], facets[b]))
        throw ParseError(facet_lines[a], "facet is contained in the facet on line " + std::to_string(facet_lines[b]));
  return SimplicialComplex(max_index, std::move(facets));
}

std::string facet_text(const SimplicialComplex& k) {
  std::ostringstream out;
  for (const auto& f : k.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i] + 1;
    out << '\n';
  }
  return out.str();
}

SimplicialComplex universal_complex(int n) {
  const UniversalComplexModel model = universal_vertex_table(n);
  std::vector<std::vector<int>> facets;
  BasisEnumerator(n).for_each([&](const Gf2Basis& b) {
    std::vector<int> f;
    for (std::uint32_t mask : b.masks()) f.push_back(model.index_of(mask));
    facets.push_back(std::move(f));
  });
  return SimplicialComplex(model.vertex_count(), std::move(facets));
}

namespace {

struct GraphColorer {
  int m = 0;
  std::vector<std::uint64_t> adj;
  std::vector<int> order;
  std::vector<int> color;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  bool colorable(int depth, int used, int k) {
    if (++nodes > budget) throw BudgetExceeded("chromatic_number: node budget exhausted");
    if (depth == m) return true;
    const int v = order[static_cast<std::size_t>(depth)];
    // new colours are interchangeable: only open colour `used`
    const int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (std::uint64_t nb = adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
        const int u = std::countr_zero(nb);
        if (color[static_cast<std::size_t>(u)] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (colorable(depth + 1, std::max(used, c + 1), k)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

int chromatic_number(const SimplicialComplex& k, std::uint64_t node_budget) {
  const int m = k.vertex_count();
  if (m > kMaxColoringVertices) throw RangeError("chromatic_number: at most 24 vertices");
  GraphColorer g;
  g.m = m;
  g.adj = k.adjacency();
  g.budget = node_budget;
  g.order.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) g.order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(g.order.begin(), g.order.end(), [&](int a, int b) {
    return std::popcount(g.adj[static_cast<std::size_t>(a)]) > std::popcount(g.adj[static_cast<std::size_t>(b)]);
  });
  // a facet is a clique, so its size is a lower bound
  for (int colors = std::max(1, k.max_facet_size()); colors <= m; ++colors) {
    g.color.assign(static_cast<std::size_t>(m), -1);
    if (g.colorable(0, 0, colors)) return colors;
  }
  return m;
}

namespace {

struct RealColorer {
  int m = 0;
  int r = 0;
  const std::vector<std::vector<int>>* facets = nullptr;
  std::vector<std::vector<int>> facets_of;  // facet ids containing each vertex
  std::vector<int> order;
  std::vector<std::uint32_t> image;  // 0 = unassigned
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  bool facet_ok(int f) const {
    std::array<std::uint32_t, 32> masks{};
    int count = 0;
    for (int v : (*facets)[static_cast<std::size_t>(f)]) {
      const std::uint32_t img = image[static_cast<std::size_t>(v)];
      if (img != 0) masks[static_cast<std::size_t>(count++)] = img;
    }
    return gf2_rank_masks({masks.data(), static_cast<std::size_t>(count)}) == count;
  }

  bool assign(int depth) {
    if (++nodes > budget) throw BudgetExceeded("min_real_coloring_rank: node budget exhausted");
    if (depth == m) return true;
    const int v = order[static_cast<std::size_t>(depth)];
    const std::uint32_t first = 1;
    const std::uint32_t last = depth == 0 ? 1U : (1U << r) - 1U;  // first vertex fixed to e_1
    for (std::uint32_t c = first; c <= last; ++c) {
      image[static_cast<std::size_t>(v)] = c;
      bool ok = true;
      for (int f : facets_of[static_cast<std::size_t>(v)])
        if (!facet_ok(f)) {
          ok = false;
          break;
        }
      if (ok && assign(depth + 1)) return true;
    }
    image[static_cast<std::size_t>(v)] = 0;
    return false;
  }
};

}  // namespace

std::optional<int> min_real_coloring_rank(const SimplicialComplex& k, int r_max, std::uint64_t node_budget) {
  const int m = k.vertex_count();
  if (m > kMaxColoringVertices) throw RangeError("min_real_coloring_rank: at most 24 vertices");
  if (r_max < 1 || r_max > kMaxRealColoringRank) throw RangeError("min_real_coloring_rank: r_max must lie in [1, 8]");
  RealColorer c;
  c.m = m;
  c.facets = &k.facets();
  c.budget = node_budget;
  c.facets_of.resize(static_cast<std::size_t>(m));
  for (std::size_t f = 0; f < k.facets().size(); ++f)
    for (int v : k.facets()[f]) c.facets_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  // vertices in many facets first
  c.order.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) c.order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(c.order.begin(), c.order.end(), [&](int a, int b) {
    return c.facets_of[static_cast<std::size_t>(a)].size() > c.facets_of[static_cast<std::size_t>(b)].size();
  });
  for (int r = k.max_facet_size(); r <= r_max; ++r) {
    c.r = r;
    c.image.assign(static_cast<std::size_t>(m), 0);
    if (c.assign(0)) return r;
  }
  return std::nullopt;
}

bool InvariantsRecord::chain_holds() const noexcept {
  return m - gamma <= s_lower && s_lower <= s_upper && s_upper <= s_real && s_real <= m - n;
}

InvariantsRecord make_invariants(int m, int n, int gamma, int r_real, std::optional<int> verified_integral_rank,
                                 std::string source) {
  InvariantsRecord rec;
  rec.m = m;
  rec.n = n;
  rec.gamma = gamma;
  rec.r_real = r_real;
  rec.s_real = m - r_real;
  rec.s_lower = m - gamma;
  rec.s_lower_source = "chromatic";
  if (verified_integral_rank && m - *verified_integral_rank > rec.s_lower) {
    rec.s_lower = m - *verified_integral_rank;
    rec.s_lower_source = std::move(source);
  }
  rec.s_upper = rec.s_real;
  rec.delta_upper = rec.s_real - rec.s_lower;
  return rec;
}

InvariantsRecord invariant_bounds(const SimplicialComplex& k, int r_max, std::optional<int> verified_integral_rank,
                                  std::uint64_t node_budget) {
  const int gamma = chromatic_number(k, node_budget);
  const std::optional<int> r_real = min_real_coloring_rank(k, r_max, node_budget);
  if (!r_real) throw PreconditionError("invariant_bounds: r_R exceeds r_max = " + std::to_string(r_max));
  InvariantsRecord rec =
      make_invariants(k.vertex_count(), k.max_facet_size(), gamma, *r_real, verified_integral_rank, "integral-coloring");
  if (!rec.chain_holds()) throw InternalConsistencyError("invariant bound chain violated");
  return rec;
}

}  // namespace unilift
