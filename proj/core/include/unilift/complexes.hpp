#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unilift/gf2.hpp"

namespace unilift {

// Tag describing the vertex order of UniversalComplexModel. Serialized
// colorings and reports carry it so files stay unambiguous.
inline constexpr std::string_view kVertexOrderTag = "weight-ascending/ones-first-lex/v1";

// The vertices of the real universal complex K_1^n: all 2^n - 1 nonzero vectors
// of Z_2^n, grouped by weight (V_1, V_2, ...) and, inside a group, in
// lexicographic order of the coordinate tuple with 1 before 0. For n = 5 this
// is v_1 = (1,0,0,0,0), ..., v_6 = (1,1,0,0,0), ..., v_31 = (1,1,1,1,1).
struct UniversalComplexModel {
  int n = 0;
  std::vector<Gf2Vector> vertices;
  std::vector<int> index_by_mask;  // -1 for the zero mask

  int vertex_count() const noexcept { return static_cast<int>(vertices.size()); }
  // 0-based position of the vertex with this mask.
  int index_of(std::uint32_t mask) const;
  const Gf2Vector& vertex(int index) const { return vertices.at(static_cast<std::size_t>(index)); }
};

UniversalComplexModel universal_vertex_table(int n);

// A finite simplicial complex given by its facets. Vertices are 0..m-1 here;
// the facet-file format is 1-based.
class SimplicialComplex {
 public:
  // Validates: facets nonempty, indices in range, no facet contained in
  // another, every vertex covered.
  SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets);

  int vertex_count() const noexcept { return m_; }
  const std::vector<std::vector<int>>& facets() const noexcept { return facets_; }
  // Largest facet size, i.e. dim K + 1.
  int max_facet_size() const noexcept;
  // Neighbour masks of the 1-skeleton (m <= 64).
  std::vector<std::uint64_t> adjacency() const;

 private:
  int m_ = 0;
  std::vector<std::vector<int>> facets_;
};

// Parses the facet-file format: one facet per line as whitespace-separated
// 1-based vertex indices; '#' starts a comment; blank lines are ignored.
SimplicialComplex load_complex(std::string_view text);
std::string facet_text(const SimplicialComplex& k);

// K_1^n as a SimplicialComplex whose vertex i is universal_vertex_table(n).vertex(i)
// and whose facets are the unordered bases.
SimplicialComplex universal_complex(int n);

inline constexpr int kMaxColoringVertices = 24;
inline constexpr int kMaxRealColoringRank = 8;
inline constexpr std::uint64_t kDefaultColoringBudget = 50'000'000;

// Ordinary chromatic number of the 1-skeleton (m <= 24). Exact backtracking;
// throws BudgetExceeded when the node budget runs out.
int chromatic_number(const SimplicialComplex& k, std::uint64_t node_budget = kDefaultColoringBudget);

// Smallest r <= r_max such that the vertices map to nonzero vectors of Z_2^r
// with every facet sent to a linearly independent set; nullopt when no r up to
// r_max works. BudgetExceeded is distinct from nullopt.
std::optional<int> min_real_coloring_rank(const SimplicialComplex& k, int r_max,
                                          std::uint64_t node_budget = kDefaultColoringBudget);

// Certified bounds around s(K) = m - r(K).
struct InvariantsRecord {
  int m = 0;
  int n = 0;      // dim K + 1
  int gamma = 0;  // chromatic number
  int r_real = 0;
  int s_real = 0;  // m - r_real
  int s_lower = 0;
  int s_upper = 0;
  int delta_upper = 0;  // s_real - s_lower
  std::string s_lower_source;

  bool exact() const noexcept { return s_lower == s_upper; }
  // m - gamma <= s_lower <= s_upper <= s_real <= m - n
  bool chain_holds() const noexcept;
};

// Bounds from the chromatic number and r_R. `verified_integral_rank` is the
// target rank of a verified Z-coloring of K, if one is known.
InvariantsRecord invariant_bounds(const SimplicialComplex& k, int r_max,
                                  std::optional<int> verified_integral_rank = std::nullopt,
                                  std::uint64_t node_budget = kDefaultColoringBudget);

// Assembles a record from already known quantities (used for K_1^n, whose
// size puts it outside the backtracking limits).
InvariantsRecord make_invariants(int m, int n, int gamma, int r_real, std::optional<int> verified_integral_rank,
                                 std::string source);

}  // namespace unilift
