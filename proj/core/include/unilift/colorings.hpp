#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unilift/complexes.hpp"
#include "unilift/gf2.hpp"

namespace unilift {

// A vertex map from K_1^n into Z^r. Images are stored by vertex mask.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int n, int r);

  // Rows in universal_vertex_table(n) order, each of length r.
  static Coloring from_table_order(int n, int r, std::span<const std::vector<std::int64_t>> rows);

  int source_dim() const noexcept { return n_; }
  int target_rank() const noexcept { return r_; }

  std::span<const std::int64_t> image(std::uint32_t mask) const;
  void set_image(std::uint32_t mask, std::span<const std::int64_t> values);

  // The first n coordinates of every image equal the vertex's 0/1 entries.
  bool restricted_shape() const;
  // Every image has entries with gcd 1.
  bool all_primitive() const;
  std::vector<std::uint32_t> non_primitive_vertices() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::int64_t> images_;  // (2^n) x r, row 0 unused
};

// n = 5, r = 7, restricted shape with two extra coordinates that are constant
// on each weight class: first extra value 0 on V_1, 1 on V_2..V_4, 2 on V_5;
// second extra value 0 on V_2 and V_4, 1 on V_3, 2 on V_1 and V_5.
Coloring claim5_coloring();

// Coset representatives used by theorem2_coloring: for every coset of
// span{x, y} other than the span itself, its numerically smallest mask
// (coordinate j weighs 2^j), listed in ascending order.
std::vector<std::uint32_t> theorem2_coset_representatives(int n, Gf2Vector x, Gf2Vector y);

// The coloring K_1^n -> Z^(2^(n-2)+1) built from the partition into
// {x, y, x+y} and the cosets a_i + span{x, y}:
//   x -> e1, y -> e2, x+y -> e1+e2, a_i + c -> e_{i+2} + image(c) for c in span{x, y}.
Coloring theorem2_coloring(int n, Gf2Vector x, Gf2Vector y);

// The printed n = 4, r = 5 map, stored as literal data.
Coloring example2_coloring();

inline constexpr std::size_t kMaxReportedFailures = 100;

struct VerificationReport {
  int n = 0;
  int r = 0;
  std::uint64_t total_checked = 0;
  std::uint64_t expected_total = 0;
  std::uint64_t failure_count = 0;
  std::vector<Gf2Basis> failures;  // first kMaxReportedFailures in stream order
  std::vector<std::uint32_t> non_primitive;
  double elapsed_seconds = 0.0;

  bool pass() const noexcept {
    return failure_count == 0 && non_primitive.empty() && total_checked == expected_total;
  }
};

// Checks that every unordered basis of Z_2^n is sent to pairwise distinct
// vectors that extend to a basis of Z^r (n <= 6).
VerificationReport verify_coloring(const Coloring& c, int threads = 1);

// "n r" header, then 2^n - 1 lines of r integers in vertex-table order.
std::string coloring_text(const Coloring& c);
Coloring parse_coloring(std::string_view text);

// Invariant bounds for K_1^n (2 <= n <= 6): gamma = 2^n - 1 since any two
// distinct nonzero vectors are independent, r_R = n, and s_lower from the
// best coloring that passes verify_coloring here.
InvariantsRecord universal_invariants(int n, int threads = 1);

}  // namespace unilift
