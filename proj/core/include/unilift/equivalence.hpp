#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unilift/gf2.hpp"

namespace unilift {

// Largest order handled by the canonicalizer and the census.
inline constexpr int kMaxCanonDim = 6;

// Canonical representative of a square binary matrix under independent row and
// column permutations: the orbit element whose row-major bit string is
// lexicographically smallest. `canon` stores that string as an integer with the
// (0,0) entry in the most significant of its n*n bits, so integer order is
// string order.
struct EquivalenceKey {
  int n = 0;
  std::uint64_t canon = 0;
  std::int64_t abs_det = 0;  // orbit invariant
  int gf2_det = 0;           // orbit invariant

  BinaryMatrix matrix() const;
  std::string bit_string() const;

  friend bool operator==(const EquivalenceKey& a, const EquivalenceKey& b) noexcept {
    return a.n == b.n && a.canon == b.canon;
  }
  friend auto operator<=>(const EquivalenceKey& a, const EquivalenceKey& b) noexcept {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.canon <=> b.canon;
  }
};

// Row-major encoding used by EquivalenceKey::canon.
std::uint64_t encode_row_major(const BinaryMatrix& m);
BinaryMatrix decode_row_major(std::uint64_t bits, int n);

// Branch-and-bound over row orders: each step places a remaining row whose
// image under the current ordered column partition is smallest, then refines
// the partition by that row. Only ties branch.
EquivalenceKey canonical_key(const BinaryMatrix& m);
// Canon bits only, without the determinant invariants.
std::uint64_t canonical_bits(const BinaryMatrix& m);

bool equivalent(const BinaryMatrix& a, const BinaryMatrix& b);

struct CensusClass {
  EquivalenceKey key;
  std::uint64_t column_sets = 0;  // unordered column sets in the orbit
  std::uint64_t orbit_size = 0;   // matrices in the orbit = column_sets * n!
};

struct CensusBucket {
  std::int64_t abs_det = 0;
  std::vector<CensusClass> classes;  // ascending by canon
  std::uint64_t orbit_total = 0;
  // Number of classes once a matrix and its transpose are also identified.
  std::size_t transpose_closed_classes = 0;
};

// Equivalence classes of GL(n, Z_2) bucketed by |integral determinant|.
struct ClassCensus {
  int n = 0;
  std::vector<CensusBucket> buckets;  // ascending by abs_det

  const CensusBucket* bucket(std::int64_t abs_det) const;
  std::uint64_t total_orbit_size() const;
  std::size_t class_count() const;
  // Locates the class of m; nullptr if m is not in the census.
  const CensusClass* find(const BinaryMatrix& m) const;
};

// Enumerates GL(n, Z_2) one unordered column set at a time and groups by
// canonical key. n <= 5 unless allow_order6 is set (about 28 million sets).
ClassCensus det_census(int n, int threads = 1, bool allow_order6 = false);

// Merges partial censuses of the same n; associative and commutative.
ClassCensus merge_census(const ClassCensus& a, const ClassCensus& b);

// One line per class: "n |det| orbit_size canon", canon as a row-major 0/1
// string, in (|det|, canon) order. Byte-stable.
std::string census_text(const ClassCensus& census);

struct ReferenceMatrix {
  std::string label;
  BinaryMatrix matrix;
};

// A published list of matrices of one order and |det|. When `complete` is set,
// the list claims to cover every class of that bucket.
struct ReferenceGroup {
  std::string name;
  int n = 0;
  std::int64_t abs_det = 0;
  bool complete = false;
  std::vector<ReferenceMatrix> members;
};

std::vector<ReferenceGroup> reference_groups();

struct ReferenceMatch {
  std::string group;
  std::string label;
  std::int64_t expected_abs_det = 0;
  std::int64_t actual_abs_det = 0;  // |det| of the literal matrix
  bool found = false;               // located in the expected bucket
  std::string canon;                // canonical string, empty if not found
};

struct ReferenceGroupVerdict {
  std::string group;
  bool all_found = false;
  bool complete = false;
  // For complete groups: the bucket holds no classes beyond the group's.
  bool bucket_exhausted = false;
  std::size_t distinct_classes = 0;
  std::size_t bucket_classes = 0;
};

struct TableMatchReport {
  std::vector<ReferenceMatch> matches;
  std::vector<ReferenceGroupVerdict> groups;
  bool all_ok() const;
};

// Checks every reference group whose order equals census.n. Missing entries are
// reported, not thrown.
TableMatchReport match_paper_tables(const ClassCensus& census);

}  // namespace unilift
