#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unilift/colorings.hpp"

namespace unilift {

enum class VertexOrder {
  MostConstrained,  // descending number of constraint bases through the vertex
  Table,            // universal_vertex_table order
};

enum class SearchStatus { WitnessFound, Exhausted, BudgetExceeded };

std::string to_string(SearchStatus s);
std::string to_string(VertexOrder o);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

// Restricted-shape lifting search: every vertex v of K_1^n is sent to
// (v, x_1(v), ..., x_k(v)) and the k extra values are searched as residues.
struct SearchConfig {
  int n = 4;
  int k = 1;
  // One modulus per extra row; empty means residue_moduli(n, k).
  std::vector<std::int64_t> moduli;
  VertexOrder order = VertexOrder::MostConstrained;
  int split_depth = 1;
  int threads = 1;
  std::uint64_t node_budget = kDefaultSearchBudget;
  bool pruning = true;
  // Split into one search per relevant prime when the moduli cover them all.
  bool decompose_by_prime = true;
  // Called with the running node count every 2^24 nodes.
  std::function<void(std::uint64_t)> progress;
  // Vertices with fixed extra values (reduced modulo the moduli).
  std::map<std::uint32_t, std::vector<std::int64_t>> seed;
};

// Residues of the k extra rows for every vertex, indexed by mask.
struct ExtraRowAssignment {
  int n = 0;
  int k = 0;
  std::vector<std::int64_t> moduli;
  std::vector<std::int64_t> values;  // (2^n) x k

  std::span<const std::int64_t> of(std::uint32_t mask) const {
    return {values.data() + static_cast<std::size_t>(mask) * static_cast<std::size_t>(k), static_cast<std::size_t>(k)};
  }
};

struct PrimeRun {
  std::int64_t prime = 0;
  SearchStatus status = SearchStatus::Exhausted;
  std::uint64_t nodes = 0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<ExtraRowAssignment> witness;
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;  // candidate values rejected by a constraint
  double elapsed_seconds = 0.0;
  int n = 0;
  int k = 0;
  std::vector<std::int64_t> moduli;
  std::size_t constraint_bases = 0;        // bases with |det| > 1
  std::vector<std::int64_t> relevant_primes;  // primes dividing some constraint determinant
  // Every relevant prime divides every modulus, so the residues cover all
  // integer choices and exhaustion is conclusive for the restricted shape.
  bool residue_space_complete = false;
  bool decomposed = false;
  std::vector<PrimeRun> per_prime;  // filled when decomposed, in prime order
};

// k copies of the product of all primes <= max_abs_det_invertible_binary(n).
std::vector<std::int64_t> residue_moduli(int n, int k);

// Number of bases of Z_2^n whose integral determinant has |det| > 1.
std::size_t constraint_basis_count(int n);

SearchOutcome search_lift(const SearchConfig& config);

struct Certification {
  Coloring coloring;
  VerificationReport report;
};

// Lifts the witness to least nonnegative representatives, builds the
// restricted-shape coloring and verifies it over every basis. Throws
// PreconditionError without a witness and InternalConsistencyError if the
// coloring fails.
Certification certify(const SearchOutcome& outcome, int n);

// Extra-row residues of a restricted-shape coloring, reduced modulo `moduli`;
// usable as SearchConfig::seed.
std::map<std::uint32_t, std::vector<std::int64_t>> seed_from_coloring(const Coloring& c,
                                                                       std::span<const std::int64_t> moduli);

// Human-readable statement for an exhausted, complete restricted search.
std::string restricted_nonexistence_certificate(const SearchConfig& config, const SearchOutcome& outcome);

}  // namespace unilift
