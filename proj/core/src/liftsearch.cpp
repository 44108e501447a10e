#include "unilift/liftsearch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "unilift/parallel.hpp"
#include "unilift/zdet.hpp"

namespace unilift {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::WitnessFound: return "witness-found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

std::string to_string(VertexOrder o) { return o == VertexOrder::Table ? "table" : "most-constrained"; }

namespace {

std::int64_t max_abs_det_cached(int n) {
  static const std::array<std::int64_t, 6> known = [] {
    std::array<std::int64_t, 6> t{};
    for (int d = 1; d <= 5; ++d) t[static_cast<std::size_t>(d)] = max_abs_det_invertible_binary(d);
    return t;
  }();
  return known[static_cast<std::size_t>(n)];
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1, base = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Basis of {x : A x = 0 (mod p)} for a square A given by rows.
std::vector<std::vector<std::int64_t>> kernel_mod_p(const std::vector<std::int64_t>& a, int n, std::int64_t p) {
  std::vector<std::int64_t> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = mod(a[i], p);
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int piv = row;
    while (piv < n && m[static_cast<std::size_t>(piv * n + c)] == 0) ++piv;
    if (piv == n) continue;
    for (int j = 0; j < n; ++j) std::swap(m[static_cast<std::size_t>(row * n + j)], m[static_cast<std::size_t>(piv * n + j)]);
    const std::int64_t inv = inverse_mod(m[static_cast<std::size_t>(row * n + c)], p);
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(row * n + j)] = m[static_cast<std::size_t>(row * n + j)] * inv % p;
    for (int i = 0; i < n; ++i) {
      if (i == row) continue;
      const std::int64_t f = m[static_cast<std::size_t>(i * n + c)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j)
        m[static_cast<std::size_t>(i * n + j)] = mod(m[static_cast<std::size_t>(i * n + j)] - f * m[static_cast<std::size_t>(row * n + j)], p);
    }
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (int free = 0; free < n; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      x[static_cast<std::size_t>(pivot_col[r])] = mod(-m[r * static_cast<std::size_t>(n) + static_cast<std::size_t>(free)], p);
    basis.push_back(std::move(x));
  }
  return basis;
}

// One basis with |det A| > 1 and one prime p dividing det A. The lifted
// columns extend to a basis of Z^(n+k) modulo p iff no nonzero kernel vector
// of A (mod p) is annihilated by every extra row, i.e. the k x c matrix of
// extra-row / kernel products has rank c.
struct Constraint {
  std::array<std::uint32_t, kMaxEnumDim> members{};
  std::int64_t p = 0;
  int kernel_dim = 0;
  std::vector<std::int64_t> kernel;  // kernel_dim x n
};

struct Problem {
  int n = 0;
  int k = 0;
  std::vector<std::int64_t> moduli;
  std::int64_t domain = 1;                      // product of moduli
  std::vector<std::int64_t> decode;             // domain x k residues
  std::vector<Constraint> constraints;
  std::size_t constraint_bases = 0;
  std::vector<std::int64_t> primes;
  std::vector<std::uint32_t> order;             // masks in assignment order
  std::vector<std::vector<std::int64_t>> domain_of;  // per position: candidate indices
  std::vector<std::vector<int>> triggered;      // per position: constraints completed there
  std::vector<int> all_constraints;
};

bool constraint_holds(const Problem& pb, const Constraint& c, const std::vector<std::int64_t>& values) {
  const int n = pb.n;
  const int k = pb.k;
  if (c.kernel_dim > k) return false;
  std::array<std::int64_t, 16 * kMaxEnumDim> w{};  // k x kernel_dim
  for (int t = 0; t < k; ++t)
    for (int q = 0; q < c.kernel_dim; ++q) {
      std::int64_t acc = 0;
      for (int j = 0; j < n; ++j)
        acc += values[static_cast<std::size_t>(c.members[static_cast<std::size_t>(j)]) * static_cast<std::size_t>(k) +
                      static_cast<std::size_t>(t)] *
               c.kernel[static_cast<std::size_t>(q * n + j)];
      w[static_cast<std::size_t>(t * c.kernel_dim + q)] = mod(acc, c.p);
    }
  if (c.kernel_dim == 1) {
    for (int t = 0; t < k; ++t)
      if (w[static_cast<std::size_t>(t)] != 0) return true;
    return false;
  }
  return detail::rank_mod_p(w.data(), k, c.kernel_dim, c.p) == c.kernel_dim;
}

// With only_prime set, keeps just the constraints for that prime and searches
// the extra values modulo it.
Problem build_problem(const SearchConfig& config, std::int64_t only_prime = 0) {
  Problem pb;
  pb.n = config.n;
  pb.k = config.k;
  pb.moduli = config.moduli.empty() ? residue_moduli(config.n, config.k) : config.moduli;
  if (only_prime != 0) std::fill(pb.moduli.begin(), pb.moduli.end(), only_prime);
  if (static_cast<int>(pb.moduli.size()) != pb.k) throw PreconditionError("search: need exactly one modulus per extra row");
  for (std::int64_t m : pb.moduli) {
    if (m < 1) throw PreconditionError("search: moduli must be positive");
    pb.domain *= m;
    if (pb.domain > 1'000'000) throw RangeError("search: product of moduli exceeds 10^6");
  }
  pb.decode.resize(static_cast<std::size_t>(pb.domain * pb.k));
  for (std::int64_t idx = 0; idx < pb.domain; ++idx) {
    std::int64_t rest = idx;
    for (int t = 0; t < pb.k; ++t) {
      pb.decode[static_cast<std::size_t>(idx * pb.k + t)] = rest % pb.moduli[static_cast<std::size_t>(t)];
      rest /= pb.moduli[static_cast<std::size_t>(t)];
    }
  }

  const int n = pb.n;
  std::vector<int> degree(1U << n, 0);
  std::vector<std::int64_t> a(static_cast<std::size_t>(n * n));
  std::array<std::int64_t, kMaxEnumDim * kMaxEnumDim> buf{};
  BasisEnumerator(n).for_each([&](const Gf2Basis& b) {
    const auto cols = b.masks();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = (cols[static_cast<std::size_t>(j)] >> i) & 1U;
    std::copy(a.begin(), a.end(), buf.begin());
    const std::int64_t det = detail::det_in_place(buf.data(), n);
    if (det == 1 || det == -1) return;
    ++pb.constraint_bases;
    const auto primes = prime_factors(det);
    for (std::int64_t p : primes)
      if (std::find(pb.primes.begin(), pb.primes.end(), p) == pb.primes.end()) pb.primes.push_back(p);
    if (only_prime != 0 && std::find(primes.begin(), primes.end(), only_prime) == primes.end()) return;
    for (std::uint32_t m : cols) ++degree[m];
    for (std::int64_t p : primes) {
      if (only_prime != 0 && p != only_prime) continue;
      Constraint c;
      std::copy(cols.begin(), cols.end(), c.members.begin());
      c.p = p;
      const auto kernel = kernel_mod_p(a, n, p);
      c.kernel_dim = static_cast<int>(kernel.size());
      for (const auto& x : kernel) c.kernel.insert(c.kernel.end(), x.begin(), x.end());
      pb.constraints.push_back(std::move(c));
    }
  });
  std::sort(pb.primes.begin(), pb.primes.end());

  // Assignment order: constrained vertices first, then vertices no constraint
  // touches (their values are irrelevant and pinned to 0 unless seeded).
  const UniversalComplexModel model = universal_vertex_table(n);
  std::vector<std::uint32_t> constrained, free;
  for (const auto& v : model.vertices) (degree[v.bits] > 0 ? constrained : free).push_back(v.bits);
  if (config.order == VertexOrder::MostConstrained)
    std::stable_sort(constrained.begin(), constrained.end(),
                     [&](std::uint32_t x, std::uint32_t y) { return degree[x] > degree[y]; });
  pb.order = constrained;
  pb.order.insert(pb.order.end(), free.begin(), free.end());

  std::vector<int> position(1U << n, -1);
  for (std::size_t i = 0; i < pb.order.size(); ++i) position[pb.order[i]] = static_cast<int>(i);

  pb.domain_of.resize(pb.order.size());
  for (std::size_t i = 0; i < pb.order.size(); ++i) {
    const std::uint32_t mask = pb.order[i];
    auto& dom = pb.domain_of[i];
    if (auto it = config.seed.find(mask); it != config.seed.end()) {
      if (static_cast<int>(it->second.size()) != pb.k) throw PreconditionError("search: seed entry must have k values");
      std::int64_t idx = 0, stride = 1;
      for (int t = 0; t < pb.k; ++t) {
        idx += mod(it->second[static_cast<std::size_t>(t)], pb.moduli[static_cast<std::size_t>(t)]) * stride;
        stride *= pb.moduli[static_cast<std::size_t>(t)];
      }
      dom.push_back(idx);
    } else if (degree[mask] == 0) {
      dom.push_back(0);
    } else {
      dom.resize(static_cast<std::size_t>(pb.domain));
      std::iota(dom.begin(), dom.end(), std::int64_t{0});
    }
  }

  pb.triggered.resize(pb.order.size());
  for (std::size_t ci = 0; ci < pb.constraints.size(); ++ci) {
    int last = -1;
    for (int j = 0; j < n; ++j) last = std::max(last, position[pb.constraints[ci].members[static_cast<std::size_t>(j)]]);
    pb.triggered[static_cast<std::size_t>(last)].push_back(static_cast<int>(ci));
    pb.all_constraints.push_back(static_cast<int>(ci));
  }
  return pb;
}

enum class Walk { Found, Exhausted, OutOfBudget, Cancelled };

struct ProgressHook {
  const std::function<void(std::uint64_t)>* fn = nullptr;
  std::uint64_t base = 0;
};

constexpr std::uint64_t kProgressEvery = std::uint64_t{1} << 24;

// Depth-first walk from `depth`; values for positions below it are set.
class Walker {
 public:
  Walker(const Problem& pb, bool pruning, std::uint64_t budget, std::atomic<std::uint64_t>* shared_nodes,
         ProgressHook hook)
      : pb_(pb), pruning_(pruning), budget_(budget), shared_nodes_(shared_nodes), hook_(hook) {
    values_.assign(static_cast<std::size_t>((1U << pb.n) * static_cast<unsigned>(std::max(pb.k, 1))), 0);
  }

  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
  std::vector<std::int64_t> chosen;  // candidate index per position

  void set_prefix(const std::vector<std::int64_t>& prefix) {
    chosen = prefix;
    chosen.resize(pb_.order.size(), 0);
    for (std::size_t i = 0; i < prefix.size(); ++i) apply(i, prefix[i]);
  }

  // Enumerates consistent assignments of positions [depth, stop); calls
  // on_leaf(chosen) at `stop` and halts when it returns true.
  template <class Leaf, class Cancel>
  Walk walk(std::size_t depth, std::size_t stop, Leaf&& on_leaf, Cancel&& cancelled) {
    if (depth == stop) {
      if (!pruning_ && stop == pb_.order.size()) {
        for (int ci : pb_.all_constraints)
          if (!constraint_holds(pb_, pb_.constraints[static_cast<std::size_t>(ci)], values_)) {
            ++conflicts;
            return Walk::Exhausted;
          }
      }
      return on_leaf(chosen) ? Walk::Found : Walk::Exhausted;
    }
    for (std::int64_t idx : pb_.domain_of[depth]) {
      if (cancelled()) return Walk::Cancelled;
      if (++nodes > budget_) return Walk::OutOfBudget;
      if (shared_nodes_ && (nodes & 0x3FF) == 0) {
        const std::uint64_t seen = shared_nodes_->fetch_add(0x400) + 0x400;
        if (seen > budget_) return Walk::OutOfBudget;
        if (hook_.fn && seen % kProgressEvery == 0) (*hook_.fn)(hook_.base + seen);
      } else if (!shared_nodes_ && hook_.fn && nodes % kProgressEvery == 0) {
        (*hook_.fn)(hook_.base + nodes);
      }
      apply(depth, idx);
      chosen[depth] = idx;
      if (pruning_) {
        bool ok = true;
        for (int ci : pb_.triggered[depth])
          if (!constraint_holds(pb_, pb_.constraints[static_cast<std::size_t>(ci)], values_)) {
            ok = false;
            break;
          }
        if (!ok) {
          ++conflicts;
          continue;
        }
      }
      const Walk w = walk(depth + 1, stop, on_leaf, cancelled);
      if (w != Walk::Exhausted) return w;
    }
    return Walk::Exhausted;
  }

  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  void apply(std::size_t position, std::int64_t idx) {
    const std::uint32_t mask = pb_.order[position];
    for (int t = 0; t < pb_.k; ++t)
      values_[static_cast<std::size_t>(mask) * static_cast<std::size_t>(pb_.k) + static_cast<std::size_t>(t)] =
          pb_.decode[static_cast<std::size_t>(idx * pb_.k + t)];
  }

  const Problem& pb_;
  bool pruning_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* shared_nodes_;
  ProgressHook hook_;
  std::vector<std::int64_t> values_;
};

}  // namespace

std::vector<std::int64_t> residue_moduli(int n, int k) {
  if (n < 1 || n > 5) throw RangeError("residue_moduli: n must lie in [1, 5]");
  if (k < 0) throw RangeError("residue_moduli: k must be nonnegative");
  const std::int64_t bound = max_abs_det_cached(n);
  std::int64_t product = 1;
  for (std::int64_t p = 2; p <= bound; ++p)
    if (is_prime(p)) product *= p;
  return std::vector<std::int64_t>(static_cast<std::size_t>(k), product);
}

std::size_t constraint_basis_count(int n) {
  std::size_t count = 0;
  std::array<std::int64_t, kMaxEnumDim * kMaxEnumDim> buf{};
  BasisEnumerator(n).for_each([&](const Gf2Basis& b) {
    const auto cols = b.masks();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(i * n + j)] = (cols[static_cast<std::size_t>(j)] >> i) & 1U;
    const std::int64_t d = detail::det_in_place(buf.data(), n);
    if (d != 1 && d != -1) ++count;
  });
  return count;
}

namespace {

struct RunResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<std::int64_t> values;  // by mask, when a witness was found
  std::uint64_t nodes = 0;
  std::uint64_t conflicts = 0;
};

RunResult run_problem(const Problem& pb, const SearchConfig& config, std::uint64_t budget, std::uint64_t progress_base) {
  const std::size_t positions = pb.order.size();
  const std::size_t split = std::min<std::size_t>(static_cast<std::size_t>(config.split_depth), positions);
  const ProgressHook hook{config.progress ? &config.progress : nullptr, progress_base};

  // Consistent prefixes in DFS order; each is one task.
  std::vector<std::vector<std::int64_t>> prefixes;
  Walker head(pb, config.pruning, budget, nullptr, hook);
  head.chosen.assign(positions, 0);
  const Walk head_walk = head.walk(
      0, split,
      [&](const std::vector<std::int64_t>& chosen) {
        prefixes.emplace_back(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(split));
        return false;
      },
      [] { return false; });

  RunResult out;
  out.nodes = head.nodes;
  out.conflicts = head.conflicts;
  if (head_walk == Walk::OutOfBudget) {
    out.status = SearchStatus::BudgetExceeded;
    return out;
  }

  struct TaskResult {
    Walk walk = Walk::Cancelled;
    std::uint64_t nodes = 0;
    std::uint64_t conflicts = 0;
    std::vector<std::int64_t> values;
  };
  std::vector<TaskResult> results(prefixes.size());
  const auto run_task = [&](std::size_t task, std::uint64_t task_budget, std::atomic<std::uint64_t>* shared,
                            std::uint64_t base, const auto& cancelled) {
    Walker w(pb, config.pruning, task_budget, shared, ProgressHook{hook.fn, base});
    w.set_prefix(prefixes[task]);
    TaskResult& res = results[task];
    res.walk = w.walk(split, positions, [](const std::vector<std::int64_t>&) { return true; }, cancelled);
    res.nodes = w.nodes;
    res.conflicts = w.conflicts;
    if (res.walk == Walk::Found) res.values = w.values();
    return res.walk;
  };

  if (config.threads == 1) {
    std::uint64_t used = head.nodes;
    for (std::size_t t = 0; t < prefixes.size(); ++t) {
      const Walk w = run_task(t, budget - std::min(budget, used), nullptr, progress_base + used, [] { return false; });
      used += results[t].nodes;
      if (w != Walk::Exhausted) break;
    }
  } else {
    // lowest task index holding a witness (or budget stop); later tasks cancel
    std::atomic<std::size_t> stop_index{prefixes.size()};
    std::atomic<std::uint64_t> shared_nodes{head.nodes};
    detail::parallel_for_index(prefixes.size(), config.threads, [&](std::size_t task, int) {
      if (task > stop_index.load()) return;
      const Walk w = run_task(task, budget, &shared_nodes, progress_base,
                              [&] { return task > stop_index.load(std::memory_order_relaxed); });
      if (w == Walk::Found || w == Walk::OutOfBudget) {
        std::size_t seen = stop_index.load();
        while (task < seen && !stop_index.compare_exchange_weak(seen, task)) {
        }
      }
    });
  }

  // Fold in task order, as a sequential walk would have.
  for (const TaskResult& res : results) {
    out.nodes += res.nodes;
    out.conflicts += res.conflicts;
    if (res.walk == Walk::Exhausted) continue;
    if (res.walk == Walk::Found) {
      out.status = SearchStatus::WitnessFound;
      out.values = res.values;
    } else {
      out.status = SearchStatus::BudgetExceeded;
    }
    return out;
  }
  out.status = SearchStatus::Exhausted;
  return out;
}

std::int64_t crt_pair(std::int64_t a, std::int64_t m, std::int64_t b, std::int64_t p) {
  // x = a (mod m), x = b (mod p), p prime not dividing m
  const std::int64_t t = mod((b - a) % p * inverse_mod(m % p, p), p);
  return a + m * t;
}

}  // namespace

SearchOutcome search_lift(const SearchConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.n < 2 || config.n > 5) throw RangeError("search_lift: n must lie in [2, 5]");
  if (config.k < 0 || config.k > 8) throw RangeError("search_lift: k must lie in [0, 8]");
  if (config.threads < 1) throw PreconditionError("search_lift: threads must be positive");
  if (config.split_depth < 0) throw PreconditionError("search_lift: split depth must be nonnegative");
  const Problem pb = build_problem(config);

  SearchOutcome out;
  out.n = pb.n;
  out.k = pb.k;
  out.moduli = pb.moduli;
  out.constraint_bases = pb.constraint_bases;
  out.relevant_primes = pb.primes;
  out.residue_space_complete = std::all_of(pb.primes.begin(), pb.primes.end(), [&](std::int64_t p) {
    return std::all_of(pb.moduli.begin(), pb.moduli.end(), [p](std::int64_t m) { return m % p == 0; });
  });

  const auto finish = [&](RunResult r) {
    out.status = r.status;
    out.nodes = r.nodes;
    out.conflicts = r.conflicts;
    if (r.status == SearchStatus::WitnessFound) {
      ExtraRowAssignment wit;
      wit.n = pb.n;
      wit.k = pb.k;
      wit.moduli = pb.moduli;
      if (pb.k > 0) wit.values = std::move(r.values);
      out.witness = std::move(wit);
    }
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  out.decomposed = config.decompose_by_prime && out.residue_space_complete && pb.primes.size() > 1 && pb.k > 0;
  if (!out.decomposed) return finish(run_problem(pb, config, config.node_budget, 0));

  // Each constraint only sees the extra values modulo its own prime, so the
  // problem splits into one independent search per prime. Witnesses are glued
  // by the Chinese remainder theorem; any exhausted prime exhausts the whole.
  RunResult total;
  std::vector<std::int64_t> glued(static_cast<std::size_t>(1U << pb.n) * static_cast<std::size_t>(pb.k), 0);
  std::int64_t glued_modulus = 1;
  for (std::int64_t p : pb.primes) {
    const Problem sub = build_problem(config, p);
    const RunResult r = run_problem(sub, config, config.node_budget - std::min(config.node_budget, total.nodes), total.nodes);
    total.nodes += r.nodes;
    total.conflicts += r.conflicts;
    out.per_prime.push_back({p, r.status, r.nodes});
    if (r.status != SearchStatus::WitnessFound) {
      total.status = r.status;
      return finish(std::move(total));
    }
    for (std::size_t i = 0; i < glued.size(); ++i) glued[i] = crt_pair(glued[i], glued_modulus, r.values[i], p);
    glued_modulus *= p;
  }
  total.status = SearchStatus::WitnessFound;
  total.values = std::move(glued);
  return finish(std::move(total));
}

Certification certify(const SearchOutcome& outcome, int n) {
  if (outcome.status != SearchStatus::WitnessFound || !outcome.witness)
    throw PreconditionError("certify: the search outcome carries no witness");
  const ExtraRowAssignment& wit = *outcome.witness;
  if (wit.n != n) throw ShapeError("certify: witness dimension does not match n");
  Coloring c(n, n + wit.k);
  std::vector<std::int64_t> img(static_cast<std::size_t>(n + wit.k));
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    for (int j = 0; j < n; ++j) img[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
    for (int t = 0; t < wit.k; ++t)
      img[static_cast<std::size_t>(n + t)] = mod(wit.of(mask)[static_cast<std::size_t>(t)], wit.moduli[static_cast<std::size_t>(t)]);
    c.set_image(mask, img);
  }
  VerificationReport report = verify_coloring(c);
  if (!report.pass()) throw InternalConsistencyError("certify: search witness failed exhaustive verification");
  return {std::move(c), std::move(report)};
}

std::map<std::uint32_t, std::vector<std::int64_t>> seed_from_coloring(const Coloring& c,
                                                                       std::span<const std::int64_t> moduli) {
  if (!c.restricted_shape()) throw PreconditionError("seed: coloring is not of restricted shape");
  const int n = c.source_dim();
  const int k = c.target_rank() - n;
  if (static_cast<int>(moduli.size()) != k) throw ShapeError("seed: need one modulus per extra row");
  std::map<std::uint32_t, std::vector<std::int64_t>> seed;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const auto img = c.image(mask);
    std::vector<std::int64_t> values(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t)
      values[static_cast<std::size_t>(t)] = mod(img[static_cast<std::size_t>(n + t)], moduli[static_cast<std::size_t>(t)]);
    seed.emplace(mask, std::move(values));
  }
  return seed;
}

std::string restricted_nonexistence_certificate(const SearchConfig& config, const SearchOutcome& outcome) {
  if (outcome.status != SearchStatus::Exhausted)
    throw PreconditionError("certificate: search did not exhaust its space (status " + to_string(outcome.status) + ")");
  if (!outcome.residue_space_complete)
    throw PreconditionError("certificate: some relevant prime does not divide every modulus, so exhaustion is not conclusive");
  if (!config.seed.empty()) throw PreconditionError("certificate: seeded searches only cover part of the space");
  std::ostringstream out;
  out << "For K_1^" << outcome.n << ": no restricted-shape coloring with " << outcome.k << " extra rows exists.\n";
  out << "Restricted shape: the first " << outcome.n
      << " integer coordinates of every image equal the 0/1 entries of the vertex.\n";
  out << "Moduli:";
  if (outcome.moduli.empty()) out << " (none)";
  for (std::int64_t m : outcome.moduli) out << ' ' << m;
  out << "\nConstraint bases (|det| > 1): " << outcome.constraint_bases << "\nRelevant primes:";
  if (outcome.relevant_primes.empty()) out << " (none)";
  for (std::int64_t p : outcome.relevant_primes) out << ' ' << p;
  out << "\nNodes explored: " << outcome.nodes << "\n";
  out << "Why the finite search is conclusive: a basis with matrix A passes iff, for every prime p dividing det A, "
         "the stacked matrix has full column rank mod p. That depends on the extra values only modulo such p, and "
         "every such p divides every modulus, so each integer choice is represented by a searched residue.\n";
  out << "Scope: this concerns restricted-shape colorings only and says nothing about colorings of other shapes.\n";
  return out.str();
}

}  // namespace unilift
