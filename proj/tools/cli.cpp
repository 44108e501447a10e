#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unilift/colorings.hpp"
#include "unilift/complexes.hpp"
#include "unilift/equivalence.hpp"
#include "unilift/liftsearch.hpp"
#include "unilift/zdet.hpp"

#ifndef UNILIFT_VERSION
#define UNILIFT_VERSION "0.0.0"
#endif

namespace unilift::cli {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  buf << f.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string mask_bits(std::uint32_t mask, int n) { return to_bit_string(make_gf2_vector(n, mask)); }

json verification_json(const VerificationReport& r) {
  json failures = json::array();
  for (const auto& b : r.failures) {
    json cols = json::array();
    for (std::uint32_t m : b.masks()) cols.push_back(mask_bits(m, r.n));
    failures.push_back(cols);
  }
  json nonprim = json::array();
  for (std::uint32_t m : r.non_primitive) nonprim.push_back(mask_bits(m, r.n));
  return json{{"n", r.n},
              {"r", r.r},
              {"bases_checked", r.total_checked},
              {"bases_expected", r.expected_total},
              {"failure_count", r.failure_count},
              {"failures", failures},
              {"non_primitive_vertices", nonprim},
              {"pass", r.pass()}};
}

json coloring_rows(const Coloring& c) {
  json rows = json::array();
  for (const auto& v : universal_vertex_table(c.source_dim()).vertices) {
    const auto img = c.image(v.bits);
    rows.push_back(json{{"vertex", to_bit_string(v)}, {"image", std::vector<std::int64_t>(img.begin(), img.end())}});
  }
  return rows;
}

// Shared envelope; each command fills parameters, result, counts, verdict.
struct Report {
  std::string command;
  json parameters = json::object();
  json result = json::object();
  json counts = json::object();
  std::string verdict;
  bool deterministic = true;

  json to_json(double elapsed) const {
    return json{{"tool", "unilift"},
                {"version", UNILIFT_VERSION},
                {"command", command},
                {"parameters", parameters},
                {"verdict", verdict},
                {"result", result},
                {"counts", counts},
                {"elapsed_seconds", elapsed},
                {"deterministic_ordering", deterministic},
                {"vertex_order", std::string(kVertexOrderTag)}};
  }
};

int exit_for(const std::string& verdict) {
  if (verdict == "pass" || verdict == "success" || verdict == "witness-found") return kOk;
  if (verdict == "budget-exceeded") return kBudget;
  return kFail;
}

int check_threads(int t) {
  if (t < 1) throw UsageError("--threads must be positive");
  return t;
}

void census_cmd(Report& rep, int n, bool detail, int threads, bool long_running, const std::string& export_path) {
  rep.parameters = json{{"n", n}, {"detail", detail}, {"threads", threads}, {"long_running", long_running}};
  if (n < 2 || n > 6) throw UsageError("census: --n must lie in [2, 6]");
  if (n == 6 && !long_running) throw UsageError("census: n = 6 needs --long-running");
  const ClassCensus census = det_census(n, threads, long_running);
  const TableMatchReport tables = match_paper_tables(census);

  json buckets = json::array();
  for (const auto& b : census.buckets) {
    json jb{{"abs_det", b.abs_det},
            {"classes", b.classes.size()},
            {"orbit_total", b.orbit_total},
            {"transpose_closed_classes", b.transpose_closed_classes}};
    if (detail) {
      json cls = json::array();
      for (const auto& c : b.classes)
        cls.push_back(json{{"canon", c.key.bit_string()}, {"column_sets", c.column_sets}, {"orbit_size", c.orbit_size}});
      jb["class_list"] = cls;
    }
    buckets.push_back(jb);
  }
  json matches = json::array();
  for (const auto& m : tables.matches)
    matches.push_back(json{{"group", m.group},
                           {"label", m.label},
                           {"expected_abs_det", m.expected_abs_det},
                           {"actual_abs_det", m.actual_abs_det},
                           {"found", m.found},
                           {"canon", m.canon}});
  json groups = json::array();
  for (const auto& g : tables.groups)
    groups.push_back(json{{"group", g.group},
                          {"all_found", g.all_found},
                          {"complete", g.complete},
                          {"bucket_exhausted", g.bucket_exhausted},
                          {"distinct_classes", g.distinct_classes},
                          {"bucket_classes", g.bucket_classes}});

  const std::string expected = gl_order(n).str();
  const std::string total = std::to_string(census.total_orbit_size());
  rep.result = json{{"buckets", buckets},
                    {"total_orbit_size", total},
                    {"gl_order", expected},
                    {"reference_matches", matches},
                    {"reference_groups", groups}};
  rep.counts = json{{"classes", census.class_count()}, {"matrices", census.total_orbit_size()}};
  rep.verdict = (total == expected && tables.all_ok()) ? "pass" : "fail";
  if (!export_path.empty()) write_file(export_path, census_text(census));
}

void maxdet_cmd(Report& rep, int n, int threads) {
  rep.parameters = json{{"n", n}, {"threads", threads}};
  if (n < 1 || n > 6) throw UsageError("maxdet: --n must lie in [1, 6]");
  const std::int64_t d = max_abs_det_invertible_binary(n, threads);
  const bool admitted = hadamard_bound_admits(n, d);
  const bool strict = admitted && !hadamard_bound_attained(n, d);
  rep.result = json{{"max_abs_det", d},
                    {"hadamard_floor", hadamard_floor(n)},
                    {"hadamard_bound_admits", admitted},
                    {"strictly_within_bound", strict}};
  rep.counts = json{{"bases", basis_count(n).str()}};
  rep.verdict = admitted ? "success" : "fail";
}

void bases_cmd(Report& rep, int n, bool stream) {
  rep.parameters = json{{"n", n}, {"stream", stream}};
  if (n < 1 || n > kMaxDim) throw UsageError("bases: --n must lie in [1, 12]");
  if (stream && n > 5) throw UsageError("bases: --stream is limited to n <= 5");
  const std::string formula = basis_count(n).str();
  rep.result = json{{"count", formula}};
  rep.verdict = "success";
  if (n >= 2 && n <= 5) {
    std::uint64_t seen = 0;
    json list = json::array();
    BasisEnumerator(n).for_each([&](const Gf2Basis& b) {
      ++seen;
      if (!stream) return;
      json cols = json::array();
      for (std::uint32_t m : b.masks()) cols.push_back(mask_bits(m, n));
      list.push_back(cols);
    });
    rep.result["enumerated"] = seen;
    if (stream) rep.result["bases"] = list;
    if (std::to_string(seen) != formula) rep.verdict = "fail";
  }
  rep.counts = json{{"bases", formula}};
}

void verification_result(Report& rep, const Coloring& c, const VerificationReport& r, bool emit) {
  rep.result = verification_json(r);
  rep.result["restricted_shape"] = c.restricted_shape();
  if (emit) rep.result["coloring"] = coloring_rows(c);
  rep.counts = json{{"bases_checked", r.total_checked}, {"failures", r.failure_count}};
  rep.verdict = r.pass() ? "pass" : "fail";
}

void search_cmd(Report& rep, const SearchConfig& base, const std::string& seed_path, const std::string& export_path,
                std::istream& in, std::ostream& err) {
  SearchConfig cfg = base;
  if (cfg.moduli.empty() && cfg.n <= 5 && cfg.n >= 1) cfg.moduli = residue_moduli(cfg.n, cfg.k);
  if (!seed_path.empty()) {
    const Coloring seed = parse_coloring(read_input(seed_path, in));
    if (seed.source_dim() != cfg.n || seed.target_rank() != cfg.n + cfg.k)
      throw UsageError("search: seed witness shape does not match --n/--rows");
    cfg.seed = seed_from_coloring(seed, cfg.moduli);
  }
  std::mutex progress_lock;
  cfg.progress = [&](std::uint64_t nodes) {
    std::lock_guard lock(progress_lock);
    err << "search: " << nodes << " nodes\n";
  };
  rep.parameters = json{{"n", cfg.n},
                        {"rows", cfg.k},
                        {"moduli", cfg.moduli},
                        {"order", to_string(cfg.order)},
                        {"split_depth", cfg.split_depth},
                        {"threads", cfg.threads},
                        {"budget", cfg.node_budget},
                        {"pruning", cfg.pruning},
                        {"decompose_by_prime", cfg.decompose_by_prime},
                        {"seeded_vertices", cfg.seed.size()}};

  const SearchOutcome o = search_lift(cfg);
  json per_prime = json::array();
  for (const auto& pr : o.per_prime)
    per_prime.push_back(json{{"prime", pr.prime}, {"status", to_string(pr.status)}, {"nodes", pr.nodes}});
  rep.result = json{{"status", to_string(o.status)},
                    {"constraint_bases", o.constraint_bases},
                    {"relevant_primes", o.relevant_primes},
                    {"residue_space_complete", o.residue_space_complete},
                    {"decomposed", o.decomposed},
                    {"per_prime", per_prime}};
  rep.counts = json{{"nodes", o.nodes}, {"conflicts", o.conflicts}};
  rep.verdict = to_string(o.status);

  if (o.witness) {
    json rows = json::array();
    for (const auto& v : universal_vertex_table(cfg.n).vertices) {
      const auto vals = o.witness->of(v.bits);
      rows.push_back(json{{"vertex", to_bit_string(v)}, {"residues", std::vector<std::int64_t>(vals.begin(), vals.end())}});
    }
    rep.result["witness"] = json{{"moduli", o.witness->moduli}, {"rows", rows}};
    const Certification cert = certify(o, cfg.n);
    rep.result["certification"] = verification_json(cert.report);
    rep.counts["bases_checked"] = cert.report.total_checked;
    if (!export_path.empty()) write_file(export_path, coloring_text(cert.coloring));
  } else if (o.status == SearchStatus::Exhausted) {
    if (o.residue_space_complete && cfg.seed.empty()) {
      rep.result["certificate"] = restricted_nonexistence_certificate(cfg, o);
    } else {
      rep.result["certificate"] = nullptr;
      rep.result["note"] = cfg.seed.empty()
                               ? "moduli miss a relevant prime; exhaustion covers only the given residues"
                               : "seeded search; exhaustion covers only completions of the seed";
    }
  }
}

void invariants_json(Report& rep, const InvariantsRecord& r) {
  rep.result = json{{"m", r.m},
                    {"n", r.n},
                    {"gamma", r.gamma},
                    {"r_real", r.r_real},
                    {"s_real", r.s_real},
                    {"s_lower", r.s_lower},
                    {"s_upper", r.s_upper},
                    {"delta_upper", r.delta_upper},
                    {"s_lower_source", r.s_lower_source},
                    {"s_exact", r.exact()},
                    {"chain_holds", r.chain_holds()}};
  rep.counts = json{{"vertices", r.m}};
  rep.verdict = r.chain_holds() ? "success" : "fail";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exhaustive checks around lifting real colorings of universal complexes to integral ones", "unilift"};
  app.require_subcommand(1);
  app.set_version_flag("--version", UNILIFT_VERSION);

  int n = 0;
  int threads = 1;
  bool detail = false, long_running = false, stream = false, emit = false;
  std::string export_path;

  auto* census = app.add_subcommand("census", "Classify GL(n, Z_2) by |det| up to row and column permutations");
  census->add_option("--n", n, "order")->required();
  census->add_flag("--detail", detail, "list every class");
  census->add_option("--threads", threads, "worker threads");
  census->add_flag("--long-running", long_running, "allow n = 6");
  census->add_option("--export", export_path, "write the census text format to PATH");

  auto* maxdet = app.add_subcommand("maxdet", "Largest |det| of a 0/1 matrix invertible mod 2");
  maxdet->add_option("--n", n, "order")->required();
  maxdet->add_option("--threads", threads, "worker threads");

  auto* bases = app.add_subcommand("bases", "Count (and optionally list) unordered bases of Z_2^n");
  bases->add_option("--n", n, "dimension")->required();
  bases->add_flag("--stream", stream, "include every basis in the report (n <= 5)");

  auto* verify = app.add_subcommand("verify", "Check a coloring of the real universal complex over every basis");
  verify->require_subcommand(1);
  verify->add_option("--threads", threads, "worker threads");
  verify->add_flag("--emit-coloring", emit, "include the coloring rows in the report");
  auto* v_claim5 = verify->add_subcommand("claim5", "the 7-row coloring for n = 5");
  auto* v_thm2 = verify->add_subcommand("thm2", "the (2^(n-2)+1)-row coset coloring");
  std::string xbits, ybits;
  v_thm2->add_option("--n", n, "dimension")->required();
  v_thm2->add_option("--x", xbits, "first distinguished vector, coordinate-first 0/1 string");
  v_thm2->add_option("--y", ybits, "second distinguished vector");
  auto* v_example2 = verify->add_subcommand("example2", "the printed 5x15 coloring for n = 4");
  auto* v_file = verify->add_subcommand("file", "a coloring in the text matrix format");
  std::string coloring_path;
  v_file->add_option("path", coloring_path, "file, or - for stdin")->required();
  // let --threads / --emit-coloring follow the verify target
  for (auto* sub : {v_claim5, v_thm2, v_example2, v_file}) sub->fallthrough();

  auto* search = app.add_subcommand("search", "Restricted-shape lifting search over residues of extra rows");
  SearchConfig cfg;
  std::string moduli_text, order_text = "most-constrained", seed_path, witness_path;
  bool no_pruning = false, no_decompose = false;
  search->add_option("--n", cfg.n, "dimension")->required();
  search->add_option("--rows", cfg.k, "number of extra rows")->required();
  search->add_option("--moduli", moduli_text, "comma-separated modulus per extra row");
  search->add_option("--threads", cfg.threads, "worker threads");
  search->add_option("--seed-witness", seed_path, "restricted-shape coloring whose extra rows are fixed");
  search->add_option("--budget", cfg.node_budget, "node budget");
  search->add_option("--order", order_text, "most-constrained | table");
  search->add_option("--split-depth", cfg.split_depth, "depth at which subtrees become tasks");
  search->add_option("--export-witness", witness_path, "write the certified coloring to PATH");
  search->add_flag("--no-pruning", no_pruning, "test constraints only at leaves");
  search->add_flag("--no-decompose", no_decompose, "search all primes jointly");

  auto* invariants = app.add_subcommand("invariants", "Chromatic number, real coloring rank and Buchstaber bounds");
  std::string facets_path;
  int rmax = 8;
  int universal_n = 0;
  invariants->add_option("--facets", facets_path, "facet file, or - for stdin");
  invariants->add_option("--universal", universal_n, "use the real universal complex on Z_2^N instead");
  invariants->add_option("--rmax", rmax, "largest real coloring rank to try");
  invariants->add_option("--threads", threads, "worker threads (universal mode)");

  std::vector<std::string> argv_store{"unilift"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << UNILIFT_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const auto start = clock_type::now();
  Report rep;
  try {
    if (census->parsed()) {
      rep.command = "census";
      census_cmd(rep, n, detail, check_threads(threads), long_running, export_path);
    } else if (maxdet->parsed()) {
      rep.command = "maxdet";
      maxdet_cmd(rep, n, check_threads(threads));
    } else if (bases->parsed()) {
      rep.command = "bases";
      bases_cmd(rep, n, stream);
    } else if (verify->parsed()) {
      check_threads(threads);
      Coloring c;
      if (v_claim5->parsed()) {
        rep.command = "verify claim5";
        c = claim5_coloring();
      } else if (v_thm2->parsed()) {
        rep.command = "verify thm2";
        if (xbits.empty() != ybits.empty()) throw UsageError("verify thm2: give both --x and --y or neither");
        const Gf2Vector x = xbits.empty() ? make_gf2_vector(n, 1U) : parse_gf2_vector(xbits);
        const Gf2Vector y = ybits.empty() ? make_gf2_vector(n, 2U) : parse_gf2_vector(ybits);
        if (x.dim != n || y.dim != n) throw UsageError("verify thm2: --x and --y need exactly n entries");
        rep.parameters = json{{"n", n}, {"x", to_bit_string(x)}, {"y", to_bit_string(y)}};
        c = theorem2_coloring(n, x, y);
      } else if (v_example2->parsed()) {
        rep.command = "verify example2";
        c = example2_coloring();
      } else {
        rep.command = "verify file";
        rep.parameters = json{{"path", coloring_path}};
        c = parse_coloring(read_input(coloring_path, in));
      }
      rep.parameters["threads"] = threads;
      verification_result(rep, c, verify_coloring(c, threads), emit);
      rep.deterministic = true;  // the verdict and counts do not depend on threads
    } else if (search->parsed()) {
      rep.command = "search";
      if (!moduli_text.empty()) {
        std::stringstream ss(moduli_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            cfg.moduli.push_back(std::stoll(item));
          } catch (const std::exception&) {
            throw UsageError("search: bad modulus '" + item + "'");
          }
        }
      }
      if (order_text == "table") {
        cfg.order = VertexOrder::Table;
      } else if (order_text != "most-constrained") {
        throw UsageError("search: --order must be most-constrained or table");
      }
      cfg.pruning = !no_pruning;
      cfg.decompose_by_prime = !no_decompose;
      check_threads(cfg.threads);
      search_cmd(rep, cfg, seed_path, witness_path, in, err);
      // node counts are folded in subtree order, so threads do not change them
      rep.deterministic = true;
    } else if (invariants->parsed()) {
      rep.command = "invariants";
      if (facets_path.empty() == (universal_n == 0))
        throw UsageError("invariants: give exactly one of --facets or --universal");
      if (universal_n != 0) {
        rep.parameters = json{{"universal", universal_n}, {"threads", check_threads(threads)}};
        invariants_json(rep, universal_invariants(universal_n, threads));
      } else {
        rep.parameters = json{{"facets", facets_path}, {"rmax", rmax}};
        const SimplicialComplex k = load_complex(read_input(facets_path, in));
        invariants_json(rep, invariant_bounds(k, rmax));
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    rep.verdict = "budget-exceeded";
    rep.result = json{{"error", e.what()}};
    err << "budget exceeded: " << e.what() << "\n";
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFail;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const double elapsed = std::chrono::duration<double>(clock_type::now() - start).count();
  out << rep.to_json(elapsed).dump(2) << "\n";
  return exit_for(rep.verdict);
}

}  // namespace unilift::cli
