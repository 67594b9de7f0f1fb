#include "kmis/app.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <thread>

#include "kmis/bfs_mis.hpp"
#include "kmis/edit_distance.hpp"
#include "kmis/error.hpp"
#include "kmis/io.hpp"

namespace kmis {

using json = nlohmann::json;

Algorithm select_algorithm(unsigned k, int d) {
  if (d >= static_cast<int>(k) - 4) return Algorithm::simple_greedy;
  if (d <= 4) return Algorithm::bfs;
  return Algorithm::improved_greedy;
}

void validate(const RunConfig& config) {
  if (config.k < kMinK) throw ParameterError("k must be at least " + std::to_string(kMinK));
  if (config.k > kMaxUnforcedK && !config.force_large_k) {
    throw ParameterError("k=" + std::to_string(config.k) + " is above " + std::to_string(kMaxUnforcedK) +
                         "; pass --force-large-k to run it anyway");
  }
  EditBudget::checked(config.d, config.k);
}

std::string to_record(const RunStats& s) {
  json j;
  j["k"] = s.k;
  j["d"] = s.d;
  j["algorithm"] = static_cast<int>(s.algorithm);
  j["mis_size"] = s.mis_size;
  j["wall_seconds"] = s.wall_seconds;
  j["peak_alloc_bytes"] = s.peak_alloc_bytes;
  j["edit_calls"] = s.edit_calls;
  j["bound_filter_hits"] = s.bound_filter_hits;
  j["vertices_explored"] = s.vertices_explored;
  return j.dump();
}

RunOutcome run(const KmerSpace& space, int d, Algorithm algorithm, const RunLimits& limits, bool want_mapping) {
  RunCounters counters;
  RunOutcome outcome;
  const auto start = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::simple_greedy:
      outcome.mis = run_greedy_simple(space, d, limits, &counters);
      break;
    case Algorithm::improved_greedy: {
      auto r = run_greedy_improved(space, d, limits, &counters);
      outcome.mis = std::move(r.mis);
      if (want_mapping) outcome.mapping.emplace(std::move(r.mapping));
      break;
    }
    case Algorithm::bfs:
      outcome.mis = run_bfs_mis(space, d, limits, &counters);
      break;
  }
  const std::uint64_t algorithm_bytes = counters.table_bytes;
  if (want_mapping && !outcome.mapping) {
    RunCounters post;
    outcome.mapping.emplace(derive_mapping(space, outcome.mis, &post));
    counters.edit_calls += post.edit_calls;
    counters.bound_filter_hits += post.bound_filter_hits;
  }
  const auto stop = std::chrono::steady_clock::now();

  RunStats& s = outcome.stats;
  s.k = space.k();
  s.d = d;
  s.algorithm = algorithm;
  s.mis_size = outcome.mis.members.size();
  s.wall_seconds = std::chrono::duration<double>(stop - start).count();
  s.peak_alloc_bytes = std::max(algorithm_bytes, outcome.mapping ? outcome.mapping->bytes() : 0);
  s.edit_calls = counters.edit_calls;
  s.bound_filter_hits = counters.bound_filter_hits;
  s.vertices_explored = counters.vertices_explored;
  return outcome;
}

RunStats compute(const RunConfig& config, std::ostream& fallback_out) {
  validate(config);
  const KmerSpace space(config.k);
  const Algorithm algorithm = config.algorithm.value_or(select_algorithm(config.k, config.d));
  const RunLimits limits{config.memory_budget_bytes};
  if (config.mapping_out && algorithm != Algorithm::improved_greedy) {
    check_capacity(space, config.d, Algorithm::improved_greedy, limits);
  }

  RunOutcome outcome = run(space, config.d, algorithm, limits, config.mapping_out.has_value());

  if (config.out) {
    write_mis(*config.out, space, outcome.mis);
  } else {
    write_mis(fallback_out, space, outcome.mis);
  }
  if (config.mapping_out) write_mapping(*config.mapping_out, *outcome.mapping, config.k, config.d);
  if (config.stats_out) {
    std::ofstream stats(*config.stats_out, std::ios::app);
    if (!stats) throw std::runtime_error("cannot open " + config.stats_out->string() + " for appending");
    stats << to_record(outcome.stats) << '\n';
  }
  return outcome.stats;
}

VerifyOutcome verify_file(const VerifyConfig& config) {
  VerifyOutcome outcome{read_mis(config.input), {}};
  if (config.k && *config.k != outcome.mis.k) {
    throw InputError(config.input.string() + ": file holds " + std::to_string(outcome.mis.k) + "-mers but -k " +
                     std::to_string(*config.k) + " was given");
  }
  if (config.d) outcome.mis.d = *config.d;

  const KmerSpace space(outcome.mis.k);
  VerifyOptions options;
  options.threads = config.threads;
  options.allow_large = config.allow_large;
  if (config.sampled_maximality > 0) {
    options.force_sample = true;
    options.sample_size = config.sampled_maximality;
  }
  outcome.report = verify(space, outcome.mis, options);
  return outcome;
}

std::string to_record(const VerificationReport& r, const KmerSpace& space, const MisResult& mis) {
  json j;
  j["k"] = mis.k;
  j["d"] = mis.d;
  j["size"] = mis.members.size();
  j["independent"] = r.independent;
  j["maximal"] = r.maximal;
  j["conflict"] = r.conflict ? json::array({space.decode(r.conflict->first), space.decode(r.conflict->second)})
                             : json(nullptr);
  j["orphan"] = r.orphan ? json(space.decode(*r.orphan)) : json(nullptr);
  j["pairs_checked"] = r.pairs_checked;
  j["kmers_checked"] = r.kmers_checked;
  j["sampled"] = r.sampled;
  j["coverage"] = r.coverage;
  return j.dump();
}

namespace {

TableCell compute_cell(unsigned k, int d, const TableConfig& config) {
  TableCell cell;
  cell.k = k;
  cell.d = d;
  cell.algorithm = select_algorithm(k, d);
  try {
    const KmerSpace space(k);
    const RunOutcome outcome = run(space, d, cell.algorithm, RunLimits{config.memory_budget_bytes});
    cell.size = outcome.stats.mis_size;
    cell.wall_seconds = outcome.stats.wall_seconds;
    cell.peak_alloc_bytes = outcome.stats.peak_alloc_bytes;
  } catch (const CapacityError& e) {
    cell.error = e.what();
  }
  return cell;
}

}  // namespace

std::vector<TableCell> table(const TableConfig& config, const std::function<void(const TableCell&)>& on_cell) {
  if (config.k_max < kMinK) throw ParameterError("k_max must be at least 2");
  if (config.k_max > kMaxUnforcedK && !config.force_large_k) {
    throw ParameterError("k_max=" + std::to_string(config.k_max) + " is above " + std::to_string(kMaxUnforcedK));
  }

  std::vector<std::pair<unsigned, int>> grid;
  for (unsigned k = kMinK; k <= config.k_max; ++k) {
    for (int d = 1; d < static_cast<int>(k); ++d) {
      if (config.d_max && d > *config.d_max) break;
      grid.emplace_back(k, d);
    }
  }

  std::vector<TableCell> cells(grid.size());
  std::mutex report;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      cells[i] = compute_cell(grid[i].first, grid[i].second, config);
      if (on_cell) {
        std::lock_guard lock(report);
        on_cell(cells[i]);
      }
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return cells;
}

std::string to_record(const TableCell& cell) {
  json j;
  j["k"] = cell.k;
  j["d"] = cell.d;
  j["algorithm"] = static_cast<int>(cell.algorithm);
  j["mis_size"] = cell.size ? json(*cell.size) : json(nullptr);
  j["wall_seconds"] = cell.wall_seconds;
  j["peak_alloc_bytes"] = cell.peak_alloc_bytes;
  if (!cell.error.empty()) j["error"] = cell.error;
  return j.dump();
}

std::string format_table(const std::vector<TableCell>& cells) {
  std::map<std::pair<int, unsigned>, const TableCell*> at;
  unsigned k_lo = ~0u, k_hi = 0;
  int d_hi = 0;
  for (const auto& c : cells) {
    at[{c.d, c.k}] = &c;
    k_lo = std::min(k_lo, c.k);
    k_hi = std::max(k_hi, c.k);
    d_hi = std::max(d_hi, c.d);
  }
  if (cells.empty()) return {};

  std::ostringstream out;
  auto block = [&](const std::string& title, auto&& render) {
    out << title << '\n' << std::setw(4) << "d\\k";
    for (unsigned k = k_lo; k <= k_hi; ++k) out << std::setw(12) << k;
    out << '\n';
    for (int d = 1; d <= d_hi; ++d) {
      out << std::setw(4) << d;
      for (unsigned k = k_lo; k <= k_hi; ++k) {
        auto it = at.find({d, k});
        out << std::setw(12) << (it == at.end() ? std::string() : render(*it->second));
      }
      out << '\n';
    }
    out << '\n';
  };
  block("MIS size", [](const TableCell& c) { return c.size ? std::to_string(*c.size) : std::string("ERR"); });
  block("wall seconds", [](const TableCell& c) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << c.wall_seconds;
    return c.size ? s.str() : std::string("ERR");
  });
  block("table bytes", [](const TableCell& c) { return c.size ? std::to_string(c.peak_alloc_bytes) : std::string("ERR"); });
  return out.str();
}

}  // namespace kmis
