// kmis: compute, verify and tabulate maximal independent sets of the k-mer
// space under edit distance.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "kmis/app.hpp"
#include "kmis/error.hpp"

namespace {

std::optional<kmis::Algorithm> parse_algo_flag(const std::string& s) {
  if (s == "auto") return std::nullopt;
  return kmis::parse_algorithm(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal independent sets of k-mers under edit distance"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "Compute an MIS for (k, d)");
  kmis::RunConfig run;
  std::string algo = "auto";
  std::string out, mapping, stats;
  compute->add_option("-k", run.k, "k-mer length")->required();
  compute->add_option("-d", run.d, "edit distance threshold, 0 <= d < k")->required();
  compute->add_option("--algo", algo, "1, 2, 3 or auto")->check(CLI::IsMember({"1", "2", "3", "auto"}));
  compute->add_option("--out", out, "MIS text file (default: stdout)");
  compute->add_option("--mapping", mapping, "write the k-mer -> member mapping table here");
  compute->add_option("--stats", stats, "append a JSON stats record here");
  compute->add_option("--mem-limit", run.memory_budget_bytes, "memory budget in bytes")
      ->default_val(run.memory_budget_bytes);
  compute->add_flag("--force-large-k", run.force_large_k, "allow k > 15");

  // verify
  auto* verify = app.add_subcommand("verify", "Check independence and maximality of an MIS file");
  kmis::VerifyConfig check;
  std::string input;
  std::optional<unsigned> verify_k;
  std::optional<int> verify_d;
  verify->add_option("file", input, "MIS text file")->required();
  verify->add_option("-k", verify_k, "expected k-mer length");
  verify->add_option("-d", verify_d, "threshold to verify against (default: from header)");
  verify->add_option("--sampled-maximality", check.sampled_maximality,
                     "check maximality on this many random k-mers instead of all");
  verify->add_option("--threads", check.threads, "worker threads (0 = all cores)");
  verify->add_flag("--allow-large", check.allow_large, "run exhaustive checks above the work budget");

  // table
  auto* table = app.add_subcommand("table", "Compute the (k, d) grid of MIS sizes");
  kmis::TableConfig grid;
  std::string records;
  std::optional<int> d_max;
  table->add_option("--k-max", grid.k_max, "largest k")->required();
  table->add_option("--d-max", d_max, "largest d (default: k-1 in every column)");
  table->add_option("--jobs", grid.jobs, "cells computed in parallel")->default_val(1);
  table->add_option("--records", records, "write one JSON record per cell here");
  table->add_option("--mem-limit", grid.memory_budget_bytes, "memory budget per cell in bytes")
      ->default_val(grid.memory_budget_bytes);
  table->add_flag("--force-large-k", grid.force_large_k, "allow k_max > 15");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compute) {
      run.algorithm = parse_algo_flag(algo);
      if (!out.empty()) run.out = out;
      if (!mapping.empty()) run.mapping_out = mapping;
      if (!stats.empty()) run.stats_out = stats;
      const kmis::RunStats s = kmis::compute(run, std::cout);
      std::cerr << kmis::to_record(s) << '\n';
      return 0;
    }
    if (*verify) {
      check.input = input;
      check.k = verify_k;
      check.d = verify_d;
      const auto outcome = kmis::verify_file(check);
      const kmis::KmerSpace space(outcome.mis.k);
      std::cout << kmis::to_record(outcome.report, space, outcome.mis) << '\n';
      return outcome.report.ok() ? 0 : 1;
    }
    if (*table) {
      grid.d_max = d_max;
      std::ofstream rec;
      if (!records.empty()) {
        rec.open(records);
        if (!rec) throw std::runtime_error("cannot open " + records);
      }
      const auto cells = kmis::table(grid, [&](const kmis::TableCell& cell) {
        std::cerr << kmis::to_record(cell) << '\n';
        if (rec.is_open()) rec << kmis::to_record(cell) << '\n' << std::flush;
      });
      std::cout << kmis::format_table(cells);
      return 0;
    }
  } catch (const kmis::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
