#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "kmis/kmer.hpp"
#include "kmis/mis.hpp"

namespace kmis {

struct VerificationReport {
  bool independent = true;
  bool maximal = true;
  /// First pair of members (in i < j scan order) within distance d.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> conflict;
  /// First non-member k-mer with no member within distance d.
  std::optional<std::uint64_t> orphan;
  std::uint64_t pairs_checked = 0;
  std::uint64_t kmers_checked = 0;
  bool sampled = false;
  /// Fraction of S_k examined by the maximality check.
  double coverage = 0.0;

  bool ok() const noexcept { return independent && maximal; }
};

struct VerifyOptions {
  /// Maximality is exhaustive up to this k and sampled above it.
  unsigned exhaustive_k_limit = 10;
  /// Sample size for sampled maximality. Nonzero `force_sample` samples even when k is small.
  std::uint64_t sample_size = 1'000'000;
  bool force_sample = false;
  std::uint64_t seed = 0x5eed;
  /// Estimated DP evaluations above which verification refuses to start
  /// unless `allow_large` is set.
  std::uint64_t max_dp_calls = 20'000'000'000ULL;
  bool allow_large = false;
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Checks every member pair for edit distance > d.
VerificationReport verify_independent(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options = {});

/// Checks that every non-member k-mer has a member within d.
/// Throws CapacityError when the estimated work exceeds options.max_dp_calls
/// and options.allow_large is false.
VerificationReport verify_maximal(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options = {});

/// Both checks, merged.
VerificationReport verify(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options = {});

/// Lexicographic greedy MIS over plain strings with the unbanded DP only.
/// Throws ParameterError for k > 8 or d outside [0, k).
MisResult brute_oracle_mis(unsigned k, int d, const Alphabet& alphabet = Alphabet::dna());

}  // namespace kmis
