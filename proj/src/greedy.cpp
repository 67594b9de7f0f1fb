#include "kmis/greedy.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kmis/edit_distance.hpp"

namespace kmis {

bool MappingTable::complete() const noexcept {
  if (wide_) return std::find(wide_cells_.begin(), wide_cells_.end(), unmapped) == wide_cells_.end();
  return std::find(narrow_.begin(), narrow_.end(), kNarrowUnmapped) == narrow_.end();
}

void MappingTable::widen() {
  wide_cells_.resize(narrow_.size());
  for (std::size_t i = 0; i < narrow_.size(); ++i) {
    wide_cells_[i] = narrow_[i] == kNarrowUnmapped ? unmapped : narrow_[i];
  }
  narrow_.clear();
  narrow_.shrink_to_fit();
  wide_ = true;
}

std::vector<std::uint8_t> MappingTable::to_bytes() const {
  std::vector<std::uint8_t> out(bytes());
  const unsigned w = width();
  for (std::uint64_t i = 0; i < size(); ++i) {
    std::uint32_t v = wide_ ? wide_cells_[i] : narrow_[i];
    for (unsigned b = 0; b < w; ++b) {
      out[i * w + b] = static_cast<std::uint8_t>(v & 0xFF);
      v >>= 8;
    }
  }
  return out;
}

FilterVerdict filter_bounds(std::span<const int> v_sigma, std::span<const int> anchors_for_u, int d) {
  int max_diff = 0;
  int min_sum = v_sigma[0] + anchors_for_u[0];
  for (std::size_t s = 0; s < v_sigma.size(); ++s) {
    max_diff = std::max(max_diff, std::abs(v_sigma[s] - anchors_for_u[s]));
    min_sum = std::min(min_sum, v_sigma[s] + anchors_for_u[s]);
  }
  if (max_diff > d) return FilterVerdict::reject;
  if (min_sum <= d) return FilterVerdict::accept;
  return FilterVerdict::undecided;
}

namespace {

// Members in insertion order with their digits and homopolymer anchors
// stored contiguously.
class MemberStore {
 public:
  MemberStore(unsigned k, unsigned sigma) : k_(k), sigma_(sigma) {}

  std::size_t size() const noexcept { return codes_.size(); }
  std::span<const std::uint8_t> digits(std::size_t i) const { return {digits_.data() + i * k_, k_}; }
  std::span<const int> anchors(std::size_t i) const { return {anchors_.data() + i * sigma_, sigma_}; }

  void add(std::uint64_t code, std::span<const std::uint8_t> digits, std::span<const int> anchors) {
    codes_.push_back(code);
    digits_.insert(digits_.end(), digits.begin(), digits.end());
    anchors_.insert(anchors_.end(), anchors.begin(), anchors.end());
  }

  std::vector<std::uint64_t> release_codes() { return std::move(codes_); }

  std::uint64_t bytes() const noexcept {
    return codes_.capacity() * sizeof(std::uint64_t) + digits_.capacity() + anchors_.capacity() * sizeof(int);
  }

 private:
  unsigned k_;
  unsigned sigma_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::uint8_t> digits_;
  std::vector<int> anchors_;
};

// Shared body of the improved scan. With `fixed_members` set, membership is
// already decided and only the mapping is filled in.
class ImprovedScan {
 public:
  ImprovedScan(const KmerSpace& space, int d, RunCounters& counters)
      : space_(space), d_(d), counters_(counters), members_(space.k(), space.sigma()), mapping_(space.size()) {
    tried_.reserve(static_cast<std::size_t>(space.k()) * space.sigma());
  }

  // Returns the index of a member within d of `code`, or MappingTable::unmapped.
  std::uint32_t find_mapping(std::uint64_t code, std::span<const std::uint8_t> digits, std::span<const int> v_sigma) {
    // Technique 1: members already assigned to substitution neighbours.
    tried_.clear();
    std::uint32_t found = MappingTable::unmapped;
    space_.for_each_substitution_neighbor(code, [&](std::uint64_t n) {
      if (found != MappingTable::unmapped) return;
      const std::uint32_t m = mapping_.get(n);
      if (m == MappingTable::unmapped) return;
      if (std::find(tried_.begin(), tried_.end(), m) != tried_.end()) return;
      tried_.push_back(m);
      ++counters_.edit_calls;
      if (edit_within(members_.digits(m), digits, d_, ws_)) found = m;
    });
    if (found != MappingTable::unmapped) {
      ++counters_.neighbor_mapping_hits;
      return found;
    }

    // Technique 2: homopolymer bounds, then DP.
    for (std::size_t j = 0; j < members_.size(); ++j) {
      switch (filter_bounds(v_sigma, members_.anchors(j), d_)) {
        case FilterVerdict::reject:
          ++counters_.bound_filter_hits;
          continue;
        case FilterVerdict::accept:
          ++counters_.bound_filter_hits;
          return static_cast<std::uint32_t>(j);
        case FilterVerdict::undecided:
          ++counters_.edit_calls;
          if (edit_within(members_.digits(j), digits, d_, ws_)) return static_cast<std::uint32_t>(j);
          break;
      }
    }
    return MappingTable::unmapped;
  }

  MemberStore& members() { return members_; }
  MappingTable& mapping() { return mapping_; }

 private:
  const KmerSpace& space_;
  int d_;
  RunCounters& counters_;
  MemberStore members_;
  MappingTable mapping_;
  EditWorkspace ws_;
  std::vector<std::uint32_t> tried_;
};

}  // namespace

MisResult run_greedy_simple(const KmerSpace& space, int d, const RunLimits& limits, RunCounters* counters) {
  const EditBudget budget = EditBudget::checked(d, space.k());
  check_capacity(space, d, Algorithm::simple_greedy, limits);

  RunCounters local;
  RunCounters& c = counters ? *counters : local;
  const unsigned k = space.k();
  std::vector<int> no_anchors;
  MemberStore members(k, 0);
  EditWorkspace ws;
  std::uint8_t digits[64];
  const std::span<const std::uint8_t> v(digits, k);

  for (const std::uint64_t code : space.enumerate()) {
    space.unpack(code, digits);
    bool mapped = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      ++c.edit_calls;
      if (edit_within(members.digits(j), v, budget.d, ws)) {
        mapped = true;
        break;
      }
    }
    if (!mapped) members.add(code, v, no_anchors);
  }

  c.table_bytes = members.bytes();
  return MisResult{k, d, members.release_codes(), Algorithm::simple_greedy};
}

ImprovedResult run_greedy_improved(const KmerSpace& space, int d, const RunLimits& limits, RunCounters* counters) {
  EditBudget::checked(d, space.k());
  check_capacity(space, d, Algorithm::improved_greedy, limits);

  RunCounters local;
  RunCounters& c = counters ? *counters : local;
  const unsigned k = space.k();
  ImprovedScan scan(space, d, c);
  std::uint8_t digits[64];
  const std::span<const std::uint8_t> v(digits, k);
  std::vector<int> v_sigma(space.sigma());

  for (const std::uint64_t code : space.enumerate()) {
    space.unpack(code, digits);
    space.homopolymer_distances(code, v_sigma);
    const std::uint32_t m = scan.find_mapping(code, v, v_sigma);
    if (m != MappingTable::unmapped) {
      scan.mapping().set(code, m);
      continue;
    }
    const auto index = static_cast<std::uint32_t>(scan.members().size());
    scan.members().add(code, v, v_sigma);
    scan.mapping().set(code, index);
  }

  c.table_bytes = scan.members().bytes() + scan.mapping().bytes();
  MisResult mis{k, d, scan.members().release_codes(), Algorithm::improved_greedy};
  return ImprovedResult{std::move(mis), std::move(scan.mapping())};
}

MappingTable derive_mapping(const KmerSpace& space, const MisResult& mis, RunCounters* counters) {
  if (mis.k != space.k()) throw std::invalid_argument("MIS k does not match the k-mer space");
  EditBudget::checked(mis.d, space.k());

  RunCounters local;
  RunCounters& c = counters ? *counters : local;
  const unsigned k = space.k();
  ImprovedScan scan(space, mis.d, c);
  std::uint8_t digits[64];
  const std::span<const std::uint8_t> v(digits, k);
  std::vector<int> v_sigma(space.sigma());

  for (std::size_t i = 0; i < mis.members.size(); ++i) {
    const std::uint64_t code = mis.members[i];
    space.unpack(code, digits);
    space.homopolymer_distances(code, v_sigma);
    scan.members().add(code, v, v_sigma);
    scan.mapping().set(code, static_cast<std::uint32_t>(i));
  }

  for (const std::uint64_t code : space.enumerate()) {
    if (scan.mapping().get(code) != MappingTable::unmapped) continue;
    space.unpack(code, digits);
    space.homopolymer_distances(code, v_sigma);
    const std::uint32_t m = scan.find_mapping(code, v, v_sigma);
    if (m == MappingTable::unmapped) {
      throw std::logic_error("k-mer " + space.decode(code) + " has no member within d=" + std::to_string(mis.d) +
                             "; the set is not maximal");
    }
    scan.mapping().set(code, m);
  }
  return std::move(scan.mapping());
}

}  // namespace kmis
