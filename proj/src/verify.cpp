#include "kmis/verify.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "kmis/edit_distance.hpp"
#include "kmis/error.hpp"

namespace kmis {

namespace {

constexpr std::uint64_t kNone = UINT64_MAX;

unsigned worker_count(const VerifyOptions& options, std::uint64_t items) {
  unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(items, 1)));
}

// Runs body(begin, end) over `threads` contiguous slices of [0, n).
template <typename Body>
void parallel_slices(std::uint64_t n, unsigned threads, Body&& body) {
  if (threads <= 1) {
    body(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t per = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t b = std::min(n, t * per);
    const std::uint64_t e = std::min(n, b + per);
    pool.emplace_back([&body, b, e] { body(b, e); });
  }
  for (auto& th : pool) th.join();
}

void lower_to(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

// Pigeonhole candidate index. Split every member into d+1 segments; any
// string within edit distance d of a member contains one of that member's
// segments intact, shifted by at most d positions. Looking up every shifted
// window of a query therefore returns a superset of its true neighbours.
class SegmentIndex {
 public:
  SegmentIndex(const KmerSpace& space, const std::vector<std::uint64_t>& members, int d) : space_(space), d_(d) {
    const unsigned k = space.k();
    const unsigned parts = static_cast<unsigned>(d) + 1;
    const unsigned base = k / parts;
    const unsigned extra = k % parts;
    unsigned start = 0;
    for (unsigned s = 0; s < parts; ++s) {
      const unsigned len = base + (s < extra ? 1 : 0);
      segments_.push_back({start, len, {}});
      start += len;
    }
    std::uint8_t digits[64];
    for (std::size_t m = 0; m < members.size(); ++m) {
      space.unpack(members[m], digits);
      for (auto& seg : segments_) {
        seg.entries.emplace_back(window(digits, seg.start, seg.len), static_cast<std::uint32_t>(m));
      }
    }
    for (auto& seg : segments_) std::sort(seg.entries.begin(), seg.entries.end());
  }

  // Expected candidates per query if members were spread uniformly.
  double expected_candidates(std::size_t member_count) const {
    double total = 0;
    for (const auto& seg : segments_) {
      total += static_cast<double>(shifts(seg)) * static_cast<double>(member_count) /
               static_cast<double>(space_.radix().pow(seg.len));
    }
    return total;
  }

  bool usable() const { return std::all_of(segments_.begin(), segments_.end(), [](const auto& s) { return s.len > 0; }); }

  template <typename Fn>
  void for_each_candidate(const std::uint8_t* digits, Fn&& fn) const {
    const int k = static_cast<int>(space_.k());
    for (const auto& seg : segments_) {
      const int len = static_cast<int>(seg.len);
      for (int t = -d_; t <= d_; ++t) {
        const int st = static_cast<int>(seg.start) + t;
        if (st < 0 || st + len > k) continue;
        const std::uint64_t key = window(digits, static_cast<unsigned>(st), seg.len);
        auto it = std::lower_bound(seg.entries.begin(), seg.entries.end(), std::make_pair(key, std::uint32_t{0}));
        for (; it != seg.entries.end() && it->first == key; ++it) fn(it->second);
      }
    }
  }

 private:
  struct Segment {
    unsigned start;
    unsigned len;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
  };

  std::uint64_t window(const std::uint8_t* digits, unsigned start, unsigned len) const {
    return space_.pack(std::span<const std::uint8_t>(digits + start, len));
  }

  int shifts(const Segment& seg) const {
    int n = 0;
    for (int t = -d_; t <= d_; ++t) {
      const int st = static_cast<int>(seg.start) + t;
      if (st >= 0 && st + static_cast<int>(seg.len) <= static_cast<int>(space_.k())) ++n;
    }
    return n;
  }

  const KmerSpace& space_;
  int d_;
  std::vector<Segment> segments_;
};

// Finds members within d of a query, either by scanning all members or
// through the segment index, whichever is expected to be cheaper.
class NeighbourSearch {
 public:
  NeighbourSearch(const KmerSpace& space, const MisResult& mis) : space_(space), mis_(mis), d_(mis.d) {
    member_digits_.resize(mis.members.size() * space.k());
    for (std::size_t m = 0; m < mis.members.size(); ++m) space.unpack(mis.members[m], &member_digits_[m * space.k()]);
    if (mis.members.size() > 64) {
      index_.emplace(space, mis.members, d_);
      const double est = index_->expected_candidates(mis.members.size());
      if (!index_->usable() || est * 2 >= static_cast<double>(mis.members.size())) {
        index_.reset();
      } else {
        per_query_ = est + 1;
      }
    }
    if (!index_) per_query_ = static_cast<double>(mis.members.size());
  }

  double expected_dp_per_query() const { return per_query_; }

  // Per-thread scratch.
  struct Scratch {
    EditWorkspace ws;
    std::vector<std::uint32_t> stamp;
    std::uint32_t generation = 0;
    std::vector<std::uint32_t> candidates;
    std::uint64_t dp_calls = 0;
  };

  std::span<const std::uint8_t> member(std::size_t m) const {
    return {member_digits_.data() + m * space_.k(), space_.k()};
  }

  // Calls pred(m) for member indices m in increasing order that are within d
  // of `digits`, stopping when pred returns true. `accept(m)` filters which
  // members are tested at all.
  template <typename Accept, typename Pred>
  void search(const std::uint8_t* digits, Scratch& sc, Accept&& accept, Pred&& pred) const {
    const std::span<const std::uint8_t> q(digits, space_.k());
    if (!index_) {
      for (std::size_t m = 0; m < mis_.members.size(); ++m) {
        if (!accept(m)) continue;
        ++sc.dp_calls;
        if (edit_within(member(m), q, d_, sc.ws) && pred(m)) return;
      }
      return;
    }
    if (sc.stamp.size() != mis_.members.size()) sc.stamp.assign(mis_.members.size(), 0);
    if (++sc.generation == 0) {
      std::fill(sc.stamp.begin(), sc.stamp.end(), 0);
      sc.generation = 1;
    }
    sc.candidates.clear();
    index_->for_each_candidate(digits, [&](std::uint32_t m) {
      if (sc.stamp[m] == sc.generation) return;
      sc.stamp[m] = sc.generation;
      if (accept(m)) sc.candidates.push_back(m);
    });
    std::sort(sc.candidates.begin(), sc.candidates.end());
    for (const std::uint32_t m : sc.candidates) {
      ++sc.dp_calls;
      if (edit_within(member(m), q, d_, sc.ws) && pred(m)) return;
    }
  }

 private:
  const KmerSpace& space_;
  const MisResult& mis_;
  int d_;
  std::vector<std::uint8_t> member_digits_;
  std::optional<SegmentIndex> index_;
  double per_query_ = 0;
};

void check_inputs(const KmerSpace& space, const MisResult& mis) {
  if (mis.k != space.k()) {
    throw InputError("MIS has k=" + std::to_string(mis.k) + " but the space has k=" + std::to_string(space.k()));
  }
  EditBudget::checked(mis.d, space.k());
  for (const auto m : mis.members) {
    if (!space.contains(m)) throw InputError("member code " + std::to_string(m) + " is outside S_k");
  }
}

}  // namespace

VerificationReport verify_independent(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options) {
  check_inputs(space, mis);
  VerificationReport report;
  const std::uint64_t n = mis.members.size();
  if (n < 2) return report;

  NeighbourSearch search(space, mis);
  std::atomic<std::uint64_t> first_i{kNone};
  std::vector<std::uint64_t> partner(n, kNone);
  std::atomic<std::uint64_t> dp_calls{0};

  parallel_slices(n, worker_count(options, n), [&](std::uint64_t begin, std::uint64_t end) {
    NeighbourSearch::Scratch sc;
    std::uint8_t digits[64];
    for (std::uint64_t i = begin; i < end && i < first_i.load(); ++i) {
      space.unpack(mis.members[i], digits);
      search.search(
          digits, sc, [i](std::size_t m) { return m > i; },
          [&](std::size_t m) {
            partner[i] = m;
            lower_to(first_i, i);
            return true;
          });
    }
    dp_calls += sc.dp_calls;
  });

  report.pairs_checked = dp_calls.load();
  if (const std::uint64_t i = first_i.load(); i != kNone) {
    report.independent = false;
    report.conflict = std::make_pair(mis.members[i], mis.members[partner[i]]);
  }
  return report;
}

VerificationReport verify_maximal(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options) {
  check_inputs(space, mis);
  VerificationReport report;
  const bool sampled = options.force_sample || space.k() > options.exhaustive_k_limit;
  const std::uint64_t total = space.size();

  std::vector<std::uint64_t> queries;
  if (sampled) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    queries.resize(options.sample_size);
    for (auto& q : queries) q = pick(rng);
  }
  const std::uint64_t query_count = sampled ? queries.size() : total;

  NeighbourSearch search(space, mis);
  const double estimate = search.expected_dp_per_query() * static_cast<double>(query_count);
  if (!options.allow_large && estimate > static_cast<double>(options.max_dp_calls)) {
    throw CapacityError("maximality check needs an estimated " + std::to_string(static_cast<std::uint64_t>(estimate)) +
                            " edit-distance evaluations; use sampling or allow large runs",
                        static_cast<std::uint64_t>(estimate), options.max_dp_calls);
  }

  std::vector<std::uint64_t> sorted = mis.members;
  std::sort(sorted.begin(), sorted.end());
  std::atomic<std::uint64_t> first{kNone};
  std::atomic<std::uint64_t> dp_calls{0};
  std::atomic<std::uint64_t> checked{0};

  parallel_slices(query_count, worker_count(options, query_count), [&](std::uint64_t begin, std::uint64_t end) {
    NeighbourSearch::Scratch sc;
    std::uint8_t digits[64];
    std::uint64_t local_checked = 0;
    for (std::uint64_t q = begin; q < end && q < first.load(); ++q) {
      const std::uint64_t code = sampled ? queries[q] : q;
      if (std::binary_search(sorted.begin(), sorted.end(), code)) continue;
      ++local_checked;
      space.unpack(code, digits);
      bool covered = false;
      search.search(
          digits, sc, [](std::size_t) { return true; },
          [&](std::size_t) {
            covered = true;
            return true;
          });
      if (!covered) {
        lower_to(first, q);
        break;
      }
    }
    dp_calls += sc.dp_calls;
    checked += local_checked;
  });

  report.pairs_checked = dp_calls.load();
  report.kmers_checked = checked.load();
  report.sampled = sampled;
  report.coverage = std::min(1.0, static_cast<double>(query_count) / static_cast<double>(total));
  if (const std::uint64_t q = first.load(); q != kNone) {
    report.maximal = false;
    report.orphan = sampled ? queries[q] : q;
  }
  return report;
}

VerificationReport verify(const KmerSpace& space, const MisResult& mis, const VerifyOptions& options) {
  VerificationReport ind = verify_independent(space, mis, options);
  VerificationReport max = verify_maximal(space, mis, options);
  max.independent = ind.independent;
  max.conflict = ind.conflict;
  max.pairs_checked += ind.pairs_checked;
  return max;
}

MisResult brute_oracle_mis(unsigned k, int d, const Alphabet& alphabet) {
  if (k == 0 || k > 8) throw ParameterError("brute_oracle_mis supports 1 <= k <= 8, got k=" + std::to_string(k));
  EditBudget::checked(d, k);

  std::vector<std::string> chosen;
  std::string s(k, alphabet.letter(0));
  while (true) {
    bool mapped = false;
    for (const auto& m : chosen) {
      if (edit_full(m, s) <= d) {
        mapped = true;
        break;
      }
    }
    if (!mapped) chosen.push_back(s);

    // next string in lexicographic order
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && s[pos] == alphabet.letter(alphabet.size() - 1)) {
      s[pos] = alphabet.letter(0);
      --pos;
    }
    if (pos < 0) break;
    s[pos] = alphabet.letter(*alphabet.index_of(s[pos]) + 1);
  }

  MisResult result{k, d, {}, Algorithm::simple_greedy, "lex"};
  for (const auto& m : chosen) result.members.push_back(encode(m, alphabet).code);
  return result;
}

}  // namespace kmis
