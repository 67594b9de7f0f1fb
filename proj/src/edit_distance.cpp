#include "kmis/edit_distance.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

#include "kmis/error.hpp"

namespace kmis {

namespace {

template <typename Seq>
int wagner_fischer(const Seq& a, const Seq& b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<int> prev(n + 1);
  std::vector<int> cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const int sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

void check_kmer(Kmer x, const Alphabet& alphabet) {
  if (x.k == 0 || x.k > alphabet.max_k()) throw InputError("invalid k-mer length " + std::to_string(x.k));
}

}  // namespace

EditBudget EditBudget::checked(int d, unsigned k) {
  if (d < 0 || static_cast<unsigned>(d) >= k) {
    throw ParameterError("d=" + std::to_string(d) + " must satisfy 0 <= d < k=" + std::to_string(k));
  }
  return EditBudget{d};
}

int edit_full(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) { return wagner_fischer(a, b); }

int edit_full(std::string_view a, std::string_view b) { return wagner_fischer(a, b); }

int edit_full(Kmer u, Kmer v, const Alphabet& alphabet) {
  check_kmer(u, alphabet);
  check_kmer(v, alphabet);
  return edit_full(decode(u, alphabet), decode(v, alphabet));
}

bool edit_within(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int d, EditWorkspace& ws) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(b.size());
  if (d < 0) return false;
  if (std::abs(m - n) > d) return false;

  // Cells outside the band hold `inf`; every such cell has true value > d.
  const int inf = d + 1;
  int* prev = ws.prev(static_cast<std::size_t>(n));
  int* cur = ws.cur(static_cast<std::size_t>(n));

  const int first_hi = std::min(n, d);
  for (int j = 0; j <= first_hi; ++j) prev[j] = j;
  if (first_hi + 1 <= n) prev[first_hi + 1] = inf;

  for (int i = 1; i <= m; ++i) {
    const int lo = std::max(1, i - d);
    const int hi = std::min(n, i + d);
    cur[lo - 1] = (lo == 1 && i <= d) ? i : inf;
    int row_min = cur[lo - 1];
    const std::uint8_t ai = a[static_cast<std::size_t>(i - 1)];
    for (int j = lo; j <= hi; ++j) {
      int best = prev[j - 1] + (ai != b[static_cast<std::size_t>(j - 1)] ? 1 : 0);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      best = std::min(best, inf);
      cur[j] = best;
      row_min = std::min(row_min, best);
    }
    if (row_min > d) return false;
    if (hi + 1 <= n) cur[hi + 1] = inf;
    std::swap(prev, cur);
  }
  return prev[n] <= d;
}

bool edit_within(Kmer u, Kmer v, EditBudget budget, const Alphabet& alphabet) {
  check_kmer(u, alphabet);
  check_kmer(v, alphabet);
  std::uint8_t du[64];
  std::uint8_t dv[64];
  KmerSpace(u.k, alphabet).unpack(u.code, du);
  KmerSpace(v.k, alphabet).unpack(v.code, dv);
  EditWorkspace ws;
  return edit_within(std::span<const std::uint8_t>(du, u.k), std::span<const std::uint8_t>(dv, v.k), budget.d, ws);
}

}  // namespace kmis
