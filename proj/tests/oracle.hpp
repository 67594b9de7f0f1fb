// Test-only reference implementations. Everything here works on plain
// std::string and shares no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline const std::string kDna = "ACGT";

// Levenshtein distance by the memoised recurrence, written independently of
// the library's row-based DP.
inline int levenshtein(const std::string& a, const std::string& b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    auto key = std::make_pair(i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int best = go(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1);
    best = std::min(best, go(i - 1, j) + 1);
    best = std::min(best, go(i, j - 1) + 1);
    memo[key] = best;
    return best;
  };
  return go(a.size(), b.size());
}

// All strings of length k over `alphabet`, in lexicographic order.
inline std::vector<std::string> all_strings(unsigned k, const std::string& alphabet = kDna) {
  std::vector<std::string> out{""};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : alphabet) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

inline std::string random_string(std::mt19937_64& rng, unsigned k, const std::string& alphabet = kDna) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(k, ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

inline std::set<std::string> substitutions(const std::string& s, const std::string& alphabet = kDna) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (char c : alphabet)
      if (c != s[i]) {
        std::string t = s;
        t[i] = c;
        out.insert(t);
      }
  return out;
}

inline std::set<std::string> deletions(const std::string& s) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.insert(s.substr(0, i) + s.substr(i + 1));
  return out;
}

inline std::set<std::string> insertions(const std::string& s, const std::string& alphabet = kDna) {
  std::set<std::string> out;
  for (std::size_t i = 0; i <= s.size(); ++i)
    for (char c : alphabet) out.insert(s.substr(0, i) + c + s.substr(i));
  return out;
}

// Lexicographic greedy MIS straight from the definition.
inline std::vector<std::string> greedy_mis(unsigned k, int d, const std::string& alphabet = kDna) {
  std::vector<std::string> chosen;
  for (const auto& s : all_strings(k, alphabet)) {
    bool covered = std::any_of(chosen.begin(), chosen.end(), [&](const std::string& m) { return levenshtein(m, s) <= d; });
    if (!covered) chosen.push_back(s);
  }
  return chosen;
}

}  // namespace oracle
