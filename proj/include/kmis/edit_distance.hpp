#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "kmis/alphabet.hpp"
#include "kmis/kmer.hpp"

namespace kmis {

/// Edit threshold d for k-mers of length k.
struct EditBudget {
  int d = 0;

  /// Throws ParameterError unless 0 <= d < k.
  static EditBudget checked(int d, unsigned k);
};

/// Reusable scratch for the banded kernel. One per thread.
class EditWorkspace {
 public:
  int* prev(std::size_t n) {
    ensure(n);
    return prev_.data();
  }
  int* cur(std::size_t n) {
    ensure(n);
    return cur_.data();
  }

 private:
  void ensure(std::size_t n) {
    if (prev_.size() < n + 2) {
      prev_.resize(n + 2);
      cur_.resize(n + 2);
    }
  }

  std::vector<int> prev_;
  std::vector<int> cur_;
};

/// Unbanded Levenshtein distance (Wagner-Fischer). Lengths may differ.
int edit_full(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
int edit_full(std::string_view a, std::string_view b);
int edit_full(Kmer u, Kmer v, const Alphabet& alphabet = Alphabet::dna());

/// True iff edit(a, b) <= d. Only the diagonals |i - j| <= d are filled, two
/// rolling rows, and the scan stops as soon as a whole row exceeds d.
bool edit_within(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int d, EditWorkspace& ws);
bool edit_within(Kmer u, Kmer v, EditBudget budget, const Alphabet& alphabet = Alphabet::dna());

}  // namespace kmis
