#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kmis {

/// An ordered alphabet of 2..26 distinct characters. Letter order defines
/// k-mer order: the letter at index 0 is the smallest.
class Alphabet {
 public:
  /// Throws ParameterError unless 2 <= letters.size() <= 26 and letters are distinct.
  explicit Alphabet(std::string_view letters);

  static const Alphabet& dna();

  unsigned size() const noexcept { return static_cast<unsigned>(letters_.size()); }
  const std::string& letters() const noexcept { return letters_; }
  char letter(unsigned index) const { return letters_.at(index); }

  std::optional<unsigned> index_of(char c) const noexcept {
    const auto idx = lookup_[static_cast<unsigned char>(c)];
    if (idx == kNone) return std::nullopt;
    return idx;
  }

  /// Largest k for which |alphabet|^k + |alphabet|^(k-1) fits comfortably in 64 bits.
  unsigned max_k() const noexcept { return max_k_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.letters_ == b.letters_; }

 private:
  static constexpr std::uint8_t kNone = 0xFF;

  std::string letters_;
  std::array<std::uint8_t, 256> lookup_{};
  unsigned max_k_ = 0;
};

}  // namespace kmis
