#pragma once

#include <compare>
#include <cstdint>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmis/alphabet.hpp"

namespace kmis {

/// A k-mer packed as a base-|alphabet| integer, leftmost character most
/// significant. For the DNA alphabet this is exactly 2 bits per character.
/// Codes of equal length compare like the strings they encode.
struct Kmer {
  std::uint64_t code = 0;
  unsigned k = 0;

  friend bool operator==(const Kmer&, const Kmer&) = default;
  friend auto operator<=>(const Kmer&, const Kmer&) = default;
};

/// Throws InputError on an empty string, a string longer than alphabet.max_k(),
/// or a character outside the alphabet.
Kmer encode(std::string_view s, const Alphabet& alphabet = Alphabet::dna());

/// Throws InputError if kmer.code >= |alphabet|^k or k is out of range.
std::string decode(Kmer kmer, const Alphabet& alphabet = Alphabet::dna());

/// Positional arithmetic over one alphabet. Power-of-two radices take the
/// shift/mask path.
class Radix {
 public:
  explicit Radix(unsigned radix, unsigned max_exponent);

  unsigned radix() const noexcept { return radix_; }
  std::uint64_t pow(unsigned e) const noexcept { return pow_[e]; }

  std::uint64_t div_pow(std::uint64_t x, unsigned e) const noexcept {
    return shift_ ? x >> (shift_ * e) : x / pow_[e];
  }
  std::uint64_t mod_pow(std::uint64_t x, unsigned e) const noexcept {
    return shift_ ? x & (pow_[e] - 1) : x % pow_[e];
  }
  std::uint64_t mul_pow(std::uint64_t x, unsigned e) const noexcept {
    return shift_ ? x << (shift_ * e) : x * pow_[e];
  }

  /// Writes the `len` digits of `code` into out[0..len), most significant first.
  void unpack(std::uint64_t code, unsigned len, std::uint8_t* out) const noexcept {
    if (shift_) {
      const std::uint64_t mask = radix_ - 1;
      for (unsigned i = len; i-- > 0;) {
        out[i] = static_cast<std::uint8_t>(code & mask);
        code >>= shift_;
      }
    } else {
      for (unsigned i = len; i-- > 0;) {
        out[i] = static_cast<std::uint8_t>(code % radix_);
        code /= radix_;
      }
    }
  }

  std::uint64_t pack(std::span<const std::uint8_t> digits) const noexcept {
    std::uint64_t code = 0;
    for (auto d : digits) code = code * radix_ + d;
    return code;
  }

 private:
  unsigned radix_;
  unsigned shift_ = 0;  // log2(radix) when radix is a power of two, else 0
  std::vector<std::uint64_t> pow_;
};

/// The k-mer space S_k over an alphabet: |alphabet|^k codes enumerated in
/// lexicographic order.
class KmerSpace {
 public:
  /// Throws ParameterError unless 1 <= k <= alphabet.max_k().
  explicit KmerSpace(unsigned k, const Alphabet& alphabet = Alphabet::dna());

  unsigned k() const noexcept { return k_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Radix& radix() const noexcept { return radix_; }
  unsigned sigma() const noexcept { return radix_.radix(); }

  /// |alphabet|^k
  std::uint64_t size() const noexcept { return radix_.pow(k_); }

  bool contains(std::uint64_t code) const noexcept { return code < size(); }

  /// All codes in increasing (lexicographic) order.
  auto enumerate() const { return std::views::iota(std::uint64_t{0}, size()); }

  void unpack(std::uint64_t code, std::uint8_t* out) const noexcept { radix_.unpack(code, k_, out); }
  std::uint64_t pack(std::span<const std::uint8_t> digits) const noexcept { return radix_.pack(digits); }

  /// Encodes a string that must have length k.
  std::uint64_t encode(std::string_view s) const;
  std::string decode(std::uint64_t code) const;

  /// Visits the k(|alphabet|-1) substitution neighbours of `code` in
  /// lexicographic order of the resulting strings.
  template <typename Fn>
  void for_each_substitution_neighbor(std::uint64_t code, Fn&& fn) const {
    std::uint8_t digits[64];
    unpack(code, digits);
    // Smaller letters, leftmost position first, produce the neighbours below
    // `code`; larger letters, rightmost position first, the ones above it.
    for (unsigned i = 0; i < k_; ++i) {
      const std::uint64_t step = radix_.pow(k_ - 1 - i);
      for (unsigned c = 0; c < digits[i]; ++c) fn(code - (digits[i] - c) * step);
    }
    for (unsigned i = k_; i-- > 0;) {
      const std::uint64_t step = radix_.pow(k_ - 1 - i);
      for (unsigned c = digits[i] + 1u; c < sigma(); ++c) fn(code + (c - digits[i]) * step);
    }
  }

  std::vector<std::uint64_t> substitution_neighbors(std::uint64_t code) const;

  /// out[s] = edit(code, s^k) = k - (occurrences of letter s). `out` has sigma() slots.
  void homopolymer_distances(std::uint64_t code, std::span<int> out) const noexcept;
  std::vector<int> homopolymer_distances(std::uint64_t code) const;

  /// Code of the homopolymer letter^k.
  std::uint64_t homopolymer(unsigned letter) const noexcept;

 private:
  unsigned k_;
  Alphabet alphabet_;
  Radix radix_;
};

}  // namespace kmis
