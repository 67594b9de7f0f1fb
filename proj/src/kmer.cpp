#include "kmis/kmer.hpp"

#include <algorithm>
#include <bit>

#include "kmis/error.hpp"

namespace kmis {

namespace {

std::uint64_t encode_checked(std::string_view s, const Alphabet& alphabet) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto idx = alphabet.index_of(s[i]);
    if (!idx) {
      throw InputError("character '" + std::string(1, s[i]) + "' at position " + std::to_string(i) +
                       " is not in alphabet " + alphabet.letters());
    }
    code = code * alphabet.size() + *idx;
  }
  return code;
}

}  // namespace

Kmer encode(std::string_view s, const Alphabet& alphabet) {
  if (s.empty() || s.size() > alphabet.max_k()) {
    throw InputError("k-mer length " + std::to_string(s.size()) + " outside [1, " +
                     std::to_string(alphabet.max_k()) + "]");
  }
  return Kmer{encode_checked(s, alphabet), static_cast<unsigned>(s.size())};
}

std::string decode(Kmer kmer, const Alphabet& alphabet) {
  if (kmer.k == 0 || kmer.k > alphabet.max_k()) {
    throw InputError("k-mer length " + std::to_string(kmer.k) + " outside [1, " +
                     std::to_string(alphabet.max_k()) + "]");
  }
  return KmerSpace(kmer.k, alphabet).decode(kmer.code);
}

Radix::Radix(unsigned radix, unsigned max_exponent) : radix_(radix), pow_(max_exponent + 1) {
  if (std::has_single_bit(radix)) shift_ = static_cast<unsigned>(std::countr_zero(radix));
  pow_[0] = 1;
  for (unsigned e = 1; e <= max_exponent; ++e) pow_[e] = pow_[e - 1] * radix;
}

KmerSpace::KmerSpace(unsigned k, const Alphabet& alphabet)
    : k_(k), alphabet_(alphabet), radix_(alphabet.size(), std::max(k, 1u)) {
  if (k == 0 || k > alphabet.max_k()) {
    throw ParameterError("k=" + std::to_string(k) + " outside [1, " + std::to_string(alphabet.max_k()) + "]");
  }
}

std::uint64_t KmerSpace::encode(std::string_view s) const {
  if (s.size() != k_) {
    throw InputError("expected a " + std::to_string(k_) + "-mer, got length " + std::to_string(s.size()));
  }
  return encode_checked(s, alphabet_);
}

std::string KmerSpace::decode(std::uint64_t code) const {
  if (!contains(code)) {
    throw InputError("code " + std::to_string(code) + " out of range for k=" + std::to_string(k_));
  }
  std::uint8_t digits[64];
  unpack(code, digits);
  std::string s(k_, '\0');
  for (unsigned i = 0; i < k_; ++i) s[i] = alphabet_.letter(digits[i]);
  return s;
}

std::vector<std::uint64_t> KmerSpace::substitution_neighbors(std::uint64_t code) const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(k_) * (sigma() - 1));
  for_each_substitution_neighbor(code, [&](std::uint64_t n) { out.push_back(n); });
  return out;
}

void KmerSpace::homopolymer_distances(std::uint64_t code, std::span<int> out) const noexcept {
  std::fill(out.begin(), out.end(), static_cast<int>(k_));
  std::uint8_t digits[64];
  unpack(code, digits);
  for (unsigned i = 0; i < k_; ++i) --out[digits[i]];
}

std::vector<int> KmerSpace::homopolymer_distances(std::uint64_t code) const {
  std::vector<int> out(sigma());
  homopolymer_distances(code, out);
  return out;
}

std::uint64_t KmerSpace::homopolymer(unsigned letter) const noexcept {
  std::uint64_t code = 0;
  for (unsigned i = 0; i < k_; ++i) code = code * sigma() + letter;
  return code;
}

}  // namespace kmis
