#include "kmis/alphabet.hpp"

#include "kmis/error.hpp"

namespace kmis {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.size() < 2 || letters_.size() > 26) {
    throw ParameterError("alphabet size must be in [2, 26], got " + std::to_string(letters_.size()));
  }
  lookup_.fill(kNone);
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto& slot = lookup_[static_cast<unsigned char>(letters_[i])];
    if (slot != kNone) {
      throw ParameterError(std::string("duplicate alphabet letter '") + letters_[i] + "'");
    }
    slot = static_cast<std::uint8_t>(i);
  }

  // Keep size^k <= 2^62 so that k-mer plus (k-1)-mer flat indices never overflow.
  const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 62;
  unsigned __int128 p = 1;
  while (p * size() <= limit) {
    p *= size();
    ++max_k_;
  }
}

const Alphabet& Alphabet::dna() {
  static const Alphabet kDna("ACGT");
  return kDna;
}

}  // namespace kmis
