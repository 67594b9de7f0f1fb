#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kmis/greedy.hpp"
#include "kmis/kmer.hpp"
#include "kmis/mis.hpp"

namespace kmis {

// MIS text file:
//   #k=<k> d=<d> size=<n> algo=<a> order=lex
//   <n k-mers, one per line, in insertion order>

void write_mis(std::ostream& out, const KmerSpace& space, const MisResult& mis);
void write_mis(const std::filesystem::path& path, const KmerSpace& space, const MisResult& mis);

/// Throws InputError naming `source` and the line number on malformed input.
/// Duplicate k-mers are kept; they are a verification failure, not a parse error.
MisResult read_mis(std::istream& in, const std::string& source = "<stream>", const Alphabet& alphabet = Alphabet::dna());
MisResult read_mis(const std::filesystem::path& path, const Alphabet& alphabet = Alphabet::dna());

// Mapping binary file, little-endian:
//   bytes 0..3   magic "KMAP"
//   bytes 4..7   k (u32)
//   bytes 8..11  d (u32)
//   bytes 12..15 cell width in bytes, 2 or 4 (u32)
//   then |S|^k cells; cell i is the member index for k-mer code i.

inline constexpr char kMappingMagic[4] = {'K', 'M', 'A', 'P'};

void write_mapping(std::ostream& out, const MappingTable& mapping, unsigned k, int d);
void write_mapping(const std::filesystem::path& path, const MappingTable& mapping, unsigned k, int d);

struct MappingFile {
  unsigned k = 0;
  int d = 0;
  unsigned width = 0;
  std::vector<std::uint32_t> entries;
};

MappingFile read_mapping(std::istream& in);
MappingFile read_mapping(const std::filesystem::path& path);

}  // namespace kmis
