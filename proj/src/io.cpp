#include "kmis/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "kmis/error.hpp"

namespace kmis {

namespace {

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw InputError("cannot open " + path.string() + " for reading");
  return in;
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InputError(where + ": expected a number, got '" + text + "'");
  return value;
}

void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

}  // namespace

void write_mis(std::ostream& out, const KmerSpace& space, const MisResult& mis) {
  out << "#k=" << mis.k << " d=" << mis.d << " size=" << mis.members.size() << " algo=" << to_string(mis.algorithm)
      << " order=" << mis.order << '\n';
  for (const auto m : mis.members) out << space.decode(m) << '\n';
}

void write_mis(const std::filesystem::path& path, const KmerSpace& space, const MisResult& mis) {
  auto out = open_out(path);
  write_mis(out, space, mis);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

MisResult read_mis(std::istream& in, const std::string& source, const Alphabet& alphabet) {
  std::string line;
  if (!std::getline(in, line) || line.empty() || line[0] != '#') {
    throw InputError(source + ":1: missing header line '#k=<k> d=<d> size=<n> ...'");
  }

  std::map<std::string, std::string> fields;
  std::istringstream header(line.substr(1));
  for (std::string tok; header >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw InputError(source + ":1: malformed header field '" + tok + "'");
    fields[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"k", "d", "size"}) {
    if (!fields.count(key)) throw InputError(source + ":1: header lacks '" + key + "='");
  }

  MisResult mis;
  mis.k = parse_number<unsigned>(fields["k"], source + ":1");
  mis.d = parse_number<int>(fields["d"], source + ":1");
  const auto declared = parse_number<std::uint64_t>(fields["size"], source + ":1");
  if (fields.count("algo")) mis.algorithm = parse_algorithm(fields["algo"]);
  if (fields.count("order")) mis.order = fields["order"];
  if (mis.k == 0 || mis.k > alphabet.max_k()) throw InputError(source + ":1: unsupported k=" + fields["k"]);
  const KmerSpace space(mis.k, alphabet);

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw InputError(source + ":" + std::to_string(lineno) + ": empty line");
    }
    if (line.size() != mis.k) {
      throw InputError(source + ":" + std::to_string(lineno) + ": expected a " + std::to_string(mis.k) +
                       "-mer, got length " + std::to_string(line.size()));
    }
    try {
      mis.members.push_back(space.encode(line));
    } catch (const InputError& e) {
      throw InputError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (mis.members.size() != declared) {
    throw InputError(source + ": header declares size=" + std::to_string(declared) + " but the file has " +
                     std::to_string(mis.members.size()) + " k-mers");
  }
  return mis;
}

MisResult read_mis(const std::filesystem::path& path, const Alphabet& alphabet) {
  auto in = open_in(path);
  return read_mis(in, path.string(), alphabet);
}

void write_mapping(std::ostream& out, const MappingTable& mapping, unsigned k, int d) {
  out.write(kMappingMagic, 4);
  put_u32(out, k);
  put_u32(out, static_cast<std::uint32_t>(d));
  put_u32(out, mapping.width());
  const auto bytes = mapping.to_bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_mapping(const std::filesystem::path& path, const MappingTable& mapping, unsigned k, int d) {
  auto out = open_out(path, std::ios::out | std::ios::binary);
  write_mapping(out, mapping, k, d);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

MappingFile read_mapping(std::istream& in) {
  unsigned char header[16];
  if (!in.read(reinterpret_cast<char*>(header), 16)) throw InputError("mapping file shorter than its 16-byte header");
  if (std::memcmp(header, kMappingMagic, 4) != 0) throw InputError("mapping file has bad magic");
  MappingFile file;
  file.k = get_u32(header + 4);
  file.d = static_cast<int>(get_u32(header + 8));
  file.width = get_u32(header + 12);
  if (file.width != 2 && file.width != 4) throw InputError("mapping cell width must be 2 or 4");
  const KmerSpace space(file.k);

  std::vector<unsigned char> raw(space.size() * file.width);
  if (!in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()))) {
    throw InputError("mapping file truncated");
  }
  file.entries.resize(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const unsigned char* p = raw.data() + i * file.width;
    file.entries[i] = file.width == 2 ? static_cast<std::uint32_t>(p[0] | p[1] << 8) : get_u32(p);
  }
  return file;
}

MappingFile read_mapping(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in | std::ios::binary);
  return read_mapping(in);
}

}  // namespace kmis
