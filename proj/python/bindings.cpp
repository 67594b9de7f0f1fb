#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "kmis/app.hpp"
#include "kmis/bfs_mis.hpp"
#include "kmis/edit_distance.hpp"
#include "kmis/error.hpp"
#include "kmis/greedy.hpp"
#include "kmis/io.hpp"
#include "kmis/verify.hpp"

namespace py = pybind11;

namespace {

std::optional<kmis::Algorithm> parse_algo(const py::object& algo) {
  if (algo.is_none()) return std::nullopt;
  if (py::isinstance<py::str>(algo)) {
    const auto s = algo.cast<std::string>();
    if (s == "auto") return std::nullopt;
    return kmis::parse_algorithm(s);
  }
  return kmis::parse_algorithm(std::to_string(algo.cast<int>()));
}

kmis::Algorithm resolve(unsigned k, int d, const py::object& algo) {
  return parse_algo(algo).value_or(kmis::select_algorithm(k, d));
}

kmis::MisResult from_kmers(const kmis::KmerSpace& space, int d, const std::vector<std::string>& kmers) {
  kmis::MisResult mis{space.k(), d, {}};
  mis.members.reserve(kmers.size());
  for (const auto& s : kmers) mis.members.push_back(space.encode(s));
  return mis;
}

std::vector<std::string> to_kmers(const kmis::MisResult& mis) {
  const kmis::KmerSpace space(mis.k);
  std::vector<std::string> out;
  out.reserve(mis.members.size());
  for (auto c : mis.members) out.push_back(space.decode(c));
  return out;
}

kmis::RunLimits limits(std::uint64_t mem_limit) { return kmis::RunLimits{mem_limit}; }

constexpr std::uint64_t kDefaultBudget = std::uint64_t{8} << 30;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maximal independent sets of k-mers under edit distance";

  py::register_exception<kmis::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<kmis::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<kmis::CapacityError>(m, "CapacityError", PyExc_MemoryError);

  py::class_<kmis::MisResult>(m, "Mis")
      .def_readonly("k", &kmis::MisResult::k)
      .def_readonly("d", &kmis::MisResult::d)
      .def_readonly("codes", &kmis::MisResult::members)
      .def_property_readonly("algorithm", [](const kmis::MisResult& r) { return static_cast<int>(r.algorithm); })
      .def_property_readonly("kmers", &to_kmers)
      .def("__len__", &kmis::MisResult::size)
      .def("__repr__", [](const kmis::MisResult& r) {
        return "<Mis k=" + std::to_string(r.k) + " d=" + std::to_string(r.d) + " size=" + std::to_string(r.size()) +
               " algo=" + std::string(kmis::to_string(r.algorithm)) + ">";
      });

  m.def("encode", [](const std::string& s) { return kmis::encode(s).code; }, py::arg("kmer"),
        "Base-4 code of a DNA k-mer, leftmost character most significant.");
  m.def("decode", [](std::uint64_t code, unsigned k) { return kmis::KmerSpace(k).decode(code); }, py::arg("code"),
        py::arg("k"));

  m.def("edit_distance", [](const std::string& a, const std::string& b) {
    return kmis::edit_full(std::string_view(a), std::string_view(b));
  });
  m.def(
      "within",
      [](const std::string& a, const std::string& b, int d) {
        kmis::EditWorkspace ws;
        std::vector<std::uint8_t> x(a.begin(), a.end()), y(b.begin(), b.end());
        return kmis::edit_within(x, y, d, ws);
      },
      py::arg("a"), py::arg("b"), py::arg("d"), "True iff edit_distance(a, b) <= d, using the banded DP.");
  m.def(
      "graph_distance",
      [](const std::string& a, const std::string& b) {
        if (a.size() != b.size()) throw kmis::InputError("k-mers must have equal length");
        const kmis::KmerSpace space(static_cast<unsigned>(a.size()));
        return kmis::graph_distance(space, space.encode(a), space.encode(b));
      },
      "Shortest path between two k-mers in the substitution/insertion/deletion graph.");

  m.def("select_algorithm", [](unsigned k, int d) { return static_cast<int>(kmis::select_algorithm(k, d)); });

  m.def(
      "compute",
      [](unsigned k, int d, const py::object& algo, std::uint64_t mem_limit) {
        const kmis::KmerSpace space(k);
        const auto a = resolve(k, d, algo);
        py::gil_scoped_release release;
        return kmis::run(space, d, a, limits(mem_limit)).mis;
      },
      py::arg("k"), py::arg("d"), py::arg("algo") = "auto", py::arg("mem_limit") = kDefaultBudget,
      "Lexicographic greedy MIS for (k, d). algo is 1, 2, 3 or 'auto'.");

  m.def(
      "mapping",
      [](unsigned k, int d, const py::object& algo, std::uint64_t mem_limit) {
        const kmis::KmerSpace space(k);
        const auto a = resolve(k, d, algo);
        std::optional<kmis::RunOutcome> outcome;
        {
          py::gil_scoped_release release;
          outcome = kmis::run(space, d, a, limits(mem_limit), true);
        }
        py::array_t<std::uint32_t> cells(static_cast<py::ssize_t>(space.size()));
        auto view = cells.mutable_unchecked<1>();
        for (std::uint64_t v = 0; v < space.size(); ++v) view(v) = outcome->mapping->get(v);
        return py::make_tuple(std::move(outcome->mis), cells);
      },
      py::arg("k"), py::arg("d"), py::arg("algo") = "auto", py::arg("mem_limit") = kDefaultBudget,
      "(Mis, array) where array[code] is the index of a member within distance d of that k-mer.");

  m.def(
      "verify",
      [](const std::vector<std::string>& kmers, unsigned k, int d, std::uint64_t sample, unsigned threads) {
        const kmis::KmerSpace space(k);
        const auto mis = from_kmers(space, d, kmers);
        kmis::VerifyOptions options;
        if (sample > 0) {
          options.force_sample = true;
          options.sample_size = sample;
        }
        options.threads = threads;
        kmis::VerificationReport r;
        {
          py::gil_scoped_release release;
          r = kmis::verify(space, mis, options);
        }
        py::dict out;
        out["independent"] = r.independent;
        out["maximal"] = r.maximal;
        out["conflict"] = r.conflict ? py::object(py::make_tuple(space.decode(r.conflict->first),
                                                                 space.decode(r.conflict->second)))
                                     : py::object(py::none());
        out["orphan"] = r.orphan ? py::object(py::str(space.decode(*r.orphan))) : py::object(py::none());
        out["sampled"] = r.sampled;
        out["coverage"] = r.coverage;
        out["ok"] = r.ok();
        return out;
      },
      py::arg("kmers"), py::arg("k"), py::arg("d"), py::arg("sample") = 0, py::arg("threads") = 0);

  m.def("brute_oracle", [](unsigned k, int d) { return to_kmers(kmis::brute_oracle_mis(k, d)); }, py::arg("k"),
        py::arg("d"), "Reference greedy MIS by direct string comparison; k <= 8.");

  m.def("read_mis", [](const std::filesystem::path& path) { return kmis::read_mis(path); });
  m.def("write_mis", [](const std::filesystem::path& path, const kmis::MisResult& mis) {
    kmis::write_mis(path, kmis::KmerSpace(mis.k), mis);
  });
}
