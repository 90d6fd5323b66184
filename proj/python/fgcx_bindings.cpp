#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fgcx/errors.hpp"
#include "fgcx/pipeline.hpp"

namespace py = pybind11;
using namespace fgcx;

namespace {

Alphabet make_alphabet(std::size_t rank, const std::optional<std::vector<std::string>>& gens) {
  if (!gens) return Alphabet::standard(rank);
  Alphabet a(*gens);
  if (a.rank() != rank) throw InvalidArgument("gens does not match rank");
  return a;
}

std::pair<std::int64_t, std::int64_t> as_pair(const Rational& r) { return {r.numerator(), r.denominator()}; }

}  // namespace

PYBIND11_MODULE(_fgcx, m) {
  m.doc() = "Free group words, Whitehead graphs, primitivity and epsilon-maps of metric graphs";

  static py::exception<Error> error(m, "Error");
  static py::exception<UndecidedError> undecided(m, "UndecidedError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const UndecidedError& e) {
      py::set_error(undecided, e.what());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("gen_wk", [](std::int64_t k) { return serialize(gen_wk(k), wk_alphabet(k)); }, py::arg("k"),
        "The word w_k as text over a1..a2k, g.");

  m.def(
      "reduce",
      [](const std::string& word, std::size_t rank, std::optional<std::vector<std::string>> gens) {
        const Alphabet a = make_alphabet(rank, gens);
        const auto r = cyclic_reduce(parse_word(word, a));
        return py::dict(py::arg("free") = serialize(parse_word(word, a), a),
                        py::arg("cyclic") = serialize(r.cyclic, a), py::arg("conjugator") = serialize(r.conjugator, a));
      },
      py::arg("word"), py::arg("rank"), py::arg("gens") = py::none());

  m.def(
      "abelianize",
      [](const std::string& word, std::size_t rank, std::optional<std::vector<std::string>> gens) {
        const Alphabet a = make_alphabet(rank, gens);
        return abelianize(parse_word(word, a), a);
      },
      py::arg("word"), py::arg("rank"), py::arg("gens") = py::none());

  m.def(
      "whitehead_graph",
      [](const std::string& word, std::size_t rank, std::optional<std::vector<std::string>> gens) {
        const Alphabet a = make_alphabet(rank, gens);
        const auto g = build_whitehead_graph(cyclic_reduce(parse_word(word, a)).cyclic, a);
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& e : g.edges()) edges.emplace_back(g.vertex_name(e.first), g.vertex_name(e.second));
        const auto status = classify(g);
        py::object cut = py::none();
        if (status.cut_vertex) cut = py::str(g.vertex_name(*status.cut_vertex));
        return py::dict(py::arg("edges") = edges, py::arg("status") = to_string(status.kind),
                        py::arg("cut_vertex") = cut, py::arg("dot") = to_dot(g));
      },
      py::arg("word"), py::arg("rank"), py::arg("gens") = py::none());

  m.def(
      "_is_primitive_json",
      [](const std::string& word, std::size_t rank, std::optional<std::vector<std::string>> gens,
         std::size_t rank_guard) {
        const Alphabet a = make_alphabet(rank, gens);
        PrimitivityOptions options;
        options.descent.rank_guard = rank_guard;
        py::gil_scoped_release release;
        return certificate_to_json(is_primitive(parse_word(word, a), a, options).certificate, a).dump();
      },
      py::arg("word"), py::arg("rank"), py::arg("gens") = py::none(), py::arg("rank_guard") = kDefaultRankGuard);

  m.def("epsilon", [](std::int64_t k) { return as_pair(epsilon_of_fk(k)); }, py::arg("k"),
        "Exact epsilon(f_k) as (num, den) in units of 2*pi.");

  m.def("find_k", [](std::int64_t num, std::int64_t den) { return find_k_for_epsilon(Rational(num, den)); },
        py::arg("num"), py::arg("den"), "Least k with epsilon(f_k) < num/den (units of 2*pi).");

  m.def(
      "trace",
      [](std::int64_t k) {
        const MetricGraph g = build_Gk(k);
        const Alphabet a = wk_alphabet(k);
        return serialize(trace_word(g, build_fk(g, k), canonical_tree(g, k), a), a);
      },
      py::arg("k"));

  m.def(
      "_verify_json",
      [](std::int64_t k, std::size_t rank_guard) {
        VerifyOptions options;
        options.primitivity.descent.rank_guard = rank_guard;
        py::gil_scoped_release release;
        return report_to_json(verify(k, options)).dump();
      },
      py::arg("k"), py::arg("rank_guard") = kDefaultRankGuard);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line interface; returns (exit_code, stdout, stderr).");
}
