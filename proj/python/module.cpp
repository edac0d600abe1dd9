#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "secantq/cli.hpp"
#include "secantq/errors.hpp"
#include "secantq/harness.hpp"

#include <sstream>

namespace py = pybind11;
using namespace secantq;

namespace {

BraidWord word_from_text(const std::string& text) {
  return parse_braid_word(text);
}

py::list trace_events(const std::string& word, std::uint64_t seed,
                      int retries) {
  BraidWord w = parse_braid_word(word);
  Realized realized = realize_generic(w, seed, retries);
  py::list out;
  for (const TrisecantEvent& e : realized.events) {
    py::dict d;
    d["time"] = e.time.approx();
    d["time_exact"] = e.time.to_string();
    d["piece"] = e.piece;
    d["triple"] = py::make_tuple(e.outer_a, e.middle, e.outer_c);
    d["sign"] = e.sign;
    d["surface"] = py::make_tuple(e.outer_a, e.outer_c);
    out.append(d);
  }
  return out;
}

py::dict braid_top_map(const std::string& word, std::uint64_t seed,
                       int retries) {
  BraidWord w = parse_braid_word(word);
  Pipeline p = run_pipeline(w, seed, retries);
  BraidSQ sq = build_braid_sq(p.trace, p.realized.events);
  py::dict out;
  for (int i = 1; i <= w.strands; ++i)
    for (int j = 1; j <= w.strands; ++j) {
      if (i == j) continue;
      out[py::make_tuple(i, j)] =
          to_string(sq.top_map[p.trace.pair_index(i, j)]);
    }
  return out;
}

std::string plat_presentation_text(const std::string& word,
                                   std::uint64_t seed, int retries,
                                   bool simplified) {
  BraidWord w = parse_braid_word(word);
  Pipeline p = run_pipeline(w, seed, retries);
  QuandlePresentation pres =
      build_plat_presentation(p.trace, p.realized.events, plat_structure(w));
  if (simplified) pres = simplify(pres);
  return presentation_text(pres);
}

long long color_count(const std::string& word, const std::string& quandle,
                      std::uint64_t seed, int retries) {
  BraidWord w = parse_braid_word(word);
  Pipeline p = run_pipeline(w, seed, retries);
  QuandlePresentation pres =
      build_plat_presentation(p.trace, p.realized.events, plat_structure(w));
  return count_colorings(pres, parse_quandle_spec(quandle)).count;
}

py::dict compare_braids_py(const std::string& w1, const std::string& w2,
                           std::uint64_t seed, int retries) {
  ComparisonResult r = compare_braids(parse_braid_word(w1),
                                      parse_braid_word(w2), seed, retries);
  py::dict d;
  d["equal"] = r.equal;
  d["witness"] = r.witness;
  d["events"] = py::make_tuple(r.left_events, r.right_events);
  return d;
}

py::dict compare_plats_py(const std::string& w1, const std::string& w2,
                          const std::vector<std::string>& targets,
                          std::uint64_t seed, int retries) {
  std::vector<FiniteQuandle> quandles;
  for (const std::string& spec : targets)
    quandles.push_back(parse_quandle_spec(spec));
  ComparisonResult r = compare_plats(parse_braid_word(w1),
                                     parse_braid_word(w2), quandles, seed,
                                     retries);
  py::dict d;
  d["equal"] = r.equal;
  d["witness"] = r.witness;
  return d;
}

bool quandle_axioms_ok(const std::string& spec) {
  return verify_axioms(parse_quandle_spec(spec)).pass;
}

std::string apply_moves_py(const std::string& word, const std::string& script) {
  BraidWord w = parse_braid_word(word);
  for (const Move& m : parse_move_script(script)) w = apply_move(w, m);
  return format_braid_word(w);
}

py::dict plat_info(const std::string& word) {
  PlatStructure plat = plat_structure(parse_braid_word(word));
  py::dict d;
  d["components"] = plat.component_count;
  py::list orient;
  for (StrandDir dir : plat.orientation)
    orient.append(dir == StrandDir::Up ? "up" : "down");
  d["orientation"] = orient;
  d["component_of"] = plat.component;
  return d;
}

}  // namespace

PYBIND11_MODULE(secantq, m) {
  m.doc() = "secant-quandle invariants of braids and plat closures";

  py::register_exception<GenericityExhausted>(m, "GenericityExhausted");
  py::register_exception<SqError>(m, "SqError");

  m.def("parse_word", [](const std::string& text) {
    BraidWord w = word_from_text(text);
    return py::make_tuple(w.strands, w.letters);
  }, py::arg("text"), "Parse 'n: g1 g2 ...' into (strands, letters).");

  m.def("trace", &trace_events, py::arg("word"), py::arg("seed") = 0,
        py::arg("retries") = 5,
        "Trisecant events of a generic realization, sorted by exact time.");

  m.def("top_map", &braid_top_map, py::arg("word"), py::arg("seed") = 0,
        py::arg("retries") = 5,
        "Braid invariant: directed pair -> reduced free-quandle word.");

  m.def("plat_presentation", &plat_presentation_text, py::arg("word"),
        py::arg("seed") = 0, py::arg("retries") = 5,
        py::arg("simplified") = false,
        "Quandle presentation of the plat closure, as text records.");

  m.def("color_count", &color_count, py::arg("word"), py::arg("quandle"),
        py::arg("seed") = 0, py::arg("retries") = 5,
        "Number of colorings of the plat presentation into the target.");

  m.def("compare_braids", &compare_braids_py, py::arg("word1"),
        py::arg("word2"), py::arg("seed") = 0, py::arg("retries") = 5);

  m.def("compare_plats", &compare_plats_py, py::arg("word1"), py::arg("word2"),
        py::arg("targets"), py::arg("seed") = 0, py::arg("retries") = 5);

  m.def("quandle_axioms_ok", &quandle_axioms_ok, py::arg("spec"));

  m.def("apply_moves", &apply_moves_py, py::arg("word"), py::arg("script"),
        "Apply a move script (one move per line) and return the new word.");

  m.def("plat_info", &plat_info, py::arg("word"),
        "Components and strand orientations of the plat closure.");
}
