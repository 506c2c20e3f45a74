#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "plcs/certify.hpp"
#include "plcs/corpus.hpp"
#include "plcs/io.hpp"

namespace py = pybind11;
using namespace plcs;

/* Thin JSON-string facade over the C++ library: schemes travel as canonical
   JSON objects, certificates as JSONL, so no heavy types cross the boundary. */

namespace {

Line line_of(const std::string& s) {
    require(s == "y" || s == "x", "line must be 'y' or 'x'");
    return s == "y" ? Line::Y : Line::X;
}

CertMode mode_of(bool strict) { return strict ? CertMode::Strict : CertMode::BestEffort; }

} // namespace

PYBIND11_MODULE(_plcs, m) {
    m.doc() = "exact calculus of plane curve singularity schemes";

    m.def("canonical", [](const std::string& s) { return scheme_to_json(scheme_from_json(s)); },
          py::arg("scheme"));
    m.def("invariants",
          [](const std::string& s) { return invariants_to_json(scheme_from_json(s)); },
          py::arg("scheme"));
    m.def("tree", [](const std::string& s) { return tree_to_json(scheme_from_json(s)); },
          py::arg("scheme"));

    m.def("reduce",
          [](const std::string& s, const std::string& l, unsigned seed) {
              return scheme_to_json(reduce(scheme_from_json(s), line_of(l), seed));
          },
          py::arg("scheme"), py::arg("line") = "y", py::arg("seed") = 1);
    m.def("extend",
          [](const std::string& s, long at) {
              return scheme_to_json(extend(scheme_from_json(s), at));
          },
          py::arg("scheme"), py::arg("at") = 1);
    m.def("specialize",
          [](const std::string& s, long branch, long size, unsigned seed) {
              return scheme_to_json(
                  specialize(scheme_from_json(s), (size_t)branch, size, seed));
          },
          py::arg("scheme"), py::arg("branch"), py::arg("size"), py::arg("seed") = 1);

    m.def("certify",
          [](const std::string& s, long d, const std::string& cls, bool strict, unsigned seed) {
              GSScheme x = scheme_from_json(s);
              Certificate c = cls == "gs1" ? certify_gs1(x, d, mode_of(strict), seed)
                                           : certify_gs(x, d, mode_of(strict), seed);
              return certificate_to_jsonl(c);
          },
          py::arg("scheme"), py::arg("degree"), py::arg("cls") = "gs",
          py::arg("strict") = true, py::arg("seed") = 1);
    m.def("replay",
          [](const std::string& jsonl) {
              ReplayReport r = replay(certificate_from_jsonl(jsonl));
              py::dict out;
              out["steps_checked"] = r.steps_checked;
              out["top_deg"] = (std::int64_t)r.top.deg;
              out["terminal_empty"] = r.terminal.empty();
              return out;
          },
          py::arg("certificate"));

    m.def("cohomology",
          [](const std::string& s, long d) {
              return cohomology_to_json(
                  h0_h1({{scheme_from_json(s), Placement{Rat(0), Rat(0)}}}, d));
          },
          py::arg("scheme"), py::arg("degree"));

    m.def("sigma", [](const std::string& s) { return sigma(scheme_from_json(s)); },
          py::arg("scheme"));
    m.def("bounds",
          [](const std::string& s, long d) {
              return bound_report_to_json(bound_report(scheme_from_json(s), d));
          },
          py::arg("scheme"), py::arg("degree"));

    m.def("corpus",
          [](long count, long max_branches, long max_mult, unsigned seed) {
              std::vector<std::string> out;
              for (auto& x : make_corpus({count, max_branches, max_mult, seed}))
                  out.push_back(scheme_to_json(x));
              return out;
          },
          py::arg("count") = 200, py::arg("max_branches") = 4, py::arg("max_mult") = 6,
          py::arg("seed") = 1);

    py::register_exception<InputError>(m, "InputError");
    py::register_exception<PaperInvariantViolation>(m, "PaperInvariantViolation");
    py::register_exception<ReplayMismatch>(m, "ReplayMismatch");
}
