#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "actionwin/barcode.hpp"
#include "actionwin/displacement.hpp"
#include "actionwin/fixtures.hpp"
#include "actionwin/io.hpp"
#include "actionwin/linearization.hpp"
#include "actionwin/pwc.hpp"

namespace py = pybind11;
using namespace actionwin;

namespace {

std::string dump(const io::Json& j) { return j.dump(); }

std::string barcode_json(const std::string& complex, const std::string& engine) {
    auto c = io::complex_from_json(io::parse_json(complex));
    if (engine == "canonical") return dump(io::to_json(barcode(c)));
    if (engine == "definitional") return dump(io::to_json(barcode_definitional(c)));
    if (engine == "both") {
        auto bars = barcode(c);
        if (!(bars == barcode_definitional(c))) {
            throw Error(ErrorCode::EngineMismatch, "canonical and definitional barcodes differ");
        }
        return dump(io::to_json(bars));
    }
    throw Error(ErrorCode::SchemaError, "unknown engine '" + engine + "'");
}

std::string validate_json(const std::string& complex) {
    auto c = io::complex_from_json(io::parse_json(complex));
    return dump(io::to_json(c));
}

std::string simulate_json(const std::string& timeline) {
    auto tl = io::timeline_from_json(io::parse_json(timeline));
    auto trace = simulate(tl);
    auto report = check_transitions(trace, tl);
    io::Json checks = io::Json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"scope", c.scope}, {"time", to_string(c.time)}, {"rule", c.rule}, {"passed", c.passed},
                          {"detail", c.detail}});
    }
    io::Json samples = io::Json::array();
    for (const auto& s : trace.samples) {
        samples.push_back({{"time", to_string(s.time)}, {"label", s.label}, {"barcode", io::to_json(s.barcode)}});
    }
    return dump({{"all_passed", report.all_passed()}, {"checks", checks}, {"samples", samples},
                 {"vineyard", io::vineyard_csv(vineyard(trace))}});
}

std::string linearize_json(const std::string& dga_text, const std::string& eps_text, const std::string& a,
                           const std::string& b, const std::string& l) {
    auto dga = io::dga_from_json(io::parse_json(dga_text));
    Augmentation eps = io::augmentation_from_json(io::parse_json(eps_text), dga.field());
    auto c = partial_linearization(dga, eps, parse_action(a), parse_action(b), parse_action(l));
    return dump({{"complex", io::to_json(c)}, {"barcode", io::to_json(barcode(c))}});
}

py::dict bound(const std::vector<std::string>& sigma, const std::vector<long>& betti, const std::string& l,
               const std::string& osc) {
    SigmaProfile s;
    for (const auto& v : sigma) s.sigma.push_back(parse_action(v));
    auto r = theorem_bound(s, BettiProfile{betti}, parse_action(l), parse_rational(osc));
    py::dict out;
    out["count"] = r.count;
    out["i_star"] = r.i_star ? py::object(py::int_(*r.i_star)) : py::object(py::none());
    out["ordering"] = r.ordering;
    out["binding"] = r.binding;
    out["threshold"] = to_string(r.threshold);
    out["at_boundary"] = r.at_boundary;
    out["summary"] = summary_line(r);
    return out;
}

std::string schedule_oscillation(const std::string& a, const std::string& s) {
    Rational av = parse_rational(a), sv = parse_rational(s);
    return to_string(oscillation(rescaling_schedule(av, sv), sv));
}

std::vector<py::tuple> catalog() {
    std::vector<py::tuple> out;
    for (const auto& f : fixtures::catalog()) out.push_back(py::make_tuple(f.name, f.kind, f.description));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Filtered complexes with action windows, barcodes and displacement bounds";
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    m.def("barcode", &barcode_json, py::arg("complex"), py::arg("engine") = "canonical",
          "Barcode of a complex document (JSON text), returned as JSON text.");
    m.def("validate_complex", &validate_json, py::arg("complex"),
          "Validates a complex document and returns its canonical JSON text.");
    m.def("simulate", &simulate_json, py::arg("timeline"),
          "Runs a timeline and checks the transition rules; returns JSON text.");
    m.def("linearize", &linearize_json, py::arg("dga"), py::arg("augmentation"), py::arg("a"), py::arg("b"),
          py::arg("l") = "inf", "Partial linearization of a DGA in the window [a, b).");
    m.def("theorem_bound", &bound, py::arg("sigma"), py::arg("betti"), py::arg("l"), py::arg("osc"));
    m.def("schedule_oscillation", &schedule_oscillation, py::arg("a"), py::arg("s"),
          "Oscillation of the rescaling schedule on [0, s].");
    m.def("fixture", [](const std::string& name, const std::string& field) {
        return dump(io::fixture_document(name, FieldSpec::parse(field)));
    }, py::arg("name"), py::arg("field") = "F2");
    m.def("fixtures", &catalog);
}
