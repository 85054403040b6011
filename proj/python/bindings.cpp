#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "complements/adjunction.hpp"
#include "complements/arrangement.hpp"
#include "complements/cli.hpp"
#include "complements/curve.hpp"
#include "complements/dualgraph.hpp"
#include "complements/io.hpp"
#include "complements/lct.hpp"

namespace py = pybind11;
using namespace complements;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer wraps
// them in fractions.Fraction.
Rational rat(const std::string& s) { return Rational::parse(s); }

Boundary boundary_of(const std::vector<std::pair<std::string, std::string>>& entries) {
    std::vector<BoundaryEntry> out;
    for (const auto& [label, coeff] : entries) out.push_back({label, rat(coeff)});
    return Boundary(std::move(out));
}

std::vector<std::pair<std::string, std::string>> entries_of(const Boundary& b) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& e : b.entries()) out.emplace_back(e.label, e.coeff.to_string());
    return out;
}

py::dict report_of(const ComplementReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["witness"] = entries_of(r.witness);
    d["klt"] = r.klt;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact complement calculus: coefficients, curves, arrangements, dual graphs, thresholds";

    // Translators run newest first, so the base class goes in first.
    auto base = py::register_exception<Error>(m, "ComplementsError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    m.def("is_member", [](const std::string& alpha, const std::string& set) {
        return is_member(rat(alpha), CoefficientSet::parse(set, ComplementRegistry::defaults()));
    }, py::arg("alpha"), py::arg("set") = "Msm");
    m.def("rounding_lemma_holds", [](const std::string& alpha, long n) {
        return rounding_lemma_holds(rat(alpha), n);
    });
    m.def("complement_coeff", [](const std::string& d, long n) {
        return complement_coeff(rat(d), n).get_str();
    });
    m.def("is_n_complement_coeffwise",
          [](const std::vector<std::pair<std::string, std::string>>& d,
             const std::vector<std::pair<std::string, std::string>>& dplus, long n) {
              return is_n_complement_coeffwise(boundary_of(d), boundary_of(dplus), n);
          });

    m.def("curve_has_n_complement", [](const std::vector<std::pair<std::string, std::string>>& d, long n) {
        return curve::has_n_complement(boundary_of(d), n);
    });
    m.def("curve_compl", [](const std::vector<std::pair<std::string, std::string>>& d, long cap) {
        return report_of(curve::minimal_complement(boundary_of(d), cap));
    }, py::arg("boundary"), py::arg("cap") = kDefaultSearchCap);
    m.def("curve_is_exceptional", [](const std::vector<std::pair<std::string, std::string>>& d) {
        return curve::is_exceptional(boundary_of(d));
    });
    m.def("enumerate_exceptional_standard", &curve::enumerate_exceptional_standard);

    m.def("arrangement_compl",
          [](int dim, const std::vector<std::pair<std::string, std::string>>& d, long cap) {
              return report_of(arrangement::minimal_complement({dim, boundary_of(d)}, cap));
          }, py::arg("dim"), py::arg("boundary"), py::arg("cap") = kDefaultSearchCap);
    m.def("arrangement_has_n_complement",
          [](int dim, const std::vector<std::pair<std::string, std::string>>& d, long n) {
              return arrangement::has_n_complement({dim, boundary_of(d)}, n);
          });
    m.def("candidate_exceptional", [](int dim, const std::vector<std::pair<std::string, std::string>>& d) {
        return arrangement::candidate_exceptional({dim, boundary_of(d)});
    });
    m.def("enumerate_candidate_exceptional", [](int dim) {
        auto t = arrangement::enumerate_candidate_exceptional(dim);
        return py::make_tuple(t.collections, t.max_index);
    });

    m.def("different_coefficient", [](long mult, const std::vector<std::pair<std::string, long>>& terms) {
        adjunction::DifferentInput input{mult, {}};
        for (const auto& [b, n] : terms) input.terms.push_back({rat(b), n});
        return adjunction::different_coefficient(input).to_string();
    });

    m.def("duval", [](const std::string& graph_json) {
        auto doc = io::graph_from_json(io::parse_document(graph_json));
        auto r = dualgraph::classify_exceptional_duval(doc.graph, doc.center);
        py::dict d;
        d["type"] = r.type.name();
        d["center"] = r.center;
        d["collection"] = r.collection;
        d["exceptional"] = r.exceptional;
        d["compl"] = r.compl_index;
        return d;
    });
    m.def("discrepancies", [](const std::string& graph_json) {
        auto doc = io::graph_from_json(io::parse_document(graph_json));
        std::vector<std::pair<std::string, std::string>> out;
        auto a = dualgraph::discrepancies(doc.graph);
        for (std::size_t i = 0; i < a.size(); ++i)
            out.emplace_back(doc.graph.vertices()[i].id, a[i].to_string());
        return out;
    });

    m.def("lct_table", [](const std::string& table_json) {
        auto problem = io::problem_from_json(io::parse_document(table_json));
        auto s = lct::sigma(problem);
        std::vector<std::string> breaks;
        for (const auto& b : s.breakpoints()) breaks.push_back(b.to_string());
        std::vector<std::pair<std::string, std::string>> pieces;
        for (const auto& p : s.pieces()) pieces.emplace_back(p.slope.to_string(), p.intercept.to_string());
        auto a0 = lct::alpha0(problem);
        py::dict d;
        d["breakpoints"] = breaks;
        d["pieces"] = pieces;
        d["alpha0"] = a0.to_string();
        d["active_at_alpha0"] = lct::active_labels(problem, a0);
        return d;
    });

    m.def("run", [](const std::vector<std::string>& args) {
        auto result = cli::run(args, cli::RunOptions::from_environment());
        return py::make_tuple(static_cast<int>(result.exit_code), cli::render(result));
    }, "Run a CLI command; returns (exit_code, stdout text).");
}
