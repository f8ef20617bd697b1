#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "srliaison/decomposability.hpp"
#include "srliaison/instances.hpp"
#include "srliaison/json_io.hpp"
#include "srliaison/refute.hpp"
#include "srliaison/repro.hpp"

namespace py = pybind11;
using namespace srl;
using nlohmann::json;

namespace {

py::object j2py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

json py2j(const py::object& o) {
    std::string s = py::module_::import("json").attr("dumps")(o).cast<std::string>();
    return json::parse(s);
}

PolyContext make_ctx(int n, const std::string& field) {
    return PolyContext(n, field_from_name(field));
}

Ideal make_ideal(int n, const std::string& field, const std::vector<std::string>& gens) {
    PolyContext ctx = make_ctx(n, field);
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, ctx));
    return Ideal(ctx, std::move(ps));
}

MonomialIdeal make_monomial_ideal(int n, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const auto& s : gens) ms.push_back(parse_monomial(s, n));
    return MonomialIdeal(n, std::move(ms));
}

std::vector<std::string> ideal_strings(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(to_string(p));
    return out;
}

std::vector<std::string> mi_strings(const MonomialIdeal& I) {
    std::vector<std::string> out;
    for (const auto& m : I.gens()) out.push_back(to_string(m));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stanley-Reisner liaison toolkit: exact Groebner bases, simplicial "
              "homology, and basic double G-link verification and search";

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](int n, const std::vector<std::vector<int>>& facets) {
                 return SimplicialComplex::from_facets(n, facets);
             }),
             py::arg("n"), py::arg("facets"))
        .def_property_readonly("n", &SimplicialComplex::n)
        .def("dim", &SimplicialComplex::dim)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("is_void", &SimplicialComplex::is_void)
        .def("face_count", &SimplicialComplex::face_count)
        .def("facets",
             [](const SimplicialComplex& c) {
                 std::vector<std::vector<int>> out;
                 for (VertexSet f : c.facets()) out.push_back(vs_labels(f));
                 return out;
             })
        .def("link", &SimplicialComplex::link, py::arg("v"))
        .def("deletion", &SimplicialComplex::deletion, py::arg("v"))
        .def("cone", &SimplicialComplex::cone, py::arg("k"))
        .def("__repr__", [](const SimplicialComplex& c) {
            return "<SimplicialComplex n=" + std::to_string(c.n()) + " facets=" +
                   std::to_string(c.facets().size()) + ">";
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 Graph g(n);
                 for (auto& [a, b] : edges) g.add_edge(a, b);
                 return g;
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree, py::arg("v"));

    m.def("circulant", &circulant, py::arg("n"), py::arg("connection"));
    m.def("edge_ideal", [](const Graph& g) { return mi_strings(edge_ideal(g)); });
    m.def("nf_ideal", [](const Graph& g, const std::vector<int>& support) {
        return mi_strings(nf_ideal(g, support));
    });
    m.def("canonical_B", [](const Graph& g, const std::vector<int>& support) {
        return mi_strings(canonical_B(g, support));
    });
    m.def("max_support_bound", &max_support_bound);

    m.def("stanley_reisner",
          [](const SimplicialComplex& c) { return mi_strings(stanley_reisner(c)); });
    m.def("complex_of", [](int n, const std::vector<std::string>& gens) {
        return complex_of(make_monomial_ideal(n, gens), n);
    });
    m.def("reduced_betti", [](const SimplicialComplex& c, const std::string& field, int i) {
        return reduced_betti(c, field_from_name(field), i);
    }, py::arg("complex"), py::arg("field"), py::arg("i"));
    m.def("is_cohen_macaulay", [](const SimplicialComplex& c, const std::string& field) {
        return is_cohen_macaulay(c, field_from_name(field));
    }, py::arg("complex"), py::arg("field") = "Q");
    m.def("is_cm_quotient", [](int n, const std::vector<std::string>& gens,
                               const std::string& field) {
        return is_cm_quotient(make_monomial_ideal(n, gens), field_from_name(field));
    }, py::arg("n"), py::arg("gens"), py::arg("field") = "Q");
    m.def("is_vertex_decomposable",
          [](const SimplicialComplex& c) { return is_vertex_decomposable(c).verdict; });
    m.def("is_weakly_vertex_decomposable",
          [](const SimplicialComplex& c, const std::string& field) {
              return is_weakly_vertex_decomposable(c, field_from_name(field)).verdict;
          },
          py::arg("complex"), py::arg("field") = "Q");

    m.def("groebner_basis",
          [](int n, const std::string& field, const std::vector<std::string>& gens) {
              return ideal_strings(groebner_basis(make_ideal(n, field, gens)));
          },
          py::arg("n"), py::arg("field"), py::arg("gens"));
    m.def("normal_form",
          [](int n, const std::string& field, const std::string& p,
             const std::vector<std::string>& gens) {
              Ideal I = make_ideal(n, field, gens);
              return to_string(normal_form(parse_polynomial(p, I.ctx()), groebner_basis(I)));
          });
    m.def("ideal_equal",
          [](int n, const std::string& field, const std::vector<std::string>& a,
             const std::vector<std::string>& b) {
              return ideal_equal(make_ideal(n, field, a), make_ideal(n, field, b));
          });
    m.def("dimension", [](int n, const std::string& field, const std::vector<std::string>& gens) {
        return dimension(make_ideal(n, field, gens));
    });
    m.def("height", [](int n, const std::string& field, const std::vector<std::string>& gens) {
        return height(make_ideal(n, field, gens));
    });
    m.def("quotient_by_poly",
          [](int n, const std::string& field, const std::vector<std::string>& gens,
             const std::string& f) {
              Ideal I = make_ideal(n, field, gens);
              return ideal_strings(
                  groebner_basis(quotient_by_poly(I, parse_polynomial(f, I.ctx()))));
          });
    m.def("is_nzd", [](int n, const std::string& field, const std::string& f,
                       const std::vector<std::string>& gens) {
        Ideal I = make_ideal(n, field, gens);
        return is_nzd(parse_polynomial(f, I.ctx()), I);
    });
    m.def("gf2_specialize", [](int n, const std::vector<std::string>& gens) {
        Ideal I = make_ideal(n, "Q", gens);
        return ideal_strings(gf2_specialize(I.gens()).gens());
    });
    m.def("degree_window", [](int n, const std::string& field,
                              const std::vector<std::string>& gens) {
        return degree_window(make_ideal(n, field, gens));
    });

    m.def("verify_bdl",
          [](int n, const std::string& field, const std::vector<std::string>& C,
             const std::string& f, const std::vector<std::string>& B,
             const std::vector<std::string>& A) {
              PolyContext ctx = make_ctx(n, field);
              BDLWitness w(make_ideal(n, field, C), parse_polynomial(f, ctx),
                           make_ideal(n, field, B), make_ideal(n, field, A));
              return j2py(to_json(verify_bdl(w, field_from_name(field))));
          },
          py::arg("n"), py::arg("field"), py::arg("C"), py::arg("f"), py::arg("B"),
          py::arg("A"));
    m.def("vertex_bdl", [](const SimplicialComplex& c, int k, const std::string& field) {
        return j2py(to_json(vertex_bdl(c, k, field_from_name(field))));
    }, py::arg("complex"), py::arg("k"), py::arg("field") = "Q");
    m.def("fisxi_necessary", [](int n, const std::vector<std::string>& gens, int i,
                                const std::string& field) {
        return fisxi_necessary(make_monomial_ideal(n, gens), i, field_from_name(field));
    }, py::arg("n"), py::arg("gens"), py::arg("i"), py::arg("field") = "Q");
    m.def("search_edge_bdl",
          [](const Graph& g, const std::string& field, bool rotation) {
              std::vector<std::vector<int>> sym;
              const std::vector<std::vector<int>>* symp = nullptr;
              if (rotation) {
                  sym.push_back(rotation_permutation(g.n()));
                  symp = &sym;
              }
              return j2py(to_json(search_edge_bdl(g, field_from_name(field), symp)));
          },
          py::arg("graph"), py::arg("field") = "Q", py::arg("rotation") = false);
    m.def("refute_deg1",
          [](int n, const std::vector<std::string>& gens, const std::string& field,
             const std::string& mode, int jobs) {
              return j2py(refute_deg1(make_monomial_ideal(n, gens), field_from_name(field),
                                      mode_from_name(mode), jobs)
                              .certificate);
          },
          py::arg("n"), py::arg("gens"), py::arg("field") = "Q",
          py::arg("mode") = "general-A", py::arg("jobs") = 0);
    m.def("refute_deg2",
          [](int n, const std::vector<std::string>& gens, const std::string& field,
             const std::string& mode, int jobs) {
              return j2py(refute_deg2(make_monomial_ideal(n, gens), field_from_name(field),
                                      mode_from_name(mode), jobs)
                              .certificate);
          },
          py::arg("n"), py::arg("gens"), py::arg("field") = "Q",
          py::arg("mode") = "general-A", py::arg("jobs") = 0);
    m.def("recheck_certificate", [](const py::object& cert, int jobs) {
        std::string why;
        bool ok = recheck_certificate(py2j(cert), &why, jobs);
        return py::make_tuple(ok, why);
    }, py::arg("certificate"), py::arg("jobs") = 0);
    m.def("verify_biliaison",
          [](int n, const std::string& field, const std::vector<std::string>& I,
             const std::vector<std::string>& J, const std::vector<std::string>& N,
             const std::string& a, const std::string& x) {
              PolyContext ctx = make_ctx(n, field);
              BiliaisonWitness w{make_ideal(n, field, I), make_ideal(n, field, J),
                                 make_ideal(n, field, N), parse_polynomial(a, ctx),
                                 parse_polynomial(x, ctx)};
              return j2py(to_json(verify_biliaison(w, field_from_name(field))));
          },
          py::arg("n"), py::arg("field"), py::arg("I"), py::arg("J"), py::arg("N"),
          py::arg("a"), py::arg("x"));

    m.def("repro_targets", &repro_targets);
    m.def("run_repro", [](const std::string& target, int jobs) {
        ReproReport rep = run_repro(target, jobs);
        py::dict d;
        d["target"] = rep.target;
        d["pass"] = rep.pass;
        d["lines"] = rep.lines;
        return d;
    }, py::arg("target"), py::arg("jobs") = 0);

    auto inst = m.def_submodule("instances", "bundled inputs from the case studies");
    inst.def("rp2_ideal", [] { return mi_strings(instances::rp2_ideal()); });
    inst.def("six_vertex_ideal", [] { return mi_strings(instances::six_vertex_ideal()); });
    inst.def("circulant16", &instances::circulant16);
    inst.def("matching4", &instances::matching4);
}
