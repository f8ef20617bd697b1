#include <set>

#include "srliaison/json_io.hpp"

namespace srl {

using nlohmann::json;

SimplicialComplex complex_from_json(const json& j, std::vector<std::string>* warnings) {
    int n = j.at("n").get<int>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    SimplicialComplex dl = SimplicialComplex::from_facets(n, facets);
    if (warnings && dl.facets().size() != facets.size()) {
        // duplicates or faces contained in other listed facets were dropped
        std::set<VertexSet> kept(dl.facets().begin(), dl.facets().end());
        for (const auto& f : facets) {
            VertexSet m = vs_of(f);
            if (!kept.count(m))
                warnings->push_back("listed facet is not maximal and was dropped: " +
                                    to_string(Monomial::from_support(n, m)));
        }
    }
    return dl;
}

json complex_to_json(const SimplicialComplex& dl) {
    json facets = json::array();
    for (VertexSet f : dl.facets()) facets.push_back(vs_labels(f));
    return json{{"n", dl.n()}, {"facets", facets}};
}

Graph graph_from_json(const json& j) {
    if (j.contains("circulant")) {
        const auto& c = j.at("circulant");
        return circulant(c.at(0).get<int>(), c.at(1).get<std::vector<int>>());
    }
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json{a, b});
    return json{{"n", g.n()}, {"edges", edges}};
}

namespace {

std::vector<Polynomial> parse_gens(const json& arr, const PolyContext& ctx) {
    std::vector<Polynomial> gens;
    for (const auto& s : arr) gens.push_back(parse_polynomial(s.get<std::string>(), ctx));
    return gens;
}

}  // namespace

Ideal ideal_from_json(const json& j) {
    PolyContext ctx(j.at("n").get<int>(), field_from_name(j.value("field", "Q")));
    return Ideal(ctx, parse_gens(j.at("gens"), ctx));
}

MonomialIdeal monomial_ideal_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Monomial> gens;
    for (const auto& s : j.at("gens")) gens.push_back(parse_monomial(s.get<std::string>(), n));
    return MonomialIdeal(n, std::move(gens));
}

json ideal_to_json(const Ideal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(to_string(g));
    return json{{"n", I.ctx().nvars}, {"field", field_name(I.ctx().field)}, {"gens", gens}};
}

json monomial_ideal_to_json(const MonomialIdeal& I, Field field) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(to_string(g));
    return json{{"n", I.nvars()}, {"field", field_name(field)}, {"gens", gens}};
}

BDLWitness bdl_witness_from_json(const json& j) {
    PolyContext ctx(j.at("n").get<int>(), field_from_name(j.value("field", "Q")));
    return BDLWitness(Ideal(ctx, parse_gens(j.at("C"), ctx)),
                      parse_polynomial(j.at("f").get<std::string>(), ctx),
                      Ideal(ctx, parse_gens(j.at("B"), ctx)),
                      Ideal(ctx, parse_gens(j.at("A"), ctx)));
}

BiliaisonWitness biliaison_witness_from_json(const json& j) {
    PolyContext ctx(j.at("n").get<int>(), field_from_name(j.value("field", "Q")));
    return BiliaisonWitness{Ideal(ctx, parse_gens(j.at("I"), ctx)),
                            Ideal(ctx, parse_gens(j.at("J"), ctx)),
                            Ideal(ctx, parse_gens(j.at("N"), ctx)),
                            parse_polynomial(j.at("a").get<std::string>(), ctx),
                            parse_polynomial(j.at("x").get<std::string>(), ctx)};
}

json to_json(const ConditionResult& r) {
    const char* s = r.status == CheckStatus::Pass ? "pass"
                    : r.status == CheckStatus::Fail ? "fail"
                                                    : "not-checked";
    json out{{"status", s}};
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

json to_json(const BDLVerdict& v) {
    json conditions = json::object();
    for (const auto& [name, r] : v.items()) conditions[name] = to_json(*r);
    return json{{"overall", v.overall_name()},
                {"conditions", conditions},
                {"C unmixed (informational)", to_json(v.c_unmixed_info)}};
}

json to_json(const VertexBDL& v) {
    json out{{"pure", v.pure},
             {"deletion_cm", v.deletion_cm},
             {"same_dimension", v.same_dimension},
             {"applicable", v.applicable}};
    if (!v.applicable) out["reason"] = v.reason;
    if (v.B) out["B"] = monomial_ideal_to_json(*v.B);
    if (v.A) out["A"] = monomial_ideal_to_json(*v.A);
    if (v.verdict) out["verdict"] = to_json(*v.verdict);
    return out;
}

json to_json(const BiliaisonVerdict& v) {
    json out{{"a in J", to_json(v.a_in_j)},
             {"a NZD on S/N", to_json(v.a_nzd_on_n)},
             {"heights", to_json(v.heights)},
             {"N inside I and J", to_json(v.n_inside)},
             {"preconditions_ok", v.preconditions_ok},
             {"x*J+N == a*I+N", to_json(v.equality)},
             {"ell", v.ell},
             {"L_monomial", v.l_monomial}};
    if (v.L) out["L"] = ideal_to_json(*v.L);
    if (v.l_bdl_of_i_on_n) out["L as BDL of I on N"] = to_json(*v.l_bdl_of_i_on_n);
    if (v.l_bdl_of_j_on_n) out["L as BDL of J on N"] = to_json(*v.l_bdl_of_j_on_n);
    if (v.r) out["r"] = to_string(*v.r);
    if (v.direct_equation) out["I == r*J+N"] = to_json(*v.direct_equation);
    if (v.direct_bdl) out["I as BDL of J on N"] = to_json(*v.direct_bdl);
    return out;
}

json to_json(const EdgeSearchResult& r) {
    json out{{"c_unmixed", r.c_unmixed},
             {"c_cm", r.c_cm},
             {"refuted", r.refuted()}};
    if (!r.structural_refutation.empty()) out["structural_refutation"] = r.structural_refutation;
    json cands = json::array();
    for (const auto& c : r.candidates) {
        json e{{"support", c.support},
               {"nf_vars", c.nf_vars},
               {"nf_nonempty", c.nf_nonempty},
               {"survives", c.survives}};
        if (c.nf_nonempty) e["B"] = monomial_ideal_to_json(c.B);
        if (c.cm_match) e["cm_match"] = *c.cm_match;
        if (c.fisxi) e["fisxi"] = *c.fisxi;
        if (c.witness) e["witness"] = to_json(*c.witness);
        cands.push_back(e);
    }
    out["candidates"] = cands;
    json anch = json::array();
    for (const auto& a : r.anchored) {
        json e{{"anchor", a.anchor},
               {"vars", a.vars},
               {"cm", a.cm},
               {"realizers", a.realizers},
               {"eliminated_by", a.eliminated_by}};
        anch.push_back(e);
    }
    out["anchored_scan"] = anch;
    return out;
}

}  // namespace srl
