#include <algorithm>
#include <set>

#include "srliaison/biliaison.hpp"
#include "srliaison/decomposability.hpp"
#include "srliaison/edge_search.hpp"
#include "srliaison/instances.hpp"
#include "srliaison/json_io.hpp"
#include "srliaison/refute.hpp"
#include "srliaison/repro.hpp"

namespace srl {

using nlohmann::json;

namespace {

struct Checker {
    ReproReport& rep;
    void operator()(bool ok, const std::string& what) {
        rep.lines.push_back(std::string(ok ? "ok:   " : "FAIL: ") + what);
        if (!ok) rep.pass = false;
    }
};

ReproReport repro_example_23() {
    ReproReport rep{.target = "example-2.3", .pass = true};
    Checker ck{rep};
    PolyContext ctx(4, Field::Q);
    BDLWitness w(Ideal(ctx, {parse_polynomial("x1*x3", ctx), parse_polynomial("x2*x4", ctx)}),
                 parse_polynomial("x1", ctx),
                 Ideal(ctx, {parse_polynomial("x3", ctx), parse_polynomial("x2*x4", ctx)}),
                 Ideal(ctx, {parse_polynomial("x2*x4", ctx)}));
    BDLVerdict v = verify_bdl(w, Field::Q);
    for (const auto& [name, r] : v.items()) ck(r->ok(), name);
    ck(v.overall() == BDLVerdict::Overall::Valid, "overall verdict valid");
    rep.details = to_json(v);
    return rep;
}

ReproReport repro_prop_36(int jobs) {
    (void)jobs;
    ReproReport rep{.target = "prop-3.6", .pass = true};
    Checker ck{rep};
    Graph g = instances::circulant16();
    std::vector<std::vector<int>> sym{rotation_permutation(16)};
    EdgeSearchResult res = search_edge_bdl(g, Field::Q, &sym);

    ck(res.c_unmixed, "edge ideal unmixed");
    ck(res.c_cm, "R/I(G) Cohen-Macaulay");

    // anchored scan at vertex 1: 32 subsets of {2,5,9,13,16}
    std::vector<const AnchoredRow*> rows;
    for (const auto& r : res.anchored)
        if (r.anchor == 1) rows.push_back(&r);
    ck(rows.size() == 32, "32 subsets of the neighbour variables scanned");

    const std::set<std::vector<int>> expected_cm = {
        {2, 9, 16}, {2, 5, 9, 16}, {2, 9, 13, 16}, {2, 5, 9, 13, 16}};
    std::set<std::vector<int>> got_cm;
    for (const auto* r : rows)
        if (!r->vars.empty() && r->cm) got_cm.insert(r->vars);
    ck(got_cm == expected_cm, "CM filter leaves exactly J1, J2, J3, J4");

    // realizability: only J4 = all of N(1), realized by T = {1} alone
    for (const auto* r : rows) {
        if (expected_cm.count(r->vars)) {
            if (r->vars.size() == 5) {
                ck(r->realizers == std::vector<std::vector<int>>{{1}},
                   "J4 realizable only by f = x1");
                ck(!r->fisxi && r->eliminated_by == "fisxi",
                   "R/(I(G)+(x1)) not Cohen-Macaulay eliminates J4");
            } else {
                ck(r->realizers.empty() && r->eliminated_by == "realizability",
                   "J with vars {" + std::to_string(r->vars.size()) +
                       "} not of the form I(G)+N_f (vertex 1 is the only common "
                       "neighbour of 2 and 16)");
            }
        }
    }
    ck(res.refuted(), "no basic double G-link with monomial B");
    rep.details = to_json(res);
    return rep;
}

ReproReport repro_example_41() {
    ReproReport rep{.target = "example-4.1-cm", .pass = true};
    Checker ck{rep};
    MonomialIdeal I = instances::rp2_ideal();
    SimplicialComplex dl = complex_of(I, 6);
    ck(is_cohen_macaulay(dl, Field::Q), "Cohen-Macaulay over Q");
    for (int i = 1; i <= 6; ++i)
        ck(!fisxi_necessary(I, i, Field::Q),
           "R/(I+(x" + std::to_string(i) + ")) not Cohen-Macaulay");
    ck(height(I.to_ideal(Field::Q)) == 3, "height 3");
    return rep;
}

ReproReport repro_prop_42(int jobs) {
    ReproReport rep{.target = "prop-4.2", .pass = true};
    Checker ck{rep};
    MonomialIdeal I = instances::rp2_ideal();

    RefutationOutcome d1 = refute_deg1(I, Field::Q, RefuteMode::GeneralA, jobs);
    const json& c1 = d1.certificate;
    ck(c1["z_cap"].get<int>() == 2, "at most two choices of j for every degree-2 z");
    ck(c1["pair_cases"].size() == 15, "15 admissible two-variable supports");
    bool unique_z = true, heights3 = true;
    size_t total_cases = 0;
    for (const auto& pc : c1["pair_cases"]) {
        if (!pc.contains("z")) unique_z = false;
        if (pc.contains("heights")) {
            for (auto it = pc["heights"].begin(); it != pc["heights"].end(); ++it) {
                if (it.key() != "3") heights3 = false;
                total_cases += it.value().get<size_t>();
            }
        }
    }
    ck(unique_z, "exactly one admissible z per support");
    ck(heights3 && total_cases == 15 * 512, "all 7680 forced A' have height exactly 3");
    ck(d1.refuted, "degree-1 case refuted");

    RefutationOutcome d2 = refute_deg2(I, Field::Q, RefuteMode::GeneralA, jobs);
    const json& c2 = d2.certificate;
    {
        bool w_counts = true;
        for (int w = 1; w <= 6; ++w) {
            const json& per = c2["f_counts_per_w"][std::to_string(w)];
            w_counts = w_counts && per["2"].get<int>() == 10 && per["3"].get<int>() == 10 &&
                       per["4"].get<int>() == 5 && per["5"].get<int>() == 1;
        }
        ck(w_counts, "f counts per w: 10 (n=2), 10 (n=3), 5 (n=4), 1 (n=5)");
    }
    {
        bool zero_or_two = true;
        for (const auto& e : c2["single_y"]) {
            size_t k = e["allowable_w"].size();
            if (k != 0 && k != 2) zero_or_two = false;
        }
        ck(zero_or_two, "single-y case: exactly 0 or 2 allowable w");
    }
    ck(c2["max_allowable_w_multi"].get<size_t>() <= 1,
       "at most one allowable w for multi-term f");
    {
        size_t gf2_branches = 0;
        bool gf2_ok = true;
        for (const auto& e : c2["w_cases"]) {
            if (e["n"].get<int>() == 5) {
                ck(e["normalization"] == "residual", "n=5 family needs the parity branch");
                for (const auto& br : e["gf2_branches"]) {
                    ++gf2_branches;
                    for (auto it = br["heights"].begin(); it != br["heights"].end(); ++it)
                        if (std::stoi(it.key()) < 3) gf2_ok = false;
                }
            } else {
                if (e["normalization"] != "all-ones") gf2_ok = false;
            }
        }
        ck(gf2_branches == 18 && gf2_ok,
           "all GF(2) parity branches give height(Abar) >= 3 (3 per w)");
    }
    ck(d2.refuted, "degree-2 case refuted");
    ck(d1.refuted && d2.refuted, "no basic double G-link with squarefree monomial B");
    rep.details = json{{"deg1", c1["verdict"]}, {"deg2", c2["verdict"]}};
    return rep;
}

ReproReport repro_example_45() {
    ReproReport rep{.target = "example-4.5-cm", .pass = true};
    Checker ck{rep};
    MonomialIdeal I = instances::six_vertex_ideal();
    SimplicialComplex dl = complex_of(I, 6);
    ck(is_cohen_macaulay(dl, Field::Q), "Cohen-Macaulay over Q");
    ck(!is_weakly_vertex_decomposable(dl, Field::Q).verdict, "not weakly vertex decomposable");
    ck(height(I.to_ideal(Field::Q)) == 3, "height 3");
    return rep;
}

ReproReport repro_prop_47(int jobs) {
    ReproReport rep{.target = "prop-4.7", .pass = true};
    Checker ck{rep};
    MonomialIdeal I = instances::six_vertex_ideal();

    RefutationOutcome d1 = refute_deg1(I, Field::Q, RefuteMode::SquarefreeA, jobs);
    const json& c1 = d1.certificate;
    ck(c1["all_but_one"]["height_count"].get<size_t>() == 5,
       "5 height-2 squarefree monomial ideals contain all but one generator");
    ck(c1["all_but_one"]["cm_count"].get<size_t>() == 0, "none of the 5 is Cohen-Macaulay");
    ck(d1.refuted, "degree-1 case refuted");

    RefutationOutcome d2 = refute_deg2(I, Field::Q, RefuteMode::SquarefreeA, jobs);
    const json& c2 = d2.certificate;
    ck(c2["n3_plus"]["3"]["with_valid_variable"].get<size_t>() == 60,
       "60 choices of f (n=3) with U_f nonempty");
    ck(c2["n3_plus"]["3"]["with_two_or_more"].get<size_t>() == 0,
       "no f (n=3) admits a variable set of size >= 2");
    ck(c2["all_but_two"]["height_count"].get<size_t>() == 60,
       "60 height-2 squarefree monomial ideals contain all but two generators");
    ck(c2["all_but_two"]["cm_count"].get<size_t>() == 0, "none of the 60 is Cohen-Macaulay");
    ck(d2.refuted, "degree-2 case refuted");
    ck(d1.refuted && d2.refuted,
       "no basic double G-link with squarefree monomial A and B");
    rep.details = json{{"deg1", c1["verdict"]}, {"deg2", c2["verdict"]}};
    return rep;
}

ReproReport repro_example_55() {
    ReproReport rep{.target = "example-5.5", .pass = true};
    Checker ck{rep};
    PolyContext ctx(4, Field::Q);
    auto P = [&](const char* s) { return parse_polynomial(s, ctx); };
    Ideal I(ctx, {P("x1"), P("x4"), P("x3")});
    Ideal J(ctx, {P("x1"), P("x2"), P("x3")});
    Ideal N(ctx, {P("x1*x2-x1*x4"), P("x3*x4-x3*x2"), P("x1+x3")});

    BiliaisonVerdict bv = verify_biliaison(BiliaisonWitness{I, J, N, P("x2"), P("x4")}, Field::Q);
    ck(bv.preconditions_ok, "biliaison preconditions hold");
    ck(bv.equality.ok(), "x4*J + N == x2*I + N");
    ck(!bv.l_monomial, "L = x4*J + N is not monomial");
    ck(bv.ell == 0, "height shift 0");

    Ideal bad = poly_times_ideal_plus(P("x3"), I, N);
    ck(!ideal_equal(poly_times_ideal_plus(P("x4"), J, N), bad),
       "replacing x by x3 breaks the equality");

    // both I and J appear as the B of a basic double G-link of (x1, x2*x4, x3)
    Ideal Cs(ctx, {P("x1"), P("x2*x4"), P("x3")});
    Ideal A(ctx, {P("x1"), P("x3")});
    BDLVerdict v1 = verify_bdl(BDLWitness(Cs, P("x2"), I, A), Field::Q);
    BDLVerdict v2 = verify_bdl(BDLWitness(Cs, P("x4"), J, A), Field::Q);
    ck(v1.overall() == BDLVerdict::Overall::Valid, "(x1,x2x4,x3) = x2*I + (x1,x3) valid");
    ck(v2.overall() == BDLVerdict::Overall::Valid, "(x1,x2x4,x3) = x4*J + (x1,x3) valid");
    rep.details = to_json(bv);
    return rep;
}

}  // namespace

std::vector<std::string> repro_targets() {
    return {"example-2.3", "prop-3.6",    "example-4.1-cm", "prop-4.2",
            "example-4.5-cm", "prop-4.7", "example-5.5"};
}

ReproReport run_repro(const std::string& target, int jobs) {
    if (target == "example-2.3") return repro_example_23();
    if (target == "prop-3.6") return repro_prop_36(jobs);
    if (target == "example-4.1-cm") return repro_example_41();
    if (target == "prop-4.2") return repro_prop_42(jobs);
    if (target == "example-4.5-cm") return repro_example_45();
    if (target == "prop-4.7") return repro_prop_47(jobs);
    if (target == "example-5.5") return repro_example_55();
    throw std::invalid_argument("unknown repro target: " + target);
}

}  // namespace srl
